#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starorder/automorphism.hpp"
#include "starorder/harness/generators.hpp"
#include "starorder/report.hpp"

namespace starorder::harness {

/// poset-axioms, block-equivalence, prop21, penrose-roundtrip, thm25-criterion, join-oracle,
/// automorphism-battery, model-roundtrip, discretize-density
const std::vector<std::string>& suite_names();

/// Runs every trial of the named suite. Trial t draws from Rng(trial_seed(cfg.seed, t)) only,
/// so a violation is reproduced by replay_trial with the same config and its trial index.
/// Throws ContractError for an unknown name.
VerificationReport run_suite(const std::string& name, const GeneratorConfig& cfg);

VerificationReport replay_trial(const std::string& name, const GeneratorConfig& cfg,
                                std::size_t trial);

/// Pair mixture used by the automorphism checks: comparable pairs (either order) with
/// probability comparable_fraction, otherwise orthogonal, independent or chain-end pairs.
SampledPair draw_mixed_pair(Rng& rng, Eigen::Index n, double magnitude, double comparable_fraction);

/// Sampler whose trial i draws from Rng(trial_seed(cfg.seed, i)) on dimension n.
PairSampler mixed_pair_sampler(Eigen::Index n, const GeneratorConfig& cfg);

struct BatteryEntry {
    std::string name;
    AutomorphismSpec spec;
};

/// Canonical specs on dimension n covering both variants, unitary and anti-unitary pairs,
/// every scalar-map kind and one composition. The unitaries are drawn from `seed`.
std::vector<BatteryEntry> automorphism_battery(Eigen::Index n, std::uint64_t seed);

}  // namespace starorder::harness
