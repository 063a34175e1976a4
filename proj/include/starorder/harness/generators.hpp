#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "starorder/numerics.hpp"
#include "starorder/penrose.hpp"
#include "starorder/spectral_model.hpp"

namespace starorder::harness {

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int dim_min = 1;
    int dim_max = 8;
    double magnitude = 1.0;
    double comparable_fraction = 0.5;
    ToleranceConfig tol{};

    /// Throws ContractError on an empty dimension range, non-positive magnitude or a
    /// fraction outside [0, 1].
    void validate() const;
};

/// Seed of trial `index` under a base seed (splitmix64 of the pair).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

/// mt19937_64 stream with distributions written out by hand, so draws are identical
/// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi);
    double normal();
    /// Standard complex Gaussian.
    Complex complex_normal();
    bool coin(double p = 0.5) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

int draw_dim(Rng& rng, const GeneratorConfig& cfg);

/// Dense matrix with independent complex Gaussian entries times magnitude.
ComplexMatrix gen_matrix(Rng& rng, Eigen::Index n, double magnitude = 1.0);
ComplexMatrix gen_matrix(const GeneratorConfig& cfg);

/// Haar-distributed unitary (QR of a Gaussian matrix with the phases of R divided out).
ComplexMatrix random_unitary(Rng& rng, Eigen::Index n);

/// B = U [[B11, 0], [0, B22]] V*, A = U [[B11, 0], [0, 0]] V* with random unitaries and a
/// block size k in [0, n] (drawn when not given).
std::pair<ComplexMatrix, ComplexMatrix> gen_comparable_pair(Rng& rng, Eigen::Index n,
                                                            double magnitude = 1.0,
                                                            std::optional<Eigen::Index> k = {});
std::pair<ComplexMatrix, ComplexMatrix> gen_comparable_pair(const GeneratorConfig& cfg);

/// A and B living in complementary blocks of a random pair of bases.
std::pair<ComplexMatrix, ComplexMatrix> gen_orthogonal_pair(Rng& rng, Eigen::Index n,
                                                            double magnitude = 1.0);

struct Triple {
    ComplexMatrix a;
    ComplexMatrix b;
    ComplexMatrix c;
};

/// A <=* B <=* C by nested zeroing of diagonal blocks of C in a random pair of bases.
Triple gen_nested_triple(Rng& rng, Eigen::Index n, double magnitude = 1.0);

/// U diag(s) V* whose nonzero singular values are at least 0.05 s_max apart, with a random
/// number of zero singular values.
ComplexMatrix gen_separated_matrix(Rng& rng, Eigen::Index n, double magnitude = 1.0);

/// Comparable pair whose larger member has well-separated singular values.
std::pair<ComplexMatrix, ComplexMatrix> gen_separated_comparable_pair(Rng& rng, Eigen::Index n,
                                                                      double magnitude = 1.0);

/// Valid decomposition with isometries built from random orthonormal frames. Consecutive
/// values are separated by at least max(10 * group_tol, 1e-3) * a_max.
PenroseDecomposition gen_penrose(Rng& rng, Eigen::Index n, const ToleranceConfig& tol,
                                 double magnitude = 1.0);

/// Random well-formed model with at most max_parts atoms plus bands. Values are multiples
/// of 1/8 so that they and the band endpoints are exactly representable.
SpectralModel gen_model(Rng& rng, int max_parts = 6);

/// Random sub-model (each part kept with probability 1/2, atom multiplicities reduced).
SpectralModel gen_sub_model(Rng& rng, const SpectralModel& m);

/// Pairs for join testing at small dims: a mixture of orthogonal pairs, pairs below a
/// common bound, pairs sharing a direction with conflicting values, and random low-rank pairs.
std::pair<ComplexMatrix, ComplexMatrix> gen_join_pair(Rng& rng, Eigen::Index n,
                                                      double magnitude = 1.0);

}  // namespace starorder::harness
