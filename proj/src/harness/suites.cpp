#include "starorder/harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "starorder/errors.hpp"
#include "starorder/harness/oracle.hpp"
#include "starorder/penrose.hpp"
#include "starorder/spectral_model.hpp"
#include "starorder/star_order.hpp"

namespace starorder::harness {

namespace {

struct Trial {
    const GeneratorConfig& cfg;
    VerificationReport& report;
    std::size_t index;
    std::uint64_t seed;
    Rng rng;

    const ToleranceConfig& tol() const { return cfg.tol; }
    Eigen::Index dim() { return draw_dim(rng, cfg); }
    Eigen::Index dim_at_most(int cap) {
        const int hi = std::max(cfg.dim_min, std::min(cfg.dim_max, cap));
        return rng.integer(std::min(cfg.dim_min, hi), hi);
    }

    bool check(const std::string& name, bool ok, double residual, const std::string& detail,
               std::vector<std::string> digests = {}) {
        report.tally(name, ok);
        if (!ok) {
            report.violations.push_back({name, std::move(digests), residual, index, seed, detail});
        }
        return ok;
    }
};

using Body = std::function<void(Trial&)>;

struct Suite {
    std::size_t trials;
    Body body;
};

double rel_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
    return op_norm(x - y) / std::max(1.0, std::max(op_norm(x), op_norm(y)));
}

// ---------------------------------------------------------------- poset-axioms

void poset_axioms(Trial& t) {
    const Eigen::Index n = t.dim();
    const double mag = t.cfg.magnitude;
    switch (t.index / 500) {
    case 0: {
        const ComplexMatrix a = t.rng.coin() ? gen_matrix(t.rng, n, mag)
                                             : gen_separated_matrix(t.rng, n, mag);
        t.check("reflexivity", star_leq(a, a, t.tol()), drazin_residual(a, a), "A <=* A fails",
                {digest(a)});
        const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
        t.check("zero-minimum", star_leq(zero, a, t.tol()), 0.0, "0 <=* A fails", {digest(a)});
        break;
    }
    case 1: {
        // mutually comparable pairs must coincide; k = n produces equal pairs
        const auto k = t.rng.coin(0.3) ? std::optional<Eigen::Index>(n) : std::nullopt;
        const auto [a, b] = gen_comparable_pair(t.rng, n, mag, k);
        const bool both = star_leq(a, b, t.tol()) && star_leq(b, a, t.tol());
        t.check("antisymmetry", !both || approx_eq(a, b, t.tol()), rel_diff(a, b),
                "A <=* B and B <=* A but A != B", {digest(a), digest(b)});
        break;
    }
    default: {
        const Triple tr = gen_nested_triple(t.rng, n, mag);
        const bool ab = star_leq(tr.a, tr.b, t.tol());
        const bool bc = star_leq(tr.b, tr.c, t.tol());
        t.check("construction", ab && bc, std::max(drazin_residual(tr.a, tr.b), drazin_residual(tr.b, tr.c)),
                "nested triple is not a chain", {digest(tr.a), digest(tr.b), digest(tr.c)});
        t.check("transitivity", !(ab && bc) || star_leq(tr.a, tr.c, t.tol()),
                drazin_residual(tr.a, tr.c), "A <=* B <=* C but not A <=* C",
                {digest(tr.a), digest(tr.b), digest(tr.c)});
        break;
    }
    }
}

// ---------------------------------------------------------------- block-equivalence

void block_equivalence(Trial& t) {
    const Eigen::Index n = t.dim();
    const double mag = t.cfg.magnitude;
    ComplexMatrix a;
    ComplexMatrix b;
    if (t.index < 500) {
        std::tie(a, b) = gen_comparable_pair(t.rng, n, mag);
    } else {
        switch (t.rng.integer(0, 3)) {
        case 0:
            a = gen_matrix(t.rng, n, mag);
            b = gen_matrix(t.rng, n, mag);
            break;
        case 1: {
            // comparable pair with the larger member perturbed
            std::tie(a, b) = gen_comparable_pair(t.rng, n, mag);
            b += gen_matrix(t.rng, n, 1e-3 * mag);
            break;
        }
        case 2:
            std::tie(b, a) = gen_comparable_pair(t.rng, n, mag);
            break;
        default:
            a = gen_separated_matrix(t.rng, n, mag);
            b = gen_separated_matrix(t.rng, n, mag);
            break;
        }
    }
    const bool order = star_leq(a, b, t.tol());
    const auto witness = block_witness(a, b, t.tol());
    if (t.index < 500) {
        t.check("construction", order, drazin_residual(a, b), "constructed pair is not comparable",
                {digest(a), digest(b)});
    }
    t.check("equivalence", order == witness.has_value(), drazin_residual(a, b),
            order ? "Drazin relations hold but no block witness" : "block witness without Drazin relations",
            {digest(a), digest(b)});
    if (witness) {
        t.check("witness-invariants", witness_holds(*witness, a, b, t.tol()), 0.0,
                "returned witness violates its invariants", {digest(a), digest(b)});
    }
}

// ---------------------------------------------------------------- prop21

void prop21(Trial& t) {
    const Eigen::Index n = t.dim();
    const double mag = t.cfg.magnitude;
    ComplexMatrix a;
    ComplexMatrix b;
    if (t.rng.coin()) {
        std::tie(a, b) = gen_orthogonal_pair(t.rng, n, mag);
    } else if (t.rng.coin()) {
        a = gen_matrix(t.rng, n, mag);
        b = gen_matrix(t.rng, n, mag);
    } else {
        // orthogonal on one side only
        auto [x, y] = gen_orthogonal_pair(t.rng, n, mag);
        a = x;
        b = y + gen_matrix(t.rng, n, 1e-2 * mag);
    }
    const bool below = star_leq(a, a + b, t.tol());
    const bool orth = orthogonal(a, b, t.tol());
    t.check("equivalence", below == orth, drazin_residual(a, a + b),
            below ? "A <=* A + B without A _|_ B" : "A _|_ B without A <=* A + B",
            {digest(a), digest(b)});
    t.report.tally(orth ? "orthogonal-cases" : "non-orthogonal-cases", true);
}

// ---------------------------------------------------------------- penrose-roundtrip

bool initial_projections_match(const ComplexMatrix& a, const PenroseDecomposition& pd,
                               const ToleranceConfig& tol, double& worst) {
    // spectral projections of |A| for each value, from the eigenvectors of A*A
    const Eigen::Index n = a.rows();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a.adjoint() * a);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    double amax = 0.0;
    for (const auto& term : pd.terms) {
        amax = std::max(amax, term.value);
    }
    bool ok = true;
    for (const auto& term : pd.terms) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(std::sqrt(std::max(lambda(i), 0.0)) - term.value) <= 1e-6 * amax) {
                e += eig.eigenvectors().col(i) * eig.eigenvectors().col(i).adjoint();
            }
        }
        const double d = op_norm(term.isometry.adjoint() * term.isometry - e);
        worst = std::max(worst, d);
        ok = ok && d <= tol.eq_tol;
    }
    return ok;
}

void penrose_roundtrip(Trial& t) {
    const Eigen::Index n = t.dim();
    const double mag = t.cfg.magnitude;
    if (t.index < 1000) {
        const bool separated = t.index % 2 == 1;
        const ComplexMatrix a = separated ? gen_separated_matrix(t.rng, n, mag)
                                          : gen_matrix(t.rng, n, mag * t.rng.uniform(0.1, 10.0));
        const PenroseDecomposition pd = penrose_decompose(a, t.tol());
        const ComplexMatrix back = reconstruct(pd, t.tol());
        const double res = op_norm(back - a) / std::max(1.0, op_norm(a));
        t.report.track_max("roundtrip-residual", res);
        t.check("roundtrip", res <= 1e-9, res, "reconstruct(penrose_decompose(A)) != A", {digest(a)});
        t.check("zero-iff-empty", pd.terms.empty() == (op_norm(a) == 0.0), 0.0,
                "empty decomposition does not match A = 0", {digest(a)});
        if (separated) {
            double worst = 0.0;
            const bool ok = initial_projections_match(a, pd, t.tol(), worst);
            t.report.track_max("initial-projection-residual", worst);
            t.check("initial-projection", ok, worst,
                    "U_j* U_j differs from the spectral projection of |A|", {digest(a)});
        }
    } else {
        const PenroseDecomposition pd = gen_penrose(t.rng, n, t.tol(), mag);
        const ComplexMatrix a = reconstruct(pd, t.tol());
        const PenroseDecomposition again = penrose_decompose(a, t.tol());
        t.check("uniqueness", same_decomposition(pd, again, t.tol()), 0.0,
                "penrose_decompose(reconstruct(pd)) differs from pd", {digest(a)});
    }
}

// ---------------------------------------------------------------- thm25-criterion

void thm25(Trial& t) {
    const Eigen::Index n = t.dim();
    const double mag = t.cfg.magnitude;
    ComplexMatrix a;
    ComplexMatrix b;
    if (t.index < 500) {
        std::tie(a, b) = gen_separated_comparable_pair(t.rng, n, mag);
    } else if (t.rng.coin(0.8)) {
        a = gen_separated_matrix(t.rng, n, mag);
        b = gen_separated_matrix(t.rng, n, mag);
    } else {
        std::tie(b, a) = gen_separated_comparable_pair(t.rng, n, mag);
    }
    const bool order = star_leq(a, b, t.tol());
    const bool criterion =
        pd_star_leq(penrose_decompose(a, t.tol()), penrose_decompose(b, t.tol()), t.tol());
    t.check("criterion", order == criterion, drazin_residual(a, b),
            order ? "A <=* B but no matching injection of Penrose terms"
                  : "Penrose terms match but A is not below B",
            {digest(a), digest(b)});
}

// ---------------------------------------------------------------- join-oracle

void join_oracle(Trial& t) {
    const double mag = t.cfg.magnitude;
    if (t.index < 200) {
        const Eigen::Index n = t.dim_at_most(3);
        const auto [a, b] = gen_join_pair(t.rng, n, mag);
        const std::vector<std::string> digests{digest(a), digest(b)};
        std::optional<ComplexMatrix> join;
        try {
            join = try_join(a, b, t.tol());
        } catch (const NumericFailure& e) {
            t.check("try-join-decided", false, 0.0, e.what(), digests);
            return;
        }
        const OracleResult oracle = oracle_join(a, b, 16, t.rng.bits(), t.tol());
        t.report.track_max("oracle-residual-found",
                           oracle.status == OracleStatus::found ? oracle.residual : 0.0);
        if (!t.check("oracle-decided", oracle.status != OracleStatus::inconclusive, oracle.residual,
                     oracle.reason, digests)) {
            return;
        }
        const bool exists = oracle.status == OracleStatus::found;
        t.report.tally(exists ? "join-exists" : "join-absent", true);
        t.check("existence", exists == join.has_value(), oracle.residual,
                exists ? "oracle finds a join, try_join does not" : "try_join returns a join the oracle rules out",
                digests);
        if (exists && join) {
            t.check("join-equality", approx_eq(*join, *oracle.join, t.tol()), rel_diff(*join, *oracle.join),
                    "try_join and oracle disagree on the join", digests);
        }
        if (join) {
            t.check("upper-bound", star_leq(a, *join, t.tol()) && star_leq(b, *join, t.tol()),
                    std::max(drazin_residual(a, *join), drazin_residual(b, *join)),
                    "returned join is not an upper bound", digests);
            for (const auto& c : oracle.sampled_bounds) {
                t.check("below-sampled-bounds", star_leq(*join, c, t.tol()), drazin_residual(*join, c),
                        "returned join is not below a common upper bound", {digests[0], digests[1], digest(c)});
            }
        }
    } else {
        // supremum below a known bound: family of sub-sums of the singular terms of B
        const Eigen::Index n = t.dim();
        const ComplexMatrix u = random_unitary(t.rng, n);
        const ComplexMatrix v = random_unitary(t.rng, n);
        Eigen::VectorXd s(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            s(i) = mag * (i + 1 + 0.4 * t.rng.uniform()) / static_cast<double>(n);
        }
        auto sub_sum = [&](const std::vector<bool>& mask) {
            ComplexVector d = ComplexVector::Zero(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                if (mask[static_cast<std::size_t>(i)]) d(i) = s(i);
            }
            return ComplexMatrix(u * d.asDiagonal() * v.adjoint());
        };
        const std::vector<bool> all(static_cast<std::size_t>(n), true);
        const ComplexMatrix bound = sub_sum(all);
        std::vector<ComplexMatrix> family;
        std::vector<bool> uni(static_cast<std::size_t>(n), false);
        const int members = t.rng.integer(0, 3);
        for (int m = 0; m < members; ++m) {
            std::vector<bool> mask(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < mask.size(); ++i) {
                mask[i] = t.rng.coin(0.4);
                uni[i] = uni[i] || mask[i];
            }
            family.push_back(sub_sum(mask));
        }
        const ComplexMatrix sup = supremum_with_bound(family, bound, t.tol());
        bool ok = star_leq(sup, bound, t.tol());
        for (const auto& f : family) {
            ok = ok && star_leq(f, sup, t.tol());
        }
        t.check("sup-upper-bound", ok, 0.0, "supremum is not between the family and the bound",
                {digest(bound)});
        for (int k = 0; k < 4; ++k) {
            std::vector<bool> mask = uni;
            for (std::size_t i = 0; i < mask.size(); ++i) {
                mask[i] = mask[i] || t.rng.coin(0.3);
            }
            const ComplexMatrix upper = sub_sum(mask);
            t.check("sup-minimality", star_leq(sup, upper, t.tol()), drazin_residual(sup, upper),
                    "supremum is not below an upper bound of the family", {digest(bound), digest(upper)});
        }
    }
}

// ---------------------------------------------------------------- automorphism-battery

constexpr std::size_t kBatterySize = 7;
constexpr std::size_t kPairsPerSpec = 200;

std::uint64_t battery_seed(const GeneratorConfig& cfg, Eigen::Index n) {
    return trial_seed(cfg.seed ^ 0x5bd1e9955bd1e995ull, static_cast<std::uint64_t>(n));
}

void automorphism_trial(Trial& t) {
    const Eigen::Index n = t.dim();
    const std::vector<BatteryEntry> battery = automorphism_battery(n, battery_seed(t.cfg, n));
    const std::size_t pair_trials = kBatterySize * kPairsPerSpec;

    if (t.index < pair_trials) {
        const BatteryEntry& entry = battery[t.index / kPairsPerSpec];
        SampledPair pair = draw_mixed_pair(t.rng, n, t.cfg.magnitude, t.cfg.comparable_fraction);
        pair.seed = t.seed;
        VerificationReport sub =
            verify_automorphism(entry.spec, [&pair](std::size_t) { return pair; }, 1, t.tol());
        for (auto& v : sub.violations) {
            v.trial = t.index;
            v.seed = t.seed;
            v.detail = entry.name + ": " + v.detail;
        }
        sub.trials = 0;
        sub.notes.clear();
        t.report.merge(sub);
        return;
    }

    const ComplexMatrix a = t.rng.coin(0.8) ? gen_matrix(t.rng, n, t.cfg.magnitude)
                                            : gen_separated_matrix(t.rng, n, t.cfg.magnitude);
    if (t.index < pair_trials + 200) {
        for (const auto& entry : battery) {
            const AutomorphismSpec& s = entry.spec;
            const ComplexMatrix x = apply(s, a, t.tol());
            if (s.h().continuous_at_zero()) {
                const ComplexMatrix y = apply_continuous(s, a, t.tol());
                const double err = rel_diff(x, y);
                t.report.track_max("continuous-consistency", err);
                t.check("continuous-consistency", err <= 1e-8, err,
                        entry.name + ": apply and apply_continuous disagree", {digest(a)});
            }
            // Penrose equivariance: values alpha |h(a_j)|, same number of terms
            const PenroseDecomposition pa = penrose_decompose(a, t.tol());
            const PenroseDecomposition px = penrose_decompose(x, t.tol());
            std::vector<double> expected;
            for (const auto& term : pa.terms) {
                expected.push_back(s.alpha() * std::abs(s.h()(term.value)));
            }
            std::sort(expected.begin(), expected.end());
            bool ok = expected.size() == px.terms.size();
            double worst = 0.0;
            for (std::size_t i = 0; ok && i < expected.size(); ++i) {
                const double d = std::abs(expected[i] - px.terms[i].value) /
                                 std::max(expected.back(), 1e-300);
                worst = std::max(worst, d);
                ok = d <= 1e-8;
            }
            t.check("penrose-equivariance", ok, worst,
                    entry.name + ": Penrose values of phi(A) are not alpha |h(a_j)|", {digest(a)});
        }
        return;
    }

    for (const auto& entry : battery) {
        const ScalarMap::Kind kind = entry.spec.h().kind();
        if (kind == ScalarMap::Kind::composite || kind == ScalarMap::Kind::phase_power) {
            continue;
        }
        const AutomorphismSpec inverse = invert(entry.spec);
        const ComplexMatrix back = apply(inverse, apply(entry.spec, a, t.tol()), t.tol());
        const double err = rel_diff(back, a);
        t.report.track_max("inverse-roundtrip", err);
        t.check("inverse-roundtrip", err <= 1e-8, err, entry.name + ": invert(s) does not undo s",
                {digest(a)});
    }
}

// ---------------------------------------------------------------- model-roundtrip

std::vector<double> model_partition() {
    std::vector<double> p;
    for (int k = 0; k <= 64; ++k) {
        p.push_back(k / 4.0);
    }
    return p;
}

struct ModelMaps {
    ScalarMap f;
    ScalarMap g;
};

ModelMaps model_maps(int which) {
    switch (which) {
    case 0:
        return {ScalarMap::power(2.0), ScalarMap::power(2.0)};
    case 1:
        return {ScalarMap::scale({0.0, 2.0}), ScalarMap::scale(2.0)};
    case 2: {
        const auto pl = ScalarMap::piecewise_linear({{1.0, 0.5}, {4.0, 6.0}, {8.0, 7.0}});
        return {pl, pl};
    }
    default:
        return {ScalarMap::phase_power(1.5, 0.4), ScalarMap::power(1.5)};
    }
}

void model_roundtrip(Trial& t) {
    const SpectralModel m = gen_model(t.rng, 6);
    const TypeSplit split = model_type_split(m);
    t.check("split-merge", model_merge(split.type1, split.type2) == m, 0.0,
            "merge(split(M)) != M");
    t.check("split-purity", split.type1.bands().empty() && split.type2.atoms().empty(), 0.0,
            "split parts are not pure");

    // uniqueness: every assignment of parts to (atom side, band side) that yields a pure-atom
    // and a pure-band model merging to M must be the canonical split
    std::vector<std::pair<bool, std::size_t>> parts;
    for (std::size_t i = 0; i < m.atoms().size(); ++i) parts.push_back({true, i});
    for (std::size_t i = 0; i < m.bands().size(); ++i) parts.push_back({false, i});
    std::size_t valid = 0;
    bool unique = true;
    for (std::uint32_t mask = 0; mask < (1u << parts.size()); ++mask) {
        std::vector<Atom> a1;
        std::vector<Band> b1;
        std::vector<Atom> a2;
        std::vector<Band> b2;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const bool first = (mask >> i) & 1u;
            const auto [is_atom, idx] = parts[i];
            if (is_atom) {
                (first ? a1 : a2).push_back(m.atoms()[idx]);
            } else {
                (first ? b1 : b2).push_back(m.bands()[idx]);
            }
        }
        if (!b1.empty() || !a2.empty()) {
            continue;  // first side must be pure-atom, second pure-band
        }
        const SpectralModel m1(a1, b1);
        const SpectralModel m2(a2, b2);
        if (model_merge(m1, m2) == m) {
            ++valid;
            unique = unique && m1 == split.type1 && m2 == split.type2;
        }
    }
    t.check("split-uniqueness", unique && valid == 1, static_cast<double>(valid),
            "type split is not unique");

    // type respect of the model-level action
    const ModelMaps maps = model_maps(t.rng.integer(0, 3));
    const SpectralModel whole = apply_model(maps.f, maps.g, m, t.tol());
    const SpectralModel p1 = apply_model(maps.f, maps.g, split.type1, t.tol());
    const SpectralModel p2 = apply_model(maps.f, maps.g, split.type2, t.tol());
    const TypeSplit whole_split = model_type_split(whole);
    t.check("type-respect", whole_split.type1 == p1 && whole_split.type2 == p2, 0.0,
            "apply_model does not commute with the type split");

    // order consistency against the discretized realization
    const SpectralModel sub = gen_sub_model(t.rng, m);
    const bool leq = model_star_leq(sub, m);
    t.check("sub-model-order", leq, 0.0, "sub-model is not below its model");
    const std::vector<double> partition = model_partition();
    const CoordinateLayout layout = joint_layout({&sub, &m}, partition, 1);
    const Discretization ds = discretize(sub, partition, 1, layout, t.tol());
    const Discretization dm = discretize(m, partition, 1, layout, t.tol());
    t.check("order-consistency", !leq || pd_star_leq(ds.decomposition, dm.decomposition, t.tol()),
            0.0, "model order not reflected by the discretized decompositions");
}

// ---------------------------------------------------------------- discretize-density

void discretize_density(Trial& t) {
    const int lo8 = t.rng.integer(1, 64);
    const int width8 = t.rng.integer(1, 32);
    const Band band{lo8 / 8.0, (lo8 + width8) / 8.0, "v"};
    std::vector<Atom> atoms;
    if (t.rng.coin()) {
        atoms.push_back({band.hi + 1.0, "u", 1});
    }
    const SpectralModel m(atoms, {band});

    double previous = 0.0;
    for (int level = 0; level <= 6; ++level) {
        const int cells = 1 << level;
        const double delta = (band.hi - band.lo) / cells;
        std::vector<double> partition;
        for (int k = 0; k <= cells; ++k) {
            partition.push_back(band.lo + k * delta);
        }
        partition.push_back(band.hi + 2.0);  // covers the atom side as well
        const Discretization d = discretize(m, partition, 1, std::nullopt, t.tol());
        std::vector<double> values;
        for (const auto& term : d.decomposition.terms) {
            if (term.value >= band.lo && term.value <= band.hi) {
                values.push_back(term.value);
            }
        }
        t.check("cell-count", values.size() == static_cast<std::size_t>(cells),
                static_cast<double>(values.size()), "band did not produce one term per cell");
        t.check("no-adjustment", d.adjustments.empty(), 0.0, "dyadic cells needed value adjustments");
        const double h = band_hausdorff(band, values);
        t.report.track_max("hausdorff-over-mesh", h / delta);
        t.check("mesh-bound", h <= delta, h - delta, "a band point is farther than the mesh from every value");
        if (level > 0) {
            t.check("halving", h == previous / 2.0, h - previous / 2.0,
                    "halving the mesh did not halve the Hausdorff distance");
        }
        previous = h;
    }
}

const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> suites{
        {"poset-axioms", {1500, poset_axioms}},
        {"block-equivalence", {1000, block_equivalence}},
        {"prop21", {500, prop21}},
        {"penrose-roundtrip", {1200, penrose_roundtrip}},
        {"thm25-criterion", {1000, thm25}},
        {"join-oracle", {400, join_oracle}},
        {"automorphism-battery", {kBatterySize * kPairsPerSpec + 400, automorphism_trial}},
        {"model-roundtrip", {200, model_roundtrip}},
        {"discretize-density", {200, discretize_density}},
    };
    return suites;
}

const Suite& find_suite(const std::string& name) {
    const auto& r = registry();
    const auto it = r.find(name);
    if (it == r.end()) {
        std::string known;
        for (const auto& n : suite_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw ContractError("unknown suite '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

void run_one(const Suite& suite, const GeneratorConfig& cfg, VerificationReport& report,
             std::size_t index) {
    const std::uint64_t seed = trial_seed(cfg.seed, index);
    Trial t{cfg, report, index, seed, Rng(seed)};
    ++report.trials;
    try {
        suite.body(t);
    } catch (const Error& e) {
        t.check("exception", false, 0.0, e.what());
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "poset-axioms",      "block-equivalence",    "prop21",
        "penrose-roundtrip", "thm25-criterion",      "join-oracle",
        "automorphism-battery", "model-roundtrip",   "discretize-density"};
    return names;
}

VerificationReport run_suite(const std::string& name, const GeneratorConfig& cfg) {
    cfg.validate();
    const Suite& suite = find_suite(name);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.name = name;
    for (std::size_t i = 0; i < suite.trials; ++i) {
        run_one(suite, cfg, report, i);
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerificationReport replay_trial(const std::string& name, const GeneratorConfig& cfg,
                                std::size_t trial) {
    cfg.validate();
    const Suite& suite = find_suite(name);
    if (trial >= suite.trials) {
        throw ContractError("suite '" + name + "' has " + std::to_string(suite.trials) + " trials");
    }
    VerificationReport report;
    report.name = name;
    run_one(suite, cfg, report, trial);
    return report;
}

SampledPair draw_mixed_pair(Rng& rng, Eigen::Index n, double magnitude, double comparable_fraction) {
    SampledPair p;
    if (rng.coin(comparable_fraction)) {
        std::tie(p.a, p.b) = gen_comparable_pair(rng, n, magnitude);
        if (rng.coin(0.25)) {
            std::swap(p.a, p.b);
        }
        return p;
    }
    switch (rng.integer(0, 2)) {
    case 0:
        std::tie(p.a, p.b) = gen_orthogonal_pair(rng, n, magnitude);
        break;
    case 1:
        p.a = gen_matrix(rng, n, magnitude);
        p.b = gen_matrix(rng, n, magnitude);
        break;
    default: {
        const Triple tr = gen_nested_triple(rng, n, magnitude);
        p.a = tr.a;
        p.b = tr.c;
        break;
    }
    }
    return p;
}

PairSampler mixed_pair_sampler(Eigen::Index n, const GeneratorConfig& cfg) {
    cfg.validate();
    return [n, cfg](std::size_t trial) {
        const std::uint64_t seed = trial_seed(cfg.seed, trial);
        Rng rng(seed);
        SampledPair p = draw_mixed_pair(rng, n, cfg.magnitude, cfg.comparable_fraction);
        p.seed = seed;
        return p;
    };
}

std::vector<BatteryEntry> automorphism_battery(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix s1 = random_unitary(rng, n);
    const ComplexMatrix t1 = random_unitary(rng, n);
    const ComplexMatrix s2 = random_unitary(rng, n);
    const ComplexMatrix t2 = random_unitary(rng, n);
    const ComplexMatrix s3 = random_unitary(rng, n);
    const ComplexMatrix t3 = random_unitary(rng, n);

    std::vector<BatteryEntry> out;
    out.push_back({"identity", AutomorphismSpec::identity(n)});
    out.push_back({"power-direct",
                   AutomorphismSpec(1.0, {id, false}, {id, false}, ScalarMap::power(2.0), Variant::direct)});
    out.push_back({"scale-adjoint", AutomorphismSpec(1.0, {s1, false}, {t1, false},
                                                     ScalarMap::scale({0.6, 0.8}), Variant::adjoint)});
    out.push_back({"phase-power-antiunitary",
                   AutomorphismSpec(1.5, {s2, true}, {t2, true}, ScalarMap::phase_power(0.5, 0.9),
                                    Variant::direct)});
    out.push_back({"piecewise-adjoint",
                   AutomorphismSpec(0.5, {s3, false}, {t3, false},
                                    ScalarMap::piecewise_linear({{0.5, 1.0}, {1.0, 1.5}, {2.0, 4.0}}),
                                    Variant::adjoint)});
    out.push_back({"power-antiunitary-adjoint",
                   AutomorphismSpec(1.0, {t1, true}, {s3, true}, ScalarMap::power(3.0), Variant::adjoint)});
    out.push_back({"composite", compose(out[3].spec, out[4].spec)});
    return out;
}

}  // namespace starorder::harness
