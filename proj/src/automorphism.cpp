#include "starorder/automorphism.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "starorder/errors.hpp"
#include "starorder/penrose.hpp"
#include "starorder/star_order.hpp"

namespace starorder {

namespace {

ComplexMatrix conj_if(bool flag, const ComplexMatrix& x) { return flag ? x.conjugate() : x; }

// Matrix form of X -> S X T: left * X^(sigma) * right, where sigma is the anti-unitary flag.
ComplexMatrix left_factor(const AutomorphismSpec& s) { return s.s().matrix; }
ComplexMatrix right_factor(const AutomorphismSpec& s) {
    return conj_if(s.antiunitary(), s.t().matrix);
}

AutomorphismSpec from_factors(double alpha, const ComplexMatrix& left, const ComplexMatrix& right,
                              bool anti, ScalarMap h, Variant variant) {
    return AutomorphismSpec(alpha, UnitaryLike{left, anti}, UnitaryLike{conj_if(anti, right), anti},
                            std::move(h), variant);
}

ComplexMatrix outer_action(const AutomorphismSpec& spec, const ComplexMatrix& core) {
    return spec.alpha() * left_factor(spec) * conj_if(spec.antiunitary(), core) *
           right_factor(spec);
}

void require_unitary(const ComplexMatrix& u, const char* name, const ToleranceConfig& tol) {
    require_well_formed(u, name);
    const auto n = u.rows();
    if (op_norm(u.adjoint() * u - ComplexMatrix::Identity(n, n)) > tol.eq_tol) {
        throw ContractError(std::string(name) + " is not unitary");
    }
}

}  // namespace

const char* to_string(Variant v) { return v == Variant::direct ? "direct" : "adjoint"; }

AutomorphismSpec::AutomorphismSpec(double alpha, UnitaryLike s, UnitaryLike t, ScalarMap h,
                                   Variant variant, const ToleranceConfig& tol)
    : alpha_(alpha), s_(std::move(s)), t_(std::move(t)), h_(std::move(h)), variant_(variant) {
    if (!std::isfinite(alpha_) || alpha_ <= 0.0) {
        throw ContractError("alpha must be positive");
    }
    require_unitary(s_.matrix, "S", tol);
    require_unitary(t_.matrix, "T", tol);
    if (s_.matrix.rows() != t_.matrix.rows()) {
        throw ShapeError("S and T act on spaces of different dimension");
    }
    if (s_.antiunitary != t_.antiunitary) {
        throw ContractError("S and T must be both unitary or both anti-unitary");
    }
}

AutomorphismSpec AutomorphismSpec::identity(Eigen::Index dim) {
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    return AutomorphismSpec(1.0, {id, false}, {id, false}, ScalarMap::identity(), Variant::direct);
}

ComplexMatrix apply(const AutomorphismSpec& spec, const ComplexMatrix& a,
                    const ToleranceConfig& tol) {
    require_well_formed(a, "argument");
    if (a.rows() != spec.dim()) {
        throw ShapeError("argument dimension does not match the automorphism");
    }
    const PenroseDecomposition pd = penrose_decompose(a, tol);
    ComplexMatrix core = ComplexMatrix::Zero(a.rows(), a.cols());
    for (const auto& term : pd.terms) {
        const Complex coeff = spec.h()(term.value);
        if (spec.variant() == Variant::direct) {
            core += coeff * term.isometry;
        } else {
            core += coeff * term.isometry.adjoint();
        }
    }
    return outer_action(spec, core);
}

ComplexMatrix apply_continuous(const AutomorphismSpec& spec, const ComplexMatrix& a,
                               const ToleranceConfig& tol) {
    if (!spec.h().continuous_at_zero()) {
        throw ContractError("h is not continuous on [0, inf) with h(0) = 0; use apply instead");
    }
    require_well_formed(a, "argument");
    if (a.rows() != spec.dim()) {
        throw ShapeError("argument dimension does not match the automorphism");
    }
    const PolarParts parts =
        polar(spec.variant() == Variant::direct ? ComplexMatrix(a) : ComplexMatrix(a.adjoint()), tol);
    const ComplexMatrix core = parts.w * functional_calculus(parts.p, spec.h(), tol);
    return outer_action(spec, core);
}

SpectralModel apply_model(const ScalarMap& f, const ScalarMap& g, const SpectralModel& m,
                          const ToleranceConfig& tol) {
    if (!g.real_increasing()) {
        throw ContractError("band map must be real, continuous and strictly increasing with g(0) = 0");
    }
    std::vector<Atom> atoms;
    double vmax = 0.0;
    for (const auto& atom : m.atoms()) {
        atoms.push_back({std::abs(f(atom.value)), atom.label, atom.multiplicity});
        vmax = std::max(vmax, atoms.back().value);
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(atoms[i].value - atoms[j].value) <= tol.group_tol * vmax) {
                throw ContractError("atom map collapses the values of '" + atoms[j].label +
                                    "' and '" + atoms[i].label + "'");
            }
        }
    }
    std::vector<Band> bands;
    for (const auto& band : m.bands()) {
        bands.push_back({g(band.lo).real(), g(band.hi).real(), band.label});
    }
    return SpectralModel(std::move(atoms), std::move(bands));
}

AutomorphismSpec compose(const AutomorphismSpec& first, const AutomorphismSpec& second) {
    if (first.dim() != second.dim()) {
        throw ShapeError("cannot compose automorphisms of different dimension");
    }
    const bool anti1 = first.antiunitary();
    const bool anti2 = second.antiunitary();
    const bool outer_adjoint = first.variant() == Variant::adjoint;

    // first(second(A)): the Penrose terms of second(A) are (alpha2 |h2(a)|, L2 (ph2(a) Y)^(s2) R2),
    // so the scalar becomes conj^(s2)(h1(alpha2 |h2(a)|)) times ph2(a), conjugated again when
    // the outer map takes adjoints.
    ComplexMatrix left;
    ComplexMatrix right;
    if (!outer_adjoint) {
        left = left_factor(first) * conj_if(anti1, left_factor(second));
        right = conj_if(anti1, right_factor(second)) * right_factor(first);
    } else {
        left = left_factor(first) * conj_if(anti1, right_factor(second).adjoint());
        right = conj_if(anti1, left_factor(second).adjoint()) * right_factor(first);
    }
    const Variant variant =
        (second.variant() == Variant::adjoint) != outer_adjoint ? Variant::adjoint : Variant::direct;

    double alpha = first.alpha();
    ScalarMap h = ScalarMap::identity();
    if (first.h().kind() == ScalarMap::Kind::identity) {
        alpha *= second.alpha();
        h = outer_adjoint ? second.h().conjugated() : second.h();
    } else if (second.h().kind() == ScalarMap::Kind::identity) {
        auto [c, scaled] = first.h().with_scaled_argument(second.alpha());
        alpha *= c;
        h = anti2 ? scaled.conjugated() : scaled;
    } else {
        h = ScalarMap::composite(first.h(), second.h(), second.alpha(), anti2, outer_adjoint);
    }
    return from_factors(alpha, left, right, anti1 != anti2, std::move(h), variant);
}

AutomorphismSpec invert(const AutomorphismSpec& spec) {
    const ScalarMap& h = spec.h();
    const bool anti = spec.antiunitary();
    const bool adjoint = spec.variant() == Variant::adjoint;
    // the phase of h(a) reappears conjugated exactly when anti == adjoint
    const bool conj_phase = anti == adjoint;

    double alpha = 1.0;
    ScalarMap inv = ScalarMap::identity();
    switch (h.kind()) {
    case ScalarMap::Kind::identity:
        alpha = 1.0 / spec.alpha();
        break;
    case ScalarMap::Kind::power:
        alpha = std::pow(spec.alpha(), -1.0 / h.exponent());
        inv = ScalarMap::power(1.0 / h.exponent());
        break;
    case ScalarMap::Kind::scale: {
        const Complex c = h.factor();
        const Complex phase = c / std::abs(c);
        alpha = 1.0 / (spec.alpha() * std::abs(c));
        inv = ScalarMap::scale(conj_phase ? std::conj(phase) : phase);
        break;
    }
    case ScalarMap::Kind::piecewise_linear: {
        std::vector<std::pair<double, double>> table;
        for (const auto& [x, y] : h.breakpoints()) {
            table.emplace_back(spec.alpha() * y, x);
        }
        inv = ScalarMap::piecewise_linear(std::move(table));
        break;
    }
    default:
        throw UnsupportedError(std::string("no closed-form inverse for scalar map kind ") +
                               to_string(h.kind()));
    }

    const ComplexMatrix& us = spec.s().matrix;
    const ComplexMatrix& ut = spec.t().matrix;
    if (adjoint) {
        return AutomorphismSpec(alpha, {ut, anti}, {us, anti}, std::move(inv), Variant::adjoint);
    }
    if (anti) {
        return AutomorphismSpec(alpha, {us.transpose(), true}, {ut.transpose(), true},
                                std::move(inv), Variant::direct);
    }
    return AutomorphismSpec(alpha, {us.adjoint(), false}, {ut.adjoint(), false}, std::move(inv),
                            Variant::direct);
}

VerificationReport verify_automorphism(const AutomorphismSpec& spec, const PairSampler& sampler,
                                       std::size_t n, const ToleranceConfig& tol) {
    if (n < 1) {
        throw ContractError("verification needs at least one trial");
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.name = "automorphism";

    const double h_at_one = spec.alpha() * std::abs(spec.h()(1.0));
    const bool normalized = std::abs(h_at_one - 1.0) <= tol.eq_tol;
    if (!normalized) {
        report.notes.push_back("alpha |h(1)| != 1: partial-isometry preservation counted, not enforced");
    }

    for (std::size_t trial = 0; trial < n; ++trial) {
        const SampledPair pair = sampler(trial);
        ++report.trials;
        auto flag = [&](const std::string& check, double residual, const std::string& detail,
                        std::vector<std::string> digests) {
            report.violations.push_back({check, std::move(digests), residual, trial, pair.seed, detail});
        };
        const std::vector<std::string> digests{digest(pair.a), digest(pair.b)};

        ComplexMatrix fa;
        ComplexMatrix fb;
        try {
            fa = apply(spec, pair.a, tol);
            fb = apply(spec, pair.b, tol);
        } catch (const Error& e) {
            report.tally("evaluation", false);
            flag("evaluation", 0.0, e.what(), digests);
            continue;
        }
        report.tally("evaluation", true);

        // (a) order, both argument orders
        for (int swap = 0; swap < 2; ++swap) {
            const ComplexMatrix& x = swap ? pair.b : pair.a;
            const ComplexMatrix& y = swap ? pair.a : pair.b;
            const ComplexMatrix& fx = swap ? fb : fa;
            const ComplexMatrix& fy = swap ? fa : fb;
            const bool before = star_leq(x, y, tol);
            const bool after = star_leq(fx, fy, tol);
            report.tally("order", before == after);
            if (before != after) {
                flag("order", drazin_residual(fx, fy),
                     before ? "comparable pair mapped to incomparable pair"
                            : "incomparable pair mapped to comparable pair",
                     digests);
            }
        }

        // (b) rank
        for (int which = 0; which < 2; ++which) {
            const std::size_t r0 = rank(which ? pair.b : pair.a, tol);
            const std::size_t r1 = rank(which ? fb : fa, tol);
            report.tally("rank", r0 == r1);
            if (r0 != r1) {
                flag("rank", std::abs(static_cast<double>(r1) - static_cast<double>(r0)),
                     "rank " + std::to_string(r0) + " mapped to rank " + std::to_string(r1), digests);
            }
        }

        // (c) partial isometries: the polar factors of the sampled matrices
        for (int which = 0; which < 2; ++which) {
            const ComplexMatrix w = polar(which ? pair.b : pair.a, tol).w;
            if (op_norm(w) <= tol.eq_tol) {
                continue;
            }
            const ComplexMatrix fw = apply(spec, w, tol);
            const bool ok = is_partial_isometry(fw, tol);
            report.tally("partial-isometry", ok);
            if (normalized && !ok) {
                flag("partial-isometry", op_norm(fw * fw.adjoint() * fw - fw),
                     "partial isometry mapped outside PI(H)", {digest(w)});
            }
        }

        // (d) orthogonality on (A, B) and (A, B - A)
        for (int which = 0; which < 2; ++which) {
            const ComplexMatrix y = which ? ComplexMatrix(pair.b - pair.a) : pair.b;
            const ComplexMatrix fy = which ? apply(spec, y, tol) : fb;
            const bool before = orthogonal(pair.a, y, tol);
            const bool after = orthogonal(fa, fy, tol);
            report.tally("orthogonality", before == after);
            if (before != after) {
                flag("orthogonality", op_norm(fa.adjoint() * fy) + op_norm(fa * fy.adjoint()),
                     before ? "orthogonal pair mapped to non-orthogonal pair"
                            : "non-orthogonal pair mapped to orthogonal pair",
                     {digest(pair.a), digest(y)});
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace starorder
