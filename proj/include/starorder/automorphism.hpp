#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "starorder/numerics.hpp"
#include "starorder/report.hpp"
#include "starorder/scalar_map.hpp"
#include "starorder/spectral_model.hpp"

namespace starorder {

/// Unitary matrix U acting as x -> U x, or as the anti-unitary x -> U conj(x).
struct UnitaryLike {
    ComplexMatrix matrix;
    bool antiunitary = false;
};

enum class Variant { direct, adjoint };

const char* to_string(Variant v);

/// Parameters (alpha, S, T, h, variant) of a canonical star-order automorphism
///
///   direct:  A = sum a_j U_j  ->  alpha S (sum h(a_j) U_j ) T
///   adjoint: A = sum a_j U_j  ->  alpha S (sum h(a_j) U_j*) T
///
/// Validated on construction: alpha > 0, S and T unitary of equal size, both linear or
/// both anti-linear.
class AutomorphismSpec {
public:
    AutomorphismSpec(double alpha, UnitaryLike s, UnitaryLike t, ScalarMap h, Variant variant,
                     const ToleranceConfig& tol = {});

    static AutomorphismSpec identity(Eigen::Index dim);

    double alpha() const noexcept { return alpha_; }
    const UnitaryLike& s() const noexcept { return s_; }
    const UnitaryLike& t() const noexcept { return t_; }
    const ScalarMap& h() const noexcept { return h_; }
    Variant variant() const noexcept { return variant_; }
    bool antiunitary() const noexcept { return s_.antiunitary; }
    Eigen::Index dim() const noexcept { return s_.matrix.rows(); }

private:
    double alpha_;
    UnitaryLike s_;
    UnitaryLike t_;
    ScalarMap h_;
    Variant variant_;
};

/// Applies the canonical form through the Penrose decomposition of A. With anti-unitary
/// S, T the matrix of the result is alpha U_S conj(core) conj(U_T).
ComplexMatrix apply(const AutomorphismSpec& spec, const ComplexMatrix& a,
                    const ToleranceConfig& tol = {});

/// Same map through the polar form W_A h(|A|) (or W_{A*} h(|A*|) for the adjoint variant).
/// Requires h continuous on [0, inf) with h(0) = 0; throws ContractError otherwise.
ComplexMatrix apply_continuous(const AutomorphismSpec& spec, const ComplexMatrix& a,
                               const ToleranceConfig& tol = {});

/// Model-level action: atoms (a, l, m) -> (|f(a)|, l, m), bands [lo, hi] -> [g(lo), g(hi)].
/// g must be real, continuous and strictly increasing with g(0) = 0.
SpectralModel apply_model(const ScalarMap& f, const ScalarMap& g, const SpectralModel& m,
                          const ToleranceConfig& tol = {});

/// Spec of A -> first(second(A)).
AutomorphismSpec compose(const AutomorphismSpec& first, const AutomorphismSpec& second);

/// Throws UnsupportedError unless h is identity, power, scale or piecewise-linear.
AutomorphismSpec invert(const AutomorphismSpec& spec);

struct SampledPair {
    ComplexMatrix a;
    ComplexMatrix b;
    std::uint64_t seed = 0;
};

/// Pair generator addressed by trial index, so trials can be replayed independently.
using PairSampler = std::function<SampledPair(std::size_t trial)>;

/// Empirical check of the automorphism properties over n sampled pairs: order preservation
/// in both directions, rank preservation, partial-isometry preservation (counted always,
/// enforced only when alpha |h(1)| = 1) and orthogonality preservation.
VerificationReport verify_automorphism(const AutomorphismSpec& spec, const PairSampler& sampler,
                                       std::size_t n, const ToleranceConfig& tol = {});

}  // namespace starorder
