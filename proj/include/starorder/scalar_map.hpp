#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "starorder/numerics.hpp"

namespace starorder {

/// Complex function h on (0, inf) whose modulus is a bijection of (0, inf).
///
/// The kinds are closed under the operations the automorphism layer needs:
/// conjugation, rescaling of the argument and (through `composite`) composition.
/// Evaluation at 0 returns 0 for kinds that extend continuously with h(0) = 0 and
/// throws MapDomainError otherwise.
class ScalarMap {
public:
    enum class Kind { identity, power, scale, phase_power, piecewise_linear, composite };

    static ScalarMap identity();
    /// x^p, p != 0
    static ScalarMap power(double exponent);
    /// c x, c != 0
    static ScalarMap scale(Complex factor);
    /// x^p e^{i theta}, p > 0
    static ScalarMap phase_power(double exponent, double phase);
    /// Linear interpolation through (0, 0) and the given (x, y) breakpoints, extended past the
    /// last breakpoint with the slope of the last segment. Both coordinates strictly increasing.
    static ScalarMap piecewise_linear(std::vector<std::pair<double, double>> breakpoints);
    /// x -> conj^{conj_outer}(outer(inner_scale * |inner(x)|)) * phase(inner(x)), with the
    /// phase conjugated when conj_phase is set.
    static ScalarMap composite(const ScalarMap& outer, const ScalarMap& inner, double inner_scale,
                               bool conj_outer, bool conj_phase);

    Kind kind() const noexcept { return kind_; }
    double exponent() const noexcept { return exponent_; }
    Complex factor() const noexcept { return factor_; }
    double phase() const noexcept { return phase_; }
    const std::vector<std::pair<double, double>>& breakpoints() const noexcept { return table_; }
    const ScalarMap& outer() const;
    const ScalarMap& inner() const;
    double inner_scale() const noexcept { return inner_scale_; }
    bool conj_outer() const noexcept { return conj_outer_; }
    bool conj_phase() const noexcept { return conj_phase_; }

    Complex operator()(double x) const;

    /// Continuous on [0, inf) with h(0) = 0.
    bool continuous_at_zero() const;
    /// Bounded on bounded subsets of (0, inf).
    bool locally_bounded() const;
    /// Real valued, strictly increasing and continuous with h(0) = 0.
    bool real_increasing() const;

    /// Pointwise complex conjugate.
    ScalarMap conjugated() const;

    /// Returns (c, m) with c > 0 and h(s x) = c m(x) for all x > 0.
    std::pair<double, ScalarMap> with_scaled_argument(double s) const;

    friend bool operator==(const ScalarMap& a, const ScalarMap& b);

private:
    ScalarMap() = default;

    Kind kind_ = Kind::identity;
    double exponent_ = 1.0;
    Complex factor_{1.0, 0.0};
    double phase_ = 0.0;
    std::vector<std::pair<double, double>> table_;
    std::shared_ptr<const ScalarMap> outer_;
    std::shared_ptr<const ScalarMap> inner_;
    double inner_scale_ = 1.0;
    bool conj_outer_ = false;
    bool conj_phase_ = false;
};

const char* to_string(ScalarMap::Kind kind);

}  // namespace starorder
