#include "starorder/scalar_map.hpp"

#include <cmath>

#include "starorder/errors.hpp"

namespace starorder {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

ScalarMap ScalarMap::identity() { return ScalarMap{}; }

ScalarMap ScalarMap::power(double exponent) {
    if (!std::isfinite(exponent) || exponent == 0.0) {
        throw ContractError("power map needs a finite nonzero exponent");
    }
    ScalarMap m;
    m.kind_ = Kind::power;
    m.exponent_ = exponent;
    return m;
}

ScalarMap ScalarMap::scale(Complex factor) {
    if (!std::isfinite(factor.real()) || !std::isfinite(factor.imag()) || factor == Complex{}) {
        throw ContractError("scale map needs a finite nonzero factor");
    }
    ScalarMap m;
    m.kind_ = Kind::scale;
    m.factor_ = factor;
    return m;
}

ScalarMap ScalarMap::phase_power(double exponent, double phase) {
    if (!positive_finite(exponent) || !std::isfinite(phase)) {
        throw ContractError("phase-power map needs a positive exponent and a finite phase");
    }
    ScalarMap m;
    m.kind_ = Kind::phase_power;
    m.exponent_ = exponent;
    m.phase_ = phase;
    return m;
}

ScalarMap ScalarMap::piecewise_linear(std::vector<std::pair<double, double>> breakpoints) {
    if (breakpoints.empty()) {
        throw ContractError("piecewise-linear map needs at least one breakpoint");
    }
    double px = 0.0;
    double py = 0.0;
    for (const auto& [x, y] : breakpoints) {
        if (!positive_finite(x) || !positive_finite(y) || x <= px || y <= py) {
            throw ContractError("piecewise-linear breakpoints must be positive and strictly increasing");
        }
        px = x;
        py = y;
    }
    ScalarMap m;
    m.kind_ = Kind::piecewise_linear;
    m.table_ = std::move(breakpoints);
    return m;
}

ScalarMap ScalarMap::composite(const ScalarMap& outer, const ScalarMap& inner, double inner_scale,
                               bool conj_outer, bool conj_phase) {
    if (!positive_finite(inner_scale)) {
        throw ContractError("composite map needs a positive inner scale");
    }
    ScalarMap m;
    m.kind_ = Kind::composite;
    m.outer_ = std::make_shared<const ScalarMap>(outer);
    m.inner_ = std::make_shared<const ScalarMap>(inner);
    m.inner_scale_ = inner_scale;
    m.conj_outer_ = conj_outer;
    m.conj_phase_ = conj_phase;
    return m;
}

const ScalarMap& ScalarMap::outer() const {
    if (!outer_) {
        throw ContractError("not a composite map");
    }
    return *outer_;
}

const ScalarMap& ScalarMap::inner() const {
    if (!inner_) {
        throw ContractError("not a composite map");
    }
    return *inner_;
}

Complex ScalarMap::operator()(double x) const {
    if (!std::isfinite(x) || x < 0.0) {
        throw MapDomainError("scalar map evaluated outside [0, inf)");
    }
    if (x == 0.0) {
        if (!continuous_at_zero()) {
            throw MapDomainError("scalar map is undefined at 0");
        }
        return {0.0, 0.0};
    }
    switch (kind_) {
    case Kind::identity:
        return {x, 0.0};
    case Kind::power:
        return {std::pow(x, exponent_), 0.0};
    case Kind::scale:
        return factor_ * x;
    case Kind::phase_power:
        return std::polar(std::pow(x, exponent_), phase_);
    case Kind::piecewise_linear: {
        double x0 = 0.0;
        double y0 = 0.0;
        for (const auto& [x1, y1] : table_) {
            if (x <= x1) {
                return {y0 + (y1 - y0) * (x - x0) / (x1 - x0), 0.0};
            }
            x0 = x1;
            y0 = y1;
        }
        const double px = table_.size() > 1 ? table_[table_.size() - 2].first : 0.0;
        const double py = table_.size() > 1 ? table_[table_.size() - 2].second : 0.0;
        return {y0 + (y0 - py) / (x0 - px) * (x - x0), 0.0};
    }
    case Kind::composite: {
        const Complex z = (*inner_)(x);
        const double r = std::abs(z);
        Complex ph = z / r;
        if (conj_phase_) {
            ph = std::conj(ph);
        }
        Complex o = (*outer_)(inner_scale_ * r);
        if (conj_outer_) {
            o = std::conj(o);
        }
        return o * ph;
    }
    }
    throw MapDomainError("unknown scalar map kind");
}

bool ScalarMap::continuous_at_zero() const {
    switch (kind_) {
    case Kind::power:
        return exponent_ > 0.0;
    case Kind::composite:
        return outer_->continuous_at_zero() && inner_->continuous_at_zero();
    default:
        return true;
    }
}

bool ScalarMap::locally_bounded() const {
    switch (kind_) {
    case Kind::power:
        return exponent_ > 0.0;
    case Kind::composite:
        return outer_->locally_bounded() && inner_->locally_bounded();
    default:
        return true;
    }
}

bool ScalarMap::real_increasing() const {
    switch (kind_) {
    case Kind::identity:
    case Kind::piecewise_linear:
        return true;
    case Kind::power:
        return exponent_ > 0.0;
    case Kind::scale:
        return factor_.imag() == 0.0 && factor_.real() > 0.0;
    case Kind::phase_power:
        return std::sin(phase_) == 0.0 && std::cos(phase_) > 0.0;
    case Kind::composite:
        return false;
    }
    return false;
}

ScalarMap ScalarMap::conjugated() const {
    switch (kind_) {
    case Kind::identity:
    case Kind::power:
    case Kind::piecewise_linear:
        return *this;
    case Kind::scale:
        return scale(std::conj(factor_));
    case Kind::phase_power:
        return phase_power(exponent_, -phase_);
    case Kind::composite:
        return composite(*outer_, *inner_, inner_scale_, !conj_outer_, !conj_phase_);
    }
    return *this;
}

std::pair<double, ScalarMap> ScalarMap::with_scaled_argument(double s) const {
    if (!positive_finite(s)) {
        throw ContractError("argument scale must be positive");
    }
    switch (kind_) {
    case Kind::identity:
    case Kind::scale:
        return {s, *this};
    case Kind::power:
    case Kind::phase_power:
        return {std::pow(s, exponent_), *this};
    case Kind::piecewise_linear: {
        auto table = table_;
        for (auto& bp : table) {
            bp.first /= s;
        }
        return {1.0, piecewise_linear(std::move(table))};
    }
    case Kind::composite: {
        auto [c, scaled_inner] = inner_->with_scaled_argument(s);
        return {1.0, composite(*outer_, scaled_inner, inner_scale_ * c, conj_outer_, conj_phase_)};
    }
    }
    return {1.0, *this};
}

bool operator==(const ScalarMap& a, const ScalarMap& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    switch (a.kind_) {
    case ScalarMap::Kind::identity:
        return true;
    case ScalarMap::Kind::power:
        return a.exponent_ == b.exponent_;
    case ScalarMap::Kind::scale:
        return a.factor_ == b.factor_;
    case ScalarMap::Kind::phase_power:
        return a.exponent_ == b.exponent_ && a.phase_ == b.phase_;
    case ScalarMap::Kind::piecewise_linear:
        return a.table_ == b.table_;
    case ScalarMap::Kind::composite:
        return *a.outer_ == *b.outer_ && *a.inner_ == *b.inner_ &&
               a.inner_scale_ == b.inner_scale_ && a.conj_outer_ == b.conj_outer_ &&
               a.conj_phase_ == b.conj_phase_;
    }
    return false;
}

const char* to_string(ScalarMap::Kind kind) {
    switch (kind) {
    case ScalarMap::Kind::identity: return "identity";
    case ScalarMap::Kind::power: return "power";
    case ScalarMap::Kind::scale: return "scale";
    case ScalarMap::Kind::phase_power: return "phase-power";
    case ScalarMap::Kind::piecewise_linear: return "piecewise-linear";
    case ScalarMap::Kind::composite: return "composite";
    }
    return "unknown";
}

}  // namespace starorder
