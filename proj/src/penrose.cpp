#include "starorder/penrose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "starorder/errors.hpp"
#include "starorder/star_order.hpp"

namespace starorder {

namespace {

double max_value(const PenroseDecomposition& pd) {
    double m = 0.0;
    for (const auto& t : pd.terms) {
        m = std::max(m, t.value);
    }
    return m;
}

}  // namespace

PenroseDecomposition penrose_decompose(const ComplexMatrix& a, const ToleranceConfig& tol) {
    const SvdResult s = svd(a, tol);
    const std::size_t r = numeric_rank(s.sigma, tol);

    PenroseDecomposition pd;
    pd.dim = a.rows();
    if (r == 0) {
        return pd;
    }
    const double smax = s.sigma.front();
    std::size_t begin = 0;
    while (begin < r) {
        std::size_t end = begin + 1;
        while (end < r) {
            const double gap = (s.sigma[end - 1] - s.sigma[end]) / smax;
            if (gap <= tol.group_tol) {
                ++end;
                continue;
            }
            if (gap <= 10.0 * tol.group_tol) {
                std::ostringstream msg;
                msg << "singular values " << s.sigma[end - 1] << " and " << s.sigma[end]
                    << " are separated by a relative gap of " << gap
                    << ", within a factor of 10 of group_tol";
                pd.warnings.push_back(msg.str());
            }
            break;
        }
        const auto b = static_cast<Eigen::Index>(begin);
        const auto len = static_cast<Eigen::Index>(end - begin);
        double mean = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            mean += s.sigma[i];
        }
        mean /= static_cast<double>(end - begin);
        pd.terms.push_back({mean, s.u.middleCols(b, len) * s.v.middleCols(b, len).adjoint()});
        begin = end;
    }
    std::reverse(pd.terms.begin(), pd.terms.end());
    return pd;
}

void validate(const PenroseDecomposition& pd, const ToleranceConfig& tol) {
    if (pd.dim <= 0) {
        throw ContractError("Penrose decomposition needs a positive dimension");
    }
    const double amax = max_value(pd);
    for (std::size_t i = 0; i < pd.terms.size(); ++i) {
        const auto& t = pd.terms[i];
        if (!std::isfinite(t.value) || t.value <= 0.0) {
            throw ContractError("term " + std::to_string(i) + " has a non-positive value");
        }
        if (t.isometry.rows() != pd.dim || t.isometry.cols() != pd.dim) {
            throw ContractError("term " + std::to_string(i) + " has the wrong dimension");
        }
        if (op_norm(t.isometry) <= tol.eq_tol || !is_partial_isometry(t.isometry, tol)) {
            throw ContractError("term " + std::to_string(i) + " is not a nonzero partial isometry");
        }
        for (std::size_t j = 0; j < i; ++j) {
            const auto& u = pd.terms[j];
            if (std::abs(t.value - u.value) <= tol.group_tol * amax) {
                throw ContractError("terms " + std::to_string(j) + " and " + std::to_string(i) +
                                    " have values closer than group_tol");
            }
            if (!orthogonal(t.isometry, u.isometry, tol)) {
                throw ContractError("terms " + std::to_string(j) + " and " + std::to_string(i) +
                                    " are not star-orthogonal");
            }
        }
    }
}

ComplexMatrix reconstruct(const PenroseDecomposition& pd, const ToleranceConfig& tol) {
    validate(pd, tol);
    ComplexMatrix out = ComplexMatrix::Zero(pd.dim, pd.dim);
    for (const auto& t : pd.terms) {
        out += t.value * t.isometry;
    }
    return out;
}

bool pd_star_leq(const PenroseDecomposition& lhs, const PenroseDecomposition& rhs,
                 const ToleranceConfig& tol) {
    if (lhs.dim != rhs.dim) {
        throw ShapeError("decompositions act on spaces of different dimension");
    }
    for (const auto& t : lhs.terms) {
        auto match = std::find_if(rhs.terms.begin(), rhs.terms.end(), [&](const PenroseTerm& u) {
            return std::abs(t.value - u.value) <= tol.group_tol * std::max(t.value, u.value);
        });
        if (match == rhs.terms.end() || !star_leq(t.isometry, match->isometry, tol)) {
            return false;
        }
    }
    return true;
}

bool same_decomposition(const PenroseDecomposition& lhs, const PenroseDecomposition& rhs,
                        const ToleranceConfig& tol) {
    if (lhs.dim != rhs.dim || lhs.terms.size() != rhs.terms.size()) {
        return false;
    }
    for (std::size_t i = 0; i < lhs.terms.size(); ++i) {
        const auto& a = lhs.terms[i];
        const auto& b = rhs.terms[i];
        if (std::abs(a.value - b.value) > tol.group_tol * std::max(a.value, b.value) ||
            !approx_eq(a.isometry, b.isometry, tol)) {
            return false;
        }
    }
    return true;
}

bool is_partial_isometry(const ComplexMatrix& a, const ToleranceConfig& tol) {
    require_well_formed(a);
    return op_norm(a * a.adjoint() * a - a) <= scaled_tol(tol, op_norm(a));
}

ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size() || x.size() == 0) {
        throw ShapeError("rank_one needs two vectors of the same positive length");
    }
    return x * y.adjoint();
}

}  // namespace starorder
