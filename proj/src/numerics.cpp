#include "starorder/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>

#include "starorder/errors.hpp"

namespace starorder {

void ToleranceConfig::validate() const {
    auto ok = [](double x) { return std::isfinite(x) && x >= 0.0; };
    if (!ok(eq_tol) || !ok(rank_tol) || !ok(group_tol)) {
        throw ContractError("tolerances must be finite and non-negative");
    }
}

void require_well_formed(const ComplexMatrix& a, std::string_view name) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw ShapeError(std::string(name) + " must be square with positive dimension, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const Complex z = a(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw DomainError(std::string(name) + " has a non-finite entry");
            }
        }
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

std::string digest(const ComplexMatrix& a) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t word) {
        for (int k = 0; k < 8; ++k) {
            h ^= (word >> (8 * k)) & 0xffu;
            h *= 0x00000100000001b3ull;
        }
    };
    mix(static_cast<std::uint64_t>(a.rows()));
    mix(static_cast<std::uint64_t>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            // +0.0 and -0.0 hash alike
            mix(std::bit_cast<std::uint64_t>(a(i, j).real() + 0.0));
            mix(std::bit_cast<std::uint64_t>(a(i, j).imag() + 0.0));
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double op_norm(const ComplexMatrix& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> solver(a);
    return solver.singularValues()(0);
}

SvdResult svd(const ComplexMatrix& a, const ToleranceConfig& tol) {
    require_well_formed(a);
    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);

    SvdResult out;
    out.u = solver.matrixU();
    out.v = solver.matrixV();
    const auto& s = solver.singularValues();
    out.sigma.assign(s.data(), s.data() + s.size());

    const bool finite = out.u.allFinite() && out.v.allFinite() &&
                        std::all_of(out.sigma.begin(), out.sigma.end(),
                                    [](double x) { return std::isfinite(x); });
    if (!finite) {
        throw NumericFailure("svd produced non-finite factors", digest(a));
    }
    const double scale = out.sigma.empty() ? 0.0 : out.sigma.front();
    const double floor = 64.0 * static_cast<double>(a.rows()) *
                         std::numeric_limits<double>::epsilon();
    const double bound = std::max(tol.eq_tol, floor) * std::max(1.0, scale);
    const ComplexMatrix rebuilt = out.u * s.cast<Complex>().asDiagonal() * out.v.adjoint();
    if (op_norm(rebuilt - a) > bound) {
        throw NumericFailure("svd did not converge to the requested accuracy", digest(a));
    }
    return out;
}

std::size_t numeric_rank(const std::vector<double>& sigma, const ToleranceConfig& tol) {
    if (sigma.empty() || sigma.front() <= 0.0) {
        return 0;
    }
    const double cut = tol.rank_tol * sigma.front();
    return static_cast<std::size_t>(
        std::count_if(sigma.begin(), sigma.end(), [cut](double x) { return x > cut; }));
}

PolarParts polar(const ComplexMatrix& a, const ToleranceConfig& tol) {
    const SvdResult s = svd(a, tol);
    const auto r = static_cast<Eigen::Index>(numeric_rank(s.sigma, tol));
    const Eigen::Index n = a.rows();

    PolarParts parts{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)};
    if (r == 0) {
        return parts;
    }
    const auto ur = s.u.leftCols(r);
    const auto vr = s.v.leftCols(r);
    Eigen::VectorXd sr(r);
    for (Eigen::Index i = 0; i < r; ++i) {
        sr(i) = s.sigma[static_cast<std::size_t>(i)];
    }
    parts.w = ur * vr.adjoint();
    parts.p = vr * sr.cast<Complex>().asDiagonal() * vr.adjoint();
    return parts;
}

bool is_hermitian(const ComplexMatrix& a, const ToleranceConfig& tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    return op_norm(a - a.adjoint()) <= scaled_tol(tol, op_norm(a));
}

ComplexMatrix functional_calculus(const ComplexMatrix& p, const ScalarFunction& h,
                                  const ToleranceConfig& tol) {
    require_well_formed(p, "functional calculus argument");
    if (!is_hermitian(p, tol)) {
        throw DomainError("functional calculus requires a Hermitian matrix");
    }
    const ComplexMatrix sym = (p + p.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
    if (eig.info() != Eigen::Success) {
        throw NumericFailure("Hermitian eigensolver failed", digest(p));
    }
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double lmax = std::max(0.0, lambda.maxCoeff());
    if (lambda.minCoeff() < -scaled_tol(tol, lmax)) {
        throw DomainError("functional calculus requires a positive semidefinite matrix");
    }

    const double zero_cut = tol.rank_tol * lmax;
    std::optional<Complex> h_at_zero;
    ComplexVector mapped(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) <= zero_cut) {
            if (!h_at_zero) {
                Complex z;
                try {
                    z = h(0.0);
                } catch (const MapDomainError&) {
                    throw MapDomainError("h is undefined at 0 but the matrix is singular");
                }
                if (std::abs(z) > tol.eq_tol) {
                    throw MapDomainError("h(0) must vanish when the matrix is singular");
                }
                h_at_zero = Complex{0.0, 0.0};
            }
            mapped(i) = *h_at_zero;
        } else {
            const Complex z = h(lambda(i));
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw MapDomainError("h is undefined at eigenvalue " + std::to_string(lambda(i)));
            }
            mapped(i) = z;
        }
    }
    const ComplexMatrix& q = eig.eigenvectors();
    return q * mapped.asDiagonal() * q.adjoint();
}

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol) {
    require_same_dim(a, b);
    const double scale = std::max(op_norm(a), op_norm(b));
    return op_norm(a - b) <= scaled_tol(tol, scale);
}

std::size_t rank(const ComplexMatrix& a, const ToleranceConfig& tol) {
    require_well_formed(a);
    Eigen::JacobiSVD<ComplexMatrix> solver(a);
    const auto& s = solver.singularValues();
    return numeric_rank(std::vector<double>(s.data(), s.data() + s.size()), tol);
}

ComplexMatrix column_span_basis(const ComplexMatrix& columns, const ToleranceConfig& tol) {
    const Eigen::Index n = columns.rows();
    if (columns.cols() == 0) {
        return ComplexMatrix(n, 0);
    }
    Eigen::JacobiSVD<ComplexMatrix> solver(columns, Eigen::ComputeFullU);
    const auto& s = solver.singularValues();
    const auto r = static_cast<Eigen::Index>(
        numeric_rank(std::vector<double>(s.data(), s.data() + s.size()), tol));
    return solver.matrixU().leftCols(r);
}

ComplexMatrix range_basis(const ComplexMatrix& a, const ToleranceConfig& tol) {
    return column_span_basis(a, tol);
}

ComplexMatrix projector(const ComplexMatrix& q, Eigen::Index dim) {
    if (q.cols() == 0) {
        return ComplexMatrix::Zero(dim, dim);
    }
    return q * q.adjoint();
}

}  // namespace starorder
