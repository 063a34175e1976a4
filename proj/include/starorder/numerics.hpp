#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace starorder {

using Complex = std::complex<double>;

/// Dense square complex matrix modelling an operator on a finite-dimensional space.
/// Entry points validate squareness and finiteness with require_well_formed.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Thresholds used by every comparison in the library.
///
/// eq_tol is relative to the operand norms (with an absolute floor of 1),
/// rank_tol is relative to the largest singular value, group_tol is the
/// relative gap below which singular values are considered equal.
struct ToleranceConfig {
    double eq_tol = 1e-9;
    double rank_tol = 1e-10;
    double group_tol = 1e-8;

    void validate() const;
};

struct SvdResult {
    ComplexMatrix u;
    std::vector<double> sigma;  // descending
    ComplexMatrix v;
};

/// Support polar decomposition A = W |A|; W vanishes on ker |A|.
struct PolarParts {
    ComplexMatrix w;
    ComplexMatrix p;
};

using ScalarFunction = std::function<Complex(double)>;

/// Throws ShapeError for non-square or empty input, DomainError for NaN/inf entries.
void require_well_formed(const ComplexMatrix& a, std::string_view name = "matrix");
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);

/// Stable 64-bit FNV-1a digest of the dimension and entries, as 16 hex digits.
std::string digest(const ComplexMatrix& a);

/// Spectral (operator 2-) norm. Zero for matrices with no entries.
double op_norm(const ComplexMatrix& a);

/// eq_tol scaled by max(1, scale).
inline double scaled_tol(const ToleranceConfig& tol, double scale) {
    return tol.eq_tol * (scale > 1.0 ? scale : 1.0);
}

SvdResult svd(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// Number of singular values above rank_tol * sigma_max.
std::size_t numeric_rank(const std::vector<double>& sigma, const ToleranceConfig& tol);

PolarParts polar(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// h(P) for Hermitian positive semidefinite P. Eigenvalues below the rank
/// threshold are treated as exact zeros and require h(0) == 0.
ComplexMatrix functional_calculus(const ComplexMatrix& p, const ScalarFunction& h,
                                  const ToleranceConfig& tol = {});

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol = {});
std::size_t rank(const ComplexMatrix& a, const ToleranceConfig& tol = {});

bool is_hermitian(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// Orthonormal basis (as columns) of range(A); n x r with r = rank(A).
ComplexMatrix range_basis(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// Orthonormal basis of the span of the columns of a possibly tall, non-square matrix.
ComplexMatrix column_span_basis(const ComplexMatrix& columns, const ToleranceConfig& tol = {});

/// Orthogonal projection Q Q* onto the span of the orthonormal columns of q.
ComplexMatrix projector(const ComplexMatrix& q, Eigen::Index dim);

}  // namespace starorder
