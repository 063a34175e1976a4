#pragma once

#include <initializer_list>
#include <vector>

#include "starorder/numerics.hpp"

namespace testutil {

using starorder::Complex;
using starorder::ComplexMatrix;
using starorder::ComplexVector;

inline ComplexMatrix diag(std::initializer_list<Complex> d) {
    ComplexVector v(static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (const auto& x : d) v(i++) = x;
    return v.asDiagonal();
}

inline ComplexMatrix rows(std::initializer_list<std::initializer_list<Complex>> r) {
    const auto n = static_cast<Eigen::Index>(r.size());
    ComplexMatrix m(n, n);
    Eigen::Index i = 0;
    for (const auto& row : r) {
        Eigen::Index j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

/// Matrix unit E_pq (1-based, as in the usual notation) of size n.
inline ComplexMatrix unit(Eigen::Index n, Eigen::Index p, Eigen::Index q) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(p - 1, q - 1) = 1.0;
    return m;
}

inline ComplexVector basis(Eigen::Index n, Eigen::Index k) {
    ComplexVector v = ComplexVector::Zero(n);
    v(k - 1) = 1.0;
    return v;
}

/// Frobenius distance; independent of the library's spectral norm.
inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

/// Drazin relations evaluated directly with Frobenius norms.
inline bool drazin_oracle(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-9) {
    const ComplexMatrix as = a.adjoint();
    const double scale = std::max(1.0, a.norm() * b.norm());
    return (as * a - as * b).norm() <= tol * scale && (a * as - b * as).norm() <= tol * scale;
}

/// Singular values from the Hermitian eigenproblem of A*A, descending.
inline std::vector<double> singular_values_oracle(const ComplexMatrix& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a.adjoint() * a);
    std::vector<double> s;
    for (Eigen::Index i = eig.eigenvalues().size() - 1; i >= 0; --i) {
        s.push_back(std::sqrt(std::max(0.0, eig.eigenvalues()(i))));
    }
    return s;
}

}  // namespace testutil
