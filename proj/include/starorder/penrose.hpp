#pragma once

#include <string>
#include <vector>

#include "starorder/numerics.hpp"

namespace starorder {

struct PenroseTerm {
    double value = 0.0;       // strictly positive
    ComplexMatrix isometry;   // nonzero partial isometry
};

/// A = sum_j a_j U_j with distinct positive a_j and mutually star-orthogonal
/// partial isometries U_j. Terms are kept sorted by ascending value.
struct PenroseDecomposition {
    Eigen::Index dim = 0;
    std::vector<PenroseTerm> terms;
    std::vector<std::string> warnings;
};

/// Groups the singular values of A into clusters (consecutive relative gap
/// (s_i - s_{i+1}) / s_max <= group_tol) and returns one term per cluster with the
/// cluster mean as value. A gap within a factor of 10 above group_tol adds a warning.
PenroseDecomposition penrose_decompose(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// Throws ContractError when pd violates any structural invariant.
void validate(const PenroseDecomposition& pd, const ToleranceConfig& tol = {});

ComplexMatrix reconstruct(const PenroseDecomposition& pd, const ToleranceConfig& tol = {});

/// Star order read off two decompositions: every term (a, U) of the first must
/// match a term (b, V) of the second with equal value and U <=* V.
bool pd_star_leq(const PenroseDecomposition& lhs, const PenroseDecomposition& rhs,
                 const ToleranceConfig& tol = {});

/// Term-by-term equality: values within group_tol, isometries within eq_tol.
bool same_decomposition(const PenroseDecomposition& lhs, const PenroseDecomposition& rhs,
                        const ToleranceConfig& tol = {});

bool is_partial_isometry(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// x ⊗ y : z -> <z, y> x, i.e. the matrix x y*.
ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y);

}  // namespace starorder
