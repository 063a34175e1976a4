#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starorder/numerics.hpp"

namespace starorder {

/// Orthogonal decompositions H = H1 + H2 (domain) and K = K1 + K2 (codomain)
/// in which A and B take the block forms [[A11, 0], [0, 0]] and [[A11, 0], [0, B22]].
struct BlockWitness {
    ComplexMatrix p_h1;  // range(A*)
    ComplexMatrix p_h2;  // ker A
    ComplexMatrix p_k1;  // range(A)
    ComplexMatrix p_k2;  // ker A*
};

/// Drazin star order: A*A = A*B and AA* = BA*, each within eq_tol * max(1, |A||B|).
bool star_leq(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol = {});

/// max(|A*A - A*B|, |AA* - BA*|) / max(1, |A||B|); star_leq compares it against eq_tol.
double drazin_residual(const ComplexMatrix& a, const ComplexMatrix& b);

/// Star-orthogonality: A*B = 0 and AB* = 0.
bool orthogonal(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol = {});

/// Builds the range/kernel projections of A and checks the block characterization
/// of A <=* B on them. Independent of the Drazin equations used by star_leq.
std::optional<BlockWitness> block_witness(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const ToleranceConfig& tol = {});

/// True when every BlockWitness invariant holds for (a, b).
bool witness_holds(const BlockWitness& w, const ComplexMatrix& a, const ComplexMatrix& b,
                   const ToleranceConfig& tol = {});

/// Least common star upper bound of {A, B}, or empty when no upper bound exists.
///
/// D agrees with A on range(A*), with B on range(B*), and vanishes on the
/// orthogonal complement of their sum. The result is re-verified against both
/// Drazin relations before it is returned. Throws NumericFailure when a principal
/// angle between the row (or column) spaces sits too close to the grouping
/// threshold to decide whether the direction is shared.
std::optional<ComplexMatrix> try_join(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const ToleranceConfig& tol = {});

/// Supremum of a family below a known upper bound: B restricted to the span of
/// the row spaces of the family. Throws ContractError naming the first member
/// that is not below the bound.
ComplexMatrix supremum_with_bound(const std::vector<ComplexMatrix>& family,
                                  const ComplexMatrix& bound, const ToleranceConfig& tol = {});

}  // namespace starorder
