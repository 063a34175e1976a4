#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starorder/numerics.hpp"

namespace starorder::harness {

enum class OracleStatus { found, none, inconclusive };

const char* to_string(OracleStatus s);

struct OracleResult {
    OracleStatus status = OracleStatus::inconclusive;
    std::optional<ComplexMatrix> join;
    /// Relative residual of the least-norm solution of the upper-bound equations.
    double residual = 0.0;
    /// Common upper bounds drawn while certifying minimality.
    std::vector<ComplexMatrix> sampled_bounds;
    std::string reason;
};

/// Brute-force join for dims <= 4, independent of try_join.
///
/// The common star upper bounds D of {A, B} are exactly the solutions of the linear system
/// A*D = A*A, DA* = AA*, B*D = B*B, DB* = BB* in the n^2 entries of D. The system is solved
/// through a full SVD of its Kronecker form: an inconsistent system means no upper bound, and
/// otherwise the least Frobenius-norm solution is the join. Minimality is then certified on
/// `budget` random members of the solution set (the least-norm solution plus null-space
/// combinations). A budget of 0, or a residual between eq_tol and 1e3 * eq_tol, is reported
/// as inconclusive. Throws ContractError for dims above 4.
OracleResult oracle_join(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t budget,
                         std::uint64_t seed, const ToleranceConfig& tol = {});

}  // namespace starorder::harness
