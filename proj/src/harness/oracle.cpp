#include "starorder/harness/oracle.hpp"

#include <algorithm>

#include "starorder/errors.hpp"
#include "starorder/harness/generators.hpp"
#include "starorder/star_order.hpp"

namespace starorder::harness {

namespace {

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

ComplexVector vec(const ComplexMatrix& x) {
    return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n) {
    return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

}  // namespace

const char* to_string(OracleStatus s) {
    switch (s) {
    case OracleStatus::found:
        return "found";
    case OracleStatus::none:
        return "none";
    default:
        return "inconclusive";
    }
}

OracleResult oracle_join(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t budget,
                         std::uint64_t seed, const ToleranceConfig& tol) {
    require_well_formed(a, "A");
    require_well_formed(b, "B");
    require_same_dim(a, b);
    const Eigen::Index n = a.rows();
    if (n > 4) {
        throw ContractError("oracle_join is limited to dimension 4");
    }
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const Eigen::Index m = n * n;

    // column-major vec: vec(X D) = (I (x) X) vec(D), vec(D X) = (X^T (x) I) vec(D)
    ComplexMatrix system(4 * m, m);
    ComplexVector rhs(4 * m);
    const ComplexMatrix as = a.adjoint();
    const ComplexMatrix bs = b.adjoint();
    system << kron(id, as), kron(as.transpose(), id), kron(id, bs), kron(bs.transpose(), id);
    rhs << vec(as * a), vec(a * as), vec(bs * b), vec(b * bs);

    Eigen::JacobiSVD<ComplexMatrix> solver(system, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& s = solver.singularValues();
    const double cut = tol.rank_tol * std::max(1.0, s.size() ? s(0) : 0.0);
    ComplexVector d = ComplexVector::Zero(m);
    std::vector<ComplexMatrix> null_directions;
    for (Eigen::Index k = 0; k < m; ++k) {
        const double sk = k < s.size() ? s(k) : 0.0;
        if (sk > cut) {
            d += solver.matrixV().col(k) * (solver.matrixU().col(k).dot(rhs) / sk);
        } else {
            null_directions.push_back(unvec(solver.matrixV().col(k), n));
        }
    }

    OracleResult out;
    out.residual = (system * d - rhs).norm() / std::max(1.0, rhs.norm());
    if (out.residual > 1e3 * tol.eq_tol) {
        out.status = OracleStatus::none;
        out.reason = "upper-bound equations are inconsistent";
        return out;
    }
    if (out.residual > tol.eq_tol) {
        out.reason = "residual between eq_tol and 1e3 * eq_tol";
        return out;
    }
    const ComplexMatrix join = unvec(d, n);
    if (budget == 0) {
        out.reason = "no budget to certify minimality";
        return out;
    }

    Rng rng(seed);
    const double scale = std::max({1.0, op_norm(a), op_norm(b)});
    for (std::size_t i = 0; i < budget; ++i) {
        ComplexMatrix c = join;
        for (const auto& dir : null_directions) {
            c += scale * rng.complex_normal() * dir;
        }
        out.sampled_bounds.push_back(c);
        if (!star_leq(join, c, tol)) {
            out.reason = "least-norm solution is not below a sampled upper bound";
            return out;
        }
    }
    out.status = OracleStatus::found;
    out.join = join;
    return out;
}

}  // namespace starorder::harness
