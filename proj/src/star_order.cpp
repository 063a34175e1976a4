#include "starorder/star_order.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starorder/errors.hpp"

namespace starorder {

namespace {

bool vanishes(const ComplexMatrix& x, double bound) { return op_norm(x) <= bound; }

bool is_projection(const ComplexMatrix& p, const ToleranceConfig& tol) {
    return vanishes(p * p - p, tol.eq_tol) && vanishes(p - p.adjoint(), tol.eq_tol);
}

// Decomposes span(qb) relative to span(qa) by principal angles. G = (I - Pa) qb has
// singular values sin(theta_k); directions with 1 - cos(theta_k) < group_tol / 10 are
// shared with span(qa), those above 10 * group_tol are new, anything between is refused.
struct AngleSplit {
    ComplexMatrix shared;       // n x c, orthonormal, inside span(qb), nearly inside span(qa)
    ComplexMatrix fresh_pinv;   // rb x n, pseudo-inverse of G restricted to the new directions
};

AngleSplit split_by_angles(const ComplexMatrix& qa, const ComplexMatrix& qb,
                           const ToleranceConfig& tol, const ComplexMatrix& source) {
    const Eigen::Index n = qb.rows();
    const Eigen::Index rb = qb.cols();
    AngleSplit out{ComplexMatrix(n, 0), ComplexMatrix::Zero(rb, n)};
    if (rb == 0) {
        return out;
    }
    const ComplexMatrix g = qb - qa * (qa.adjoint() * qb);
    Eigen::JacobiSVD<ComplexMatrix> solver(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = solver.singularValues();
    const ComplexMatrix& y = solver.matrixU();
    const ComplexMatrix& z = solver.matrixV();

    std::vector<Eigen::Index> shared;
    for (Eigen::Index k = 0; k < rb; ++k) {
        const double sine = std::min(1.0, k < s.size() ? s(k) : 0.0);
        const double one_minus_cos = sine * sine / (1.0 + std::sqrt(1.0 - sine * sine));
        if (one_minus_cos < tol.group_tol / 10.0) {
            shared.push_back(k);
        } else if (one_minus_cos > 10.0 * tol.group_tol) {
            out.fresh_pinv += z.col(k) * y.col(k).adjoint() / sine;
        } else {
            throw NumericFailure("principal angle too close to the grouping threshold to decide "
                                 "whether a direction is shared",
                                 digest(source));
        }
    }
    out.shared.resize(n, static_cast<Eigen::Index>(shared.size()));
    for (std::size_t c = 0; c < shared.size(); ++c) {
        out.shared.col(static_cast<Eigen::Index>(c)) = qb * z.col(shared[c]);
    }
    return out;
}

}  // namespace

double drazin_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const ComplexMatrix as = a.adjoint();
    const double scale = std::max(1.0, op_norm(a) * op_norm(b));
    return std::max(op_norm(as * a - as * b), op_norm(a * as - b * as)) / scale;
}

bool star_leq(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol) {
    require_same_dim(a, b);
    const double bound = scaled_tol(tol, op_norm(a) * op_norm(b));
    const ComplexMatrix as = a.adjoint();
    return vanishes(as * a - as * b, bound) && vanishes(a * as - b * as, bound);
}

bool orthogonal(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol) {
    require_same_dim(a, b);
    const double bound = scaled_tol(tol, op_norm(a) * op_norm(b));
    return vanishes(a.adjoint() * b, bound) && vanishes(a * b.adjoint(), bound);
}

bool witness_holds(const BlockWitness& w, const ComplexMatrix& a, const ComplexMatrix& b,
                   const ToleranceConfig& tol) {
    require_same_dim(a, b);
    const Eigen::Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    for (const ComplexMatrix* p : {&w.p_h1, &w.p_h2, &w.p_k1, &w.p_k2}) {
        if (p->rows() != n || p->cols() != n || !is_projection(*p, tol)) {
            return false;
        }
    }
    if (!vanishes(w.p_h1 + w.p_h2 - id, tol.eq_tol) || !vanishes(w.p_k1 + w.p_k2 - id, tol.eq_tol)) {
        return false;
    }
    const double bound = scaled_tol(tol, std::max(op_norm(a), op_norm(b)));
    return vanishes(w.p_k1 * (a - b) * w.p_h1, bound) && vanishes(w.p_k1 * a * w.p_h2, bound) &&
           vanishes(w.p_k2 * a * w.p_h1, bound) && vanishes(w.p_k2 * a * w.p_h2, bound) &&
           vanishes(w.p_k1 * b * w.p_h2, bound) && vanishes(w.p_k2 * b * w.p_h1, bound);
}

std::optional<BlockWitness> block_witness(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const ToleranceConfig& tol) {
    require_same_dim(a, b);
    const Eigen::Index n = a.rows();
    const SvdResult s = svd(a, tol);
    const auto r = static_cast<Eigen::Index>(numeric_rank(s.sigma, tol));
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);

    BlockWitness w;
    w.p_h1 = projector(s.v.leftCols(r), n);
    w.p_k1 = projector(s.u.leftCols(r), n);
    w.p_h2 = id - w.p_h1;
    w.p_k2 = id - w.p_k1;
    if (!witness_holds(w, a, b, tol)) {
        return std::nullopt;
    }
    return w;
}

std::optional<ComplexMatrix> try_join(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const ToleranceConfig& tol) {
    require_well_formed(a, "A");
    require_well_formed(b, "B");
    require_same_dim(a, b);

    const ComplexMatrix rows_a = range_basis(a.adjoint(), tol);
    const ComplexMatrix rows_b = range_basis(b.adjoint(), tol);
    const ComplexMatrix cols_a = range_basis(a, tol);
    const ComplexMatrix cols_b = range_basis(b, tol);

    const double bound = scaled_tol(tol, std::max(op_norm(a), op_norm(b)));
    const ComplexMatrix diff = a - b;

    // (i) A and B agree on range(A*) ∩ range(B*)
    const AngleSplit row_split = split_by_angles(rows_a, rows_b, tol, diff);
    if (!vanishes(diff * row_split.shared, bound)) {
        return std::nullopt;
    }
    // (ii) A* and B* agree on range(A) ∩ range(B)
    const AngleSplit col_split = split_by_angles(cols_a, cols_b, tol, diff);
    if (!vanishes(diff.adjoint() * col_split.shared, bound)) {
        return std::nullopt;
    }

    const ComplexMatrix d = a + (b - a) * rows_b * row_split.fresh_pinv;

    // (iii) re-verification makes the construction sound on its own
    if (!star_leq(a, d, tol) || !star_leq(b, d, tol)) {
        return std::nullopt;
    }
    return d;
}

ComplexMatrix supremum_with_bound(const std::vector<ComplexMatrix>& family,
                                  const ComplexMatrix& bound, const ToleranceConfig& tol) {
    require_well_formed(bound, "bound");
    const Eigen::Index n = bound.rows();
    ComplexMatrix stacked(n, 0);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const ComplexMatrix& member = family[i];
        require_well_formed(member, "family member");
        require_same_dim(member, bound);
        if (!star_leq(member, bound, tol)) {
            throw ContractError("family member " + std::to_string(i) +
                                " is not below the given bound in star order");
        }
        const ComplexMatrix rows = range_basis(member.adjoint(), tol);
        ComplexMatrix grown(n, stacked.cols() + rows.cols());
        grown << stacked, rows;
        stacked = std::move(grown);
    }
    const ComplexMatrix q = projector(column_span_basis(stacked, tol), n);
    return bound * q;
}

}  // namespace starorder
