#include "starorder/harness/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "starorder/errors.hpp"

namespace starorder::harness {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// U diag(values) V* for unitaries u, v; values may be shorter than n (padded with zeros).
ComplexMatrix assemble(const ComplexMatrix& u, const std::vector<double>& values,
                       const ComplexMatrix& v) {
    const Eigen::Index n = u.rows();
    ComplexVector d = ComplexVector::Zero(n);
    for (std::size_t i = 0; i < values.size() && static_cast<Eigen::Index>(i) < n; ++i) {
        d(static_cast<Eigen::Index>(i)) = values[i];
    }
    return u * d.asDiagonal() * v.adjoint();
}

// Positive values, consecutive ones at least 0.6 / (r + 0.4) of the largest apart.
std::vector<double> separated_values(Rng& rng, int r, double magnitude) {
    std::vector<double> s;
    for (int i = 0; i < r; ++i) {
        s.push_back(magnitude * (i + 1 + 0.4 * rng.uniform()) / std::max(r, 1));
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::vector<int> permutation(Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.integer(0, i))]);
    }
    return p;
}

}  // namespace

void GeneratorConfig::validate() const {
    if (dim_min < 1 || dim_max < dim_min) {
        throw ContractError("dimension range must satisfy 1 <= min <= max");
    }
    if (!std::isfinite(magnitude) || magnitude <= 0.0) {
        throw ContractError("magnitude must be positive");
    }
    if (!(comparable_fraction >= 0.0 && comparable_fraction <= 1.0)) {
        throw ContractError("comparable_fraction must lie in [0, 1]");
    }
    tol.validate();
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) ^ (index + 0x632be59bd9b4e019ull));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(2.0 * kPi * u2);
    return radius * std::cos(2.0 * kPi * u2);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

int draw_dim(Rng& rng, const GeneratorConfig& cfg) { return rng.integer(cfg.dim_min, cfg.dim_max); }

ComplexMatrix gen_matrix(Rng& rng, Eigen::Index n, double magnitude) {
    ComplexMatrix a(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            a(i, j) = magnitude * rng.complex_normal();
        }
    }
    return a;
}

ComplexMatrix gen_matrix(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    return gen_matrix(rng, draw_dim(rng, cfg), cfg.magnitude);
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
    const ComplexMatrix z = gen_matrix(rng, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double m = std::abs(r(k, k));
        if (m > 0.0) {
            q.col(k) *= r(k, k) / m;
        }
    }
    return q;
}

std::pair<ComplexMatrix, ComplexMatrix> gen_comparable_pair(Rng& rng, Eigen::Index n,
                                                            double magnitude,
                                                            std::optional<Eigen::Index> k) {
    const Eigen::Index kk = k ? *k : rng.integer(0, static_cast<int>(n));
    if (kk < 0 || kk > n) {
        throw ContractError("block size must lie in [0, dim]");
    }
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix v = random_unitary(rng, n);
    ComplexMatrix core = ComplexMatrix::Zero(n, n);
    core.topLeftCorner(kk, kk) = gen_matrix(rng, kk, magnitude);
    ComplexMatrix lower = ComplexMatrix::Zero(n, n);
    lower.bottomRightCorner(n - kk, n - kk) = gen_matrix(rng, n - kk, magnitude);
    const ComplexMatrix a = u * core * v.adjoint();
    const ComplexMatrix b = u * (core + lower) * v.adjoint();
    return {a, b};
}

std::pair<ComplexMatrix, ComplexMatrix> gen_comparable_pair(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    return gen_comparable_pair(rng, draw_dim(rng, cfg), cfg.magnitude);
}

std::pair<ComplexMatrix, ComplexMatrix> gen_orthogonal_pair(Rng& rng, Eigen::Index n,
                                                            double magnitude) {
    auto [a, b] = gen_comparable_pair(rng, n, magnitude);
    return {a, b - a};
}

Triple gen_nested_triple(Rng& rng, Eigen::Index n, double magnitude) {
    int k1 = rng.integer(0, static_cast<int>(n));
    int k2 = rng.integer(0, static_cast<int>(n));
    if (k1 > k2) {
        std::swap(k1, k2);
    }
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix v = random_unitary(rng, n);
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    c.topLeftCorner(k1, k1) = gen_matrix(rng, k1, magnitude);
    c.block(k1, k1, k2 - k1, k2 - k1) = gen_matrix(rng, k2 - k1, magnitude);
    const ComplexMatrix b = c;
    c.bottomRightCorner(n - k2, n - k2) = gen_matrix(rng, n - k2, magnitude);
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    a.topLeftCorner(k1, k1) = c.topLeftCorner(k1, k1);
    return {u * a * v.adjoint(), u * b * v.adjoint(), u * c * v.adjoint()};
}

ComplexMatrix gen_separated_matrix(Rng& rng, Eigen::Index n, double magnitude) {
    const int r = rng.coin(0.7) ? static_cast<int>(n) : rng.integer(0, static_cast<int>(n));
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix v = random_unitary(rng, n);
    return assemble(u, separated_values(rng, r, magnitude), v);
}

std::pair<ComplexMatrix, ComplexMatrix> gen_separated_comparable_pair(Rng& rng, Eigen::Index n,
                                                                      double magnitude) {
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix v = random_unitary(rng, n);
    const std::vector<double> s = separated_values(rng, static_cast<int>(n), magnitude);
    std::vector<double> kept = s;
    for (double& x : kept) {
        if (rng.coin()) {
            x = 0.0;
        }
    }
    return {assemble(u, kept, v), assemble(u, s, v)};
}

PenroseDecomposition gen_penrose(Rng& rng, Eigen::Index n, const ToleranceConfig& tol,
                                 double magnitude) {
    PenroseDecomposition pd;
    pd.dim = n;
    const int m = rng.integer(0, static_cast<int>(std::min<Eigen::Index>(n, 4)));
    if (m == 0) {
        return pd;
    }
    // ranks r_j >= 1 with sum <= n
    std::vector<int> ranks(static_cast<std::size_t>(m), 1);
    int spare = rng.integer(0, static_cast<int>(n) - m);
    while (spare-- > 0) {
        ++ranks[static_cast<std::size_t>(rng.integer(0, m - 1))];
    }
    const double step = std::max(10.0 * tol.group_tol, 1e-3);
    std::vector<double> values;
    double v = rng.uniform(0.1, 1.0);
    for (int j = 0; j < m; ++j) {
        values.push_back(v);
        v += rng.coin() ? rng.uniform(1.0, 2.0) * step * 8.0 : rng.uniform(0.3, 1.0);
    }
    const double vmax = values.back();
    for (double& x : values) {
        x *= magnitude / vmax;
    }
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix w = random_unitary(rng, n);
    Eigen::Index offset = 0;
    for (int j = 0; j < m; ++j) {
        const Eigen::Index r = ranks[static_cast<std::size_t>(j)];
        pd.terms.push_back(
            {values[static_cast<std::size_t>(j)],
             u.middleCols(offset, r) * w.middleCols(offset, r).adjoint()});
        offset += r;
    }
    return pd;
}

SpectralModel gen_model(Rng& rng, int max_parts) {
    const int parts = rng.integer(0, max_parts);
    const std::vector<int> slots = permutation(rng, 16);
    std::vector<Atom> atoms;
    std::vector<Band> bands;
    for (int i = 0; i < parts; ++i) {
        const double base = slots[static_cast<std::size_t>(i)];
        const std::string label = "p" + std::to_string(i);
        if (rng.coin()) {
            atoms.push_back({base + rng.integer(1, 7) / 8.0, label, rng.integer(1, 3)});
        } else {
            const int lo = rng.integer(1, 6);
            const int hi = rng.integer(lo + 1, 7);
            bands.push_back({base + lo / 8.0, base + hi / 8.0, label});
        }
    }
    return SpectralModel(std::move(atoms), std::move(bands));
}

SpectralModel gen_sub_model(Rng& rng, const SpectralModel& m) {
    std::vector<Atom> atoms;
    std::vector<Band> bands;
    for (const auto& a : m.atoms()) {
        if (rng.coin()) {
            atoms.push_back({a.value, a.label, rng.integer(1, a.multiplicity)});
        }
    }
    for (const auto& b : m.bands()) {
        if (rng.coin()) {
            bands.push_back(b);
        }
    }
    return SpectralModel(std::move(atoms), std::move(bands));
}

std::pair<ComplexMatrix, ComplexMatrix> gen_join_pair(Rng& rng, Eigen::Index n, double magnitude) {
    const int ni = static_cast<int>(n);
    switch (rng.integer(0, 6)) {
    case 0:
        return gen_orthogonal_pair(rng, n, magnitude);
    case 1: {
        // two sub-sums of the singular terms of one matrix: the join is the sum over the union
        const ComplexMatrix u = random_unitary(rng, n);
        const ComplexMatrix v = random_unitary(rng, n);
        const std::vector<double> s = separated_values(rng, ni, magnitude);
        std::vector<double> sa = s;
        std::vector<double> sb = s;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const int pick = rng.integer(0, 3);
            if (pick & 1) sa[i] = 0.0;
            if (pick & 2) sb[i] = 0.0;
        }
        return {assemble(u, sa, v), assemble(u, sb, v)};
    }
    case 2: {
        // a shared singular pair with conflicting values
        const ComplexMatrix u = random_unitary(rng, n);
        const ComplexMatrix v = random_unitary(rng, n);
        std::vector<double> sa = separated_values(rng, ni, magnitude);
        std::vector<double> sb = sa;
        const auto k = static_cast<std::size_t>(rng.integer(0, ni - 1));
        sb[k] *= rng.uniform(1.5, 3.0);
        for (std::size_t i = 0; i < sa.size(); ++i) {
            if (i != k && rng.coin()) sa[i] = 0.0;
            if (i != k && rng.coin()) sb[i] = 0.0;
        }
        return {assemble(u, sa, v), assemble(u, sb, v)};
    }
    case 3: {
        const ComplexVector x1 = gen_matrix(rng, n, magnitude).col(0);
        const ComplexVector y1 = gen_matrix(rng, n, 1.0).col(0);
        const ComplexVector x2 = gen_matrix(rng, n, magnitude).col(0);
        const ComplexVector y2 = gen_matrix(rng, n, 1.0).col(0);
        return {x1 * y1.adjoint(), x2 * y2.adjoint()};
    }
    case 4: {
        const ComplexMatrix a = gen_separated_matrix(rng, n, magnitude);
        return {a, a};
    }
    case 5: {
        auto [a, b] = gen_separated_comparable_pair(rng, n, magnitude);
        return rng.coin() ? std::pair{a, b} : std::pair{b, a};
    }
    default:
        return {gen_matrix(rng, n, magnitude), gen_matrix(rng, n, magnitude)};
    }
}

}  // namespace starorder::harness
