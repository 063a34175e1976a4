#include "starorder/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "starorder/errors.hpp"

namespace starorder {

namespace {

bool inside(double x, const Band& b) { return x >= b.lo && x <= b.hi; }

std::string describe(const Band& b) {
    return "[" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "] (" + b.label + ")";
}

}  // namespace

SpectralModel::SpectralModel(std::vector<Atom> atoms, std::vector<Band> bands)
    : atoms_(std::move(atoms)), bands_(std::move(bands)) {
    std::set<std::string> labels;
    auto claim = [&labels](const std::string& label) {
        if (label.empty()) {
            throw ContractError("model labels must be non-empty");
        }
        if (!labels.insert(label).second) {
            throw ContractError("duplicate label '" + label + "' in spectral model");
        }
    };

    for (const auto& a : atoms_) {
        if (!std::isfinite(a.value) || a.value <= 0.0) {
            throw ContractError("atom '" + a.label + "' must have a positive finite value");
        }
        if (a.multiplicity < 1) {
            throw ContractError("atom '" + a.label + "' must have positive multiplicity");
        }
        claim(a.label);
    }
    for (const auto& b : bands_) {
        if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo <= 0.0 || b.lo >= b.hi) {
            throw ContractError("band " + describe(b) + " must satisfy 0 < lo < hi");
        }
        claim(b.label);
    }

    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& x, const Atom& y) { return x.value < y.value; });
    std::sort(bands_.begin(), bands_.end(),
              [](const Band& x, const Band& y) { return x.lo < y.lo; });

    for (std::size_t i = 1; i < atoms_.size(); ++i) {
        if (atoms_[i].value == atoms_[i - 1].value) {
            throw ContractError("atoms '" + atoms_[i - 1].label + "' and '" + atoms_[i].label +
                                "' share the value " + std::to_string(atoms_[i].value));
        }
    }
    for (std::size_t i = 1; i < bands_.size(); ++i) {
        if (bands_[i].lo <= bands_[i - 1].hi) {
            throw ContractError("bands " + describe(bands_[i - 1]) + " and " + describe(bands_[i]) +
                                " overlap");
        }
    }
    for (const auto& a : atoms_) {
        for (const auto& b : bands_) {
            if (inside(a.value, b)) {
                throw ContractError("atom '" + a.label + "' lies inside band " + describe(b));
            }
        }
    }
}

TypeSplit model_type_split(const SpectralModel& m) {
    return {SpectralModel(m.atoms(), {}), SpectralModel({}, m.bands())};
}

SpectralModel model_merge(const SpectralModel& m1, const SpectralModel& m2) {
    std::vector<Atom> atoms = m1.atoms();
    atoms.insert(atoms.end(), m2.atoms().begin(), m2.atoms().end());
    std::vector<Band> bands = m1.bands();
    bands.insert(bands.end(), m2.bands().begin(), m2.bands().end());
    // the constructor rejects label collisions and any value/band overlap
    return SpectralModel(std::move(atoms), std::move(bands));
}

bool model_star_leq(const SpectralModel& lhs, const SpectralModel& rhs) {
    for (const auto& a : lhs.atoms()) {
        auto it = std::find_if(rhs.atoms().begin(), rhs.atoms().end(), [&a](const Atom& b) {
            return b.value == a.value && b.label == a.label;
        });
        if (it == rhs.atoms().end() || it->multiplicity < a.multiplicity) {
            return false;
        }
    }
    for (const auto& band : lhs.bands()) {
        if (std::find(rhs.bands().begin(), rhs.bands().end(), band) == rhs.bands().end()) {
            return false;
        }
    }
    return true;
}

std::vector<double> band_cell_values(const Band& band, const std::vector<double>& partition) {
    if (partition.empty()) {
        throw ContractError("partition is empty");
    }
    for (std::size_t i = 1; i < partition.size(); ++i) {
        if (!(partition[i] > partition[i - 1])) {
            throw ContractError("partition must be strictly ascending");
        }
    }
    if (partition.front() > band.lo || partition.back() < band.hi) {
        throw ContractError("partition does not cover band " + describe(band));
    }
    std::vector<double> values;
    for (double p : partition) {
        if (p > band.lo && p < band.hi) {
            values.push_back(p);
        }
    }
    values.push_back(band.hi);
    return values;
}

CoordinateLayout joint_layout(const std::vector<const SpectralModel*>& models,
                              const std::vector<double>& partition, Eigen::Index dim_per_cell) {
    if (dim_per_cell < 1) {
        throw ContractError("dim_per_cell must be at least 1");
    }
    std::map<std::string, Eigen::Index> need;
    for (const SpectralModel* m : models) {
        for (const auto& a : m->atoms()) {
            auto& n = need[a.label];
            n = std::max<Eigen::Index>(n, a.multiplicity);
        }
        for (const auto& b : m->bands()) {
            const auto cells = static_cast<Eigen::Index>(band_cell_values(b, partition).size());
            auto& n = need[b.label];
            n = std::max(n, cells * dim_per_cell);
        }
    }
    CoordinateLayout layout;
    for (const auto& [label, size] : need) {
        layout.ranges[label] = {layout.dim, size};
        layout.dim += size;
    }
    return layout;
}

Discretization discretize(const SpectralModel& m, const std::vector<double>& partition,
                          Eigen::Index dim_per_cell, const std::optional<CoordinateLayout>& layout,
                          const ToleranceConfig& tol) {
    Discretization out;
    out.layout = layout ? *layout : joint_layout({&m}, partition, dim_per_cell);
    const Eigen::Index n = out.layout.dim;

    auto range_of = [&](const std::string& label) {
        auto it = out.layout.ranges.find(label);
        if (it == out.layout.ranges.end()) {
            throw ContractError("layout has no coordinates for label '" + label + "'");
        }
        return it->second;
    };
    auto block = [n](Eigen::Index offset, Eigen::Index size) {
        ComplexMatrix u = ComplexMatrix::Zero(n, n);
        for (Eigen::Index k = offset; k < offset + size; ++k) {
            u(k, k) = 1.0;
        }
        return u;
    };

    std::vector<PenroseTerm> terms;
    for (const auto& a : m.atoms()) {
        const CoordinateRange r = range_of(a.label);
        if (a.multiplicity > r.size) {
            throw ContractError("label '" + a.label + "' has fewer coordinates than its multiplicity");
        }
        terms.push_back({a.value, block(r.offset, a.multiplicity)});
    }
    for (const auto& b : m.bands()) {
        const CoordinateRange r = range_of(b.label);
        const std::vector<double> values = band_cell_values(b, partition);
        const auto cells = static_cast<Eigen::Index>(values.size());
        if (r.size < cells) {
            throw ContractError("label '" + b.label + "' has fewer coordinates than band cells");
        }
        for (Eigen::Index k = 0; k < cells; ++k) {
            const Eigen::Index lo = k * r.size / cells;
            const Eigen::Index hi = (k + 1) * r.size / cells;
            terms.push_back({values[static_cast<std::size_t>(k)], block(r.offset + lo, hi - lo)});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const PenroseTerm& x, const PenroseTerm& y) { return x.value < y.value; });

    // each shift can raise the largest value and with it the required gap, so sweep until stable
    std::vector<double> original;
    for (const auto& t : terms) {
        original.push_back(t.value);
    }
    for (bool moved = true; moved;) {
        moved = false;
        const double min_gap = tol.group_tol * (terms.empty() ? 0.0 : terms.back().value);
        for (std::size_t i = 1; i < terms.size(); ++i) {
            double& v = terms[i].value;
            while (v - terms[i - 1].value <= min_gap) {
                v = std::nextafter(std::max(v, terms[i - 1].value + min_gap), INFINITY);
                moved = true;
            }
        }
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].value != original[i]) {
            out.adjustments.push_back({original[i], terms[i].value});
        }
    }

    out.decomposition.dim = n;
    out.decomposition.terms = std::move(terms);
    return out;
}

double band_hausdorff(const Band& band, std::vector<double> points) {
    if (points.empty()) {
        return INFINITY;
    }
    std::sort(points.begin(), points.end());
    auto dist_to_points = [&points](double x) {
        double d = INFINITY;
        for (double p : points) {
            d = std::min(d, std::abs(x - p));
        }
        return d;
    };
    // distance to the point set is piecewise linear on the band; its maximum sits at an
    // endpoint or midway between neighbouring points
    double worst = std::max(dist_to_points(band.lo), dist_to_points(band.hi));
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double mid = points[i - 1] + (points[i] - points[i - 1]) / 2.0;
        if (inside(mid, band)) {
            worst = std::max(worst, dist_to_points(mid));
        }
    }
    for (double p : points) {
        worst = std::max(worst, std::max(band.lo - p, p - band.hi));
    }
    return worst;
}

}  // namespace starorder
