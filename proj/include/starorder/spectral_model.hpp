#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starorder/numerics.hpp"
#include "starorder/penrose.hpp"

namespace starorder {

/// Point-spectrum part: value a with a partial-isometry support named by label.
struct Atom {
    double value = 0.0;
    std::string label;
    int multiplicity = 1;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Continuous part: |A| has purely continuous spectrum filling [lo, hi] on the support named by label.
struct Band {
    double lo = 0.0;
    double hi = 0.0;
    std::string label;

    friend bool operator==(const Band&, const Band&) = default;
};

/// Symbolic operator: atoms carry the type 1 part, bands the type 2 part.
///
/// Instances are always well formed and canonical: atoms sorted by value, bands by
/// lower endpoint. Atom values are distinct and lie outside every (closed) band,
/// bands are pairwise disjoint and labels are unique across the whole model.
class SpectralModel {
public:
    SpectralModel() = default;

    /// Validates and canonicalizes; throws ContractError on any invariant violation.
    SpectralModel(std::vector<Atom> atoms, std::vector<Band> bands);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const std::vector<Band>& bands() const noexcept { return bands_; }
    bool empty() const noexcept { return atoms_.empty() && bands_.empty(); }

    friend bool operator==(const SpectralModel&, const SpectralModel&) = default;

private:
    std::vector<Atom> atoms_;
    std::vector<Band> bands_;
};

struct TypeSplit {
    SpectralModel type1;  // atoms only
    SpectralModel type2;  // bands only
};

TypeSplit model_type_split(const SpectralModel& m);

/// Throws ContractError on a label collision or when a value of one side meets the other.
SpectralModel model_merge(const SpectralModel& m1, const SpectralModel& m2);

/// Atoms compared by (value, label) with multiplicity containment; bands by exact
/// (interval, label) equality.
bool model_star_leq(const SpectralModel& lhs, const SpectralModel& rhs);

/// Coordinates assigned to each label in a matrix realization.
struct CoordinateRange {
    Eigen::Index offset = 0;
    Eigen::Index size = 0;
};

struct CoordinateLayout {
    Eigen::Index dim = 0;
    std::map<std::string, CoordinateRange> ranges;
};

/// Cells of a band under a partition: the partition points strictly inside the band
/// plus both endpoints. The right endpoint of each cell is its discretized value.
std::vector<double> band_cell_values(const Band& band, const std::vector<double>& partition);

/// Layout that gives every label of every model enough coordinates: an atom needs its
/// multiplicity, a band needs dim_per_cell coordinates per cell. Labels shared between
/// models receive one range sized for the most demanding use.
CoordinateLayout joint_layout(const std::vector<const SpectralModel*>& models,
                              const std::vector<double>& partition, Eigen::Index dim_per_cell);

struct ValueAdjustment {
    double original = 0.0;
    double adjusted = 0.0;
};

struct Discretization {
    PenroseDecomposition decomposition;
    std::vector<ValueAdjustment> adjustments;
    CoordinateLayout layout;
};

/// Matrix realization of a model with the right-endpoint rule on every band cell.
///
/// An atom (a, label, m) becomes (a, projection onto the first m coordinates of its label).
/// A band with c cells splits the coordinates of its label into c consecutive slices, one
/// term per cell. Values closer than group_tol (relative to the largest value) are pushed
/// apart by the smallest amount that restores distinctness; each shift is recorded.
/// Without a layout, joint_layout({&m}, partition, dim_per_cell) is used.
Discretization discretize(const SpectralModel& m, const std::vector<double>& partition,
                          Eigen::Index dim_per_cell,
                          const std::optional<CoordinateLayout>& layout = std::nullopt,
                          const ToleranceConfig& tol = {});

/// Hausdorff distance between the band interval and a finite set of points inside it.
double band_hausdorff(const Band& band, std::vector<double> points);

}  // namespace starorder
