#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "starorder/numerics.hpp"

namespace starorder::harness {

struct HasseNode {
    std::string label;
    std::string digest;
    /// Input positions represented by this node (more than one after an antisymmetry merge).
    std::vector<std::size_t> members;
};

struct HasseGraph {
    std::vector<HasseNode> nodes;
    /// Covering pairs (lower, upper) as node indices, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> warnings;
};

/// Transitive reduction of star_leq on the given matrices. Distinct inputs that are mutually
/// comparable (only possible through tolerance) are merged into one node with a warning.
/// Labels default to "n<i>". Throws ShapeError on a dimension mismatch, ContractError when
/// nodes is empty or labels has the wrong length.
HasseGraph hasse(const std::vector<ComplexMatrix>& nodes, const ToleranceConfig& tol = {},
                 std::vector<std::string> labels = {});

/// Graphviz digraph text: nodes in graph order, then one edge per line.
std::string emit_dot(const HasseGraph& g);

}  // namespace starorder::harness
