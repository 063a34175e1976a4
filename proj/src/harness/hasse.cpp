#include "starorder/harness/hasse.hpp"

#include <algorithm>

#include "starorder/errors.hpp"
#include "starorder/star_order.hpp"

namespace starorder::harness {

HasseGraph hasse(const std::vector<ComplexMatrix>& nodes, const ToleranceConfig& tol,
                 std::vector<std::string> labels) {
    if (nodes.empty()) {
        throw ContractError("hasse needs at least one node");
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            labels.push_back("n" + std::to_string(i));
        }
    }
    if (labels.size() != nodes.size()) {
        throw ContractError("one label per node is required");
    }
    for (const auto& m : nodes) {
        require_well_formed(m, "node");
        require_same_dim(m, nodes.front());
    }

    const std::size_t n = nodes.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            leq[i][j] = i == j || star_leq(nodes[i], nodes[j], tol);
        }
    }

    HasseGraph g;
    // merge mutually comparable inputs into the node of the first one
    std::vector<std::size_t> node_of(n, n);
    std::vector<std::size_t> rep;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < rep.size(); ++k) {
            if (leq[i][rep[k]] && leq[rep[k]][i]) {
                node_of[i] = k;
                break;
            }
        }
        if (node_of[i] == n) {
            node_of[i] = rep.size();
            rep.push_back(i);
            g.nodes.push_back({labels[i], digest(nodes[i]), {i}});
        } else {
            HasseNode& target = g.nodes[node_of[i]];
            target.members.push_back(i);
            g.warnings.push_back("'" + labels[i] + "' and '" + target.label +
                                 "' are mutually comparable; merged");
        }
    }

    const std::size_t m = rep.size();
    auto below = [&](std::size_t x, std::size_t y) { return x != y && leq[rep[x]][rep[y]]; };
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            if (!below(x, y)) {
                continue;
            }
            bool covered = true;
            for (std::size_t z = 0; z < m && covered; ++z) {
                covered = !(below(x, z) && below(z, y));
            }
            if (covered) {
                g.edges.emplace_back(x, y);
            }
        }
    }
    return g;
}

std::string emit_dot(const HasseGraph& g) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') {
                out += '\\';
            }
            out += c;
        }
        return out + "\"";
    };
    std::string out = "digraph star_order {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=" + quote(g.nodes[i].label) +
               ", tooltip=" + quote(g.nodes[i].digest) + "];\n";
    }
    for (const auto& [lo, hi] : g.edges) {
        out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace starorder::harness
