#pragma once

#include <utility>
#include <vector>

#include "kl/combinatorics.hpp"
#include "kl/dyck.hpp"
#include "kl/laurent.hpp"

namespace kl {

/// Rooted tree of the lower path's pairings (nesting forest under a
/// virtual root) with capacities at leaf edges.
struct CapTree {
    struct Edge {
        std::pair<int, int> pairing;  // (i, j), i < j
        int capacity = -1;            // leaves only
        int parent = -1;              // edge id, -1 = attached to the root
        std::vector<int> children;    // edge ids

        bool operator==(const Edge&) const = default;
    };

    Path lower;
    Path upper;
    std::vector<Edge> edges;
    std::vector<int> roots;  // edges attached to the virtual root

    bool is_leaf(int e) const { return edges[static_cast<size_t>(e)].children.empty(); }

    nlohmann::json to_json() const;
    std::string render_text() const;

    /// Structural equality up to child ordering.
    bool isomorphic(const CapTree& o) const;
};

/// Non-negative edge labels, bounded by capacities at leaves and
/// non-increasing toward the root; labels[e] indexed by edge id.
struct Labelling {
    std::vector<int> labels;
    bool operator==(const Labelling&) const = default;
    int sum() const;
};

/// Tree of the matched pairings of lower with leaf capacities read off
/// the height gap to upper. Both the string capacity formula and the
/// geometric one are computed and must agree.
CapTree build_tree(const Path& lower, const Path& upper);

/// Same tree via the recursive string-rewriting construction; used as an
/// independent route in tests.
CapTree build_tree_recursive(const Path& lower, const Path& upper);

std::vector<Labelling> enumerate_labellings(const CapTree& t);

/// t^{-boxcount} * sum over labellings of t^{2 Sigma(nu)}.
LaurentPoly ls_polynomial(const Path& lower, const Path& upper);

/// Per-pairing arc labels n'(p(e)) = n(e) - n(parent edge).
std::vector<std::pair<std::pair<int, int>, int>> transfer_labels(const CapTree& t,
                                                                 const Labelling& nu);

/// The stacked-Dyck-path construction: a Rule I configuration of the
/// region between lower and upper.
StripConfig labelling_to_config(const CapTree& t, const Labelling& nu);
StripConfig labelling_to_config(const Path& lower, const Path& upper, const Labelling& nu);

/// Inverse of labelling_to_config: split each long strip at its base
/// boxes into per-pairing layers and accumulate the counts toward the
/// leaves. Throws std::invalid_argument if a strip segment is not a
/// pairing of the lower path.
Labelling config_to_labelling(const CapTree& t, const StripConfig& c);

}  // namespace kl
