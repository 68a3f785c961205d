#include "kl/ls_tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kl {

namespace {

// Up steps among the first i steps.
int ups_prefix(const Path& p, int i) { return (i + p.height(i)) / 2; }

struct RawEdge {
    std::pair<int, int> pairing;
    int parent;  // index into the raw list, -1 for the virtual root
};

// Common back end of both construction routes: normalize edge ids by
// opening index and attach capacities, checking the two capacity
// formulas against each other.
CapTree assemble(const Path& lower, const Path& upper, std::vector<RawEdge> raw) {
    if (!pointwise_leq(lower, upper))
        throw std::invalid_argument("build_tree: paths not comparable");
    std::vector<size_t> order(raw.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return raw[a].pairing < raw[b].pairing; });
    std::vector<int> newid(raw.size());
    for (size_t pos = 0; pos < order.size(); ++pos) newid[order[pos]] = static_cast<int>(pos);

    CapTree t;
    t.lower = lower;
    t.upper = upper;
    t.edges.resize(raw.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        const RawEdge& r = raw[order[pos]];
        t.edges[pos].pairing = r.pairing;
        t.edges[pos].parent = r.parent < 0 ? -1 : newid[static_cast<size_t>(r.parent)];
    }
    for (size_t id = 0; id < t.edges.size(); ++id) {
        int p = t.edges[id].parent;
        if (p < 0)
            t.roots.push_back(static_cast<int>(id));
        else
            t.edges[static_cast<size_t>(p)].children.push_back(static_cast<int>(id));
    }
    for (auto& e : t.edges) {
        if (!e.children.empty()) continue;
        auto [i, j] = e.pairing;
        if (j != i + 1) throw std::logic_error("leaf pairing is not adjacent");
        int geom = (upper.height(i) - lower.height(i)) / 2;
        int str = ups_prefix(upper, i) - ups_prefix(lower, i);
        if (geom != str) throw std::logic_error("capacity formulas disagree");
        if (geom < 0) throw std::logic_error("negative capacity");
        e.capacity = geom;
    }
    return t;
}

}  // namespace

nlohmann::json CapTree::to_json() const {
    std::function<nlohmann::json(int)> node = [&](int id) {
        const Edge& e = edges[static_cast<size_t>(id)];
        nlohmann::json j;
        j["pairing"] = {e.pairing.first, e.pairing.second};
        if (e.children.empty()) j["capacity"] = e.capacity;
        j["children"] = nlohmann::json::array();
        for (int c : e.children) j["children"].push_back(node(c));
        return j;
    };
    nlohmann::json root;
    root["children"] = nlohmann::json::array();
    for (int r : roots) root["children"].push_back(node(r));
    return root;
}

std::string CapTree::render_text() const {
    std::ostringstream os;
    os << "root\n";
    std::function<void(int, int)> node = [&](int id, int depth) {
        const Edge& e = edges[static_cast<size_t>(id)];
        os << std::string(static_cast<size_t>(depth) * 2, ' ') << '(' << e.pairing.first << ','
           << e.pairing.second << ')';
        if (e.children.empty()) os << " cap=" << e.capacity;
        os << '\n';
        for (int c : e.children) node(c, depth + 1);
    };
    for (int r : roots) node(r, 1);
    return os.str();
}

bool CapTree::isomorphic(const CapTree& o) const {
    // Both construction routes normalize edge ids by opening index, so
    // structural comparison reduces to field equality.
    return lower == o.lower && upper == o.upper && roots == o.roots && edges == o.edges;
}

int Labelling::sum() const { return std::accumulate(labels.begin(), labels.end(), 0); }

CapTree build_tree(const Path& lower, const Path& upper) {
    auto lp = link_pattern(lower);
    std::vector<RawEdge> raw;
    raw.reserve(lp.pairings.size());
    for (const auto& pr : lp.pairings) raw.push_back({pr, -1});
    // Parent = tightest enclosing pairing; enclosing pairings form a
    // chain (noncrossing), so the largest opening wins.
    for (size_t a = 0; a < raw.size(); ++a) {
        int best = -1;
        for (size_t b = 0; b < raw.size(); ++b) {
            if (a == b) continue;
            if (raw[b].pairing.first < raw[a].pairing.first &&
                raw[a].pairing.second < raw[b].pairing.second) {
                if (best < 0 || raw[b].pairing.first > raw[static_cast<size_t>(best)].pairing.first)
                    best = static_cast<int>(b);
            }
        }
        raw[a].parent = best;
    }
    return assemble(lower, upper, raw);
}

CapTree build_tree_recursive(const Path& lower, const Path& upper) {
    // Steps of the lower path tagged with their original positions; the
    // rewriting rules drop unmatched steps (close at the front, open at
    // the back) and split at top-level balanced components.
    std::vector<RawEdge> raw;
    using Seq = std::vector<std::pair<bool, int>>;  // (is_up, position)
    std::function<void(const Seq&, int)> rec = [&](const Seq& seq, int parent) {
        int depth = 0;
        size_t start = 0;
        for (size_t s = 0; s < seq.size(); ++s) {
            if (seq[s].first) {
                if (depth == 0) start = s;
                ++depth;
            } else if (depth > 0 && --depth == 0) {
                raw.push_back({{seq[start].second, seq[s].second}, parent});
                int eid = static_cast<int>(raw.size()) - 1;
                rec(Seq(seq.begin() + static_cast<long>(start) + 1,
                        seq.begin() + static_cast<long>(s)),
                    eid);
            }
        }
    };
    // Drop unmatched steps first (closes with no earlier open, opens never
    // closed): unmatched letters do not enclose anything, so the matched
    // subsequence alone determines the forest.
    Seq whole, stack;
    for (int i = 1; i <= lower.size(); ++i) {
        bool up = lower.step(i) > 0;
        if (up) {
            stack.emplace_back(up, i);
        } else if (!stack.empty()) {
            whole.push_back(stack.back());
            stack.pop_back();
            whole.emplace_back(up, i);
        }
    }
    std::sort(whole.begin(), whole.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    rec(whole, -1);
    return assemble(lower, upper, std::move(raw));
}

std::vector<Labelling> enumerate_labellings(const CapTree& t) {
    // Edge ids ascend with the opening index, so a descending sweep sees
    // every child before its parent.
    std::vector<Labelling> out;
    Labelling cur;
    cur.labels.assign(t.edges.size(), 0);
    std::function<void(int)> rec = [&](int id) {
        if (id < 0) {
            out.push_back(cur);
            return;
        }
        const auto& e = t.edges[static_cast<size_t>(id)];
        int ub;
        if (e.children.empty()) {
            ub = e.capacity;
        } else {
            ub = std::numeric_limits<int>::max();
            for (int c : e.children) ub = std::min(ub, cur.labels[static_cast<size_t>(c)]);
        }
        for (int v = 0; v <= ub; ++v) {
            cur.labels[static_cast<size_t>(id)] = v;
            rec(id - 1);
        }
    };
    rec(static_cast<int>(t.edges.size()) - 1);
    return out;
}

LaurentPoly ls_polynomial(const Path& lower, const Path& upper) {
    if (!pointwise_leq(lower, upper)) return LaurentPoly::zero();
    CapTree t = build_tree(lower, upper);
    int boxes = ferrers_box_count(lower, upper);
    LaurentPoly p;
    for (const auto& nu : enumerate_labellings(t)) p += LaurentPoly::t(-boxes + 2 * nu.sum());
    return p;
}

std::vector<std::pair<std::pair<int, int>, int>> transfer_labels(const CapTree& t,
                                                                 const Labelling& nu) {
    if (nu.labels.size() != t.edges.size())
        throw std::invalid_argument("transfer_labels: label count mismatch");
    std::vector<std::pair<std::pair<int, int>, int>> out;
    out.reserve(t.edges.size());
    for (size_t id = 0; id < t.edges.size(); ++id) {
        const auto& e = t.edges[id];
        int np = nu.labels[id] - (e.parent < 0 ? 0 : nu.labels[static_cast<size_t>(e.parent)]);
        if (np < 0) throw std::invalid_argument("transfer_labels: labels increase toward the root");
        out.emplace_back(e.pairing, np);
    }
    return out;
}

StripConfig labelling_to_config(const CapTree& t, const Labelling& nu) {
    if (nu.labels.size() != t.edges.size())
        throw std::invalid_argument("labelling_to_config: label count mismatch");
    auto region = region_boxes(t.lower, t.upper);
    std::set<Box> region_set(region.begin(), region.end());

    // Edge e contributes layers k = nu(parent) .. nu(e)-1; the layer-k
    // path copies the lower path's profile at height offset 2k+1 over the
    // closed column span of the pairing.
    std::vector<std::vector<Box>> layer_paths;
    for (size_t id = 0; id < t.edges.size(); ++id) {
        const auto& e = t.edges[id];
        int lo = e.parent < 0 ? 0 : nu.labels[static_cast<size_t>(e.parent)];
        for (int k = lo; k < nu.labels[id]; ++k) {
            std::vector<Box> pb;
            for (int x = e.pairing.first - 1; x <= e.pairing.second; ++x) {
                Box b{x, t.lower.height(x) + 1 + 2 * k};
                if (!region_set.count(b)) throw std::logic_error("layer box outside region");
                pb.push_back(b);
            }
            layer_paths.push_back(std::move(pb));
        }
    }

    // Merge layer paths sharing a box (endpoints of adjacent arcs at the
    // same layer), transitively.
    std::vector<int> uf(layer_paths.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (uf[static_cast<size_t>(a)] != a) a = uf[static_cast<size_t>(a)] =
                                                     uf[static_cast<size_t>(uf[static_cast<size_t>(a)])];
        return a;
    };
    std::map<Box, int> seen;
    for (size_t i = 0; i < layer_paths.size(); ++i)
        for (const auto& b : layer_paths[i]) {
            auto [it, inserted] = seen.emplace(b, static_cast<int>(i));
            if (!inserted) uf[static_cast<size_t>(find(static_cast<int>(i)))] = find(it->second);
        }

    std::map<int, std::set<Box>> comps;
    for (size_t i = 0; i < layer_paths.size(); ++i)
        comps[find(static_cast<int>(i))].insert(layer_paths[i].begin(), layer_paths[i].end());

    std::vector<DyckStrip> strips;
    std::set<Box> covered;
    for (const auto& [root, boxes] : comps) {
        DyckStrip s{std::vector<Box>(boxes.begin(), boxes.end())};
        if (!s.valid()) throw std::logic_error("merged layers do not form a Dyck strip");
        covered.insert(boxes.begin(), boxes.end());
        strips.push_back(std::move(s));
    }
    for (const auto& b : region)
        if (!covered.count(b)) strips.push_back(DyckStrip{{b}});
    std::sort(strips.begin(), strips.end());
    return StripConfig{t.lower, t.upper, std::move(strips)};
}

StripConfig labelling_to_config(const Path& lower, const Path& upper, const Labelling& nu) {
    return labelling_to_config(build_tree(lower, upper), nu);
}

Labelling config_to_labelling(const CapTree& t, const StripConfig& c) {
    std::map<std::pair<int, int>, size_t> by_pairing;
    for (size_t id = 0; id < t.edges.size(); ++id) by_pairing[t.edges[id].pairing] = id;

    // Arc layer counts n'(e): each long strip splits at its base-height
    // boxes into one layer path per pairing.
    std::vector<int> arc(t.edges.size(), 0);
    for (const auto& s : c.strips) {
        if (s.boxes.size() == 1) continue;
        if (!s.valid()) throw std::invalid_argument("config_to_labelling: invalid strip");
        int base = s.boxes.front().y;
        int prev = s.boxes.front().x;
        for (size_t i = 1; i < s.boxes.size(); ++i) {
            if (s.boxes[i].y != base) continue;
            auto it = by_pairing.find({prev + 1, s.boxes[i].x});
            if (it == by_pairing.end())
                throw std::invalid_argument("config_to_labelling: segment is not a pairing");
            ++arc[it->second];
            prev = s.boxes[i].x;
        }
    }

    // Tree labels by telescoping toward the leaves (parent id < child id).
    Labelling nu;
    nu.labels.assign(t.edges.size(), 0);
    for (size_t id = 0; id < t.edges.size(); ++id) {
        int p = t.edges[id].parent;
        nu.labels[id] = arc[id] + (p < 0 ? 0 : nu.labels[static_cast<size_t>(p)]);
    }
    return nu;
}

}  // namespace kl
