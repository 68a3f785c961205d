#include "kl/dyck.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kl {

bool DyckStrip::valid() const {
    if (boxes.empty() || boxes.size() % 2 == 0) return false;
    int base = boxes.front().y;
    if (boxes.back().y != base) return false;
    for (size_t i = 0; i < boxes.size(); ++i) {
        if (boxes[i].y < base) return false;
        if (i > 0) {
            if (boxes[i].x != boxes[i - 1].x + 1) return false;
            if (std::abs(boxes[i].y - boxes[i - 1].y) != 1) return false;
        }
    }
    return true;
}

nlohmann::json StripConfig::to_json() const {
    nlohmann::json j;
    j["lower"] = lower.to_string();
    j["upper"] = upper.to_string();
    j["strips"] = nlohmann::json::array();
    for (const auto& s : strips) {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& b : s.boxes) js.push_back({b.x, b.y});
        j["strips"].push_back(js);
    }
    return j;
}

std::string StripConfig::render_ascii() const {
    if (strips.empty()) return "(empty region)\n";
    std::map<Box, size_t> owner;
    int ymin = 0, ymax = 0;
    for (size_t s = 0; s < strips.size(); ++s)
        for (const auto& b : strips[s].boxes) {
            owner[b] = s;
            ymin = std::min(ymin, b.y);
            ymax = std::max(ymax, b.y);
        }
    std::ostringstream os;
    for (int y = ymax; y >= ymin; --y) {
        for (int x = 0; x <= lower.size(); ++x) {
            auto it = owner.find(Box{x, y});
            if (it == owner.end())
                os << "  ";
            else
                os << static_cast<char>('A' + static_cast<int>(it->second % 26)) << ' ';
        }
        os << "\n";
    }
    return os.str();
}

std::vector<Box> region_boxes(const Path& lower, const Path& upper) {
    if (!pointwise_leq(lower, upper))
        throw std::invalid_argument("region_boxes: paths not comparable");
    std::vector<Box> out;
    for (int x = 1; x < lower.size(); ++x)
        for (int y = lower.height(x) + 1; y <= upper.height(x) - 1; y += 2)
            out.push_back(Box{x, y});
    return out;
}

namespace {

// Pairwise rule tests; box membership looked up in the whole config.
bool pair_ok_rule_I(const DyckStrip& d, const DyckStrip& dp, const std::set<Box>& of_d) {
    bool triggered = false;
    for (const auto& b : dp.boxes)
        if (of_d.count(Box{b.x, b.y - 2})) {
            triggered = true;
            break;
        }
    if (!triggered) return true;
    for (const auto& b : dp.boxes)
        if (!of_d.count(Box{b.x, b.y - 2})) return false;
    return true;
}

bool pair_ok_rule_II(const DyckStrip& d, const DyckStrip& dp, const std::set<Box>& of_d,
                     const std::set<Box>& of_dp) {
    auto neighbors_above = [](const Box& b) {
        return std::array<Box, 3>{Box{b.x, b.y + 2}, Box{b.x - 1, b.y + 1}, Box{b.x + 1, b.y + 1}};
    };
    bool triggered = false;
    for (const auto& b : d.boxes) {
        for (const auto& nb : neighbors_above(b))
            if (of_dp.count(nb)) {
                triggered = true;
                break;
            }
        if (triggered) break;
    }
    if (!triggered) return true;
    for (const auto& b : d.boxes)
        for (const auto& nb : neighbors_above(b))
            if (!of_d.count(nb) && !of_dp.count(nb)) return false;
    return true;
}

bool pair_ok(const DyckStrip& d, const DyckStrip& dp, const std::set<Box>& of_d,
             const std::set<Box>& of_dp, Rule rule) {
    return rule == Rule::I ? pair_ok_rule_I(d, dp, of_d) : pair_ok_rule_II(d, dp, of_d, of_dp);
}

struct Enumerator {
    std::vector<Box> boxes;          // region, sorted by (x, y)
    std::set<Box> uncovered;
    std::vector<DyckStrip> placed;
    std::vector<std::set<Box>> placed_sets;
    Rule rule;
    bool prune;
    Path lower, upper;
    const std::function<void(const StripConfig&)>* sink;

    void run() {
        if (boxes.empty()) {
            StripConfig c{lower, upper, {}};
            (*sink)(c);
            return;
        }
        recurse();
    }

    void recurse() {
        if (uncovered.empty()) {
            StripConfig c{lower, upper, placed};
            if (satisfies_rule(c, rule)) (*sink)(c);
            return;
        }
        Box start = *uncovered.begin();  // min x, then min y
        DyckStrip strip;
        strip.boxes.push_back(start);
        uncovered.erase(start);
        grow(strip, start.y);
        uncovered.insert(start);
    }

    void grow(DyckStrip& strip, int base) {
        const Box last = strip.boxes.back();
        if (last.y == base) place_and_recurse(strip);
        for (int dy : {+1, -1}) {
            Box next{last.x + 1, last.y + dy};
            if (next.y < base) continue;
            if (!uncovered.count(next)) continue;
            strip.boxes.push_back(next);
            uncovered.erase(next);
            grow(strip, base);
            uncovered.insert(next);
            strip.boxes.pop_back();
        }
    }

    void place_and_recurse(const DyckStrip& strip) {
        std::set<Box> sset(strip.boxes.begin(), strip.boxes.end());
        if (prune) {
            for (size_t i = 0; i < placed.size(); ++i) {
                if (!pair_ok(placed[i], strip, placed_sets[i], sset, rule)) return;
                if (!pair_ok(strip, placed[i], sset, placed_sets[i], rule)) return;
            }
        }
        placed.push_back(strip);
        placed_sets.push_back(std::move(sset));
        recurse();
        placed.pop_back();
        placed_sets.pop_back();
    }
};

}  // namespace

bool satisfies_rule(const StripConfig& c, Rule rule) {
    std::vector<std::set<Box>> sets;
    sets.reserve(c.strips.size());
    for (const auto& s : c.strips) sets.emplace_back(s.boxes.begin(), s.boxes.end());
    for (size_t i = 0; i < c.strips.size(); ++i)
        for (size_t j = 0; j < c.strips.size(); ++j) {
            if (i == j) continue;
            if (!pair_ok(c.strips[i], c.strips[j], sets[i], sets[j], rule)) return false;
        }
    return true;
}

bool satisfies_rule_I(const StripConfig& c) { return satisfies_rule(c, Rule::I); }
bool satisfies_rule_II(const StripConfig& c) { return satisfies_rule(c, Rule::II); }

void enumerate_configs(const Path& lower, const Path& upper, Rule rule, bool prune,
                       const std::function<void(const StripConfig&)>& sink) {
    Enumerator e;
    e.boxes = region_boxes(lower, upper);
    e.uncovered.insert(e.boxes.begin(), e.boxes.end());
    e.rule = rule;
    e.prune = prune;
    e.lower = lower;
    e.upper = upper;
    e.sink = &sink;
    e.run();
}

std::vector<StripConfig> rule_configs(const Path& lower, const Path& upper, Rule rule) {
    std::vector<StripConfig> out;
    enumerate_configs(lower, upper, rule, true, [&](const StripConfig& c) { out.push_back(c); });
    return out;
}

std::vector<StripConfig> rule_configs_brute(const Path& lower, const Path& upper, Rule rule) {
    std::vector<StripConfig> out;
    enumerate_configs(lower, upper, rule, false, [&](const StripConfig& c) { out.push_back(c); });
    return out;
}

LaurentPoly q_rule_I(const Path& lower, const Path& upper) {
    if (!pointwise_leq(lower, upper)) return LaurentPoly::zero();
    LaurentPoly q;
    enumerate_configs(lower, upper, Rule::I, true, [&](const StripConfig& c) {
        q += LaurentPoly::t(-static_cast<int>(c.strips.size()));
    });
    return q;
}

LaurentPoly q_rule_II(const Path& lower, const Path& upper) {
    if (!pointwise_leq(lower, upper)) return LaurentPoly::zero();
    LaurentPoly q;
    int found = 0;
    enumerate_configs(lower, upper, Rule::II, true, [&](const StripConfig& c) {
        ++found;
        q += LaurentPoly::t(-static_cast<int>(c.strips.size()));
    });
    if (found > 1) throw std::logic_error("q_rule_II: multiple Rule II configurations");
    return q;
}

bool verify_inversion(int n, int k) {
    auto paths = all_paths(n, k);
    size_t m = paths.size();
    std::vector<int> len(m);
    for (size_t i = 0; i < m; ++i) len[i] = coset_length(paths[i], Conv::minus);
    std::vector<std::vector<LaurentPoly>> q1(m, std::vector<LaurentPoly>(m)),
        q2(m, std::vector<LaurentPoly>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            if (pointwise_leq(paths[a], paths[b])) {
                q1[a][b] = q_rule_I(paths[a], paths[b]);
                q2[a][b] = q_rule_II(paths[a], paths[b]);
            }
    for (size_t a = 0; a < m; ++a)
        for (size_t g = 0; g < m; ++g) {
            LaurentPoly s;
            for (size_t b = 0; b < m; ++b) {
                if (q1[a][b].is_zero() || q2[b][g].is_zero()) continue;
                LaurentPoly term = q1[a][b] * q2[b][g];
                if ((len[b] + len[g]) % 2) term = -term;
                s += term;
            }
            if (a == g ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

}  // namespace kl
