#include "kl/linkage.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kl {

namespace {

// '+' convention letters: up step = 1, down step = 2.
bool is_one(const Path& p, int i) { return p.step(i) > 0; }

bool encloses(std::pair<int, int> pr, int i) {
    auto [a, b] = std::minmax(pr.first, pr.second);
    return a < i && i < b;
}

bool crossing(std::pair<int, int> p, std::pair<int, int> q) {
    int a = std::min(p.first, p.second), b = std::max(p.first, p.second);
    int c = std::min(q.first, q.second), d = std::max(q.first, q.second);
    if (c < a) {
        std::swap(a, c);
        std::swap(b, d);
    }
    return c < b && b < d;
}

int half_hamming(const Path& a, const Path& b) {
    int diff = 0;
    for (int i = 1; i <= a.size(); ++i)
        if (a.step(i) != b.step(i)) ++diff;
    return diff / 2;
}

}  // namespace

nlohmann::json Linkage::to_json() const {
    nlohmann::json j;
    j["pairs"] = nlohmann::json::array();
    for (const auto& [a, b] : pairs) j["pairs"].push_back({a, b});
    j["unpaired"] = unpaired;
    return j;
}

std::vector<Linkage> all_linkages(const Path& beta) {
    std::vector<int> ones, twos;
    for (int i = 1; i <= beta.size(); ++i) (is_one(beta, i) ? ones : twos).push_back(i);
    const auto& minority = ones.size() <= twos.size() ? ones : twos;
    const auto& majority = ones.size() <= twos.size() ? twos : ones;

    std::vector<Linkage> out;
    std::vector<int> match(minority.size());  // majority partner per minority index
    std::vector<bool> used(majority.size(), false);
    auto emit = [&] {
        Linkage w;
        for (size_t a = 0; a < minority.size(); ++a) {
            int one = minority[a], two = match[a];
            if (!is_one(beta, one)) std::swap(one, two);
            w.pairs.emplace_back(one, two);
        }
        for (size_t b = 0; b < majority.size(); ++b)
            if (!used[b]) w.unpaired.push_back(majority[b]);
        for (size_t a = 0; a < w.pairs.size(); ++a)
            for (size_t b = a + 1; b < w.pairs.size(); ++b)
                if (crossing(w.pairs[a], w.pairs[b])) return;
        // Unpaired letters sit outside every pair interval.
        for (int u : w.unpaired)
            for (const auto& pr : w.pairs)
                if (encloses(pr, u)) return;
        std::sort(w.pairs.begin(), w.pairs.end(),
                  [](auto p, auto q) { return std::minmax(p.first, p.second) <
                                              std::minmax(q.first, q.second); });
        out.push_back(std::move(w));
    };
    auto rec = [&](auto&& self, size_t a) -> void {
        if (a == minority.size()) {
            emit();
            return;
        }
        for (size_t b = 0; b < majority.size(); ++b) {
            if (used[b]) continue;
            used[b] = true;
            match[a] = majority[b];
            self(self, a + 1);
            used[b] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::pair<Path, Linkage> r_flip(const Path& beta, const Linkage& w, size_t pair_idx) {
    if (pair_idx >= w.pairs.size()) throw std::invalid_argument("r_flip: pair index");
    if (!w.reversed(pair_idx)) throw std::invalid_argument("r_flip: pair is not reversed");
    auto steps = beta.steps();
    auto flip_at = [&](std::pair<int, int> pr) {
        std::swap(steps[static_cast<size_t>(pr.first) - 1],
                  steps[static_cast<size_t>(pr.second) - 1]);
    };
    const auto& p = w.pairs[pair_idx];
    auto [lo, hi] = std::minmax(p.first, p.second);
    flip_at(p);
    for (size_t q = 0; q < w.pairs.size(); ++q) {
        if (q == pair_idx || !w.reversed(q)) continue;
        auto [a, b] = std::minmax(w.pairs[q].first, w.pairs[q].second);
        if (lo < a && b < hi) flip_at(w.pairs[q]);
    }
    Path alpha{std::move(steps)};
    // Same matching, orientations re-read from the new string.
    Linkage w2 = w;
    for (auto& pr : w2.pairs) {
        int one = pr.first, two = pr.second;
        if (!is_one(alpha, one)) std::swap(one, two);
        if (is_one(alpha, two)) throw std::logic_error("r_flip: pair letters not 1/2");
        pr = {one, two};
    }
    return {std::move(alpha), std::move(w2)};
}

std::vector<std::pair<Path, int>> l_set(const Path& beta) {
    std::map<Path, int> found;
    for (const auto& w : all_linkages(beta)) {
        std::map<Path, Linkage> frontier{{beta, w}}, visited;
        while (!frontier.empty()) {
            std::map<Path, Linkage> next;
            for (const auto& [p, lk] : frontier) {
                if (visited.count(p)) continue;
                visited.emplace(p, lk);
                for (size_t idx = 0; idx < lk.pairs.size(); ++idx)
                    if (lk.reversed(idx)) {
                        auto [np, nw] = r_flip(p, lk, idx);
                        if (!visited.count(np)) next.emplace(std::move(np), std::move(nw));
                    }
            }
            frontier = std::move(next);
        }
        for (const auto& [p, lk] : visited) {
            int d = half_hamming(p, beta);
            auto [it, inserted] = found.emplace(p, d);
            if (!inserted && it->second != d) throw std::logic_error("l_set: inconsistent distance");
        }
    }
    return {found.begin(), found.end()};
}

ModuleElement expand_monomial(const Path& beta) {
    ModuleElement e;
    e.conv = Conv::plus;
    e.n = beta.size();
    e.k = beta.ups();
    for (const auto& [alpha, d] : l_set(beta))
        e.add_term(alpha, LaurentPoly::monomial(-d, (d % 2) ? -1 : 1));
    return e;
}

}  // namespace kl
