#pragma once

#include <utility>
#include <vector>

#include "kl/combinatorics.hpp"
#include "kl/hecke_module.hpp"
#include "kl/laurent.hpp"

namespace kl {

/// Noncrossing matching of the 1-positions with 2-positions of a '+'
/// binary string; each pair is stored (position of 1, position of 2), so
/// a pair is "reversed" when its first entry is larger. When the letter
/// counts differ, leftover majority letters stay unpaired and must not
/// be enclosed by any pair.
struct Linkage {
    std::vector<std::pair<int, int>> pairs;  // (pos of 1, pos of 2)
    std::vector<int> unpaired;

    bool operator==(const Linkage&) const = default;
    bool reversed(size_t pair_idx) const { return pairs[pair_idx].first > pairs[pair_idx].second; }
    nlohmann::json to_json() const;
};

std::vector<Linkage> all_linkages(const Path& beta);

/// Flip the letters of reversed pair p and of every reversed pair nested
/// inside it; returns the new path and the linkage with orientations
/// re-read from the new string. Throws std::invalid_argument if p is not
/// reversed.
std::pair<Path, Linkage> r_flip(const Path& beta, const Linkage& w, size_t pair_idx);

/// Union over linkages of the r-flip closure of beta, with d = half the
/// Hamming distance to beta. Sorted by path.
std::vector<std::pair<Path, int>> l_set(const Path& beta);

/// m_beta as a combination of C^+ basis elements: coefficient (-t)^{-d}
/// on each alpha of l_set(beta). Terms are keyed by alpha.
ModuleElement expand_monomial(const Path& beta);

}  // namespace kl
