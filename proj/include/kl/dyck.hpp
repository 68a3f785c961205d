#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "kl/combinatorics.hpp"
#include "kl/laurent.hpp"

namespace kl {

/// Unit box centered at integer coordinates (x, y); boxes of the region
/// between lower and upper satisfy lower(x)+1 <= y <= upper(x)-1.
struct Box {
    int x = 0;
    int y = 0;
    auto operator<=>(const Box&) const = default;
};

/// Ribbon of boxes with consecutive x whose heights trace a Dyck path
/// over the strip's base height; box count is odd.
struct DyckStrip {
    std::vector<Box> boxes;  // ascending x

    bool valid() const;
    int length() const { return static_cast<int>(boxes.size()); }
    auto operator<=>(const DyckStrip&) const = default;
};

/// Partition of the skew region between two paths into Dyck strips.
struct StripConfig {
    Path lower;
    Path upper;
    std::vector<DyckStrip> strips;

    bool operator==(const StripConfig&) const = default;
    nlohmann::json to_json() const;
    std::string render_ascii() const;
};

enum class Rule { I, II };

/// All boxes of the region between two comparable paths.
std::vector<Box> region_boxes(const Path& lower, const Path& upper);

bool satisfies_rule_I(const StripConfig& c);
bool satisfies_rule_II(const StripConfig& c);
bool satisfies_rule(const StripConfig& c, Rule rule);

/// Exhaustive canonical enumeration of partitions of the region into Dyck
/// strips. With prune=true, partial configurations violating the pairwise
/// rule are cut early; the rule filter on complete configurations is
/// authoritative either way.
void enumerate_configs(const Path& lower, const Path& upper, Rule rule, bool prune,
                       const std::function<void(const StripConfig&)>& sink);

std::vector<StripConfig> rule_configs(const Path& lower, const Path& upper, Rule rule);

/// Unpruned enumeration + filter; test oracle for the pruned route.
std::vector<StripConfig> rule_configs_brute(const Path& lower, const Path& upper, Rule rule);

/// Generating function sum t^{-|D|} over Rule I partitions; 0 when the
/// paths are incomparable, 1 for the empty region.
LaurentPoly q_rule_I(const Path& lower, const Path& upper);

/// Rule II generating function: a monomial t^{-|D|} or 0; the Rule II
/// partition is unique when it exists.
LaurentPoly q_rule_II(const Path& lower, const Path& upper);

/// Matrix identity sum_beta Q^{I,-} Q^{II,-} (-1)^{|beta|+|gamma|} = id
/// over P_{N,K}.
bool verify_inversion(int n, int k);

}  // namespace kl
