#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "kl/dyck.hpp"
#include "kl/ls_tree.hpp"

using namespace kl;

TEST_CASE("tree shape from the lower path") {
    Path lower = Path::from_binary("12112122", Conv::plus);
    CapTree t = build_tree(lower, top_path(8, 4));
    REQUIRE(t.edges.size() == 4);
    CHECK(t.edges[0].pairing == std::pair<int, int>{1, 2});
    CHECK(t.edges[1].pairing == std::pair<int, int>{3, 8});
    CHECK(t.edges[2].pairing == std::pair<int, int>{4, 5});
    CHECK(t.edges[3].pairing == std::pair<int, int>{6, 7});
    CHECK(t.roots == std::vector<int>{0, 1});
    CHECK(t.edges[1].children == std::vector<int>{2, 3});
    CHECK(t.is_leaf(0));
    CHECK(!t.is_leaf(1));
}

TEST_CASE("capacities") {
    // Equal paths force capacity 0 everywhere.
    Path p = Path::parse("+-+--+-+");
    CapTree t = build_tree(p, p);
    for (const auto& e : t.edges)
        if (e.children.empty()) CHECK(e.capacity == 0);
    CapTree b = build_tree(Path::parse("-++-+--+"), Path::parse("++++----"));
    REQUIRE(b.edges.size() == 3);
    CHECK(b.edges[0].pairing == std::pair<int, int>{2, 7});
    CHECK(b.edges[1].capacity == 1);
    CHECK(b.edges[2].capacity == 1);
}

TEST_CASE("recursive construction builds the same capacitated tree") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            auto ps = all_paths(n, k);
            for (const auto& lo : ps)
                for (const auto& hi : ps) {
                    if (!pointwise_leq(lo, hi)) continue;
                    CHECK(build_tree(lo, hi).isomorphic(build_tree_recursive(lo, hi)));
                }
        }
}

TEST_CASE("labelling enumeration") {
    CapTree b = build_tree(Path::parse("-++-+--+"), Path::parse("++++----"));
    auto labs = enumerate_labellings(b);
    // labels indexed (root edge, left leaf, right leaf)
    std::set<std::vector<int>> got;
    for (const auto& nu : labs) got.insert(nu.labels);
    CHECK(got == std::set<std::vector<int>>{
                     {0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    // Single leaf edge with capacity c has c+1 labellings.
    CapTree single;
    single.lower = Path::parse("+-");
    single.upper = Path::parse("+-");
    single.edges.push_back({{1, 2}, 3, -1, {}});
    single.roots = {0};
    CHECK(enumerate_labellings(single).size() == 4);
    // All-zero capacities give exactly one labelling.
    CapTree z = build_tree(Path::parse("+-+-"), Path::parse("+-+-"));
    CHECK(enumerate_labellings(z).size() == 1);
}

TEST_CASE("generating function") {
    LaurentPoly expect = LaurentPoly::t(-8) + LaurentPoly::monomial(-6, 2) + LaurentPoly::t(-4) +
                         LaurentPoly::t(-2);
    CHECK(ls_polynomial(Path::parse("-++-+--+"), Path::parse("++++----")) == expect);
    Path p = Path::parse("-+-++--+");
    CHECK(ls_polynomial(p, p) == LaurentPoly::one());
    CHECK(ls_polynomial(Path::parse("-+-+"), Path::parse("++--")) ==
          LaurentPoly::t(-3) + LaurentPoly::t(-1));
    CHECK(ls_polynomial(Path::parse("+--+"), Path::parse("-++-")) == LaurentPoly::zero());
}

TEST_CASE("generating function equals rule I on all comparable pairs") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            auto ps = all_paths(n, k);
            for (const auto& lo : ps)
                for (const auto& hi : ps)
                    CHECK(ls_polynomial(lo, hi) == q_rule_I(lo, hi));
        }
}

TEST_CASE("label transfer to arcs") {
    // Shape and labels from the worked figure; capacities are immaterial
    // to the transfer arithmetic.
    CapTree t;
    t.lower = Path::from_binary("12112122", Conv::plus);
    t.upper = t.lower;
    t.edges.push_back({{1, 2}, 1, -1, {}});
    t.edges.push_back({{3, 8}, -1, -1, {2, 3}});
    t.edges.push_back({{4, 5}, 2, 1, {}});
    t.edges.push_back({{6, 7}, 1, 1, {}});
    t.roots = {0, 1};
    Labelling nu{{1, 1, 2, 1}};
    auto arcs = transfer_labels(t, nu);
    std::map<std::pair<int, int>, int> got(arcs.begin(), arcs.end());
    CHECK(got == std::map<std::pair<int, int>, int>{
                     {{1, 2}, 1}, {{3, 8}, 1}, {{4, 5}, 1}, {{6, 7}, 0}});
    // Telescoping: summing arc labels down any root path recovers nu.
    for (size_t id = 0; id < t.edges.size(); ++id) {
        int sum = 0;
        for (int e = static_cast<int>(id); e >= 0; e = t.edges[static_cast<size_t>(e)].parent)
            sum += got[t.edges[static_cast<size_t>(e)].pairing];
        CHECK(sum == nu.labels[id]);
    }
    CHECK(transfer_labels(t, Labelling{{0, 0, 0, 0}}) ==
          std::vector<std::pair<std::pair<int, int>, int>>{
              {{1, 2}, 0}, {{3, 8}, 0}, {{4, 5}, 0}, {{6, 7}, 0}});
}

TEST_CASE("labelling to configuration") {
    Path lo = Path::parse("-++-+--+"), hi = Path::parse("++++----");
    CapTree t = build_tree(lo, hi);
    StripConfig zero = labelling_to_config(t, Labelling{{0, 0, 0}});
    CHECK(zero.strips.size() == region_boxes(lo, hi).size());
    for (const auto& s : zero.strips) CHECK(s.length() == 1);
    StripConfig full = labelling_to_config(t, Labelling{{1, 1, 1}});
    CHECK(full.strips.size() == 2);
    int longest = 0;
    for (const auto& s : full.strips) longest = std::max(longest, s.length());
    CHECK(longest == 7);
    CHECK(satisfies_rule_I(full));
}

TEST_CASE("bijection onto rule I configurations with weights") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto ps = all_paths(n, k);
            for (const auto& lo : ps)
                for (const auto& hi : ps) {
                    if (!pointwise_leq(lo, hi)) continue;
                    CapTree t = build_tree(lo, hi);
                    const int boxes = ferrers_box_count(lo, hi);
                    auto labs = enumerate_labellings(t);
                    auto confs = rule_configs(lo, hi, Rule::I);
                    CHECK(labs.size() == confs.size());
                    std::set<std::vector<DyckStrip>> images;
                    for (const auto& nu : labs) {
                        StripConfig c = labelling_to_config(t, nu);
                        CHECK(satisfies_rule_I(c));
                        // weight identity: boxes = strips + 2 * label sum
                        CHECK(boxes ==
                              static_cast<int>(c.strips.size()) + 2 * nu.sum());
                        // round trip through the inverse decomposition
                        CHECK(config_to_labelling(t, c) == nu);
                        images.insert(c.strips);
                    }
                    CHECK(images.size() == labs.size());  // injective
                    std::set<std::vector<DyckStrip>> target;
                    for (auto& c : confs) {
                        std::sort(c.strips.begin(), c.strips.end());
                        target.insert(c.strips);
                    }
                    CHECK(images == target);  // surjective
                }
        }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build_tree(Path::parse("+--+"), Path::parse("-++-")),
                    std::invalid_argument);
    CapTree t = build_tree(Path::parse("-+-+"), Path::parse("++--"));
    CHECK_THROWS_AS(labelling_to_config(t, Labelling{{0, 0, 0}}), std::invalid_argument);
}
