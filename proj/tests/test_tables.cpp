#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "kl/tables.hpp"

using namespace kl;

namespace {

// "B" marks a cell blanked by an order violation; everything else is a
// polynomial given by its exponents.
LaurentPoly cell(const std::string& s) {
    if (s == "0") return LaurentPoly::zero();
    if (s == "1") return LaurentPoly::one();
    LaurentPoly p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        p += LaurentPoly::t(std::stoi(term.substr(2)));
        pos = next == std::string::npos ? s.size() : next + 1;
    }
    return p;
}

void check_against(const PolyTable& t, const std::vector<std::string>& rows,
                   const std::vector<std::vector<std::string>>& cells) {
    REQUIRE(t.paths.size() == rows.size());
    for (size_t a = 0; a < rows.size(); ++a)
        CHECK(t.paths[a].to_string() == rows[a]);
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < rows.size(); ++b) {
            bool comparable = path_leq(t.paths[a], t.paths[b], t.conv);
            if (cells[a][b] == "B") {
                CHECK(!comparable);
            } else {
                CHECK(comparable);  // explicit "0" cells are still comparable
                CHECK(t.p[a][b] == cell(cells[a][b]));
            }
        }
}

}  // namespace

TEST_CASE("N=4 K=2 minus table by every applicable method") {
    const std::vector<std::string> order = {"--++", "-+-+", "-++-",
                                            "+--+", "+-+-", "++--"};
    // upper triangle; lower cells are order violations or zero
    const std::vector<std::vector<std::string>> expect = {
        {"1", "t^-1", "0", "0", "0", "t^-2"},
        {"B", "1", "t^-1", "t^-1", "t^-2", "t^-1"},
        {"B", "B", "1", "B", "t^-1", "0"},
        {"B", "B", "B", "1", "t^-1", "0"},
        {"B", "B", "B", "B", "1", "t^-1"},
        {"B", "B", "B", "B", "B", "1"}};
    for (Method m : {Method::rule2, Method::hecke}) {
        REQUIRE(method_applies(m, Conv::minus));
        check_against(build_table_serial(4, 2, Conv::minus, m), order, expect);
    }
    CHECK(!method_applies(Method::rule1, Conv::minus));
    CHECK(!method_applies(Method::lstree, Conv::minus));
}

TEST_CASE("N=4 K=2 plus table by every applicable method") {
    const std::vector<std::string> order = {"++--", "+-+-", "+--+",
                                            "-++-", "-+-+", "--++"};
    const std::vector<std::vector<std::string>> expect = {
        {"1", "t^-1", "t^-2", "t^-2", "t^-3+t^-1", "t^-4"},
        {"B", "1", "t^-1", "t^-1", "t^-2", "t^-3"},
        {"B", "B", "1", "B", "t^-1", "t^-2"},
        {"B", "B", "B", "1", "t^-1", "t^-2"},
        {"B", "B", "B", "B", "1", "t^-1"},
        {"B", "B", "B", "B", "B", "1"}};
    for (Method m : {Method::rule1, Method::lstree, Method::hecke}) {
        REQUIRE(method_applies(m, Conv::plus));
        check_against(build_table_serial(4, 2, Conv::plus, m), order, expect);
    }
    CHECK(!method_applies(Method::rule2, Conv::plus));
}

TEST_CASE("parallel kernel matches the serial reference") {
    for (Conv conv : {Conv::minus, Conv::plus})
        for (Method m : {Method::rule1, Method::rule2, Method::lstree, Method::hecke}) {
            if (!method_applies(m, conv)) continue;
            for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
                PolyTable s = build_table_serial(n, k, conv, m);
                PolyTable p = build_table_parallel(n, k, conv, m);
                CHECK(s.paths == p.paths);
                CHECK(s.p == p.p);
            }
        }
}

TEST_CASE("method names round trip") {
    for (Method m : {Method::rule1, Method::rule2, Method::lstree, Method::hecke})
        CHECK(method_from_string(method_name(m)) == m);
    CHECK_THROWS_AS(method_from_string("nope"), std::invalid_argument);
}

TEST_CASE("verification suites") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(verify_duality(n, k));
            CHECK(verify_inversion_suite(n, k));
            CHECK(verify_crossmethod(n, k));
        }
    CHECK(verify_bridge(4, 2));
    CHECK(verify_fullduality(4));
}
