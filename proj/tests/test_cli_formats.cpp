#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kl/dyck.hpp"
#include "kl/linkage.hpp"
#include "kl/ls_tree.hpp"
#include "kl/tables.hpp"

using namespace kl;
using nlohmann::json;

TEST_CASE("polynomial serialization") {
    LaurentPoly p = LaurentPoly::t(-3) + LaurentPoly::t(-1);
    CHECK(p.to_json() == json{{"-3", 1}, {"-1", 1}});
    CHECK(LaurentPoly::zero().to_json() == json::object());
    CHECK(LaurentPoly::from_json(p.to_json()) == p);
    CHECK(p.to_string() == "t^-3 + t^-1");
}

TEST_CASE("module element serialization") {
    ModuleElement m = ModuleElement::basis(Path::parse("+-+-"), Conv::minus)
                          .scaled(LaurentPoly::t(-1) + LaurentPoly::t(-3));
    json j = m.to_json();
    CHECK(j["convention"] == "-");
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["path"] == "+-+-");
    CHECK(j["terms"][0]["poly"] == json{{"-3", 1}, {"-1", 1}});
}

TEST_CASE("link pattern serialization") {
    json j = link_pattern(Path::parse("-++--")).to_json();
    CHECK(j["pairings"] == json::array({{2, 5}, {3, 4}}));
    CHECK(j["unpaired"] == json::array({1}));
}

TEST_CASE("linkage serialization") {
    json j = all_linkages(Path::from_binary("2211", Conv::plus))[0].to_json();
    CHECK(j["pairs"] == json::array({{4, 1}, {3, 2}}));
    CHECK(j["unpaired"] == json::array());
}

TEST_CASE("strip configuration serialization and rendering") {
    StripConfig c{Path::parse("-+-+"), Path::parse("++--"),
                  {DyckStrip{{{1, 0}, {2, 1}, {3, 0}}}}};
    json j = c.to_json();
    CHECK(j["lower"] == "-+-+");
    CHECK(j["upper"] == "++--");
    CHECK(j["strips"] == json::array({{{1, 0}, {2, 1}, {3, 0}}}));
    CHECK(!c.render_ascii().empty());
    CHECK(StripConfig{Path::parse("+-"), Path::parse("+-"), {}}.render_ascii() ==
          "(empty region)\n");
}

TEST_CASE("capacity tree serialization") {
    CapTree t = build_tree(Path::parse("-++-+--+"), Path::parse("++++----"));
    json j = t.to_json();
    REQUIRE(j["children"].size() == 1);
    const json& root = j["children"][0];
    CHECK(root["pairing"] == json::array({2, 7}));
    CHECK(!root.contains("capacity"));  // only leaves carry capacities
    REQUIRE(root["children"].size() == 2);
    CHECK(root["children"][0]["pairing"] == json::array({3, 4}));
    CHECK(root["children"][0]["capacity"] == 1);
    CHECK(root["children"][1]["pairing"] == json::array({5, 6}));
    CHECK(root["children"][1]["capacity"] == 1);
    CHECK(!t.render_text().empty());
}

TEST_CASE("table rendering") {
    PolyTable t = build_table_serial(4, 2, Conv::minus, Method::hecke);
    std::string tsv = render_tsv(t);
    CHECK(tsv.substr(0, tsv.find('\n')) ==
          "P^-\t--++\t-+-+\t-++-\t+--+\t+-+-\t++--");
    // First data row: the bottom path against everything.
    std::string row1 = tsv.substr(tsv.find('\n') + 1);
    row1 = row1.substr(0, row1.find('\n'));
    CHECK(row1 == "--++\t1\tt^-1\t0\t0\t0\tt^-2");
    // Incomparable pairs render as empty cells, zero renders as "0".
    std::string row3 = tsv;
    for (int i = 0; i < 3; ++i) row3 = row3.substr(row3.find('\n') + 1);
    row3 = row3.substr(0, row3.find('\n'));
    CHECK(row3 == "-++-\t\t\t1\t\tt^-1\t0");

    std::string latex = render_latex(t);
    CHECK(latex.find("\\begin{array}{c|cccccc}") != std::string::npos);
    CHECK(latex.find("{-}{-}{+}{+}") != std::string::npos);
    CHECK(latex.find("t^{-2}") != std::string::npos);
    CHECK(latex.find("\\end{array}") != std::string::npos);
    PolyTable tp = build_table_serial(4, 2, Conv::plus, Method::rule1);
    CHECK(render_latex(tp).find("t^{-3}+t^{-1}") != std::string::npos);
}

TEST_CASE("table serialization") {
    PolyTable t = build_table_serial(4, 2, Conv::minus, Method::rule2);
    json j = table_json(t);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["sign"] == "-");
    CHECK(j["method"] == "rule2");
    REQUIRE(j["paths"].size() == 6);
    CHECK(j["paths"][0] == "--++");
    CHECK(j["entries"][0][5] == json{{"-2", 1}});
    CHECK(j["entries"][1][0].is_null());  // order violation
    CHECK(j["entries"][0][2] == json::object());  // genuine zero
}
