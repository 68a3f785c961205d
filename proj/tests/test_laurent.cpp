#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "kl/laurent.hpp"

using kl::LaurentPoly;

namespace {
LaurentPoly parse_terms(std::initializer_list<std::pair<int, std::int64_t>> l) {
    LaurentPoly p;
    for (auto [e, c] : l) p += LaurentPoly::monomial(e, c);
    return p;
}
}  // namespace

TEST_CASE("addition") {
    CHECK(LaurentPoly::t(-1) + LaurentPoly::t(-1) == LaurentPoly::monomial(-1, 2));
    LaurentPoly p = parse_terms({{-3, 1}, {2, 5}});
    CHECK(p + LaurentPoly::zero() == p);
    CHECK((LaurentPoly::t(1) - LaurentPoly::t(-1)) + LaurentPoly::t(-1) == LaurentPoly::t(1));
}

TEST_CASE("multiplication") {
    LaurentPoly a = LaurentPoly::t(1) - LaurentPoly::t(-1);
    LaurentPoly b = LaurentPoly::t(1) + LaurentPoly::t(-1);
    CHECK(a * b == LaurentPoly::t(2) - LaurentPoly::t(-2));
    CHECK(LaurentPoly::t(-3) * LaurentPoly::t(2) == LaurentPoly::t(-1));
    LaurentPoly p = parse_terms({{-4, 7}, {0, -2}, {3, 1}});
    CHECK(p * LaurentPoly::one() == p);
    CHECK(p * LaurentPoly::zero() == LaurentPoly::zero());
}

TEST_CASE("bar negates exponents") {
    CHECK(LaurentPoly::t(1).bar() == LaurentPoly::t(-1));
    CHECK(parse_terms({{-3, 1}, {-1, 1}}).bar() == parse_terms({{1, 1}, {3, 1}}));
    CHECK(LaurentPoly::one().bar() == LaurentPoly::one());
}

TEST_CASE("negate_variable flips odd-exponent signs") {
    CHECK(LaurentPoly::t(-1).negate_variable() == -LaurentPoly::t(-1));
    CHECK(LaurentPoly::t(-2).negate_variable() == LaurentPoly::t(-2));
    CHECK(parse_terms({{-3, 1}, {-1, 1}}).negate_variable() == parse_terms({{-3, -1}, {-1, -1}}));
}

TEST_CASE("involutions and homomorphisms") {
    auto polys = {parse_terms({{-5, 3}, {-2, -7}, {0, 1}, {4, 2}}),
                  parse_terms({{-1, 1}, {1, -1}}), LaurentPoly::zero(), LaurentPoly::one()};
    for (const auto& p : polys) {
        CHECK(p.bar().bar() == p);
        CHECK(p.negate_variable().negate_variable() == p);
        for (const auto& q : polys) {
            CHECK((p + q).bar() == p.bar() + q.bar());
            CHECK((p * q).bar() == p.bar() * q.bar());
            CHECK((p + q).negate_variable() == p.negate_variable() + q.negate_variable());
            CHECK((p * q).negate_variable() == p.negate_variable() * q.negate_variable());
        }
    }
}

TEST_CASE("text rendering ascending exponents") {
    CHECK(parse_terms({{-3, 1}, {-1, 1}}).to_string() == "t^-3 + t^-1");
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(LaurentPoly::one().to_string() == "1");
    CHECK(parse_terms({{-6, 2}, {-8, 1}}).to_string() == "t^-8 + 2t^-6");
    CHECK(parse_terms({{1, -1}, {-1, 1}}).to_string() == "t^-1 - t");
}

TEST_CASE("json round trip") {
    LaurentPoly p = parse_terms({{-3, 1}, {-1, 1}});
    auto j = p.to_json();
    CHECK(j["-3"] == 1);
    CHECK(j["-1"] == 1);
    CHECK(LaurentPoly::from_json(j) == p);
    CHECK(LaurentPoly::from_json(LaurentPoly::zero().to_json()) == LaurentPoly::zero());
}

TEST_CASE("overflow throws instead of wrapping") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    LaurentPoly p = LaurentPoly::monomial(0, big);
    CHECK_THROWS_AS((void)(p + p), std::overflow_error);
    CHECK_THROWS_AS((void)(p * LaurentPoly::monomial(0, 2)), std::overflow_error);
    CHECK_THROWS_AS((void)(-LaurentPoly::monomial(0, std::numeric_limits<std::int64_t>::min())),
                    std::overflow_error);
}
