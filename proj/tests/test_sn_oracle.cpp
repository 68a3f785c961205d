#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "kl/sn_oracle.hpp"

using namespace kl;

TEST_CASE("bruhat order") {
    Permutation id = Permutation::identity(3);
    Permutation s1({2, 1, 3}), s2({1, 3, 2}), w0({3, 2, 1});
    CHECK(bruhat_leq(id, s1));
    CHECK(bruhat_leq(id, w0));
    CHECK(bruhat_leq(s1, w0));
    CHECK(!bruhat_leq(s1, s2));
    CHECK(!bruhat_leq(s2, s1));
    CHECK(bruhat_leq(s2, s2));
    CHECK(!bruhat_leq(w0, s1));
    // Linear extension: the oracle's element order never inverts Bruhat.
    SnOracle o(4);
    const auto& els = o.elements();
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = i + 1; j < els.size(); ++j)
            CHECK(!(bruhat_leq(els[j], els[i]) && els[i] != els[j]));
}

TEST_CASE("standard basis multiplication") {
    Permutation id = Permutation::identity(3);
    Permutation s1({2, 1, 3});
    HeckeElement e = HeckeElement::basis(id);
    HeckeElement t1 = multiply_by_generator(1, e);
    CHECK(t1 == HeckeElement::basis(s1));
    // quadratic relation T_i^2 = (t - t^{-1}) T_i + 1
    LaurentPoly tm = LaurentPoly::t(1) - LaurentPoly::t(-1);
    CHECK(multiply_by_generator(1, t1) == t1.scaled(tm) + e);
    CHECK(multiply_by_generator_inverse(1, t1) == e);
    // braid relation on the standard basis
    auto lhs = multiply_by_generator(
        1, multiply_by_generator(2, multiply_by_generator(1, e)));
    auto rhs = multiply_by_generator(
        2, multiply_by_generator(1, multiply_by_generator(2, e)));
    CHECK(lhs == rhs);
}

TEST_CASE("reduced words") {
    CHECK(reduced_word(Permutation::identity(4)).empty());
    CHECK(reduced_word(Permutation({2, 1, 3})) == std::vector<int>{1});
    Permutation w0 = longest_element(4);
    CHECK(w0 == Permutation({4, 3, 2, 1}));
    CHECK(static_cast<int>(reduced_word(w0).size()) == 6);
    SnOracle o5(5);
    for (const auto& w : o5.elements()) {
        auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == w.length());
        Permutation acc = Permutation::identity(5);
        for (int i : word) acc = acc.swap_positions(i);
        CHECK(acc == w);
    }
}

TEST_CASE("full KL basis") {
    SnOracle o(3);
    Permutation id = Permutation::identity(3);
    Permutation s1({2, 1, 3});
    CHECK(o.kl_basis_full(id) == HeckeElement::basis(id));
    HeckeElement c1 = HeckeElement::basis(s1) +
                      HeckeElement::basis(id).scaled(LaurentPoly::t(-1));
    CHECK(o.kl_basis_full(s1) == c1);
    // In S_3 every polynomial is 0 or 1 (times the normalizing power),
    // nonzero exactly on Bruhat-comparable pairs.
    for (const auto& v : o.elements())
        for (const auto& w : o.elements()) {
            LaurentPoly p = o.kl_poly(v, w);
            if (bruhat_leq(v, w))
                CHECK(p == LaurentPoly::t(v.length() - w.length()));
            else
                CHECK(p == LaurentPoly::zero());
        }
}

TEST_CASE("bar involution and degree bounds") {
    SnOracle o(4);
    for (const auto& v : o.elements()) {
        CHECK(o.bar(o.bar_basis(v)) == HeckeElement::basis(v));
        const HeckeElement& c = o.kl_basis_full(v);
        CHECK(o.bar(c) == c);
        CHECK(c.coeff(v) == LaurentPoly::one());
        for (const auto& [u, p] : c.terms) {
            if (u == v) continue;
            CHECK(bruhat_leq(u, v));
            for (auto [e, coef] : p.terms()) {
                CHECK(e < 0);
                CHECK(e >= -(v.length() - u.length()));
            }
        }
    }
}

TEST_CASE("projection carries C_w to the module canonical basis") {
    // Minus: the shortest representative projects exactly. Plus: the
    // longest representative projects onto C^+ times the balanced
    // Poincare polynomial of the block subgroup S_k x S_{n-k}.
    auto balanced_factorial = [](int m) {
        LaurentPoly f = LaurentPoly::one();
        for (int j = 2; j <= m; ++j) {
            LaurentPoly bracket;
            for (int e = 1 - j; e <= j - 1; e += 2) bracket += LaurentPoly::t(e);
            f *= bracket;
        }
        return f;
    };
    for (int n : {3, 4})
        for (int k = 0; k <= n; ++k) {
            SnOracle o(n);
            HeckeModule hm(n, k, Conv::minus), hp(n, k, Conv::plus);
            LaurentPoly fac = balanced_factorial(k) * balanced_factorial(n - k);
            for (const auto& b : hm.paths()) {
                Permutation wm = grassmannian(b.to_binary(Conv::minus));
                CHECK(project_to_module(o.kl_basis_full(wm), k, Conv::minus) ==
                      hm.kl_basis_minus(b));
                Permutation wp = longest_representative(b.to_binary(Conv::plus));
                CHECK(project_to_module(o.kl_basis_full(wp), k, Conv::plus) ==
                      hp.kl_basis_plus(b).scaled(fac));
            }
        }
}

TEST_CASE("coset members") {
    auto cm = coset_members(Path::parse("--++"), Conv::minus);
    CHECK(cm.size() == 4);  // S_2 x S_2 below the representative
    for (const auto& w : cm) CHECK(bruhat_leq(grassmannian("1122"), w));
    // Cosets partition S_n.
    for (Conv eps : {Conv::minus, Conv::plus}) {
        std::set<Permutation> all;
        for (const auto& p : all_paths(4, 2))
            for (const auto& w : coset_members(p, eps)) CHECK(all.insert(w).second);
        CHECK(all.size() == 24);
    }
}

TEST_CASE("bridge identities") {
    CHECK(verify_parabolic_bridge(2, 1));
    CHECK(verify_parabolic_bridge(3, 1));
    CHECK(verify_parabolic_bridge(4, 2));
}

TEST_CASE("full duality identities") {
    CHECK(verify_full_duality(2));
    CHECK(verify_full_duality(3));
    CHECK(verify_full_duality(4));
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(SnOracle(7), std::invalid_argument);
    CHECK_THROWS_AS(verify_parabolic_bridge(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_full_duality(6), std::invalid_argument);
}
