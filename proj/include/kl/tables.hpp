#pragma once

#include <string>
#include <vector>

#include "kl/combinatorics.hpp"
#include "kl/laurent.hpp"

namespace kl {

enum class Method { rule1, rule2, lstree, hecke };

Method method_from_string(const std::string& s);
std::string method_name(Method m);
/// Methods applicable to a sign: rule1/lstree/hecke for '+', rule2/hecke for '-'.
bool method_applies(Method m, Conv conv);

/// Full matrix of P^eps over P_{N,K}; rows alpha and columns beta run in
/// the module order (ascending coset length).
struct PolyTable {
    int n = 0;
    int k = 0;
    Conv conv = Conv::minus;
    Method method = Method::hecke;
    std::vector<Path> paths;
    std::vector<std::vector<LaurentPoly>> p;  // p[alpha][beta]
};

/// Single entry by any method; pure for rule1/rule2/lstree.
LaurentPoly poly_by_method(const Path& alpha, const Path& beta, Conv conv, Method m);

PolyTable build_table_serial(int n, int k, Conv conv, Method m);
/// Same values, OpenMP worker pool over (alpha, beta) cells; falls back
/// to the serial loop when OpenMP is unavailable.
PolyTable build_table_parallel(int n, int k, Conv conv, Method m);

/// Blank cell = order violation; explicit "0" otherwise.
std::string render_tsv(const PolyTable& t);
std::string render_latex(const PolyTable& t);
nlohmann::json table_json(const PolyTable& t);

/// sum_alpha (-1)^{|alpha|+|beta|} P^-_{alpha,beta} P^+_{alpha,gamma} = delta_{beta,gamma}.
bool verify_duality(int n, int k);
/// Rule I / Rule II matrix inversion over P_{N,K}.
bool verify_inversion_suite(int n, int k);
/// rule1 = lstree = hecke for P^+ and rule2 = hecke = factorized product
/// for P^-, on every pair.
bool verify_crossmethod(int n, int k);
/// Full-group bridge identities (delegates to the S_N oracle).
bool verify_bridge(int n, int k);
/// Full-group inversion formulae and conjugation invariance.
bool verify_fullduality(int n);

}  // namespace kl
