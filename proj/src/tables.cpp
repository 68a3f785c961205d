#include "kl/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kl/dyck.hpp"
#include "kl/hecke_module.hpp"
#include "kl/ls_tree.hpp"
#include "kl/sn_oracle.hpp"

namespace kl {

Method method_from_string(const std::string& s) {
    if (s == "rule1") return Method::rule1;
    if (s == "rule2") return Method::rule2;
    if (s == "lstree") return Method::lstree;
    if (s == "hecke") return Method::hecke;
    throw std::invalid_argument("unknown method: " + s);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::rule1: return "rule1";
        case Method::rule2: return "rule2";
        case Method::lstree: return "lstree";
        case Method::hecke: return "hecke";
    }
    throw std::logic_error("unreachable");
}

bool method_applies(Method m, Conv conv) {
    if (m == Method::hecke) return true;
    return conv == Conv::plus ? (m == Method::rule1 || m == Method::lstree)
                              : m == Method::rule2;
}

namespace {

// The geometric pair (lower, upper) indexing P^eps_{alpha,beta}: the
// coset order reverses between conventions, so '+' reads beta as the
// lower path.
std::pair<const Path&, const Path&> geom_pair(const Path& alpha, const Path& beta, Conv conv) {
    if (conv == Conv::minus) return {alpha, beta};
    return {beta, alpha};
}

}  // namespace

LaurentPoly poly_by_method(const Path& alpha, const Path& beta, Conv conv, Method m) {
    if (!method_applies(m, conv))
        throw std::invalid_argument(method_name(m) + " does not compute the " +
                                    std::string(1, conv_char(conv)) + " table");
    auto [lower, upper] = geom_pair(alpha, beta, conv);
    switch (m) {
        case Method::rule1: return q_rule_I(lower, upper);
        case Method::rule2: return q_rule_II(lower, upper);
        case Method::lstree: return ls_polynomial(lower, upper);
        case Method::hecke: {
            HeckeModule h(alpha.size(), alpha.ups(), conv);
            return h.parabolic_kl(alpha, beta);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

PolyTable build_table(int n, int k, Conv conv, Method m, bool parallel) {
    if (!method_applies(m, conv))
        throw std::invalid_argument(method_name(m) + " does not compute the " +
                                    std::string(1, conv_char(conv)) + " table");
    PolyTable t;
    t.n = n;
    t.k = k;
    t.conv = conv;
    t.method = m;
    t.paths = all_paths(n, k);
    std::sort(t.paths.begin(), t.paths.end(),
              [&](const Path& a, const Path& b) { return module_less(a, b, conv); });
    const auto sz = t.paths.size();
    t.p.assign(sz, std::vector<LaurentPoly>(sz));

    if (m == Method::hecke) {
        // The module owns shared caches; fill from its precomputed columns.
        HeckeModule h(n, k, conv);
        for (size_t b = 0; b < sz; ++b) {
            ModuleElement col = conv == Conv::minus ? h.kl_basis_minus(t.paths[b])
                                                    : h.kl_basis_plus(t.paths[b]);
            for (const auto& [alpha, c] : col.terms)
                t.p[static_cast<size_t>(h.path_index(alpha))][b] = c;
        }
        // The module order equals t.paths' order by construction.
        for (size_t i = 0; i < sz; ++i)
            if (!(h.paths()[i] == t.paths[i])) throw std::logic_error("table order mismatch");
        return t;
    }

    const auto cell = [&](size_t a, size_t b) {
        t.p[a][b] = poly_by_method(t.paths[a], t.paths[b], conv, m);
    };
    if (parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic)
        for (size_t a = 0; a < sz; ++a)
            for (size_t b = 0; b < sz; ++b) cell(a, b);
    } else {
        for (size_t a = 0; a < sz; ++a)
            for (size_t b = 0; b < sz; ++b) cell(a, b);
    }
    return t;
}

}  // namespace

PolyTable build_table_serial(int n, int k, Conv conv, Method m) {
    return build_table(n, k, conv, m, false);
}

PolyTable build_table_parallel(int n, int k, Conv conv, Method m) {
    return build_table(n, k, conv, m, true);
}

std::string render_tsv(const PolyTable& t) {
    std::ostringstream os;
    os << "P^" << conv_char(t.conv);
    for (const auto& b : t.paths) os << '\t' << b.to_string();
    os << '\n';
    for (size_t a = 0; a < t.paths.size(); ++a) {
        os << t.paths[a].to_string();
        for (size_t b = 0; b < t.paths.size(); ++b) {
            os << '\t';
            if (path_leq(t.paths[a], t.paths[b], t.conv)) os << t.p[a][b].to_string();
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : p.terms()) {
        if (!first) os << (c < 0 ? "" : "+");
        first = false;
        auto a = c < 0 ? -c : c;
        if (c < 0) os << "-";
        if (a != 1 || e == 0) os << a;
        if (e == 1)
            os << "t";
        else if (e != 0)
            os << "t^{" << e << "}";
    }
    return os.str();
}

std::string latex_path(const Path& p) {
    std::string s;
    for (char c : p.to_string()) s += (c == '+') ? "{+}" : "{-}";
    return s;
}

}  // namespace

std::string render_latex(const PolyTable& t) {
    std::ostringstream os;
    os << "\\begin{array}{c|" << std::string(t.paths.size(), 'c') << "}\n";
    os << "P^" << conv_char(t.conv);
    for (const auto& b : t.paths) os << " & " << latex_path(b);
    os << " \\\\\\hline\n";
    for (size_t a = 0; a < t.paths.size(); ++a) {
        os << latex_path(t.paths[a]);
        for (size_t b = 0; b < t.paths.size(); ++b) {
            os << " & ";
            if (path_leq(t.paths[a], t.paths[b], t.conv)) os << latex_poly(t.p[a][b]);
        }
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

nlohmann::json table_json(const PolyTable& t) {
    nlohmann::json j;
    j["n"] = t.n;
    j["k"] = t.k;
    j["sign"] = std::string(1, conv_char(t.conv));
    j["method"] = method_name(t.method);
    j["paths"] = nlohmann::json::array();
    for (const auto& p : t.paths) j["paths"].push_back(p.to_string());
    j["entries"] = nlohmann::json::array();
    for (size_t a = 0; a < t.paths.size(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t b = 0; b < t.paths.size(); ++b) {
            if (path_leq(t.paths[a], t.paths[b], t.conv))
                row.push_back(t.p[a][b].to_json());
            else
                row.push_back(nullptr);
        }
        j["entries"].push_back(row);
    }
    return j;
}

bool verify_duality(int n, int k) {
    PolyTable minus = build_table_serial(n, k, Conv::minus, Method::hecke);
    PolyTable plus = build_table_serial(n, k, Conv::plus, Method::hecke);
    const auto sz = minus.paths.size();
    // Align the plus table (reversed module order) to the minus order.
    std::vector<size_t> at(sz);
    for (size_t i = 0; i < sz; ++i) {
        auto it = std::find(plus.paths.begin(), plus.paths.end(), minus.paths[i]);
        if (it == plus.paths.end()) throw std::logic_error("path set mismatch");
        at[i] = static_cast<size_t>(it - plus.paths.begin());
    }
    std::vector<int> len(sz);
    for (size_t i = 0; i < sz; ++i) len[i] = coset_length(minus.paths[i], Conv::minus);
    bool ok = true;
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (size_t b = 0; b < sz; ++b)
        for (size_t g = 0; g < sz; ++g) {
            LaurentPoly s;
            for (size_t a = 0; a < sz; ++a) {
                const LaurentPoly& pm = minus.p[a][b];
                const LaurentPoly& pp = plus.p[at[a]][at[g]];
                if (pm.is_zero() || pp.is_zero()) continue;
                LaurentPoly term = pm * pp;
                s += ((len[a] + len[b]) % 2) ? -term : term;
            }
            if (b == g ? !s.is_one() : !s.is_zero()) {
#pragma omp atomic write
                ok = false;
            }
        }
    return ok;
}

bool verify_inversion_suite(int n, int k) { return verify_inversion(n, k); }

bool verify_crossmethod(int n, int k) {
    PolyTable hp = build_table_serial(n, k, Conv::plus, Method::hecke);
    PolyTable r1 = build_table_parallel(n, k, Conv::plus, Method::rule1);
    PolyTable ls = build_table_parallel(n, k, Conv::plus, Method::lstree);
    PolyTable hm = build_table_serial(n, k, Conv::minus, Method::hecke);
    PolyTable r2 = build_table_parallel(n, k, Conv::minus, Method::rule2);
    if (r1.p != hp.p || ls.p != hp.p || r2.p != hm.p) return false;
    // Factorized product route for C^-.
    HeckeModule h(n, k, Conv::minus);
    for (size_t b = 0; b < hm.paths.size(); ++b) {
        ModuleElement col = h.kl_basis_minus_factorized(hm.paths[b]);
        for (size_t a = 0; a < hm.paths.size(); ++a)
            if (col.coeff(hm.paths[a]) != hm.p[a][b]) return false;
    }
    return true;
}

bool verify_bridge(int n, int k) { return verify_parabolic_bridge(n, k); }

bool verify_fullduality(int n) { return verify_full_duality(n); }

}  // namespace kl
