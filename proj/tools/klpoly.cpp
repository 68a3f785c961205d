// Command-line front end: single polynomials, full tables, verification
// suites, representation conversions, and tree/configuration rendering.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kl/dyck.hpp"
#include "kl/linkage.hpp"
#include "kl/ls_tree.hpp"
#include "kl/sn_oracle.hpp"
#include "kl/tables.hpp"

using namespace kl;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Conv parse_sign(const std::string& s) {
    if (s == "+") return Conv::plus;
    if (s == "-") return Conv::minus;
    throw UsageError("sign must be '+' or '-'");
}

// Accepts either a sign string "+--+" or a binary string "2112" (read
// under the given convention).
Path parse_path_arg(const std::string& s, Conv conv) {
    bool digits = !s.empty() && s.find_first_not_of("12") == std::string::npos;
    bool signs = !s.empty() && s.find_first_not_of("+-") == std::string::npos;
    try {
        if (digits) return Path::from_binary(s, conv);
        if (signs) return Path::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("path argument must be a sign string or a 1/2 string: " + s);
}

struct Limits {
    std::map<Method, int> max_n = {{Method::rule1, 10},
                                   {Method::rule2, 12},
                                   {Method::lstree, 10},
                                   {Method::hecke, 12}};

    void load(const std::string& file) {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open config file: " + file);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                auto a = s.find_first_not_of(" \t");
                auto b = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            int n = 0;
            try {
                n = std::stoi(val);
            } catch (...) {
                throw UsageError("bad value in config file: " + line);
            }
            if (key == "limit")
                for (auto& [m, lim] : max_n) lim = n;
            else if (key.rfind("limit.", 0) == 0)
                max_n[method_from_string(key.substr(6))] = n;
            else
                throw UsageError("unknown config key: " + key);
        }
    }

    void check(int n, Method m) const {
        if (n > max_n.at(m))
            throw UsageError("N=" + std::to_string(n) + " exceeds the size limit " +
                             std::to_string(max_n.at(m)) + " for method " + method_name(m));
    }
};

std::vector<Method> methods_for(const std::string& spec, Conv conv) {
    if (spec != "all") {
        Method m = method_from_string(spec);
        if (!method_applies(m, conv))
            throw UsageError("method " + spec + " does not apply to sign " +
                             std::string(1, conv_char(conv)));
        return {m};
    }
    std::vector<Method> ms;
    for (Method m : {Method::rule1, Method::rule2, Method::lstree, Method::hecke})
        if (method_applies(m, conv)) ms.push_back(m);
    return ms;
}

int cmd_poly(const std::string& a_str, const std::string& b_str, const std::string& sign,
             const std::string& method, bool as_json, const Limits& lim) {
    Conv conv = parse_sign(sign);
    Path a = parse_path_arg(a_str, conv), b = parse_path_arg(b_str, conv);
    if (a.size() != b.size() || a.ups() != b.ups())
        throw UsageError("paths must share N and K");
    auto ms = methods_for(method, conv);
    for (Method m : ms) lim.check(a.size(), m);

    std::vector<std::pair<Method, LaurentPoly>> results;
    for (Method m : ms) results.emplace_back(m, poly_by_method(a, b, conv, m));
    bool match = true;
    for (const auto& [m, p] : results) match = match && p == results.front().second;

    if (as_json) {
        json j;
        j["alpha"] = a.to_string();
        j["beta"] = b.to_string();
        j["sign"] = sign;
        j["results"] = json::object();
        for (const auto& [m, p] : results) j["results"][method_name(m)] = p.to_json();
        if (ms.size() > 1) j["match"] = match;
        std::cout << j.dump() << "\n";
    } else if (ms.size() == 1) {
        std::cout << results.front().second.to_string() << "\n";
    } else {
        for (const auto& [m, p] : results)
            std::cout << method_name(m) << ": " << p.to_string() << "\n";
        std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    if (!path_leq(a, b, conv) && !as_json)
        std::cerr << "note: " << a.to_string() << " is not below " << b.to_string()
                  << " in the coset order; the polynomial is 0 by convention\n";
    return match ? 0 : 1;
}

int cmd_table(int n, int k, const std::string& sign, const std::string& method,
              const std::string& format, const Limits& lim) {
    Conv conv = parse_sign(sign);
    if (k < 0 || k > n) throw UsageError("K must satisfy 0 <= K <= N");
    Method m = method_from_string(method);
    if (!method_applies(m, conv))
        throw UsageError("method " + method + " does not apply to sign " + sign);
    lim.check(n, m);
    PolyTable t = build_table_parallel(n, k, conv, m);
    if (format == "tsv")
        std::cout << render_tsv(t);
    else if (format == "latex")
        std::cout << render_latex(t);
    else if (format == "json")
        std::cout << table_json(t).dump() << "\n";
    else
        throw UsageError("format must be json, tsv or latex");
    return 0;
}

int cmd_verify(const std::string& suite, int n, int k, bool as_json) {
    struct Check {
        std::string name;
        bool pass;
        double ms;
    };
    std::vector<Check> checks;
    auto run = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = fn();
        auto t1 = std::chrono::steady_clock::now();
        checks.push_back({name, ok, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    };
    bool all = suite == "all";
    if (k < 0 && suite != "fullduality") throw UsageError("suite requires N and K");
    if (k > n) throw UsageError("K must satisfy 0 <= K <= N");
    if (suite == "duality" || all) run("duality", [&] { return verify_duality(n, k); });
    if (suite == "inversion" || all)
        run("inversion", [&] { return verify_inversion_suite(n, k); });
    if (suite == "crossmethod" || all)
        run("crossmethod", [&] { return verify_crossmethod(n, k); });
    if (suite == "bridge" || (all && n <= 5))
        run("bridge", [&] { return verify_bridge(n, k); });
    if (suite == "fullduality" || (all && n <= 5))
        run("fullduality", [&] { return verify_fullduality(n); });
    if (checks.empty()) throw UsageError("unknown suite: " + suite);

    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    if (as_json) {
        json j;
        j["suite"] = suite;
        j["n"] = n;
        if (k >= 0) j["k"] = k;
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"ms", c.ms}});
        j["pass"] = pass;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : checks) {
            std::ostringstream ms;
            ms.precision(1);
            ms << std::fixed << c.ms;
            std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << ms.str()
                      << " ms)\n";
        }
    }
    return pass ? 0 : 1;
}

int cmd_biject(const std::string& input, const std::string& from, const std::string& to,
               const std::string& sign, bool as_json) {
    Conv conv = parse_sign(sign);
    Path p;
    if (from == "string" || from == "path")
        p = parse_path_arg(input, conv);
    else
        throw UsageError("source representation must be 'string' or 'path'");

    if (to == "string") {
        std::cout << p.to_binary(conv) << "\n";
    } else if (to == "path") {
        std::cout << p.to_string() << "\n";
    } else if (to == "linkpattern") {
        std::cout << link_pattern(p).to_json().dump() << "\n";
    } else if (to == "grassmannian") {
        Permutation g = grassmannian(p.to_binary(conv));
        std::cout << (as_json ? json(g.images()).dump() : g.to_string()) << "\n";
    } else if (to == "longest") {
        Permutation g = longest_representative(p.to_binary(conv));
        std::cout << (as_json ? json(g.images()).dump() : g.to_string()) << "\n";
    } else if (to == "tableau") {
        Tableau tab = rs_first_tableau(grassmannian(p.to_binary(conv)));
        if (as_json) {
            std::cout << json(tab.rows).dump() << "\n";
        } else {
            for (const auto& row : tab.rows) {
                for (size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? " " : "") << row[i];
                std::cout << "\n";
            }
        }
    } else {
        throw UsageError("unknown target representation: " + to);
    }
    return 0;
}

int cmd_tree(const std::string& lo_str, const std::string& hi_str, const std::string& sign,
             bool as_json) {
    Conv conv = parse_sign(sign);
    Path lo = parse_path_arg(lo_str, conv), hi = parse_path_arg(hi_str, conv);
    if (conv == Conv::plus) std::swap(lo, hi);  // plus order: second arg is below
    CapTree t;
    try {
        t = build_tree(lo, hi);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (as_json)
        std::cout << t.to_json().dump() << "\n";
    else
        std::cout << t.render_text();
    return 0;
}

int cmd_config_render(const std::string& lo_str, const std::string& hi_str,
                      const std::string& sign, int rule, bool as_json) {
    Conv conv = parse_sign(sign);
    Path lo = parse_path_arg(lo_str, conv), hi = parse_path_arg(hi_str, conv);
    if (conv == Conv::plus) std::swap(lo, hi);
    if (!pointwise_leq(lo, hi)) throw UsageError("paths are incomparable; empty region");
    if (rule != 1 && rule != 2) throw UsageError("rule must be 1 or 2");
    auto configs = rule_configs(lo, hi, rule == 1 ? Rule::I : Rule::II);
    if (as_json) {
        json j = json::array();
        for (const auto& c : configs) j.push_back(c.to_json());
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (size_t i = 0; i < configs.size(); ++i) {
        std::cout << "# configuration " << i + 1 << " (" << configs[i].strips.size()
                  << " strips)\n"
                  << configs[i].render_ascii();
    }
    std::cout << configs.size() << " configuration(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic Kazhdan-Lusztig polynomials of the symmetric group"};
    app.require_subcommand(1);

    std::string sign = "-", method = "hecke", format = "tsv", config_file;
    bool as_json = false;
    int limit = 0;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--limit", limit, "override the size limit for all methods");
    app.add_option("--config", config_file, "key=value file with size limits");

    auto* poly = app.add_subcommand("poly", "P^sign(alpha, beta) by one or all methods");
    std::string arg_a, arg_b;
    poly->add_option("alpha", arg_a, "row path (sign or 1/2 string)")->required();
    poly->add_option("beta", arg_b, "column path")->required();
    poly->add_option("--sign", sign, "convention: + or -");
    poly->add_option("--method", method, "rule1, rule2, lstree, hecke or all");

    auto* table = app.add_subcommand("table", "full matrix over P_{N,K}");
    int n = 0, k = 0;
    table->add_option("N", n, "path length")->required();
    table->add_option("K", k, "number of up steps")->required();
    table->add_option("--sign", sign, "convention: + or -");
    table->add_option("--method", method, "rule1, rule2, lstree or hecke");
    table->add_option("--format", format, "json, tsv or latex");

    auto* verify = app.add_subcommand("verify", "identity suites with pass/fail report");
    std::string suite;
    int vk = -1;
    verify->add_option("suite", suite,
                       "duality, inversion, crossmethod, bridge, fullduality or all")
        ->required();
    verify->add_option("N", n, "path length")->required();
    verify->add_option("K", vk, "number of up steps");

    auto* biject = app.add_subcommand("biject", "convert between representations");
    std::string from = "string", to;
    biject->add_option("input", arg_a, "value in the source representation")->required();
    biject->add_option("--from", from, "string or path");
    biject->add_option("--to", to,
                       "string, path, linkpattern, grassmannian, longest or tableau")
        ->required();
    biject->add_option("--sign", sign, "convention: + or -");

    auto* tree = app.add_subcommand("tree", "capacitated nesting tree of a path pair");
    tree->add_option("alpha", arg_a, "row path")->required();
    tree->add_option("beta", arg_b, "column path")->required();
    tree->add_option("--sign", sign, "convention: + or -");

    auto* render = app.add_subcommand("config-render", "Dyck-strip configurations");
    int rule = 1;
    render->add_option("alpha", arg_a, "row path")->required();
    render->add_option("beta", arg_b, "column path")->required();
    render->add_option("--sign", sign, "convention: + or -");
    render->add_option("--rule", rule, "1 or 2");

    // Global flags remain usable after the subcommand name.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Limits lim;
        if (!config_file.empty()) lim.load(config_file);
        if (limit > 0)
            for (auto& [m, mx] : lim.max_n) mx = limit;
        if (poly->parsed()) return cmd_poly(arg_a, arg_b, sign, method, as_json, lim);
        if (table->parsed()) return cmd_table(n, k, sign, method, format, lim);
        if (verify->parsed()) return cmd_verify(suite, n, vk, as_json);
        if (biject->parsed()) return cmd_biject(arg_a, from, to, sign, as_json);
        if (tree->parsed()) return cmd_tree(arg_a, arg_b, sign, as_json);
        if (render->parsed()) return cmd_config_render(arg_a, arg_b, sign, rule, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
