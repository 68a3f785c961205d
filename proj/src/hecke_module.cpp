#include "kl/hecke_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace kl {

ModuleElement ModuleElement::basis(const Path& p, Conv conv) {
    ModuleElement e;
    e.conv = conv;
    e.n = p.size();
    e.k = p.ups();
    e.terms[p] = LaurentPoly::one();
    return e;
}

void ModuleElement::add_term(const Path& p, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

LaurentPoly ModuleElement::coeff(const Path& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? LaurentPoly::zero() : it->second;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    ModuleElement r = *this;
    for (const auto& [p, c] : o.terms) r.add_term(p, c);
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    ModuleElement r = *this;
    for (const auto& [p, c] : o.terms) r.add_term(p, -c);
    return r;
}

ModuleElement ModuleElement::scaled(const LaurentPoly& c) const {
    ModuleElement r;
    r.conv = conv;
    r.n = n;
    r.k = k;
    for (const auto& [p, q] : terms) r.add_term(p, q * c);
    return r;
}

nlohmann::json ModuleElement::to_json() const {
    nlohmann::json j;
    j["convention"] = std::string(1, conv_char(conv));
    j["terms"] = nlohmann::json::array();
    for (const auto& [p, c] : terms)
        j["terms"].push_back({{"path", p.to_string()}, {"poly", c.to_json()}});
    return j;
}

ModuleElement hecke_act(int i, const ModuleElement& v) {
    if (i < 1 || i >= v.n) throw std::out_of_range("hecke_act: generator index");
    const LaurentPoly tm = LaurentPoly::t(1) - LaurentPoly::t(-1);
    const LaurentPoly eigen = v.conv == Conv::plus ? LaurentPoly::t(1)
                                                   : -LaurentPoly::t(-1);
    ModuleElement r;
    r.conv = v.conv;
    r.n = v.n;
    r.k = v.k;
    for (const auto& [p, c] : v.terms) {
        auto a = p.step(i), b = p.step(i + 1);
        if (a == b) {
            r.add_term(p, c * eigen);
            continue;
        }
        auto steps = p.steps();
        std::swap(steps[static_cast<size_t>(i) - 1], steps[static_cast<size_t>(i)]);
        Path swapped(std::move(steps));
        // Ascent if s_i raises the coset length; that is the peak-to-valley
        // move for conv '+' and the valley-to-peak move for conv '-'.
        bool ascent = (v.conv == Conv::minus) ? (a < b) : (a > b);
        if (ascent) {
            r.add_term(swapped, c);
        } else {
            r.add_term(p, c * tm);
            r.add_term(swapped, c);
        }
    }
    return r;
}

ModuleElement hecke_act_inverse(int i, const ModuleElement& v) {
    const LaurentPoly tm = LaurentPoly::t(1) - LaurentPoly::t(-1);
    return hecke_act(i, v) - v.scaled(tm);
}

std::vector<std::pair<Path, int>> flip_set(const Path& beta) {
    auto lp = link_pattern(beta);
    const auto& pr = lp.pairings;
    std::vector<std::pair<Path, int>> out;
    size_t r = pr.size();
    for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
        auto steps = beta.steps();
        int d = 0;
        for (size_t b = 0; b < r; ++b) {
            if (mask & (size_t{1} << b)) {
                std::swap(steps[static_cast<size_t>(pr[b].first) - 1],
                          steps[static_cast<size_t>(pr[b].second) - 1]);
                ++d;
            }
        }
        out.emplace_back(Path(std::move(steps)), d);
    }
    return out;
}

HeckeModule::HeckeModule(int n, int k, Conv conv) : n_(n), k_(k), conv_(conv) {
    paths_ = all_paths(n, k);
    std::sort(paths_.begin(), paths_.end(),
              [&](const Path& a, const Path& b) { return module_less(a, b, conv_); });
    for (size_t i = 0; i < paths_.size(); ++i) index_[paths_[i]] = static_cast<int>(i);
}

int HeckeModule::path_index(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("path not in this P_{N,K}");
    return it->second;
}

std::vector<int> HeckeModule::word_to(const Path& p) const {
    path_index(p);
    std::vector<int> word;
    Path cur = base_path();
    while (!(cur == p)) {
        bool progressed = false;
        for (int i = 1; i < n_; ++i) {
            bool box_move = conv_ == Conv::minus
                                ? (cur.step(i) < cur.step(i + 1) && cur.height(i) + 2 <= p.height(i))
                                : (cur.step(i) > cur.step(i + 1) && cur.height(i) - 2 >= p.height(i));
            if (box_move) {
                auto steps = cur.steps();
                std::swap(steps[static_cast<size_t>(i) - 1], steps[static_cast<size_t>(i)]);
                cur = Path(std::move(steps));
                word.push_back(i);
                progressed = true;
            }
        }
        if (!progressed) throw std::logic_error("word_to: no progress");
    }
    return word;
}

ModuleElement HeckeModule::bar_basis(const Path& p) {
    auto it = bar_cache_.find(p);
    if (it != bar_cache_.end()) return it->second;
    ModuleElement v = ModuleElement::basis(base_path(), conv_);
    for (int i : word_to(p)) v = hecke_act_inverse(i, v);
    bar_cache_[p] = v;
    return v;
}

ModuleElement HeckeModule::bar(const ModuleElement& v) {
    ModuleElement r;
    r.conv = conv_;
    r.n = n_;
    r.k = k_;
    for (const auto& [p, c] : v.terms) {
        auto img = bar_basis(p).scaled(c.bar());
        for (const auto& [q, d] : img.terms) r.add_term(q, d);
    }
    return r;
}

ModuleElement HeckeModule::kl_basis_minus(const Path& beta) const {
    if (conv_ != Conv::minus) throw std::logic_error("kl_basis_minus needs the '-' convention");
    ModuleElement r;
    r.conv = conv_;
    r.n = n_;
    r.k = k_;
    for (const auto& [alpha, d] : flip_set(beta)) r.add_term(alpha, LaurentPoly::t(-d));
    return r;
}

ModuleElement HeckeModule::kl_basis_minus_factorized(const Path& beta) const {
    if (conv_ != Conv::minus) throw std::logic_error("kl_basis_minus needs the '-' convention");
    ModuleElement v = ModuleElement::basis(base_path(), conv_);
    for (int i : word_to(beta)) v = hecke_act(i, v) + v.scaled(LaurentPoly::t(-1));
    return v;
}

void HeckeModule::ensure_plus_table() {
    if (plus_table_ready_) return;
    if (conv_ != Conv::plus) throw std::logic_error("kl_basis_plus needs the '+' convention");
    size_t m = paths_.size();
    // Q^{II,+}_{alpha,beta}(-t^{-1}): monomial (-t)^{-d} when beta is a
    // pairing-flip image of alpha, else 0.
    std::vector<std::vector<LaurentPoly>> q(m, std::vector<LaurentPoly>(m));
    for (size_t a = 0; a < m; ++a) {
        for (const auto& [img, d] : flip_set(paths_[a])) {
            int b = path_index(img);
            q[a][static_cast<size_t>(b)] =
                LaurentPoly::monomial(-d, (d % 2) ? -1 : 1);
        }
    }
    // Invert the unitriangular matrix over the length-sorted path list.
    plus_table_.assign(m, std::vector<LaurentPoly>(m));
    for (size_t b = 0; b < m; ++b) {
        plus_table_[b][b] = LaurentPoly::one();
        // Solve sum_j q[a][j] inv[j][b] = delta_{a,b} for a < b in module order.
        for (size_t a = b; a-- > 0;) {
            LaurentPoly s;
            for (size_t j = a + 1; j <= b; ++j)
                if (!q[a][j].is_zero() && !plus_table_[j][b].is_zero())
                    s += q[a][j] * plus_table_[j][b];
            plus_table_[a][b] = -s;
        }
    }
    plus_table_ready_ = true;
}

ModuleElement HeckeModule::kl_basis_plus(const Path& beta) {
    ensure_plus_table();
    size_t b = static_cast<size_t>(path_index(beta));
    ModuleElement r;
    r.conv = conv_;
    r.n = n_;
    r.k = k_;
    for (size_t a = 0; a < paths_.size(); ++a) r.add_term(paths_[a], plus_table_[a][b]);
    return r;
}

ModuleElement HeckeModule::kl_basis_bar_solve(const Path& beta) {
    ModuleElement e = ModuleElement::basis(beta, conv_);
    for (;;) {
        ModuleElement diff = bar(e) - e;
        if (diff.terms.empty()) return e;
        // Highest remaining index in the linear extension.
        const Path* worst = nullptr;
        int worst_idx = -1;
        for (const auto& [p, c] : diff.terms) {
            int idx = path_index(p);
            if (idx > worst_idx) {
                worst_idx = idx;
                worst = &p;
            }
        }
        const LaurentPoly d = diff.coeff(*worst);
        // d is bar-antisymmetric; the correction is its negative-exponent part.
        LaurentPoly corr;
        for (auto [exp, c] : d.terms()) {
            if (exp == 0 && c != 0) throw std::logic_error("bar solve: constant term in defect");
            if (exp < 0) corr += LaurentPoly::monomial(exp, c);
        }
        if ((d - (corr - corr.bar())) != LaurentPoly::zero())
            throw std::logic_error("bar solve: defect not antisymmetric");
        e.add_term(*worst, corr);
    }
}

LaurentPoly HeckeModule::parabolic_kl(const Path& alpha, const Path& beta) {
    if (conv_ == Conv::minus) return kl_basis_minus(beta).coeff(alpha);
    ensure_plus_table();
    return plus_table_[static_cast<size_t>(path_index(alpha))]
                      [static_cast<size_t>(path_index(beta))];
}

}  // namespace kl
