#include "kl/sn_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kl {

HeckeElement HeckeElement::basis(const Permutation& v) {
    HeckeElement h;
    h.n = v.size();
    h.terms[v] = LaurentPoly::one();
    return h;
}

void HeckeElement::add_term(const Permutation& v, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

LaurentPoly HeckeElement::coeff(const Permutation& v) const {
    auto it = terms.find(v);
    return it == terms.end() ? LaurentPoly::zero() : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [v, c] : o.terms) r.add_term(v, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [v, c] : o.terms) r.add_term(v, -c);
    return r;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
    HeckeElement r;
    r.n = n;
    for (const auto& [v, q] : terms) r.add_term(v, q * c);
    return r;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    int n = u.size();
    // r(i,j) = #{a <= i : u(a) <= j}; the identity maximizes every rank,
    // so u <= v iff u's ranks dominate v's.
    for (int j = 1; j < n; ++j) {
        int ru = 0, rv = 0;
        for (int i = 1; i < n; ++i) {
            ru += u(i) <= j;
            rv += v(i) <= j;
            if (ru < rv) return false;
        }
    }
    return true;
}

HeckeElement multiply_by_generator(int i, const HeckeElement& h) {
    const LaurentPoly tm = LaurentPoly::t(1) - LaurentPoly::t(-1);
    HeckeElement r;
    r.n = h.n;
    for (const auto& [v, c] : h.terms) {
        Permutation sv = v.swap_values(i);
        if (sv.length() > v.length()) {
            r.add_term(sv, c);
        } else {
            r.add_term(v, c * tm);
            r.add_term(sv, c);
        }
    }
    return r;
}

HeckeElement multiply_by_generator_inverse(int i, const HeckeElement& h) {
    const LaurentPoly tm = LaurentPoly::t(1) - LaurentPoly::t(-1);
    return multiply_by_generator(i, h) - h.scaled(tm);
}

std::vector<int> reduced_word(const Permutation& w) {
    Permutation u = w;
    std::vector<int> word;
    bool again = true;
    while (again) {
        again = false;
        for (int i = 1; i < u.size(); ++i)
            if (u(i) > u(i + 1)) {
                u = u.swap_positions(i);
                word.push_back(i);
                again = true;
            }
    }
    // u * s_{j_1} ... s_{j_l} = e, so w = s_{j_l} ... s_{j_1}.
    std::reverse(word.begin(), word.end());
    return word;
}

Permutation longest_element(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

SnOracle::SnOracle(int n) : n_(n) {
    if (n < 1 || n > 6) throw std::invalid_argument("SnOracle: size guard is 1 <= n <= 6");
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        elements_.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(elements_.begin(), elements_.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        return la != lb ? la < lb : a < b;
    });
    for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = static_cast<int>(i);
}

int SnOracle::index(const Permutation& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("SnOracle: element of a different S_N");
    return it->second;
}

HeckeElement SnOracle::bar_basis(const Permutation& v) {
    auto it = bar_cache_.find(v);
    if (it != bar_cache_.end()) return it->second;
    // bar(T_v) = T_{i_1}^{-1} ... T_{i_l}^{-1} for v = s_{i_1} ... s_{i_l}.
    auto word = reduced_word(v);
    HeckeElement h = HeckeElement::basis(Permutation::identity(n_));
    for (auto w = word.rbegin(); w != word.rend(); ++w) h = multiply_by_generator_inverse(*w, h);
    bar_cache_[v] = h;
    return h;
}

HeckeElement SnOracle::bar(const HeckeElement& h) {
    HeckeElement r;
    r.n = h.n;
    for (const auto& [v, c] : h.terms) {
        auto img = bar_basis(v).scaled(c.bar());
        for (const auto& [u, d] : img.terms) r.add_term(u, d);
    }
    return r;
}

const HeckeElement& SnOracle::kl_basis_full(const Permutation& w) {
    auto cached = basis_cache_.find(w);
    if (cached != basis_cache_.end()) return cached->second;

    HeckeElement e = HeckeElement::basis(w);
    HeckeElement diff = bar(e) - e;
    while (!diff.terms.empty()) {
        const Permutation* worst = nullptr;
        int worst_idx = -1;
        for (const auto& [v, c] : diff.terms) {
            int idx = index(v);
            if (idx > worst_idx) {
                worst_idx = idx;
                worst = &v;
            }
        }
        const Permutation vj = *worst;
        const LaurentPoly d = diff.coeff(vj);
        LaurentPoly corr;
        for (auto [exp, c] : d.terms()) {
            if (exp == 0 && c != 0)
                throw std::logic_error("kl_basis_full: constant term in defect");
            if (exp < 0) corr += LaurentPoly::monomial(exp, c);
        }
        if ((d - (corr - corr.bar())) != LaurentPoly::zero())
            throw std::logic_error("kl_basis_full: defect not antisymmetric");
        e.add_term(vj, corr);
        diff = diff + bar_basis(vj).scaled(corr.bar()) - HeckeElement::basis(vj).scaled(corr);
    }
    return basis_cache_.emplace(w, std::move(e)).first->second;
}

LaurentPoly SnOracle::kl_poly(const Permutation& v, const Permutation& w) {
    return kl_basis_full(w).coeff(v);
}

ModuleElement project_to_module(const HeckeElement& h, int k, Conv conv) {
    int n = h.n;
    const Path base = conv == Conv::minus ? bottom_path(n, k) : top_path(n, k);
    ModuleElement out;
    out.conv = conv;
    out.n = n;
    out.k = k;
    for (const auto& [v, c] : h.terms) {
        ModuleElement m = ModuleElement::basis(base, conv);
        auto word = reduced_word(v);
        for (auto w = word.rbegin(); w != word.rend(); ++w) m = hecke_act(*w, m);
        for (const auto& [p, q] : m.scaled(c).terms) out.add_term(p, q);
    }
    return out;
}

std::vector<Permutation> coset_members(const Path& p, Conv eps) {
    const std::string binary = p.to_binary(eps);
    const Permutation g = grassmannian(binary);
    int n = p.size();
    int k1 = static_cast<int>(std::count(binary.begin(), binary.end(), '1'));
    std::vector<int> b1(static_cast<size_t>(k1)), b2(static_cast<size_t>(n - k1));
    std::iota(b1.begin(), b1.end(), 1);
    std::iota(b2.begin(), b2.end(), k1 + 1);
    std::vector<Permutation> out;
    std::sort(b1.begin(), b1.end());
    do {
        auto saved2 = b2;
        std::sort(b2.begin(), b2.end());
        do {
            std::vector<int> sigma = b1;
            sigma.insert(sigma.end(), b2.begin(), b2.end());
            out.push_back(g.compose(Permutation(std::move(sigma))));
        } while (std::next_permutation(b2.begin(), b2.end()));
        b2 = saved2;
    } while (std::next_permutation(b1.begin(), b1.end()));
    return out;
}

bool verify_parabolic_bridge(int n, int k) {
    if (n > 5) throw std::invalid_argument("verify_parabolic_bridge: guard is n <= 5");
    SnOracle oracle(n);
    HeckeModule hm(n, k, Conv::minus), hp(n, k, Conv::plus);
    auto paths = all_paths(n, k);
    for (const auto& x : paths) {
        const Permutation vplus = longest_representative(x.to_binary(Conv::plus));
        const int lx = grassmannian(x.to_binary(Conv::minus)).length();
        auto members = coset_members(x, Conv::minus);
        for (const auto& y : paths) {
            // P^+_{x,y} = P_{v,w} with longest representatives.
            const Permutation wplus = longest_representative(y.to_binary(Conv::plus));
            if (oracle.kl_poly(vplus, wplus) != hp.parabolic_kl(x, y)) return false;
            // P^-_{x,y} = sum over the coset of x of (-t)^{|x|-|v|} P_{v,w},
            // w the shortest representative of y's coset.
            const Permutation wminus = grassmannian(y.to_binary(Conv::minus));
            LaurentPoly s;
            for (const auto& v : members) {
                LaurentPoly p = oracle.kl_poly(v, wminus);
                if (p.is_zero()) continue;
                int e = lx - v.length();
                s += p * LaurentPoly::monomial(e, (e % 2) ? -1 : 1);
            }
            if (s != hm.parabolic_kl(x, y)) return false;
        }
    }
    return true;
}

bool verify_full_duality(int n) {
    if (n > 5) throw std::invalid_argument("verify_full_duality: guard is n <= 5");
    SnOracle oracle(n);
    const auto& els = oracle.elements();
    size_t m = els.size();
    std::vector<std::vector<LaurentPoly>> P(m, std::vector<LaurentPoly>(m));
    std::vector<int> len(m);
    for (size_t w = 0; w < m; ++w) {
        len[w] = els[w].length();
        const HeckeElement& col = oracle.kl_basis_full(els[w]);
        for (const auto& [v, c] : col.terms) P[static_cast<size_t>(oracle.index(v))][w] = c;
    }
    const Permutation w0 = longest_element(n);
    std::vector<size_t> left_w0(m), conj_w0(m);
    for (size_t i = 0; i < m; ++i) {
        left_w0[i] = static_cast<size_t>(oracle.index(w0.compose(els[i])));
        conj_w0[i] = static_cast<size_t>(oracle.index(w0.compose(els[i]).compose(w0)));
    }
    // P_{w0 u w0, w0 v w0} = P_{u,v}.
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v)
            if (P[conj_w0[u]][conj_w0[v]] != P[u][v]) return false;
    // sum_w (-1)^{|v|+|w|} P_{u,w} P_{w0 v, w0 w} = delta_{u,v}
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            LaurentPoly s;
            for (size_t w = 0; w < m; ++w) {
                const LaurentPoly& a = P[u][w];
                const LaurentPoly& b = P[left_w0[v]][left_w0[w]];
                if (a.is_zero() || b.is_zero()) continue;
                LaurentPoly term = a * b;
                s += ((len[v] + len[w]) % 2) ? -term : term;
            }
            if (u == v ? !s.is_one() : !s.is_zero()) return false;
        }
    // sum_u (-1)^{|u|+|v|} P_{u,v} P_{w0 u, w0 w} = delta_{v,w}
    for (size_t v = 0; v < m; ++v)
        for (size_t w = 0; w < m; ++w) {
            LaurentPoly s;
            for (size_t u = 0; u < m; ++u) {
                const LaurentPoly& a = P[u][v];
                const LaurentPoly& b = P[left_w0[u]][left_w0[w]];
                if (a.is_zero() || b.is_zero()) continue;
                LaurentPoly term = a * b;
                s += ((len[u] + len[v]) % 2) ? -term : term;
            }
            if (v == w ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

}  // namespace kl
