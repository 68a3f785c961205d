#pragma once

#include <map>
#include <vector>

#include "kl/combinatorics.hpp"
#include "kl/hecke_module.hpp"
#include "kl/laurent.hpp"

namespace kl {

/// Element of the Hecke algebra of S_N in the standard basis (T_v).
struct HeckeElement {
    int n = 0;
    std::map<Permutation, LaurentPoly> terms;

    static HeckeElement basis(const Permutation& v);

    void add_term(const Permutation& v, const LaurentPoly& c);
    LaurentPoly coeff(const Permutation& v) const;
    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement scaled(const LaurentPoly& c) const;
    bool operator==(const HeckeElement& o) const = default;
};

/// Strong Bruhat order via the rank-matrix dominance criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Left multiplication T_i T_v: T_{s_i v} on an ascent, else
/// (t - t^{-1}) T_v + T_{s_i v}.
HeckeElement multiply_by_generator(int i, const HeckeElement& h);
/// Left multiplication by T_i^{-1} = T_i - (t - t^{-1}).
HeckeElement multiply_by_generator_inverse(int i, const HeckeElement& h);

/// Canonical reduced word (bubble sort): w = s_{i_1} ... s_{i_l}.
std::vector<int> reduced_word(const Permutation& w);

/// Longest element N ... 1.
Permutation longest_element(int n);

/// Full-group Kazhdan-Lusztig machinery at desk scale; hard size guards
/// because cost grows factorially. Caches bar images and basis columns.
class SnOracle {
public:
    /// Throws std::invalid_argument beyond the guard (n > 6).
    explicit SnOracle(int n);

    int n() const { return n_; }
    /// Elements sorted by (length, one-line), a linear extension of Bruhat.
    const std::vector<Permutation>& elements() const { return elements_; }
    int index(const Permutation& v) const;

    HeckeElement bar_basis(const Permutation& v);
    HeckeElement bar(const HeckeElement& h);

    /// C_w: bar-invariant, C_w = T_w + sum_{v<w} P_{v,w} T_v with
    /// P_{v,w} in t^{-1} Z[t^{-1}].
    const HeckeElement& kl_basis_full(const Permutation& w);
    LaurentPoly kl_poly(const Permutation& v, const Permutation& w);

private:
    int n_;
    std::vector<Permutation> elements_;
    std::map<Permutation, int> index_;
    std::map<Permutation, HeckeElement> bar_cache_;
    std::map<Permutation, HeckeElement> basis_cache_;
};

/// Image of h under the projection H -> M^eps sending T_v to the action
/// of T_v on the identity-coset basis element of P_{N,K}.
ModuleElement project_to_module(const HeckeElement& h, int k, Conv conv);

/// Coset members of the path's parabolic coset (shortest representative
/// times the block subgroup fixing the binary string's letter blocks).
std::vector<Permutation> coset_members(const Path& p, Conv eps);

/// Both identities of the full-to-parabolic bridge for every coset pair,
/// checked against the module's P^+ and P^-. Guard n <= 5.
bool verify_parabolic_bridge(int n, int k);

/// Both alternating-sum inversion formulae over S_n and the invariance
/// P_{w0 u w0, w0 v w0} = P_{u,v}. Guard n <= 5.
bool verify_full_duality(int n);

}  // namespace kl
