#pragma once

#include <map>
#include <vector>

#include "kl/combinatorics.hpp"
#include "kl/laurent.hpp"

namespace kl {

/// Finite formal linear combination of paths of a fixed P_{N,K} with
/// Laurent-polynomial coefficients; element of the module M^eps.
struct ModuleElement {
    Conv conv = Conv::minus;
    int n = 0;
    int k = 0;  // up steps
    std::map<Path, LaurentPoly> terms;

    static ModuleElement basis(const Path& p, Conv conv);

    void add_term(const Path& p, const LaurentPoly& c);
    LaurentPoly coeff(const Path& p) const;
    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement scaled(const LaurentPoly& c) const;
    bool operator==(const ModuleElement& o) const = default;

    nlohmann::json to_json() const;
};

/// Action of the generator T_i (1 <= i <= N-1) by the local two-step rules.
ModuleElement hecke_act(int i, const ModuleElement& v);
/// T_i^{-1} = T_i - (t - t^{-1}).
ModuleElement hecke_act_inverse(int i, const ModuleElement& v);

/// All pairing-flip images of beta with their flip counts d.
std::vector<std::pair<Path, int>> flip_set(const Path& beta);

/// The module M^eps over a fixed P_{N,K}: bar involution, both
/// Kazhdan-Lusztig basis constructions, and coefficient extraction.
/// Caches bar images of basis elements; not safe for concurrent mutation,
/// so verification loops use one instance per thread or build tables from
/// the precomputed path list.
class HeckeModule {
public:
    HeckeModule(int n, int k, Conv conv);

    Conv conv() const { return conv_; }
    int n() const { return n_; }
    int k() const { return k_; }
    /// Paths ordered by coset length (identity coset first), a linear
    /// extension of the coset order.
    const std::vector<Path>& paths() const { return paths_; }
    const Path& base_path() const { return paths_.front(); }
    int path_index(const Path& p) const;

    /// Generator word taking the base element to m_p, one generator per
    /// box, built by a left-to-right sweep.
    std::vector<int> word_to(const Path& p) const;

    ModuleElement bar_basis(const Path& p);
    ModuleElement bar(const ModuleElement& v);

    /// C^-_beta from the flip set (minus convention only).
    ModuleElement kl_basis_minus(const Path& beta) const;
    /// C^-_beta as the factorized product of (T_i + t^{-1}) over a
    /// reduced word (minus convention only).
    ModuleElement kl_basis_minus_factorized(const Path& beta) const;

    /// C^+_beta by unitriangular inversion of Q^{II,+}(-t^{-1})
    /// (plus convention only).
    ModuleElement kl_basis_plus(const Path& beta);
    /// C^eps_beta by the generic bar-invariance triangular solve; works
    /// for both conventions and serves as an independent route.
    ModuleElement kl_basis_bar_solve(const Path& beta);

    /// P^eps_{alpha,beta}: coefficient of m_alpha in C^eps_beta
    /// (flip route for minus, inversion route for plus).
    LaurentPoly parabolic_kl(const Path& alpha, const Path& beta);

private:
    void ensure_plus_table();

    int n_, k_;
    Conv conv_;
    std::vector<Path> paths_;
    std::map<Path, int> index_;
    std::map<Path, ModuleElement> bar_cache_;
    // Column beta of the inverted Q^{II,+}(-t^{-1}) matrix, i.e. P^+.
    std::vector<std::vector<LaurentPoly>> plus_table_;
    bool plus_table_ready_ = false;
};

}  // namespace kl
