#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace kl {

/// Sign convention for the binary-string <-> path identification and for
/// the induced coset order on paths.
enum class Conv : std::uint8_t { minus, plus };

inline char conv_char(Conv c) { return c == Conv::plus ? '+' : '-'; }
Conv conv_from_char(char c);

/// Lattice path from (0,0) to (N, 2K-N) with unit steps of slope +-1,
/// where K is the number of up steps. The geometric path is the canonical
/// coset index; binary strings are views parameterized by the convention.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<std::int8_t> steps);

    int size() const { return static_cast<int>(steps_.size()); }
    int ups() const;
    /// Partial sum of the first i steps, 0 <= i <= N.
    int height(int i) const;
    std::int8_t step(int i) const { return steps_.at(static_cast<size_t>(i) - 1); }  // 1-based
    const std::vector<std::int8_t>& steps() const { return steps_; }

    auto operator<=>(const Path&) const = default;

    /// Sign string, e.g. "+--+".
    std::string to_string() const;
    static Path parse(const std::string& s);

    /// Binary string under convention eps, e.g. "2112".
    std::string to_binary(Conv eps) const;
    static Path from_binary(const std::string& s, Conv eps);

private:
    std::vector<std::int8_t> steps_;
};

/// All paths with n steps, k of them up, in lexicographic step order.
std::vector<Path> all_paths(int n, int k);

/// Lowest path of P_{n,k}: all down steps first.
Path bottom_path(int n, int k);
/// Highest path of P_{n,k}: all up steps first.
Path top_path(int n, int k);

/// Pointwise height domination lower(i) <= upper(i).
bool pointwise_leq(const Path& lower, const Path& upper);

/// Coset (Bruhat) order on paths: pointwise domination, orientation
/// depending on the convention.
bool path_leq(const Path& a, const Path& b, Conv eps);

/// Number of unit boxes in the skew region between two comparable paths.
/// Throws std::invalid_argument if the paths cross.
int ferrers_box_count(const Path& lower, const Path& upper);

/// Coset length |x| of the path under the convention order: box count
/// against the identity-coset (extreme) path.
int coset_length(const Path& p, Conv eps);

/// Step order for module bases and table layouts: ascending coset length,
/// ties broken lexicographically on steps starting from the identity
/// coset's step direction.
bool module_less(const Path& a, const Path& b, Conv eps);

/// Noncrossing partial matching of 1..N from parenthesis-matching the
/// steps of a path (up = open, down = close).
struct LinkPattern {
    std::vector<std::pair<int, int>> pairings;  // (i, j), i < j, 1-based
    std::vector<int> unpaired;

    bool operator==(const LinkPattern&) const = default;
    nlohmann::json to_json() const;
};

LinkPattern link_pattern(const Path& p);

/// Swap the two steps of a matched pairing (lowering the path).
/// Throws if (i, j) is not a pairing of p.
Path pair_flip(const Path& p, std::pair<int, int> pairing);

/// Permutation of 1..N in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<size_t>(i) - 1); }  // 1-based
    const std::vector<int>& images() const { return images_; }

    int length() const;  // inversion count
    Permutation inverse() const;
    Permutation compose(const Permutation& o) const;  // this after o
    Permutation swap_values(int i) const;             // left mult by s_i
    Permutation swap_positions(int i) const;          // right mult by s_i

    auto operator<=>(const Permutation&) const = default;
    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// Grassmannian (one-descent) shortest coset representative of the
/// binary string's coset.
Permutation grassmannian(const std::string& binary);
/// Anti-Grassmannian longest representative of the same coset.
Permutation longest_representative(const std::string& binary);

/// Standard Young tableau as rows.
struct Tableau {
    std::vector<std::vector<int>> rows;
    bool operator==(const Tableau&) const = default;
};

/// Insertion (first) tableau of Robinson-Schensted row insertion.
Tableau rs_first_tableau(const Permutation& p);

}  // namespace kl
