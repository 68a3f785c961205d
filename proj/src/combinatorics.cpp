#include "kl/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kl {

Conv conv_from_char(char c) {
    if (c == '+') return Conv::plus;
    if (c == '-') return Conv::minus;
    throw std::invalid_argument("convention must be '+' or '-'");
}

Path::Path(std::vector<std::int8_t> steps) : steps_(std::move(steps)) {
    for (auto s : steps_)
        if (s != 1 && s != -1) throw std::invalid_argument("path steps must be +-1");
}

int Path::ups() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), std::int8_t{1}));
}

int Path::height(int i) const {
    if (i < 0 || i > size()) throw std::out_of_range("path height index");
    int h = 0;
    for (int j = 0; j < i; ++j) h += steps_[static_cast<size_t>(j)];
    return h;
}

std::string Path::to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (auto st : steps_) s.push_back(st > 0 ? '+' : '-');
    return s;
}

Path Path::parse(const std::string& s) {
    std::vector<std::int8_t> steps;
    steps.reserve(s.size());
    for (char c : s) {
        if (c == '+')
            steps.push_back(1);
        else if (c == '-')
            steps.push_back(-1);
        else
            throw std::invalid_argument("path string must consist of '+' and '-'");
    }
    return Path(std::move(steps));
}

std::string Path::to_binary(Conv eps) const {
    // Under '+' the letter 1 is an up step; under '-' it is a down step.
    std::string s;
    s.reserve(steps_.size());
    for (auto st : steps_) {
        bool up = st > 0;
        s.push_back((up == (eps == Conv::plus)) ? '1' : '2');
    }
    return s;
}

Path Path::from_binary(const std::string& s, Conv eps) {
    std::vector<std::int8_t> steps;
    steps.reserve(s.size());
    for (char c : s) {
        if (c != '1' && c != '2') throw std::invalid_argument("binary string must consist of '1' and '2'");
        bool one = c == '1';
        steps.push_back((one == (eps == Conv::plus)) ? 1 : -1);
    }
    return Path(std::move(steps));
}

std::vector<Path> all_paths(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("all_paths: need 0 <= k <= n");
    std::vector<Path> out;
    std::vector<std::int8_t> cur(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int pos, int ups_left) -> void {
        if (pos == n) {
            if (ups_left == 0) out.emplace_back(cur);
            return;
        }
        if (n - pos - 1 >= ups_left) {
            cur[static_cast<size_t>(pos)] = -1;
            self(self, pos + 1, ups_left);
        }
        if (ups_left > 0) {
            cur[static_cast<size_t>(pos)] = 1;
            self(self, pos + 1, ups_left - 1);
        }
    };
    rec(rec, 0, k);
    return out;
}

Path bottom_path(int n, int k) {
    std::vector<std::int8_t> s(static_cast<size_t>(n), -1);
    std::fill(s.end() - k, s.end(), std::int8_t{1});
    return Path(std::move(s));
}

Path top_path(int n, int k) {
    std::vector<std::int8_t> s(static_cast<size_t>(n), -1);
    std::fill(s.begin(), s.begin() + k, std::int8_t{1});
    return Path(std::move(s));
}

bool pointwise_leq(const Path& lower, const Path& upper) {
    if (lower.size() != upper.size()) throw std::invalid_argument("paths of different size");
    int hl = 0, hu = 0;
    for (int i = 1; i <= lower.size(); ++i) {
        hl += lower.step(i);
        hu += upper.step(i);
        if (hl > hu) return false;
    }
    return true;
}

bool path_leq(const Path& a, const Path& b, Conv eps) {
    return eps == Conv::minus ? pointwise_leq(a, b) : pointwise_leq(b, a);
}

int ferrers_box_count(const Path& lower, const Path& upper) {
    if (lower.size() != upper.size() || lower.ups() != upper.ups())
        throw std::invalid_argument("ferrers_box_count: paths not in the same P_{N,K}");
    int hl = 0, hu = 0, sum = 0;
    for (int i = 1; i <= lower.size(); ++i) {
        hl += lower.step(i);
        hu += upper.step(i);
        if (hl > hu) throw std::invalid_argument("ferrers_box_count: paths cross");
        sum += hu - hl;
    }
    return sum / 2;
}

int coset_length(const Path& p, Conv eps) {
    int n = p.size(), k = p.ups();
    return eps == Conv::minus ? ferrers_box_count(bottom_path(n, k), p)
                              : ferrers_box_count(p, top_path(n, k));
}

bool module_less(const Path& a, const Path& b, Conv eps) {
    int la = coset_length(a, eps), lb = coset_length(b, eps);
    if (la != lb) return la < lb;
    // First step toward the identity coset compares low.
    for (int i = 1; i <= a.size(); ++i) {
        if (a.step(i) != b.step(i))
            return eps == Conv::minus ? a.step(i) < b.step(i) : a.step(i) > b.step(i);
    }
    return false;
}

LinkPattern link_pattern(const Path& p) {
    LinkPattern lp;
    std::vector<int> open;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.step(i) > 0) {
            open.push_back(i);
        } else if (!open.empty()) {
            lp.pairings.emplace_back(open.back(), i);
            open.pop_back();
        } else {
            lp.unpaired.push_back(i);
        }
    }
    lp.unpaired.insert(lp.unpaired.end(), open.begin(), open.end());
    std::sort(lp.unpaired.begin(), lp.unpaired.end());
    std::sort(lp.pairings.begin(), lp.pairings.end());
    return lp;
}

nlohmann::json LinkPattern::to_json() const {
    nlohmann::json j;
    j["pairings"] = nlohmann::json::array();
    for (auto [i, k] : pairings) j["pairings"].push_back({i, k});
    j["unpaired"] = unpaired;
    return j;
}

Path pair_flip(const Path& p, std::pair<int, int> pairing) {
    auto lp = link_pattern(p);
    if (std::find(lp.pairings.begin(), lp.pairings.end(), pairing) == lp.pairings.end())
        throw std::invalid_argument("pair_flip: not a pairing of the path");
    auto steps = p.steps();
    std::swap(steps[static_cast<size_t>(pairing.first) - 1],
              steps[static_cast<size_t>(pairing.second) - 1]);
    return Path(std::move(steps));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("not a permutation of 1..N");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

int Permutation::length() const {
    int inv = 0;
    for (size_t i = 0; i < images_.size(); ++i)
        for (size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        v[static_cast<size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        v[i] = images_[static_cast<size_t>(o.images_[i]) - 1];
    return Permutation(std::move(v));
}

Permutation Permutation::swap_values(int i) const {
    std::vector<int> v = images_;
    for (auto& x : v) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return Permutation(std::move(v));
}

Permutation Permutation::swap_positions(int i) const {
    std::vector<int> v = images_;
    std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(i)]);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ",";
        os << images_[i];
    }
    os << ")";
    return os.str();
}

Permutation grassmannian(const std::string& binary) {
    std::vector<int> ones, twos;
    for (size_t i = 0; i < binary.size(); ++i) {
        if (binary[i] == '1')
            ones.push_back(static_cast<int>(i) + 1);
        else if (binary[i] == '2')
            twos.push_back(static_cast<int>(i) + 1);
        else
            throw std::invalid_argument("binary string must consist of '1' and '2'");
    }
    std::vector<int> v = ones;
    v.insert(v.end(), twos.begin(), twos.end());
    return Permutation(std::move(v));
}

Permutation longest_representative(const std::string& binary) {
    auto g = grassmannian(binary);
    auto v = g.images();
    size_t k = std::count(binary.begin(), binary.end(), '1');
    std::reverse(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    std::reverse(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    return Permutation(std::move(v));
}

Tableau rs_first_tableau(const Permutation& p) {
    Tableau t;
    for (int i = 1; i <= p.size(); ++i) {
        int x = p(i);
        for (size_t r = 0;; ++r) {
            if (r == t.rows.size()) {
                t.rows.push_back({x});
                break;
            }
            auto& row = t.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);  // bump
        }
    }
    return t;
}

}  // namespace kl
