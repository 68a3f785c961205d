#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace kl {

/// Integer-coefficient Laurent polynomial in one variable t.
///
/// Stored as a sorted exponent -> coefficient map with no zero
/// coefficients, so equal polynomials compare equal term-by-term.
/// All coefficient arithmetic is checked; overflow throws instead of
/// wrapping.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly t(int exponent = 1) { return monomial(exponent, 1); }
    static LaurentPoly monomial(int exponent, std::int64_t coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const = default;

    /// t -> t^{-1}.
    LaurentPoly bar() const;
    /// t -> -t.
    LaurentPoly negate_variable() const;

    /// Substitute t -> -t^{-1}; composition of bar and negate_variable.
    LaurentPoly bar_negate() const { return bar().negate_variable(); }

    /// Ascending exponents, e.g. "t^-3 + t^-1".
    std::string to_string() const;

    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    void insert_term(int exponent, std::int64_t coeff);

    std::map<int, std::int64_t> terms_;
};

}  // namespace kl
