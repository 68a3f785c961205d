#include "kl/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly: coefficient overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("LaurentPoly: coefficient overflow in multiplication");
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::insert_term(int exponent, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto [e, c] : o.terms_) {
        if (c == INT64_MIN) throw std::overflow_error("LaurentPoly: coefficient overflow in negation");
        r.insert_term(e, -c);
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_)
            r.insert_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly{} - *this; }

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::negate_variable() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) {
        if ((e % 2) != 0) {
            if (c == INT64_MIN) throw std::overflow_error("LaurentPoly: coefficient overflow in negation");
            r.terms_[e] = -c;
        } else {
            r.terms_[e] = c;
        }
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::uint64_t mag = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (auto [e, c] : terms_) j[std::to_string(e)] = c;
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.insert_term(std::stoi(it.key()), it.value().get<std::int64_t>());
    return p;
}

}  // namespace kl
