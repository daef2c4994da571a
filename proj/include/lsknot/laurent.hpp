/*
   Copyright 2026 The lsknot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LSKNOT_LAURENT_HPP
#define LSKNOT_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsknot/errors.hpp"

namespace lsknot {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer-coefficient polynomial in t and t^-1 with exact arithmetic.
///
/// Storage is canonical: no zero coefficient is ever kept, so two equal
/// polynomials always have identical term maps. The zero polynomial has
/// empty support. Values are immutable once constructed.
class LaurentPoly {
public:
    using TermMap = std::map<int, Integer>;

    LaurentPoly() = default; // zero

    static LaurentPoly constant(Integer c) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(0, std::move(c));
        return p;
    }

    static LaurentPoly one() { return constant(1); }

    static LaurentPoly monomial(Integer coefficient, int exponent) {
        LaurentPoly p;
        if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
        return p;
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents
    /// accumulate and vanishing totals are dropped.
    static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms) {
        LaurentPoly p;
        for (const auto& [exponent, coefficient] : terms) p.add_term(exponent, coefficient);
        return p;
    }

    /// Parses the textual form produced by to_string, e.g. "t^6 - t^3 + 1"
    /// or "2t^-1 + 3". Throws parse_error on malformed input.
    static LaurentPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }

    int min_deg() const {
        if (terms_.empty()) throw std::logic_error("min_deg: zero polynomial has no degree");
        return terms_.begin()->first;
    }

    int max_deg() const {
        if (terms_.empty()) throw std::logic_error("max_deg: zero polynomial has no degree");
        return terms_.rbegin()->first;
    }

    Integer coeff(int exponent) const {
        const auto it = terms_.find(exponent);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }

    /// Multiplication by the unit t^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly out;
        for (const auto& [exponent, coefficient] : terms_)
            out.terms_.emplace(exponent + k, coefficient);
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [exponent, coefficient] : terms_)
            out.terms_.emplace(exponent, -coefficient);
        return out;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [exponent, coefficient] : b.terms_) out.add_term(exponent, coefficient);
        return out;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [exponent, coefficient] : b.terms_) out.add_term(exponent, -coefficient);
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const int amin = a.min_deg(), bmin = b.min_deg();
        const std::size_t span =
            std::size_t(a.max_deg() - amin) + std::size_t(b.max_deg() - bmin) + 1;
        std::vector<Integer> dense(span);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                dense[std::size_t(ea - amin) + std::size_t(eb - bmin)] += ca * cb;
        return from_dense(dense, amin + bmin);
    }

    bool operator==(const LaurentPoly&) const = default;

private:
    TermMap terms_;

    void add_term(int exponent, const Integer& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Coefficients of t^offset .. t^(offset+n-1).
    static LaurentPoly from_dense(const std::vector<Integer>& dense, int offset) {
        LaurentPoly out;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0) out.terms_.emplace(offset + int(i), dense[i]);
        return out;
    }

    std::vector<Integer> dense_coeffs() const { // nonzero polynomials only
        std::vector<Integer> out(std::size_t(max_deg() - min_deg()) + 1);
        const int lo = min_deg();
        for (const auto& [exponent, coefficient] : terms_)
            out[std::size_t(exponent - lo)] = coefficient;
        return out;
    }

    friend std::optional<LaurentPoly> divide_exact(const LaurentPoly&, const LaurentPoly&);
};

/// Exact division in Z[t, t^-1]: returns q with q * den == num when an
/// integer-coefficient quotient exists, and nullopt otherwise. Long division
/// from the top degree; any non-exact coefficient step or nonzero remainder
/// rejects. The result is re-multiplied against den before being returned.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (num.is_zero()) return LaurentPoly{};

    const int shift = num.min_deg() - den.min_deg();
    std::vector<Integer> remainder = num.dense_coeffs();
    const std::vector<Integer> divisor = den.dense_coeffs();
    if (remainder.size() < divisor.size()) return std::nullopt;

    const Integer& lead = divisor.back();
    std::vector<Integer> quotient(remainder.size() - divisor.size() + 1);
    for (std::size_t k = quotient.size(); k-- > 0;) {
        Integer& top = remainder[k + divisor.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Integer c = top / lead;
        for (std::size_t j = 0; j + 1 < divisor.size(); ++j)
            remainder[k + j] -= c * divisor[j];
        top = 0;
        quotient[k] = std::move(c);
    }
    for (const auto& c : remainder)
        if (c != 0) return std::nullopt;

    LaurentPoly result = LaurentPoly::from_dense(quotient, shift);
    if (result * den != num)
        throw std::logic_error("divide_exact: re-multiplication check failed");
    return result;
}

namespace detail {
inline Integer integer_pow(const Integer& base, int exponent) {
    return boost::multiprecision::pow(base, unsigned(exponent));
}
} // namespace detail

/// Exact evaluation at an integer point. Negative exponents produce exact
/// rationals; evaluation at 0 is rejected when negative exponents are present.
inline Rational evaluate(const LaurentPoly& p, const Integer& x) {
    if (x == 0) {
        if (!p.is_zero() && p.min_deg() < 0)
            throw std::domain_error("evaluate: t = 0 with negative exponents present");
        return Rational(p.coeff(0));
    }
    Rational total = 0;
    for (const auto& [exponent, coefficient] : p.terms()) {
        if (exponent >= 0) {
            total += Rational(coefficient * detail::integer_pow(x, exponent));
        } else {
            // The two-argument constructor rejects negative denominators.
            const Integer denom = detail::integer_pow(x, -exponent);
            total += denom < 0 ? Rational(-coefficient, -denom) : Rational(coefficient, denom);
        }
    }
    return total;
}

/// True iff the coefficient sequence read from min_deg to max_deg equals its
/// own reversal, with strict equality (not up to sign).
inline bool is_palindromic(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
    const int lo = p.min_deg(), hi = p.max_deg();
    for (int i = 0; lo + i < hi - i; ++i)
        if (p.coeff(lo + i) != p.coeff(hi - i)) return false;
    return true;
}

inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exponent, coefficient] = *it;
        const bool negative = coefficient < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer magnitude = boost::multiprecision::abs(coefficient);
        if (exponent == 0) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str();
            out += 't';
            if (exponent != 1) {
                out += '^';
                out += std::to_string(exponent);
            }
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << to_string(p);
}

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto at_end = [&] { return pos >= text.size(); };
    const auto peek = [&] { return text[pos]; };

    const auto parse_digits = [&](const char* what) -> std::string_view {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error(std::string("expected ") + what, start);
        return text.substr(start, pos - start);
    };

    const auto parse_exponent = [&]() -> int {
        skip_ws();
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos;
            skip_ws();
        }
        const std::size_t start = pos;
        const std::string_view digits = parse_digits("exponent");
        long long value = 0;
        const auto [ptr, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || value > std::numeric_limits<int>::max() / 4)
            throw parse_error("exponent out of range", start);
        return negative ? -int(value) : int(value);
    };

    std::vector<std::pair<int, Integer>> terms;
    const auto parse_term = [&](int sign) {
        skip_ws();
        if (at_end()) throw parse_error("expected term", pos);
        Integer coefficient = 1;
        bool have_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = Integer(std::string(parse_digits("coefficient")));
            have_coefficient = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos;
                skip_ws();
                if (at_end() || peek() != 't')
                    throw parse_error("expected 't' after '*'", pos);
            }
        }
        int exponent = 0;
        if (!at_end() && peek() == 't') {
            ++pos;
            exponent = 1;
            if (!at_end() && peek() == '^') {
                ++pos;
                exponent = parse_exponent();
            }
        } else if (!have_coefficient) {
            throw parse_error("expected coefficient or 't'", pos);
        }
        terms.emplace_back(exponent, sign < 0 ? -coefficient : coefficient);
    };

    skip_ws();
    if (at_end()) throw parse_error("empty polynomial", pos);
    int sign = +1;
    if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : +1;
        ++pos;
    }
    parse_term(sign);
    while (true) {
        skip_ws();
        if (at_end()) break;
        if (peek() == '+') sign = +1;
        else if (peek() == '-') sign = -1;
        else throw parse_error("expected '+' or '-'", pos);
        ++pos;
        parse_term(sign);
    }
    return from_terms(terms);
}

} // namespace lsknot

#endif // LSKNOT_LAURENT_HPP
