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

#ifndef LSKNOT_KNOTSUM_HPP
#define LSKNOT_KNOTSUM_HPP

#include <cctype>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsknot/errors.hpp"

namespace lsknot {

/// One signed torus-knot summand. sign = -1 denotes the reverse of the
/// mirror, -T(p,q). Canonical form: 2 <= p < q, gcd(p,q) = 1; the
/// constructor swaps the parameters if given in the other order. T(1,n)
/// is the unknot and is rejected here, callers normalize it away.
class TorusKnotFactor {
public:
    TorusKnotFactor(int p, int q, int sign = +1) : p_(p), q_(q), sign_(sign) {
        if (sign_ != 1 && sign_ != -1)
            throw std::invalid_argument("torus knot sign must be +1 or -1");
        if (p_ <= 0 || q_ <= 0)
            throw std::invalid_argument("torus knot parameters must be positive");
        if (std::gcd(p_, q_) != 1)
            throw std::invalid_argument("torus knot parameters must be coprime");
        if (p_ > q_) std::swap(p_, q_);
        if (p_ == 1)
            throw std::invalid_argument("T(1,n) is the unknot, not a torus knot factor");
    }

    int p() const { return p_; }
    int q() const { return q_; }
    int sign() const { return sign_; }
    bool is_positive() const { return sign_ > 0; }

    TorusKnotFactor mirrored() const { return TorusKnotFactor(p_, q_, -sign_); }

    friend auto operator<=>(const TorusKnotFactor&, const TorusKnotFactor&) = default;

private:
    int p_;
    int q_;
    int sign_;
};

inline std::string to_string(const TorusKnotFactor& f) {
    std::string out = f.sign() < 0 ? "-T(" : "T(";
    out += std::to_string(f.p());
    out += ',';
    out += std::to_string(f.q());
    out += ')';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const TorusKnotFactor& f) {
    return os << to_string(f);
}

/// Reduced multiset of signed torus-knot factors, sorted by (p, q, sign).
/// Reduced means no pair {+T(p,q), -T(p,q)} remains: the constructor cancels
/// opposite-sign copies of the same knot, so equal sums always hold
/// identical factor sequences.
class KnotSum {
public:
    KnotSum() = default; // the unknot

    explicit KnotSum(std::vector<TorusKnotFactor> factors) {
        std::map<std::pair<int, int>, long> net;
        for (const auto& f : factors) net[{f.p(), f.q()}] += f.sign();
        for (const auto& [pq, count] : net) {
            const int sign = count < 0 ? -1 : +1;
            for (long i = 0; i < std::abs(count); ++i)
                factors_.emplace_back(pq.first, pq.second, sign);
        }
    }

    /// Grammar: sum := term ('#' term)* ; term := ['-'] 'T(' int ',' int ')' | 'U'.
    /// Whitespace is insignificant. T(q,p) is identified with T(p,q) and
    /// T(1,n) terms are dropped. Throws parse_error with the offset of the
    /// offending token; gcd(p,q) != 1 and nonpositive parameters are errors.
    static KnotSum parse(std::string_view text);

    const std::vector<TorusKnotFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    bool operator==(const KnotSum&) const = default;

private:
    std::vector<TorusKnotFactor> factors_;
};

inline std::string to_string(const KnotSum& k) {
    if (k.empty()) return "U";
    std::string out;
    for (const auto& f : k.factors()) {
        if (!out.empty()) out += " # ";
        out += to_string(f);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const KnotSum& k) {
    return os << to_string(k);
}

/// The reverse of the mirror of every factor; an involution.
inline KnotSum mirror(const KnotSum& k) {
    std::vector<TorusKnotFactor> flipped;
    flipped.reserve(k.size());
    for (const auto& f : k.factors()) flipped.push_back(f.mirrored());
    return KnotSum(std::move(flipped));
}

/// Multiset union followed by cancellation of {+T(p,q), -T(p,q)} pairs.
inline KnotSum connected_sum(const KnotSum& a, const KnotSum& b) {
    std::vector<TorusKnotFactor> all = a.factors();
    all.insert(all.end(), b.factors().begin(), b.factors().end());
    return KnotSum(std::move(all));
}

/// Partition of a reduced sum: positive factors, negative factors with
/// p >= 3, and negative two-strand factors.
struct Split {
    KnotSum k_plus;
    KnotSum k_minus_other;
    KnotSum k_minus_two;
};

inline Split split(const KnotSum& k) {
    std::vector<TorusKnotFactor> plus, minus_other, minus_two;
    for (const auto& f : k.factors()) {
        if (f.is_positive()) plus.push_back(f);
        else if (f.p() == 2) minus_two.push_back(f);
        else minus_other.push_back(f);
    }
    return Split{KnotSum(std::move(plus)), KnotSum(std::move(minus_other)),
                 KnotSum(std::move(minus_two))};
}

inline KnotSum KnotSum::parse(std::string_view text) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto at_end = [&] { return pos >= text.size(); };
    const auto peek = [&] { return text[pos]; };
    const auto expect = [&](char c) {
        if (at_end() || peek() != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    };

    const auto parse_int = [&]() -> long long {
        skip_ws();
        const std::size_t start = pos;
        if (!at_end() && peek() == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && text[start] == '-'))
            throw parse_error("expected integer", start);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc{})
            throw parse_error("integer out of range", start);
        return value;
    };

    std::vector<TorusKnotFactor> factors;
    skip_ws();
    if (at_end()) throw parse_error("empty expression", pos);
    while (true) {
        skip_ws();
        const std::size_t term_pos = pos;
        int sign = +1;
        if (!at_end() && peek() == '-') {
            sign = -1;
            ++pos;
            skip_ws();
        }
        if (at_end()) throw parse_error("expected term", pos);
        if (sign > 0 && peek() == 'U') {
            ++pos; // unknot summand, contributes nothing
        } else if (peek() == 'T') {
            ++pos;
            skip_ws();
            expect('(');
            const long long p = parse_int();
            skip_ws();
            expect(',');
            const long long q = parse_int();
            skip_ws();
            expect(')');
            if (p <= 0 || q <= 0)
                throw parse_error("torus knot parameters must be positive", term_pos);
            if (p > std::numeric_limits<int>::max() || q > std::numeric_limits<int>::max())
                throw parse_error("torus knot parameter out of range", term_pos);
            if (std::gcd(p, q) != 1)
                throw parse_error("T(p,q) requires gcd(p,q) = 1", term_pos);
            if (p != 1 && q != 1)
                factors.emplace_back(int(p), int(q), sign);
        } else {
            throw parse_error(sign < 0 ? "expected 'T(' after '-'" : "expected 'T(' or 'U'",
                              pos);
        }
        skip_ws();
        if (at_end()) break;
        expect('#');
    }
    return KnotSum(std::move(factors));
}

} // namespace lsknot

#endif // LSKNOT_KNOTSUM_HPP
