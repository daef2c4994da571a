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

#ifndef LSKNOT_INVARIANTS_HPP
#define LSKNOT_INVARIANTS_HPP

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "lsknot/knotsum.hpp"
#include "lsknot/laurent.hpp"

namespace lsknot {

/// Alexander polynomial of T(p,q), normalized to minimum degree 0 and
/// constant term 1:
///
///   (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))
///
/// The quotient is exact for coprime p, q. Degree (p-1)(q-1), palindromic.
/// Results are memoized; the cache is guarded by a mutex, so concurrent
/// callers are safe. Returns by value.
inline LaurentPoly torus_alexander(int p, int q) {
    if (p > q) std::swap(p, q);
    if (p < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_alexander requires coprime p, q with 2 <= p < q");

    static std::map<std::pair<int, int>, LaurentPoly> cache;
    static std::mutex cache_mutex;
    std::scoped_lock lock(cache_mutex);
    const auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;

    const auto cyc = [](int n) { // t^n - 1
        return LaurentPoly::monomial(1, n) - LaurentPoly::one();
    };
    const auto quotient = divide_exact(cyc(p * q) * cyc(1), cyc(p) * cyc(q));
    if (!quotient)
        throw std::logic_error("torus Alexander quotient was not exact");
    const LaurentPoly& delta = *quotient;
    if (delta.min_deg() != 0 || delta.max_deg() != (p - 1) * (q - 1) ||
        delta.coeff(0) != 1)
        throw std::logic_error("torus Alexander normalization violated");
    cache.emplace(std::pair{p, q}, delta);
    return delta;
}

/// Alexander data of a sum, kept as an exact fraction: the numerator is the
/// product over positive factors, the denominator the product over negative
/// factors. Mirrors share the Alexander polynomial of the knot, so only the
/// sign of each factor matters here, not a mirrored polynomial.
struct AlexanderFraction {
    LaurentPoly numerator;
    LaurentPoly denominator;
};

inline AlexanderFraction alexander_fraction(const KnotSum& k) {
    AlexanderFraction f{LaurentPoly::one(), LaurentPoly::one()};
    for (const auto& factor : k.factors()) {
        const LaurentPoly delta = torus_alexander(factor.p(), factor.q());
        if (factor.is_positive()) f.numerator = f.numerator * delta;
        else f.denominator = f.denominator * delta;
    }
    return f;
}

/// det(T(p,q)) = |Delta(-1)|. Sign-blind: det(-K) = det(K). Memoized.
inline Integer determinant_factor(const TorusKnotFactor& f) {
    static std::map<std::pair<int, int>, Integer> cache;
    static std::mutex cache_mutex;
    std::scoped_lock lock(cache_mutex);
    const auto key = std::pair{f.p(), f.q()};
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const Rational value = evaluate(torus_alexander(f.p(), f.q()), -1);
    Integer det = boost::multiprecision::numerator(value);
    if (det < 0) det = -det;
    cache.emplace(key, det);
    return det;
}

/// Determinants multiply over connected sums; the empty sum has det 1.
inline Integer determinant_sum(const KnotSum& k) {
    Integer det = 1;
    for (const auto& f : k.factors()) det *= determinant_factor(f);
    return det;
}

} // namespace lsknot

#endif // LSKNOT_INVARIANTS_HPP
