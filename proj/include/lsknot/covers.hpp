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

#ifndef LSKNOT_COVERS_HPP
#define LSKNOT_COVERS_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsknot/errors.hpp"
#include "lsknot/invariants.hpp"
#include "lsknot/knotsum.hpp"
#include "lsknot/laurent.hpp"

namespace lsknot {

/// Lens space L(p,q) with p >= 2 and 1 <= q < p, gcd(p,q) = 1.
class LensSpace {
public:
    LensSpace(int p, int q) : p_(p), q_(q) {
        if (p_ < 2)
            throw std::invalid_argument("lens space requires p >= 2");
        if (q_ < 1 || q_ >= p_)
            throw std::invalid_argument("lens space requires 1 <= q < p");
        if (std::gcd(p_, q_) != 1)
            throw std::invalid_argument("lens space requires gcd(p,q) = 1");
    }

    int p() const { return p_; }
    int q() const { return q_; }

    friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

private:
    int p_;
    int q_;
};

inline std::string to_string(const LensSpace& l) {
    return "L(" + std::to_string(l.p()) + "," + std::to_string(l.q()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const LensSpace& l) {
    return os << to_string(l);
}

/// Connected sum of lens spaces, kept sorted. Empty means S^3.
class LensSpaceSum {
public:
    LensSpaceSum() = default;

    explicit LensSpaceSum(std::vector<LensSpace> summands) : summands_(std::move(summands)) {
        std::sort(summands_.begin(), summands_.end());
    }

    const std::vector<LensSpace>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }
    std::size_t size() const { return summands_.size(); }

    bool operator==(const LensSpaceSum&) const = default;

private:
    std::vector<LensSpace> summands_;
};

inline std::string to_string(const LensSpaceSum& s) {
    if (s.empty()) return "S^3";
    std::string out;
    for (const auto& l : s.summands()) {
        if (!out.empty()) out += " # ";
        out += to_string(l);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LensSpaceSum& s) {
    return os << to_string(s);
}

/// Double branched cover of a two-strand sum: +T(2,q) covers to L(q,q-1),
/// -T(2,q) to L(q,1). Factors with p != 2 are rejected with
/// unsupported_input.
inline LensSpaceSum double_branched_cover_two_strand(const KnotSum& k) {
    std::vector<LensSpace> summands;
    summands.reserve(k.size());
    for (const auto& f : k.factors()) {
        if (f.p() != 2)
            throw unsupported_input("double branched cover supported for two-strand factors only, got " +
                                    to_string(f));
        summands.emplace_back(f.q(), f.is_positive() ? f.q() - 1 : 1);
    }
    return LensSpaceSum(std::move(summands));
}

/// |H_1| of a sum of lens spaces: the product of the orders p, 1 for S^3.
inline Integer h1_order(const LensSpaceSum& s) {
    Integer order = 1;
    for (const auto& l : s.summands()) order *= l.p();
    return order;
}

struct ReducednessResult {
    bool reduced;
    std::string reason; // empty when reduced
};

/// Reducedness of a sum of lens spaces, within the forms this library
/// produces: every summand must be L(m,1) or L(m,m-1), anything else is
/// unsupported_input. Fails on any L(4,1) summand, and on any pair
/// {L(p,q), L(p,p-q)}, which cancels in the relevant quotient group.
inline ReducednessResult is_reduced_scoped(const LensSpaceSum& s) {
    for (const auto& l : s.summands())
        if (l.q() != 1 && l.q() != l.p() - 1)
            throw unsupported_input("reducedness not decided for " + to_string(l));
    for (const auto& l : s.summands())
        if (l.p() == 4 && l.q() == 1)
            return {false, "contains L(4,1), which is not reduced"};
    const auto& v = s.summands();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i].p() == v[j].p() && v[j].q() == v[i].p() - v[i].q())
                return {false, "contains the pair " + to_string(v[i]) + ", " + to_string(v[j])};
    return {true, ""};
}

/// True when |H_1| of the double branched cover of the two-strand sum k
/// divides target. The cover must be reduced; this holds for every reduced
/// two-strand sum, so a failure indicates a bug upstream.
inline bool h1_divides_check(const KnotSum& k, const Integer& target) {
    if (target <= 0)
        throw std::invalid_argument("h1_divides_check requires a positive target");
    const LensSpaceSum cover = double_branched_cover_two_strand(k);
    if (!is_reduced_scoped(cover).reduced)
        throw std::logic_error("cover of a reduced two-strand sum must be reduced");
    return target % h1_order(cover) == 0;
}

} // namespace lsknot

#endif // LSKNOT_COVERS_HPP
