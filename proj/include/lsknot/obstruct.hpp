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

#ifndef LSKNOT_OBSTRUCT_HPP
#define LSKNOT_OBSTRUCT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsknot/invariants.hpp"
#include "lsknot/knotsum.hpp"
#include "lsknot/laurent.hpp"

namespace lsknot {

enum class VerdictStatus { Concordant, Obstructed, Inconclusive };

inline std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Concordant: return "Concordant";
    case VerdictStatus::Obstructed: return "Obstructed";
    case VerdictStatus::Inconclusive: return "Inconclusive";
    }
    throw std::logic_error("unknown verdict status");
}

enum class ReasonCode {
    PositiveSumMultiple,
    TwoStrandNotSingle,
    DeterminantRatioNotInteger,
    AlexanderQuotientNotPolynomial,
    DivisibilityFailsThm32,
    DetOneCorollary,
};

inline std::string to_string(ReasonCode c) {
    switch (c) {
    case ReasonCode::PositiveSumMultiple: return "PositiveSumMultiple";
    case ReasonCode::TwoStrandNotSingle: return "TwoStrandNotSingle";
    case ReasonCode::DeterminantRatioNotInteger: return "DeterminantRatioNotInteger";
    case ReasonCode::AlexanderQuotientNotPolynomial: return "AlexanderQuotientNotPolynomial";
    case ReasonCode::DivisibilityFailsThm32: return "DivisibilityFailsThm32";
    case ReasonCode::DetOneCorollary: return "DetOneCorollary";
    }
    throw std::logic_error("unknown reason code");
}

/// One fired obstruction, with its supporting data as ordered string pairs.
struct Reason {
    ReasonCode code;
    std::vector<std::pair<std::string, std::string>> params;

    bool operator==(const Reason&) const = default;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::vector<Reason> reasons;
    std::optional<std::string> witness;            // Concordant only
    std::optional<LaurentPoly> candidate_alexander;
    std::optional<Integer> candidate_determinant;
};

namespace detail {

struct DetRatio {
    Integer det_plus;
    Integer det_minus;
    std::optional<Integer> ratio; // engaged iff det_minus | det_plus
};

inline DetRatio det_ratio(const KnotSum& k) {
    DetRatio r{1, 1, std::nullopt};
    for (const auto& f : k.factors()) {
        if (f.is_positive()) r.det_plus *= determinant_factor(f);
        else r.det_minus *= determinant_factor(f);
    }
    if (r.det_plus % r.det_minus == 0) r.ratio = r.det_plus / r.det_minus;
    return r;
}

inline int alexander_degree(const KnotSum& k, int sign) {
    int degree = 0;
    for (const auto& f : k.factors())
        if (f.sign() == sign) degree += (f.p() - 1) * (f.q() - 1);
    return degree;
}

} // namespace detail

/// det(K+)/det(K-) when that ratio is an integer. Any knot concordant to the
/// sum shares this value as its determinant, so a fractional ratio is an
/// obstruction.
inline std::optional<Integer> candidate_determinant(const KnotSum& k) {
    return detail::det_ratio(k).ratio;
}

/// The Alexander polynomial any L-space knot concordant to the sum would
/// have: the exact quotient of the positive-factor product by the
/// negative-factor product. Requires factors of both signs; one-sided sums
/// have no quotient condition to test and are rejected.
inline std::optional<LaurentPoly> candidate_alexander(const KnotSum& k) {
    bool has_plus = false, has_minus = false;
    for (const auto& f : k.factors()) (f.is_positive() ? has_plus : has_minus) = true;
    if (!has_plus || !has_minus)
        throw std::invalid_argument("candidate_alexander requires factors of both signs");
    const AlexanderFraction f = alexander_fraction(k);
    return divide_exact(f.numerator, f.denominator);
}

/// A connected sum of n > 1 positive torus knots is never concordant to an
/// L-space knot.
inline std::optional<Reason> check_positive_sum(const KnotSum& k) {
    if (k.size() < 2) return std::nullopt;
    for (const auto& f : k.factors())
        if (!f.is_positive()) return std::nullopt;
    return Reason{ReasonCode::PositiveSumMultiple,
                  {{"factor_count", std::to_string(k.size())}}};
}

/// A reduced sum of two-strand torus knots is concordant to an L-space knot
/// only when it is a single positive factor (or empty). Applies only to
/// sums built entirely from two-strand factors.
inline std::optional<Reason> check_two_strand(const KnotSum& k) {
    if (k.empty()) return std::nullopt;
    std::size_t positive = 0;
    for (const auto& f : k.factors()) {
        if (f.p() != 2) return std::nullopt;
        if (f.is_positive()) ++positive;
    }
    if (k.size() == 1 && positive == 1) return std::nullopt;
    return Reason{ReasonCode::TwoStrandNotSingle,
                  {{"factor_count", std::to_string(k.size())},
                   {"positive_count", std::to_string(positive)},
                   {"negative_count", std::to_string(k.size() - positive)}}};
}

/// det of the negative two-strand part must divide det of the positive part.
inline std::optional<Reason> check_divisibility(const KnotSum& k) {
    const Split parts = split(k);
    if (parts.k_minus_two.empty()) return std::nullopt;
    const Integer det_minus_two = determinant_sum(parts.k_minus_two);
    const Integer det_plus = determinant_sum(parts.k_plus);
    if (det_plus % det_minus_two == 0) return std::nullopt;
    return Reason{ReasonCode::DivisibilityFailsThm32,
                  {{"det_minus_two", det_minus_two.str()},
                   {"det_plus", det_plus.str()}}};
}

/// With a nontrivial negative two-strand part, det of the positive part
/// cannot be 1. Subsumed by the divisibility check, kept as a separate
/// reason because it needs no division to state.
inline std::optional<Reason> check_corollary_det_one(const KnotSum& k) {
    const Split parts = split(k);
    if (parts.k_minus_two.empty()) return std::nullopt;
    if (determinant_sum(parts.k_plus) != 1) return std::nullopt;
    return Reason{ReasonCode::DetOneCorollary,
                  {{"det_plus", "1"},
                   {"det_minus_two", determinant_sum(parts.k_minus_two).str()}}};
}

/// Full decision. Empty sums and single positive factors are concordant to
/// an L-space knot by construction (witness reported). Otherwise every
/// obstruction is evaluated and all fired reasons are listed; with no fired
/// reason the sum passes every test here, which proves nothing, so the
/// verdict stays Inconclusive.
inline Verdict evaluate(const KnotSum& k) {
    Verdict v;
    if (k.empty()) {
        v.status = VerdictStatus::Concordant;
        v.witness = "U";
        return v;
    }
    if (k.size() == 1 && k.factors().front().is_positive()) {
        v.status = VerdictStatus::Concordant;
        v.witness = to_string(k.factors().front());
        return v;
    }

    if (auto r = check_positive_sum(k)) v.reasons.push_back(std::move(*r));
    if (auto r = check_two_strand(k)) v.reasons.push_back(std::move(*r));

    const detail::DetRatio ratio = detail::det_ratio(k);
    if (ratio.ratio) {
        v.candidate_determinant = *ratio.ratio;
    } else {
        v.reasons.push_back(Reason{ReasonCode::DeterminantRatioNotInteger,
                                   {{"det_plus", ratio.det_plus.str()},
                                    {"det_minus", ratio.det_minus.str()}}});
    }

    bool has_plus = false, has_minus = false;
    for (const auto& f : k.factors()) (f.is_positive() ? has_plus : has_minus) = true;
    if (has_plus && has_minus) {
        if (auto quotient = candidate_alexander(k)) {
            v.candidate_alexander = std::move(*quotient);
        } else {
            v.reasons.push_back(
                Reason{ReasonCode::AlexanderQuotientNotPolynomial,
                       {{"numerator_degree", std::to_string(detail::alexander_degree(k, +1))},
                        {"denominator_degree", std::to_string(detail::alexander_degree(k, -1))}}});
        }
    }

    if (auto r = check_divisibility(k)) v.reasons.push_back(std::move(*r));
    if (auto r = check_corollary_det_one(k)) v.reasons.push_back(std::move(*r));

    v.status = v.reasons.empty() ? VerdictStatus::Inconclusive : VerdictStatus::Obstructed;
    return v;
}

} // namespace lsknot

#endif // LSKNOT_OBSTRUCT_HPP
