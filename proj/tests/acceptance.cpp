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

// Acceptance gate: every criterion below prints one PASS or FAIL line with
// its elapsed time, and the process exits nonzero if any criterion fails or
// overruns its cap. Run directly or through ctest.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "lsknot/covers.hpp"
#include "lsknot/invariants.hpp"
#include "lsknot/knotsum.hpp"
#include "lsknot/laurent.hpp"
#include "lsknot/obstruct.hpp"
#include "lsknot/scan.hpp"

namespace {

using lsknot::Integer;
using lsknot::KnotSum;
using lsknot::LaurentPoly;
using lsknot::ReasonCode;
using lsknot::ScanConfig;
using lsknot::ScanFamily;
using lsknot::ScanRecord;
using lsknot::TorusKnotFactor;
using lsknot::Verdict;
using lsknot::VerdictStatus;

int failures = 0;

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why; // keep the first diagnosis
        ok = false;
    }
    void expect(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }
};

void run_criterion(int number, const char* label, double cap_seconds,
                   const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    body(check);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (cap_seconds > 0 && elapsed > cap_seconds)
        check.fail("exceeded the " + std::to_string(cap_seconds) + "s cap");
    if (!check.ok) ++failures;

    std::printf("%s  criterion %d: %s (%.3fs", check.ok ? "PASS" : "FAIL", number, label,
                elapsed);
    if (cap_seconds > 0) std::printf(", cap %gs", cap_seconds);
    std::printf(")\n");
    if (!check.ok && !check.detail.empty()) std::printf("      %s\n", check.detail.c_str());
}

bool has_code(const Verdict& v, ReasonCode code) {
    return std::any_of(v.reasons.begin(), v.reasons.end(),
                       [code](const lsknot::Reason& r) { return r.code == code; });
}

Integer abs_at_minus_one(const LaurentPoly& p) {
    Integer value = boost::multiprecision::numerator(evaluate(p, -1));
    return value < 0 ? Integer(-value) : value;
}

void criterion_determinant_closed_form(Check& check) {
    for (int q = 3; q <= 99; q += 2) {
        const Integer det = lsknot::determinant_factor(TorusKnotFactor(2, q));
        check.expect(det == q, "det(T(2," + std::to_string(q) + ")) = " + det.str());
        check.expect(lsknot::determinant_factor(TorusKnotFactor(2, q, -1)) == q,
                     "mirror determinant differs at q = " + std::to_string(q));
    }
}

void criterion_two_strand_classification(Check& check) {
    ScanConfig cfg;
    cfg.family = ScanFamily::TwoStrand;
    cfg.max_q = 21;
    cfg.max_factors_per_sign = 3;

    long concordant = 0;
    const auto summary = lsknot::scan_run(
        cfg, [&](const ScanRecord&, const KnotSum& k, const Verdict& v) {
            const bool trivially_concordant =
                k.empty() || (k.size() == 1 && k.factors().front().is_positive());
            if (trivially_concordant) {
                ++concordant;
                check.expect(v.status == VerdictStatus::Concordant,
                             lsknot::to_string(k) + " should be Concordant");
            } else {
                check.expect(v.status == VerdictStatus::Obstructed,
                             lsknot::to_string(k) + " is " + lsknot::to_string(v.status) +
                                 ", expected Obstructed");
            }
        });
    check.expect(summary.inconclusive == 0, "two-strand sweep left inconclusive sums");
    check.expect(concordant == 11, "expected the empty sum plus ten single positives");
    check.expect(summary.total == 43561,
                 "enumeration size changed: " + std::to_string(summary.total));
}

void criterion_corollary_subsumption(Check& check) {
    ScanConfig cfg;
    cfg.family = ScanFamily::General;
    cfg.max_p = 5;
    cfg.max_q = 11;
    cfg.max_factors_per_sign = 2;

    long fired = 0;
    lsknot::scan_run(cfg, [&](const ScanRecord&, const KnotSum& k, const Verdict& v) {
        if (!has_code(v, ReasonCode::DetOneCorollary)) return;
        ++fired;
        check.expect(has_code(v, ReasonCode::DivisibilityFailsThm32),
                     lsknot::to_string(k) + " fires the corollary without the divisibility test");
    });
    check.expect(fired > 0, "the corollary never fired, the sweep is vacuous");
}

void criterion_candidate_consistency(Check& check) {
    ScanConfig cfg;
    cfg.family = ScanFamily::General;
    cfg.max_p = 5;
    cfg.max_q = 11;
    cfg.max_factors_per_sign = 2;

    long seen = 0;
    lsknot::scan_run(cfg, [&](const ScanRecord&, const KnotSum& k, const Verdict& v) {
        if (!v.candidate_alexander || !v.candidate_determinant) return;
        ++seen;
        check.expect(abs_at_minus_one(*v.candidate_alexander) == *v.candidate_determinant,
                     lsknot::to_string(k) + ": |P(-1)| differs from the candidate determinant");
    });
    check.expect(seen > 0, "no sum produced both candidate fields");
}

void criterion_division_round_trips(Check& check) {
    std::mt19937_64 rng(0xacce9705u);
    for (int i = 0; i < 10000; ++i) {
        const LaurentPoly a = lsknot_tests::random_alexander_product(rng, 60);
        const LaurentPoly b = lsknot_tests::random_alexander_product(rng, 60);
        const LaurentPoly product = a * b;
        const auto quotient = divide_exact(product, b);
        if (!quotient.has_value()) {
            check.fail("round trip " + std::to_string(i) + " rejected an exact division");
            return;
        }
        if (*quotient != a) {
            check.fail("round trip " + std::to_string(i) + " returned the wrong quotient");
            return;
        }
        if (*quotient * b != product) {
            check.fail("round trip " + std::to_string(i) + " fails re-multiplication");
            return;
        }
    }
}

void criterion_cover_h1(Check& check) {
    ScanConfig cfg;
    cfg.family = ScanFamily::TwoStrand;
    cfg.max_q = 25;
    cfg.max_factors_per_sign = 2;

    lsknot::scan_run(cfg, [&](const ScanRecord&, const KnotSum& k, const Verdict&) {
        const lsknot::LensSpaceSum cover = lsknot::double_branched_cover_two_strand(k);
        check.expect(lsknot::h1_order(cover) == lsknot::determinant_sum(k),
                     lsknot::to_string(k) + ": |H_1| of the cover differs from the determinant");
        check.expect(lsknot::is_reduced_scoped(cover).reduced,
                     lsknot::to_string(k) + ": cover is not reduced");
    });
    check.expect(!lsknot::is_reduced_scoped(lsknot::LensSpaceSum({lsknot::LensSpace(4, 1)})).reduced,
                 "a bare L(4,1) must fail the reducedness test");
}

void criterion_worked_instances(Check& check) {
    {
        const Verdict v = evaluate(KnotSum::parse("T(2,9) # -T(2,3)"));
        check.expect(v.status == VerdictStatus::Obstructed, "instance 1: wrong status");
        check.expect(v.reasons.size() == 1 &&
                         v.reasons.front().code == ReasonCode::TwoStrandNotSingle,
                     "instance 1: wrong reasons");
        check.expect(v.candidate_alexander == LaurentPoly::parse("t^6 - t^3 + 1"),
                     "instance 1: wrong candidate polynomial");
        check.expect(v.candidate_determinant == Integer(3),
                     "instance 1: wrong candidate determinant");
    }
    {
        const Verdict v = evaluate(KnotSum::parse("T(4,5) # -T(2,5)"));
        check.expect(v.status == VerdictStatus::Inconclusive, "instance 2: wrong status");
        check.expect(v.reasons.empty(), "instance 2: unexpected reasons");
        check.expect(v.candidate_alexander == LaurentPoly::parse("t^8 - t^6 + t^4 - t^2 + 1"),
                     "instance 2: wrong candidate polynomial");
        check.expect(v.candidate_determinant == Integer(1),
                     "instance 2: wrong candidate determinant");
    }
    {
        const Verdict v = evaluate(KnotSum::parse("T(3,5) # -T(2,3)"));
        check.expect(v.status == VerdictStatus::Obstructed, "instance 3: wrong status");
        std::vector<ReasonCode> codes;
        for (const auto& r : v.reasons) codes.push_back(r.code);
        const std::vector<ReasonCode> expected = {
            ReasonCode::DeterminantRatioNotInteger, ReasonCode::AlexanderQuotientNotPolynomial,
            ReasonCode::DivisibilityFailsThm32, ReasonCode::DetOneCorollary};
        check.expect(codes == expected, "instance 3: wrong reason codes");
    }
}

void criterion_parse_round_trips(Check& check) {
    std::mt19937_64 rng(0xacce9707u);
    for (int i = 0; i < 10000; ++i) {
        const KnotSum k = lsknot_tests::random_knot_sum(rng);
        if (KnotSum::parse(lsknot::to_string(k)) != k) {
            check.fail("round trip " + std::to_string(i) + " failed for " + lsknot::to_string(k));
            return;
        }
    }
    check.expect(KnotSum::parse("T(2,3) # -T(2,3)").empty(),
                 "mirror pair failed to cancel to the unknot");
}

} // namespace

int main() {
    run_criterion(1, "two-strand determinants match the closed form det(T(2,q)) = q", 1.0,
                  criterion_determinant_closed_form);
    run_criterion(2, "reduced two-strand sums up to q = 21 are fully classified", 10.0,
                  criterion_two_strand_classification);
    run_criterion(3, "the determinant-one corollary only fires with the divisibility test", 0,
                  criterion_corollary_subsumption);
    run_criterion(4, "candidate polynomial and determinant agree at t = -1", 0,
                  criterion_candidate_consistency);
    run_criterion(5, "10^4 exact division round trips on Alexander products", 30.0,
                  criterion_division_round_trips);
    run_criterion(6, "cover |H_1| equals the determinant up to q = 25", 1.0, criterion_cover_h1);
    run_criterion(7, "worked instances match their frozen verdicts", 0,
                  criterion_worked_instances);
    run_criterion(8, "10^4 parse and format round trips", 0, criterion_parse_round_trips);

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 8 criteria failed\n", failures);
    return 1;
}
