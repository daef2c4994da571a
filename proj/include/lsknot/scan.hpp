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

#ifndef LSKNOT_SCAN_HPP
#define LSKNOT_SCAN_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsknot/invariants.hpp"
#include "lsknot/json_io.hpp"
#include "lsknot/knotsum.hpp"
#include "lsknot/obstruct.hpp"

namespace lsknot {

enum class ScanFamily { TwoStrand, General };
enum class ScanFormat { JsonLines, Csv };

struct ScanConfig {
    int max_q = 9;
    int max_p = 2;
    int max_factors_per_sign = 2;
    ScanFamily family = ScanFamily::TwoStrand;
    ScanFormat format = ScanFormat::JsonLines;

    /// Bounds-checked copy; the two-strand family pins max_p to 2.
    ScanConfig validated() const {
        if (max_q < 3) throw std::invalid_argument("scan requires max_q >= 3");
        if (max_p < 2) throw std::invalid_argument("scan requires max_p >= 2");
        if (max_factors_per_sign < 1)
            throw std::invalid_argument("scan requires max_factors_per_sign >= 1");
        ScanConfig c = *this;
        if (c.family == ScanFamily::TwoStrand) c.max_p = 2;
        return c;
    }
};

/// One scanned sum, flattened for row-oriented output.
struct ScanRecord {
    std::string expr;
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::vector<ReasonCode> reasons;
    Integer det_plus = 1;
    Integer det_minus_other = 1;
    Integer det_minus_two = 1;
    std::optional<Integer> candidate_det;
    std::optional<int> candidate_alex_degree;
};

struct ScanSummary {
    long total = 0;
    long concordant = 0;
    long obstructed = 0;
    long inconclusive = 0;
    std::map<ReasonCode, long> reason_counts;

    std::string summary_line() const {
        std::string out = "scanned " + std::to_string(total) + " sums: " +
                          std::to_string(concordant) + " Concordant, " +
                          std::to_string(obstructed) + " Obstructed, " +
                          std::to_string(inconclusive) + " Inconclusive";
        if (!reason_counts.empty()) {
            out += "; reasons:";
            for (const auto& [code, count] : reason_counts)
                out += " " + to_string(code) + "=" + std::to_string(count);
        }
        return out;
    }
};

namespace detail {

/// Canonical (p, q) pairs within bounds: p ascending, then q ascending.
inline std::vector<std::pair<int, int>> scan_factor_universe(const ScanConfig& cfg) {
    std::vector<std::pair<int, int>> universe;
    for (int p = 2; p <= cfg.max_p; ++p)
        for (int q = p + 1; q <= cfg.max_q; ++q)
            if (std::gcd(p, q) == 1) universe.emplace_back(p, q);
    return universe;
}

/// All multisets over {0..n-1} of size at most max_count, as non-decreasing
/// index vectors, in preorder: empty set first, each multiset before its
/// extensions.
inline std::vector<std::vector<int>> multisets_up_to(int n, int max_count) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const auto walk = [&](const auto& self, int start) -> void {
        out.push_back(current);
        if (int(current.size()) == max_count) return;
        for (int i = start; i < n; ++i) {
            current.push_back(i);
            self(self, i);
            current.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

/// Merge-walk over two sorted index vectors.
inline bool supports_overlap(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

} // namespace detail

inline ScanRecord make_record(const KnotSum& k, const Verdict& v) {
    ScanRecord rec;
    rec.expr = to_string(k);
    rec.status = v.status;
    rec.reasons.reserve(v.reasons.size());
    for (const auto& r : v.reasons) rec.reasons.push_back(r.code);
    const Split parts = split(k);
    rec.det_plus = determinant_sum(parts.k_plus);
    rec.det_minus_other = determinant_sum(parts.k_minus_other);
    rec.det_minus_two = determinant_sum(parts.k_minus_two);
    rec.candidate_det = v.candidate_determinant;
    if (v.candidate_alexander)
        rec.candidate_alex_degree = v.candidate_alexander->is_zero()
                                        ? 0
                                        : v.candidate_alexander->max_deg();
    return rec;
}

/// Enumerates every reduced sum in the configured family, the empty sum
/// included: positive and negative factor multisets are drawn independently
/// from the same universe, and pairs sharing a knot are skipped since
/// cancellation would reproduce a smaller sum already visited. Calls
/// sink(record, sum, verdict) per sum in deterministic order and returns the
/// tallies.
template <typename Sink>
ScanSummary scan_run(const ScanConfig& config, Sink&& sink) {
    const ScanConfig cfg = config.validated();
    const auto universe = detail::scan_factor_universe(cfg);
    const auto multisets = detail::multisets_up_to(int(universe.size()), cfg.max_factors_per_sign);

    ScanSummary summary;
    std::vector<TorusKnotFactor> factors;
    for (const auto& plus : multisets) {
        for (const auto& minus : multisets) {
            if (detail::supports_overlap(plus, minus)) continue;
            factors.clear();
            for (int i : plus) factors.emplace_back(universe[i].first, universe[i].second, +1);
            for (int i : minus) factors.emplace_back(universe[i].first, universe[i].second, -1);
            const KnotSum k{factors};
            const Verdict v = evaluate(k);

            ++summary.total;
            switch (v.status) {
            case VerdictStatus::Concordant: ++summary.concordant; break;
            case VerdictStatus::Obstructed: ++summary.obstructed; break;
            case VerdictStatus::Inconclusive: ++summary.inconclusive; break;
            }
            for (const auto& r : v.reasons) ++summary.reason_counts[r.code];

            sink(make_record(k, v), k, v);
        }
    }
    return summary;
}

inline std::string csv_header() {
    return "expr,status,reasons,det_plus,det_minus_other,det_minus_two,"
           "candidate_det,candidate_alex_degree";
}

inline std::string to_csv_row(const ScanRecord& rec) {
    std::string reasons;
    for (const auto& code : rec.reasons) {
        if (!reasons.empty()) reasons += ';';
        reasons += to_string(code);
    }
    std::string row = "\"" + rec.expr + "\"," + to_string(rec.status) + "," + reasons + "," +
                      rec.det_plus.str() + "," + rec.det_minus_other.str() + "," +
                      rec.det_minus_two.str() + ",";
    if (rec.candidate_det) row += rec.candidate_det->str();
    row += ",";
    if (rec.candidate_alex_degree) row += std::to_string(*rec.candidate_alex_degree);
    return row;
}

inline nlohmann::ordered_json to_json(const ScanRecord& rec) {
    nlohmann::ordered_json j;
    j["expr"] = rec.expr;
    j["status"] = to_string(rec.status);
    nlohmann::ordered_json reasons = nlohmann::ordered_json::array();
    for (const auto& code : rec.reasons) reasons.push_back(to_string(code));
    j["reasons"] = std::move(reasons);
    j["det_plus"] = json_integer(rec.det_plus);
    j["det_minus_other"] = json_integer(rec.det_minus_other);
    j["det_minus_two"] = json_integer(rec.det_minus_two);
    if (rec.candidate_det) j["candidate_det"] = json_integer(*rec.candidate_det);
    if (rec.candidate_alex_degree) j["candidate_alex_degree"] = *rec.candidate_alex_degree;
    return j;
}

} // namespace lsknot

#endif // LSKNOT_SCAN_HPP
