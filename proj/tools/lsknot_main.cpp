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

#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsknot/covers.hpp"
#include "lsknot/errors.hpp"
#include "lsknot/invariants.hpp"
#include "lsknot/json_io.hpp"
#include "lsknot/knotsum.hpp"
#include "lsknot/laurent.hpp"
#include "lsknot/obstruct.hpp"
#include "lsknot/scan.hpp"

namespace {

constexpr int kExitConcordant = 0;
constexpr int kExitObstructed = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitParseError = 64;
constexpr int kExitUnsupported = 65;

int status_exit_code(lsknot::VerdictStatus s) {
    switch (s) {
    case lsknot::VerdictStatus::Concordant: return kExitConcordant;
    case lsknot::VerdictStatus::Obstructed: return kExitObstructed;
    case lsknot::VerdictStatus::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int run_check(const std::string& expr) {
    const lsknot::KnotSum k = lsknot::KnotSum::parse(expr);
    const lsknot::Verdict v = lsknot::evaluate(k);
    std::cout << lsknot::verdict_to_json(v, k).dump(2) << '\n';
    return status_exit_code(v.status);
}

int run_alex(const std::string& expr) {
    const lsknot::KnotSum k = lsknot::KnotSum::parse(expr);
    bool has_plus = false, has_minus = false;
    for (const auto& f : k.factors()) (f.is_positive() ? has_plus : has_minus) = true;

    const lsknot::AlexanderFraction frac = lsknot::alexander_fraction(k);
    if (!has_plus || !has_minus) {
        // One-sided sums carry an honest Alexander polynomial: the product
        // over all factors (mirrors share the polynomial of the knot).
        std::cout << lsknot::to_string(has_minus ? frac.denominator : frac.numerator) << '\n';
        return 0;
    }
    if (const auto quotient = lsknot::divide_exact(frac.numerator, frac.denominator)) {
        std::cout << lsknot::to_string(*quotient) << '\n';
        return 0;
    }
    std::cout << "no polynomial quotient\n";
    std::cout << "numerator = " << lsknot::to_string(frac.numerator)
              << " (degree " << frac.numerator.max_deg() << ")\n";
    std::cout << "denominator = " << lsknot::to_string(frac.denominator)
              << " (degree " << frac.denominator.max_deg() << ")\n";
    return 1;
}

int run_cover(const std::string& expr) {
    const lsknot::KnotSum k = lsknot::KnotSum::parse(expr);
    const lsknot::LensSpaceSum cover = lsknot::double_branched_cover_two_strand(k);
    std::cout << lsknot::to_string(cover) << '\n';
    std::cout << "h1 = " << lsknot::h1_order(cover).str() << '\n';
    const lsknot::ReducednessResult red = lsknot::is_reduced_scoped(cover);
    std::cout << "reduced = " << (red.reduced ? "true" : "false");
    if (!red.reduced) std::cout << " (" << red.reason << ")";
    std::cout << '\n';
    return 0;
}

// "-T(2,5)" is a mirrored knot, not an option flag.
bool looks_like_mirror_expr(const std::string& s) {
    if (s.size() < 2 || s[0] != '-') return false;
    std::size_t i = 1;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i < s.size() && s[i] == 'T';
}

int run_scan(const lsknot::ScanConfig& config) {
    if (config.format == lsknot::ScanFormat::Csv) std::cout << lsknot::csv_header() << '\n';
    const lsknot::ScanSummary summary = lsknot::scan_run(
        config, [&](const lsknot::ScanRecord& rec, const lsknot::KnotSum&, const lsknot::Verdict&) {
            if (config.format == lsknot::ScanFormat::Csv)
                std::cout << lsknot::to_csv_row(rec) << '\n';
            else
                std::cout << lsknot::to_json(rec).dump() << '\n';
        });
    std::cerr << summary.summary_line() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concordance obstructions for connected sums of torus knots"};
    app.require_subcommand(1);

    std::string check_expr;
    auto* check_cmd = app.add_subcommand(
        "check", "Decide whether a sum is obstructed from concordance to an L-space knot");
    check_cmd->add_option("expr", check_expr, "knot sum, e.g. \"T(2,9) # -T(2,3)\"")->required();

    std::string alex_expr;
    auto* alex_cmd = app.add_subcommand(
        "alex", "Alexander polynomial of a one-sided sum, or the candidate quotient");
    alex_cmd->add_option("expr", alex_expr, "knot sum")->required();

    std::string cover_expr;
    auto* cover_cmd = app.add_subcommand(
        "cover", "Double branched cover of a two-strand sum, with |H_1| and reducedness");
    cover_cmd->add_option("expr", cover_expr, "two-strand knot sum")->required();

    lsknot::ScanConfig config;
    std::string family;
    std::string format = "json";
    auto* scan_cmd = app.add_subcommand("scan", "Enumerate and decide every sum in a family");
    scan_cmd->add_option("--family", family, "factor family")
        ->required()
        ->check(CLI::IsMember({"two-strand", "general"}));
    scan_cmd->add_option("--max-q", config.max_q, "largest q, at least 3")
        ->required()
        ->check(CLI::Range(3, 1000000));
    scan_cmd->add_option("--max-p", config.max_p, "largest p (general family only)")
        ->check(CLI::Range(2, 1000000));
    scan_cmd->add_option("--max-factors", config.max_factors_per_sign,
                         "largest factor count per sign")
        ->check(CLI::Range(1, 1000));
    scan_cmd->add_option("--format", format, "json, json-lines, or csv")
        ->check(CLI::IsMember({"json", "json-lines", "csv"}));

    std::vector<std::string> args(argv, argv + argc);
    if (args.size() >= 3 &&
        (args[1] == "check" || args[1] == "alex" || args[1] == "cover") &&
        looks_like_mirror_expr(args[2]))
        args.insert(args.begin() + 2, "--");
    std::vector<const char*> cargs;
    cargs.reserve(args.size());
    for (const auto& s : args) cargs.push_back(s.c_str());
    try {
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*check_cmd) return run_check(check_expr);
        if (*alex_cmd) return run_alex(alex_expr);
        if (*cover_cmd) return run_cover(cover_expr);
        if (*scan_cmd) {
            config.family = family == "general" ? lsknot::ScanFamily::General
                                                : lsknot::ScanFamily::TwoStrand;
            config.format = format == "csv" ? lsknot::ScanFormat::Csv
                                            : lsknot::ScanFormat::JsonLines;
            return run_scan(config.validated());
        }
    } catch (const lsknot::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const lsknot::unsupported_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    }
    return 0;
}
