// Copyright 2026 The fewweight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file commands.hpp
 * @brief The CLI commands as library functions returning a ReportDocument and
 *        an exit status (0 ok, 2 validation, 3 cap, 4 mismatch, 5 internal).
 */

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "code.hpp"
#include "cyclotomy.hpp"
#include "report.hpp"

namespace fewweight {

struct RunConfig {
    std::string command;  ///< construct | analyze | predict | compare | verify-paper | periods
    std::optional<CodeSpec> spec;
    std::string format = "json";
    std::optional<std::string> output_path;
    Limits limits;
    unsigned threads = 1;
    bool timing = false;
    /// periods: field size and order
    std::uint64_t periods_q = 0;
    std::uint64_t periods_N = 0;
    /// Test hook: added to eta_0 before the prediction in `compare`.
    std::int64_t corrupt_period = 0;
};

struct CommandResult {
    ReportDocument doc;
    int exit_code = 0;
};

/// A worked example with its reference parameters and enumerator.
struct ReferenceExample {
    std::string name;
    CodeSpec spec;
    std::uint64_t length;
    std::uint64_t dimension;
    std::uint64_t d;
    std::string enumerator;
    std::optional<std::int64_t> griesmer_defect;  ///< expected, when asserted
    std::optional<std::string> annotation;
};

inline const std::vector<ReferenceExample>& reference_examples() {
    static const std::vector<ReferenceExample> table = {
        {"example-1", {3, 1, 2, 1, 1, 4}, 24, 3, 16, "1 + 18z^16 + 8z^18", 0, std::nullopt},
        {"example-2", {3, 1, 2, 1, 1, 8}, 48, 3, 32, "1 + 18z^32 + 8z^36", 1,
         "best known [48,3] ternary code has d = 33 (literature value, not recomputed)"},
        {"example-3", {3, 1, 2, 2, 1, 4}, 72, 4, 48, "1 + 72z^48 + 8z^54", 0, std::nullopt},
        {"example-4", {3, 1, 2, 1, 2, 4}, 24, 3, 12, "1 + 4z^12 + 18z^16 + 4z^24", std::nullopt, std::nullopt},
        {"example-5", {3, 1, 2, 2, 2, 4}, 72, 4, 36, "1 + 4z^36 + 72z^48 + 4z^72", std::nullopt, std::nullopt},
        {"example-6", {3, 1, 4, 2, 4, 10}, 180, 6, 108, "1 + 60z^108 + 648z^120 + 20z^162", std::nullopt,
         std::nullopt},
        {"example-7", {3, 1, 4, 2, 5, 8}, 144, 6, 54, "1 + 16z^54 + 648z^96 + 64z^108", std::nullopt, std::nullopt},
    };
    return table;
}

namespace commands_detail {

inline FieldInfo field_info(const FieldCtx& f) {
    return FieldInfo{f.p(), f.degree(), f.modulus(), f.modulus_string()};
}

inline CodeInfo code_info(const Code& c) {
    return CodeInfo{c.length(), c.expected_dimension(), Code::coordinate_order_statement()};
}

inline std::string rational_text(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline DistributionDoc enumerated_doc(const WeightDistribution& wd) {
    return DistributionDoc{"enumeration", wd.counts,      enumerator_string(wd), wd.measured_dimension,
                           wd.kernel_size, {},            {}};
}

inline DistributionDoc predicted_doc(const PredictedDistribution& pd) {
    DistributionDoc d;
    d.source = to_string(pd.source);
    d.counts = pd.code_counts();
    d.enumerator = enumerator_string(d.counts);
    d.kernel_size = pd.merged().at(0);
    d.rows = pd.rows;
    for (const auto& r : pd.periods) d.periods.push_back(rational_text(r));
    return d;
}

inline SSSDoc sss_doc(const SSSReport& r) {
    SSSDoc d;
    d.w_min = r.minimality.w_min;
    d.w_max = r.minimality.w_max;
    d.minimal_by_ratio = r.minimality.minimal_by_ratio;
    d.ratio_margin = rational_text(r.minimality.ratio_margin);
    d.oracle_minimal = r.oracle_minimal;
    if (r.structural) {
        d.structural_family = r.structural->family;
        d.structural_condition = r.structural->condition;
        d.structural_holds = r.structural->holds;
    }
    d.dual_distance = to_string(r.dual_distance);
    d.regime = r.regime;
    d.reason = r.reason;
    return d;
}

/// Rounds to 12 decimals so reports do not carry summation noise.
inline double tidy(double x) {
    double r = std::round(x * 1e12) / 1e12;
    return r == 0 ? 0.0 : r;
}

inline BoundDoc bound_doc(const CodeSpec& spec, std::optional<std::uint64_t> measured_d) {
    BoundDoc b;
    b.lower_bound = minimum_distance_lower_bound(spec);
    b.measured_d = measured_d;
    if (b.lower_bound && measured_d) b.bound_holds = *b.lower_bound <= *measured_d;
    return b;
}

inline const CodeSpec& require_spec(const RunConfig& cfg) {
    if (!cfg.spec) fail(ErrorKind::validation, "missing_spec", "command '" + cfg.command + "' needs --p --s --m --m1 --h --n");
    return *cfg.spec;
}

inline PredictedDistribution prediction(const CodeSpec& spec, const RunConfig& cfg) {
    auto source = preferred_period_source(spec);
    auto periods = rational_periods(spec, source, cfg.limits);
    periods[0] += cfg.corrupt_period;
    return predicted_distribution_from_periods(spec, std::move(periods), source);
}

/// Enumeration-derived sections shared by analyze and compare.
inline WeightDistribution fill_analysis(ReportDocument& doc, const Code& code, const RunConfig& cfg) {
    auto wd = weight_distribution_bruteforce(code, cfg.limits, cfg.threads);
    doc.enumerated = enumerated_doc(wd);
    doc.enumerator = enumerator_string(wd);
    auto d = wd.min_distance();
    doc.bound = bound_doc(code.spec(), d);
    if (d >= 1) doc.optimality = griesmer_report(code.length(), wd.measured_dimension, d, code.q());
    if (d >= 1) {
        std::optional<bool> oracle;
        if (code.message_count() <= cfg.limits.pair_cap) oracle = minimal_codewords_bruteforce(code, cfg.limits);
        doc.sss = sss_doc(sss_classification(code, wd, oracle));
    }
    return wd;
}

}  // namespace commands_detail

inline CommandResult cmd_construct(const RunConfig& cfg) {
    using namespace commands_detail;
    CommandResult r;
    r.doc.command = "construct";
    auto spec = validate_spec(require_spec(cfg), cfg.limits);
    auto code = build_code(spec, cfg.limits);
    r.doc.spec = spec;
    r.doc.field = field_info(code.field());
    r.doc.code = code_info(code);
    return r;
}

inline CommandResult cmd_analyze(const RunConfig& cfg) {
    using namespace commands_detail;
    CommandResult r;
    r.doc.command = "analyze";
    auto spec = validate_spec(require_spec(cfg), cfg.limits);
    auto code = build_code(spec, cfg.limits);
    r.doc.spec = spec;
    r.doc.field = field_info(code.field());
    r.doc.code = code_info(code);
    fill_analysis(r.doc, code, cfg);
    return r;
}

inline CommandResult cmd_predict(const RunConfig& cfg) {
    using namespace commands_detail;
    CommandResult r;
    r.doc.command = "predict";
    auto spec = validate_spec(require_spec(cfg), cfg.limits);
    r.doc.spec = spec;
    auto pd = prediction(spec, cfg);
    r.doc.predicted = predicted_doc(pd);
    r.doc.enumerator = r.doc.predicted->enumerator;
    std::optional<std::uint64_t> d;
    for (auto [w, c] : r.doc.predicted->counts)
        if (w != 0) {
            d = w;
            break;
        }
    r.doc.bound = bound_doc(spec, d);
    return r;
}

inline CommandResult cmd_compare(const RunConfig& cfg) {
    using namespace commands_detail;
    CommandResult r;
    r.doc.command = "compare";
    auto spec = validate_spec(require_spec(cfg), cfg.limits);
    auto code = build_code(spec, cfg.limits);
    r.doc.spec = spec;
    r.doc.field = field_info(code.field());
    r.doc.code = code_info(code);
    auto wd = fill_analysis(r.doc, code, cfg);
    auto pd = prediction(spec, cfg);
    r.doc.predicted = predicted_doc(pd);
    ComparisonDoc cmp;
    cmp.diff = diff_distributions(pd.merged(), [&] {
        // pair-level counts of the enumeration
        Counts pairs;
        for (auto [w, c] : wd.counts) pairs[w] = c * wd.kernel_size;
        return pairs;
    }());
    cmp.match = cmp.diff.empty();
    r.doc.comparison = cmp;
    r.doc.passed = cmp.match;
    if (!cmp.match) r.exit_code = static_cast<int>(ErrorKind::mismatch);
    return r;
}

inline CommandResult cmd_verify_paper(const RunConfig& cfg) {
    using namespace commands_detail;
    CommandResult r;
    r.doc.command = "verify-paper";
    bool all = true;
    for (const auto& ex : reference_examples()) {
        auto code = build_code(ex.spec, cfg.limits);
        auto wd = weight_distribution_bruteforce(code, cfg.limits, cfg.threads);
        auto pd = predicted_distribution(ex.spec, preferred_period_source(ex.spec), cfg.limits);
        ExampleRow row;
        row.name = ex.name;
        row.spec = ex.spec;
        row.length = code.length();
        row.dimension = wd.measured_dimension;
        row.d = wd.min_distance();
        row.enumerator = enumerator_string(wd);
        row.predicted_enumerator = enumerator_string(pd.code_counts());
        row.expected_enumerator = ex.enumerator;
        auto expected = parse_enumerator(ex.enumerator);
        auto opt = griesmer_report(row.length, row.dimension, row.d, code.q());
        row.griesmer = opt.note;
        row.griesmer_defect = opt.defect;
        std::optional<bool> oracle;
        if (code.message_count() <= cfg.limits.pair_cap) oracle = minimal_codewords_bruteforce(code, cfg.limits);
        auto sss = sss_classification(code, wd, oracle);
        row.sss_regime = sss.regime;
        row.dual_distance = to_string(sss.dual_distance);
        row.annotation = ex.annotation;
        row.match = wd.counts == expected && pd.code_counts() == expected && row.length == ex.length &&
                    row.dimension == ex.dimension && row.d == ex.d &&
                    (!ex.griesmer_defect || *ex.griesmer_defect == opt.defect);
        all = all && row.match;
        r.doc.examples.push_back(std::move(row));
    }
    r.doc.passed = all;
    if (!all) r.exit_code = static_cast<int>(ErrorKind::mismatch);
    return r;
}

inline CommandResult cmd_periods(const RunConfig& cfg) {
    CommandResult r;
    r.doc.command = "periods";
    auto pp = nt::prime_power(cfg.periods_q);
    if (!pp) fail(ErrorKind::validation, "q_not_prime_power", std::to_string(cfg.periods_q) + " is not a prime power");
    auto ctx = build_field(pp->first, pp->second, cfg.limits);
    const auto N = cfg.periods_N;
    if (N == 0 || (cfg.periods_q - 1) % N != 0)
        fail(ErrorKind::validation, "N_not_divisor", "N must divide q - 1");
    auto direct = gauss_periods_direct(ctx, static_cast<std::uint32_t>(N));

    PeriodsDoc p;
    p.q = cfg.periods_q;
    p.N = N;
    CyclotomicInteger sum(ctx->p());
    for (const auto& e : direct) {
        auto z = e.to_complex();
        p.direct.push_back({e.coeffs(), commands_detail::tidy(z.real()), commands_detail::tidy(z.imag())});
        sum += e;
    }
    p.partition_sum_ok = sum == CyclotomicInteger::integer(ctx->p(), -1);
    p.bound_check = period_bound_check(direct, N, cfg.periods_q);
    if (auto cf = gauss_periods_closed_form(cfg.periods_q, N)) {
        p.branch = to_string(cf->branch);
        if (cf->j) {
            p.j = cf->j;
            p.gamma = cf->gamma;
        }
        bool agree = true;
        for (std::size_t i = 0; i < cf->periods.size(); ++i) {
            auto z = cf->periods[i].to_complex();
            p.closed_form.push_back(
                {cf->periods[i].to_string(), commands_detail::tidy(z.real()), commands_detail::tidy(z.imag())});
            agree = agree && std::abs(z - direct[i].to_complex()) <= complex_tolerance;
        }
        p.agreement = agree;
    }
    r.doc.periods = p;
    r.doc.passed = p.partition_sum_ok && p.bound_check && p.agreement.value_or(true);
    if (!*r.doc.passed) r.exit_code = static_cast<int>(ErrorKind::mismatch);
    return r;
}

/// Dispatches on cfg.command; library errors become an error section plus
/// the matching exit code.
inline CommandResult run_command(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    CommandResult r;
    try {
        if (cfg.command == "construct")
            r = cmd_construct(cfg);
        else if (cfg.command == "analyze")
            r = cmd_analyze(cfg);
        else if (cfg.command == "predict")
            r = cmd_predict(cfg);
        else if (cfg.command == "compare")
            r = cmd_compare(cfg);
        else if (cfg.command == "verify-paper")
            r = cmd_verify_paper(cfg);
        else if (cfg.command == "periods")
            r = cmd_periods(cfg);
        else
            fail(ErrorKind::validation, "unknown_command", "unknown command '" + cfg.command + "'");
    } catch (const Error& e) {
        r = CommandResult{};
        r.doc.command = cfg.command;
        if (cfg.spec) r.doc.spec = cfg.spec;
        r.doc.error = ErrorDoc{to_string(e.kind()), e.condition(), e.what()};
        r.exit_code = e.exit_code();
    }
    if (cfg.timing)
        r.doc.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string render(const ReportDocument& doc, const std::string& format) {
    if (format == "csv") return render_csv(doc);
    if (format == "text") return render_text(doc);
    return render_json(doc);
}

}  // namespace fewweight
