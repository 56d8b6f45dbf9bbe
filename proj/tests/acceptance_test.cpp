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

// Acceptance checks AC1..AC7, one PASS/FAIL line each. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "fewweight/analysis.hpp"
#include "fewweight/commands.hpp"

namespace {

using namespace fewweight;
using Clock = std::chrono::steady_clock;
using Counts = std::map<std::uint64_t, std::uint64_t>;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

unsigned worker_threads() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// Every reference example: brute force and both prediction routes equal the
// stated enumerator, and [n,k,d] matches.
Outcome ac1() {
    Outcome o;
    auto t0 = Clock::now();
    for (const auto& ex : reference_examples()) {
        auto expected = parse_enumerator(ex.enumerator);
        auto code = build_code(ex.spec);
        auto wd = weight_distribution_bruteforce(code, {}, worker_threads());
        if (wd.counts != expected) o.fail(ex.name + ": enumeration gave " + enumerator_string(wd));
        if (code.length() != ex.length || wd.measured_dimension != ex.dimension || wd.min_distance() != ex.d)
            o.fail(ex.name + ": [n,k,d] mismatch");
        auto direct = predicted_distribution(ex.spec, PeriodSource::direct).code_counts();
        if (direct != expected) o.fail(ex.name + ": direct-period prediction gave " + enumerator_string(direct));
        if (preferred_period_source(ex.spec) == PeriodSource::closed_form) {
            auto closed = predicted_distribution(ex.spec, PeriodSource::closed_form).code_counts();
            if (closed != expected) o.fail(ex.name + ": closed-form prediction gave " + enumerator_string(closed));
        }
    }
    auto secs = seconds_since(t0);
    if (secs >= 5.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.ok) o.detail = "7/7 examples, " + std::to_string(secs) + " s";
    return o;
}

Outcome ac2() {
    Outcome o;
    struct Row {
        std::uint64_t n, k, d;
        bool meets;
        std::int64_t defect;
    };
    for (auto r : {Row{24, 3, 16, true, 0}, Row{72, 4, 48, true, 0}, Row{48, 3, 32, false, 1}}) {
        auto g = griesmer_report(r.n, r.k, r.d, 3);
        if (g.meets_bound != r.meets || g.defect != r.defect)
            o.fail("[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "] defect " +
                   std::to_string(g.defect));
    }
    // and from the measured parameters of Examples 1-3
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& ex = reference_examples()[i];
        auto wd = weight_distribution_bruteforce(build_code(ex.spec));
        auto g = griesmer_report(ex.spec.length(), wd.measured_dimension, wd.min_distance(), 3);
        if (g.defect != ex.griesmer_defect.value_or(-1)) o.fail(ex.name + ": measured defect " + std::to_string(g.defect));
    }
    if (o.ok) o.detail = "[24,3,16] and [72,4,48] meet the bound, [48,3,32] defect 1";
    return o;
}

// Pair-level comparison over the full p = 3, s = 1, m in {2, 4} grid.
Outcome ac3() {
    Outcome o;
    auto t0 = Clock::now();
    int points = 0;
    for (std::uint64_t m : {2u, 4u}) {
        for (auto m1 : nt::divisors(m)) {
            std::uint64_t proj = (nt::ipow(3, m) - 1) / 2;
            for (auto h : nt::divisors(proj)) {
                auto step = proj / h;
                for (auto n : {step, 2 * step}) {
                    auto spec = validate_spec(3, 1, m, m1, h, n);
                    auto code = build_code(spec);
                    auto wd = weight_distribution_bruteforce(code, {}, worker_threads());
                    Counts pairs;
                    for (auto [w, c] : wd.counts) pairs[w] = c * wd.kernel_size;
                    auto pd = predicted_distribution(spec, preferred_period_source(spec));
                    if (pd.merged() != pairs) o.fail(spec.to_string() + " mismatch");
                    ++points;
                }
            }
        }
    }
    auto secs = seconds_since(t0);
    if (points < 20) o.fail("only " + std::to_string(points) + " parameter points");
    if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.ok) o.detail = std::to_string(points) + " parameter points, " + std::to_string(secs) + " s";
    return o;
}

Outcome ac4() {
    Outcome o;
    int closed_checked = 0, bound_checked = 0;
    for (std::uint64_t q : {9u, 27u, 81u}) {
        auto pp = *nt::prime_power(q);
        auto f = build_field(pp.first, pp.second);
        for (auto N : nt::divisors(q - 1)) {
            auto direct = gauss_periods_direct(f, static_cast<std::uint32_t>(N));
            if (!period_bound_check(direct, N, q))
                o.fail("bound fails at q=" + std::to_string(q) + " N=" + std::to_string(N));
            ++bound_checked;
            auto cf = gauss_periods_closed_form(q, N);
            if (!cf) continue;
            ++closed_checked;
            std::vector<Rational> dr, cr;
            bool rational = true;
            for (std::size_t i = 0; i < N; ++i) {
                if (std::abs(direct[i].to_complex() - cf->periods[i].to_complex()) > complex_tolerance)
                    o.fail("q=" + std::to_string(q) + " N=" + std::to_string(N) + " index " + std::to_string(i));
                auto di = direct[i].as_integer();
                auto ci = cf->periods[i].rational_value();
                if (di && ci) {
                    dr.emplace_back(*di);
                    cr.push_back(*ci);
                } else {
                    rational = false;
                }
            }
            if (rational) {
                auto less = [](const Rational& a, const Rational& b) { return a < b; };
                std::sort(dr.begin(), dr.end(), less);
                std::sort(cr.begin(), cr.end(), less);
                if (dr != cr) o.fail("multisets differ at q=" + std::to_string(q) + " N=" + std::to_string(N));
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(closed_checked) + " closed forms agree, bound holds for " +
                   std::to_string(bound_checked) + " (q, N)";
    return o;
}

Outcome ac5() {
    Outcome o;
    int certified = 0;
    for (const auto& ex : reference_examples()) {
        auto code = build_code(ex.spec);
        auto wd = weight_distribution_bruteforce(code);
        bool by_ratio = minimality_report(wd, code.q()).minimal_by_ratio;
        bool oracle = minimal_codewords_bruteforce(code);
        if (by_ratio && !oracle) o.fail(ex.name + ": certified by ratio but refuted");
        if (ex.name == "example-1" && !(by_ratio && oracle)) o.fail("example-1 not certified and confirmed");
        certified += by_ratio;
    }
    if (o.ok) o.detail = std::to_string(certified) + " certified, all confirmed";
    return o;
}

Outcome ac6() {
    Outcome o;
    for (const auto& ex : reference_examples()) {
        auto c = dual_distance_class(build_code(ex.spec));
        if (c != DualDistanceClass::two) o.fail(ex.name + ": " + to_string(c));
    }
    if (o.ok) o.detail = "=2 for all seven";
    return o;
}

Outcome ac7() {
    Outcome o;
    std::string cmd = std::string("\"") + FEWWEIGHT_PROPERTY_SUITES + "\"";
    int rc = std::system(cmd.c_str());
    if (rc != 0) o.fail("property_suites exit status " + std::to_string(rc));
    if (o.ok) o.detail = "property_suites passed";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"AC1 reference examples", ac1},        {"AC2 Griesmer verdicts", ac2},
        {"AC3 prediction sweep", ac3},          {"AC4 Gauss period cross-check", ac4},
        {"AC5 minimality oracle soundness", ac5}, {"AC6 dual distance", ac6},
        {"AC7 property suites", ac7},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
