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
 * @file analysis.hpp
 * @brief Weight distributions (enumerated and predicted), Griesmer bound,
 *        minimality and secret-sharing classification.
 *
 * The predicted distribution counts (a, b) pairs: weight 0 for a = b = 0,
 * 2nq^{m1-1}(q-1) for a != 0, and for a = 0, b in C_i^{(h,q^m)}
 *
 *     w_i = 2nq^{m1-1}(q-1) (q^m - 1 - h eta_i) / (q^m - 1).
 *
 * Enumeration counts the same pairs. Dividing by the number of pairs mapped
 * to the zero word (the kernel size) gives the distribution of the code.
 */

#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "code.hpp"
#include "cyclotomy.hpp"
#include "error.hpp"
#include "number_theory.hpp"

namespace fewweight {

template <class C>
concept EnumerableCode = requires(const C& c, std::uint64_t i, const CodewordSink& sink) {
    { c.length() } -> std::convertible_to<std::uint64_t>;
    { c.message_count() } -> std::convertible_to<std::uint64_t>;
    { c.q() } -> std::convertible_to<std::uint64_t>;
    { c.field() } -> std::same_as<const FieldCtx&>;
    { c.generator_rows() } -> std::same_as<std::vector<Codeword>>;
    c.for_each_codeword(i, i, sink);
};

// ---------------------------------------------------------------------------
// Weight distributions

struct WeightDistribution {
    std::map<std::uint64_t, std::uint64_t> counts;  ///< weight -> number of codewords
    std::uint64_t length = 0;
    std::uint64_t q = 0;
    std::uint64_t kernel_size = 1;  ///< messages mapped to the zero word
    std::uint64_t measured_dimension = 0;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto [w, c] : counts) t += c;
        return t;
    }
    /// Smallest nonzero weight; 0 for the zero code.
    std::uint64_t min_distance() const {
        for (auto [w, c] : counts)
            if (w != 0 && c != 0) return w;
        return 0;
    }
    std::uint64_t max_weight() const {
        for (auto it = counts.rbegin(); it != counts.rend(); ++it)
            if (it->first != 0 && it->second != 0) return it->first;
        return 0;
    }
    std::size_t nonzero_weight_count() const {
        return static_cast<std::size_t>(
            std::count_if(counts.begin(), counts.end(), [](auto& kv) { return kv.first != 0 && kv.second != 0; }));
    }
};

/// "1 + 18z^16 + 8z^18": increasing weight, zero terms omitted, coefficient 1 omitted.
inline std::string enumerator_string(const std::map<std::uint64_t, std::uint64_t>& counts) {
    std::string s;
    for (auto [w, c] : counts) {
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (w == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += "z^" + std::to_string(w);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string enumerator_string(const WeightDistribution& wd) { return enumerator_string(wd.counts); }

/// Inverse of enumerator_string. Also accepts "z" for z^1 and "z^{16}".
inline std::map<std::uint64_t, std::uint64_t> parse_enumerator(const std::string& text) {
    std::map<std::uint64_t, std::uint64_t> out;
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '{' && ch != '}') t += ch;
    auto bad = [&] { fail(ErrorKind::validation, "bad_enumerator", "cannot parse enumerator '" + text + "'"); };
    if (t.empty()) bad();
    std::size_t pos = 0;
    while (pos <= t.size()) {
        auto next = t.find('+', pos);
        std::string term = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) bad();
        auto zpos = term.find('z');
        std::uint64_t coeff = 1, weight = 0;
        try {
            if (zpos == std::string::npos) {
                coeff = std::stoull(term);
            } else {
                if (zpos > 0) coeff = std::stoull(term.substr(0, zpos));
                auto rest = term.substr(zpos + 1);
                if (rest.empty())
                    weight = 1;
                else if (rest[0] == '^' && rest.size() > 1)
                    weight = std::stoull(rest.substr(1));
                else
                    bad();
            }
        } catch (const std::logic_error&) {
            bad();
        }
        out[weight] += coeff;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

/// Exhaustive enumeration over all messages, optionally split across threads.
template <EnumerableCode C>
WeightDistribution weight_distribution_bruteforce(const C& code, const Limits& limits = {}, unsigned threads = 1) {
    const auto total = code.message_count();
    if (total > limits.enum_cap)
        fail(ErrorKind::cap_exceeded, "enum_cap_exceeded",
             std::to_string(total) + " codewords exceed enumeration cap " + std::to_string(limits.enum_cap));
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));

    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(threads);
    auto work = [&](unsigned t) {
        auto begin = total * t / threads;
        auto end = total * (t + 1) / threads;
        auto& local = partial[t];
        code.for_each_codeword(begin, end, [&](std::uint64_t, const std::vector<FieldCtx::Code>& w) {
            std::uint64_t wt = 0;
            for (auto c : w) wt += (c != 0);
            ++local[wt];
        });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    std::map<std::uint64_t, std::uint64_t> pairs;
    for (const auto& part : partial)
        for (auto [w, c] : part) pairs[w] += c;

    WeightDistribution wd;
    wd.length = code.length();
    wd.q = code.q();
    wd.kernel_size = pairs[0];
    for (auto [w, c] : pairs) {
        if (c % wd.kernel_size != 0)
            fail(ErrorKind::internal, "nonlinear_enumeration", "weight counts not divisible by kernel size");
        wd.counts[w] = c / wd.kernel_size;
    }
    std::uint64_t distinct = total / wd.kernel_size;
    std::uint64_t dim = 0;
    for (std::uint64_t v = 1; v < distinct; v *= wd.q) ++dim;
    if (nt::ipow(wd.q, dim) != distinct)
        fail(ErrorKind::internal, "nonlinear_enumeration", "codeword count is not a power of q");
    wd.measured_dimension = dim;
    return wd;
}

// ---------------------------------------------------------------------------
// Predicted distribution

enum class PeriodSource { direct, closed_form };

inline const char* to_string(PeriodSource s) { return s == PeriodSource::direct ? "direct" : "closed-form"; }

/// Gauss periods of order h in F_{q^m} as rationals, from the requested source.
inline std::vector<Rational> rational_periods(const CodeSpec& spec, PeriodSource source, const Limits& limits = {}) {
    std::vector<Rational> out;
    if (source == PeriodSource::closed_form) {
        auto cf = gauss_periods_closed_form(spec.qm(), spec.h);
        if (!cf)
            fail(ErrorKind::validation, "no_period_source",
                 "no closed form for Gauss periods of order " + std::to_string(spec.h) + " in F_" +
                     std::to_string(spec.qm()));
        for (const auto& e : cf->periods) {
            auto r = e.rational_value();
            if (!r)
                fail(ErrorKind::validation, "no_period_source",
                     "closed-form period " + e.to_string() + " is irrational");
            out.push_back(*r);
        }
        return out;
    }
    auto ctx = build_field(spec.p, spec.s * spec.m, limits);
    for (const auto& eta : gauss_periods_direct(ctx, static_cast<std::uint32_t>(spec.h))) {
        auto v = eta.as_integer();
        if (!v) fail(ErrorKind::internal, "non_rational_period", "direct Gauss period is not a rational integer");
        out.emplace_back(*v);
    }
    return out;
}

enum class WeightCase { zero, a_zero, a_nonzero };

/// Weight of c(a,b) for the given case. Throws ErrorKind::internal if the
/// expression is not a nonnegative integer.
inline std::uint64_t predicted_weight(const CodeSpec& spec, WeightCase wcase, std::optional<std::uint32_t> class_index,
                                      const std::vector<Rational>& periods) {
    using i128 = __int128;
    const i128 q = spec.q(), qm = spec.qm();
    const i128 scale = i128{2} * spec.n * static_cast<i128>(nt::ipow(spec.q(), spec.m1 - 1)) * (q - 1);
    switch (wcase) {
        case WeightCase::zero: return 0;
        case WeightCase::a_nonzero: return static_cast<std::uint64_t>(scale);
        case WeightCase::a_zero: break;
    }
    if (!class_index || *class_index >= periods.size())
        fail(ErrorKind::validation, "bad_class_index", "class index out of range");
    const auto& eta = periods[*class_index];
    // scale * (qm - 1 - h*eta) / (qm - 1) with eta = num/den
    i128 num = scale * ((qm - 1) * eta.denominator() - static_cast<i128>(spec.h) * eta.numerator());
    i128 den = (qm - 1) * eta.denominator();
    if (num % den != 0 || num / den < 0)
        fail(ErrorKind::internal, "non_integral_weight",
             "predicted weight for class " + std::to_string(*class_index) + " of " + spec.to_string() +
                 " is not a nonnegative integer");
    return static_cast<std::uint64_t>(num / den);
}

struct PredictedRow {
    std::uint64_t weight = 0;
    std::uint64_t frequency = 0;
    std::string provenance;
};

struct PredictedDistribution {
    std::vector<PredictedRow> rows;  ///< unmerged, one per case / class
    PeriodSource source = PeriodSource::direct;
    std::vector<Rational> periods;

    /// Pair counts merged by weight; sums to q^{m+m1}.
    std::map<std::uint64_t, std::uint64_t> merged() const {
        std::map<std::uint64_t, std::uint64_t> out;
        for (const auto& r : rows) out[r.weight] += r.frequency;
        return out;
    }

    /// Distribution of the code itself (pair counts divided by the kernel size).
    std::map<std::uint64_t, std::uint64_t> code_counts() const {
        auto m = merged();
        auto kernel = m[0];
        for (auto& [w, c] : m) {
            if (c % kernel != 0)
                fail(ErrorKind::internal, "inconsistent_prediction", "frequencies not divisible by kernel size");
            c /= kernel;
        }
        return m;
    }
};

/// Rows from explicit periods (one per class of order h).
inline PredictedDistribution predicted_distribution_from_periods(const CodeSpec& spec, std::vector<Rational> periods,
                                                                 PeriodSource source) {
    if (periods.size() != spec.h)
        fail(ErrorKind::validation, "bad_period_count", "need exactly h Gauss periods");
    PredictedDistribution pd;
    pd.source = source;
    const auto qm = spec.qm();
    pd.rows.push_back({0, 1, "a=b=0"});
    pd.rows.push_back({predicted_weight(spec, WeightCase::a_nonzero, std::nullopt, periods), qm * spec.qm1() - qm,
                       "a!=0"});
    for (std::uint32_t i = 0; i < spec.h; ++i)
        pd.rows.push_back({predicted_weight(spec, WeightCase::a_zero, i, periods), (qm - 1) / spec.h,
                           "a=0, b in C_" + std::to_string(i)});
    pd.periods = std::move(periods);
    return pd;
}

inline PredictedDistribution predicted_distribution(const CodeSpec& spec, PeriodSource source,
                                                    const Limits& limits = {}) {
    return predicted_distribution_from_periods(spec, rational_periods(spec, source, limits), source);
}

/// Closed form when available and rational, direct summation otherwise.
inline PeriodSource preferred_period_source(const CodeSpec& spec) {
    auto cf = gauss_periods_closed_form(spec.qm(), spec.h);
    if (!cf) return PeriodSource::direct;
    for (const auto& e : cf->periods)
        if (!e.is_rational()) return PeriodSource::direct;
    return PeriodSource::closed_form;
}

struct DistributionDiff {
    std::uint64_t weight;
    std::uint64_t predicted;
    std::uint64_t enumerated;
};

inline std::vector<DistributionDiff> diff_distributions(const std::map<std::uint64_t, std::uint64_t>& predicted,
                                                        const std::map<std::uint64_t, std::uint64_t>& enumerated) {
    std::set<std::uint64_t> weights;
    for (auto [w, c] : predicted) weights.insert(w);
    for (auto [w, c] : enumerated) weights.insert(w);
    std::vector<DistributionDiff> out;
    for (auto w : weights) {
        auto a = predicted.count(w) ? predicted.at(w) : 0;
        auto b = enumerated.count(w) ? enumerated.at(w) : 0;
        if (a != b) out.push_back({w, a, b});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minimum distance lower bound

/// ceil( 2nq^{m/2+m1-1}(q-1)/(q^m-1) * (q^{m/2}+1-h) ), or nullopt when
/// h >= q^{m/2} + 1. Exact for odd m as well.
inline std::optional<std::uint64_t> minimum_distance_lower_bound(const CodeSpec& spec) {
    using boost::multiprecision::cpp_int;
    const cpp_int q = spec.q();
    const cpp_int qm = spec.qm();
    const cpp_int h = spec.h;
    const cpp_int K = cpp_int(2) * spec.n * cpp_int(nt::ipow(spec.q(), spec.m1 - 1)) * (q - 1);
    const cpp_int D = qm - 1;
    // value = (K*qm - K*(h-1)*r) / D with r = q^{m/2}
    if (spec.m % 2 == 0) {
        cpp_int r = nt::ipow(spec.q(), spec.m / 2);
        if (h >= r + 1) return std::nullopt;
        cpp_int num = K * qm - K * (h - 1) * r;
        cpp_int c = (num + D - 1) / D;
        return static_cast<std::uint64_t>(c);
    }
    // r = q^{(m-1)/2} sqrt(q) irrational: h < r + 1  <=>  (h-1)^2 < r^2 (h >= 1)
    const cpp_int r2 = qm;
    if ((h - 1) * (h - 1) >= r2) return std::nullopt;
    const cpp_int A = K * qm;
    const cpp_int B = K * (h - 1) * cpp_int(nt::ipow(spec.q(), (spec.m - 1) / 2));
    // c*D >= A - B sqrt(q)  <=>  B sqrt(q) >= A - c*D
    auto ok = [&](const cpp_int& c) {
        cpp_int rhs = A - c * D;
        if (rhs <= 0) return true;
        return B * B * q >= rhs * rhs;
    };
    double approx = (static_cast<double>(A) - static_cast<double>(B) * std::sqrt(static_cast<double>(spec.q()))) /
                    static_cast<double>(D);
    cpp_int c = static_cast<std::int64_t>(std::ceil(approx)) + 2;
    if (c < 0) c = 0;
    while (c > 0 && ok(c - 1)) --c;
    while (!ok(c)) ++c;
    return static_cast<std::uint64_t>(c);
}

// ---------------------------------------------------------------------------
// Griesmer bound

struct OptimalityReport {
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    std::uint64_t d = 0;
    std::uint64_t q = 0;
    std::uint64_t griesmer_length = 0;
    bool meets_bound = false;
    std::int64_t defect = 0;
    /// [length, dimension, d+1] would violate the bound.
    bool griesmer_unimprovable = false;
    std::string note;
};

/// sum_{i<k} ceil(d / q^i)
inline std::uint64_t griesmer_length(std::uint64_t dimension, std::uint64_t d, std::uint64_t q) {
    std::uint64_t sum = 0;
    std::uint64_t qi = 1;
    for (std::uint64_t i = 0; i < dimension; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi > d) {
            sum += dimension - i - 1;  // every remaining term is 1
            break;
        }
        qi *= q;
    }
    return sum;
}

inline OptimalityReport griesmer_report(std::uint64_t length, std::uint64_t dimension, std::uint64_t d,
                                        std::uint64_t q) {
    if (d < 1 || dimension < 1) fail(ErrorKind::validation, "bad_code_parameters", "need d >= 1 and k >= 1");
    OptimalityReport r;
    r.length = length;
    r.dimension = dimension;
    r.d = d;
    r.q = q;
    r.griesmer_length = griesmer_length(dimension, d, q);
    r.defect = static_cast<std::int64_t>(length) - static_cast<std::int64_t>(r.griesmer_length);
    r.meets_bound = r.defect == 0;
    r.griesmer_unimprovable = griesmer_length(dimension, d + 1, q) > length;
    if (r.defect < 0)
        r.note = "violates the Griesmer bound";
    else if (r.meets_bound)
        r.note = "meets the Griesmer bound";
    else
        r.note = "exceeds the Griesmer length by " + std::to_string(r.defect) +
                 (r.griesmer_unimprovable ? "; d+1 is impossible at this length and dimension"
                                          : "; d+1 is not excluded by the bound");
    return r;
}

// ---------------------------------------------------------------------------
// Minimality and secret sharing

struct MinimalityReport {
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
    bool minimal_by_ratio = false;
    Rational ratio_margin;  ///< w_min/w_max - (q-1)/q
};

/// w_min / w_max > (q-1)/q, in integers.
inline MinimalityReport minimality_report(const WeightDistribution& wd, std::uint64_t q) {
    MinimalityReport r;
    r.w_min = wd.min_distance();
    r.w_max = wd.max_weight();
    if (r.w_max == 0) fail(ErrorKind::validation, "trivial_code", "distribution has no nonzero weight");
    r.minimal_by_ratio = r.w_min * q > r.w_max * (q - 1);
    r.ratio_margin = Rational(static_cast<std::int64_t>(r.w_min), static_cast<std::int64_t>(r.w_max)) -
                     Rational(static_cast<std::int64_t>(q - 1), static_cast<std::int64_t>(q));
    return r;
}

/// Sufficient conditions for minimality attached to the h = 1, h = 2 and
/// semiprimitive families, evaluated as stated. nullopt if no family applies.
struct StructuralMinimality {
    std::string family;
    std::string condition;
    bool holds = false;
};

inline std::optional<StructuralMinimality> structural_minimality(const CodeSpec& spec) {
    const auto q = spec.q();
    if (spec.h == 1) return StructuralMinimality{"h=1", "m > 1", spec.m > 1};
    if (spec.h == 2 && spec.p % 2 == 1) return StructuralMinimality{"h=2", "m > 2", spec.m > 2};
    if (spec.m % 2 != 0) return std::nullopt;
    auto r = nt::ipow(q, spec.m / 2);
    if (spec.h < 2 || spec.h >= r + 1) return std::nullopt;
    auto j = semiprimitive_j(spec.p, spec.s * spec.m, spec.h);
    if (j == 0) return std::nullopt;
    auto gamma = spec.s * spec.m / (2 * j);
    if (gamma % 2 == 0)
        return StructuralMinimality{"semiprimitive", "gamma even and h(q-1) < q^(m/2)-1", spec.h * (q - 1) < r - 1};
    return StructuralMinimality{"semiprimitive", "gamma odd and hq < q^(m/2)+1", spec.h * q < r + 1};
}

namespace detail {

using Support = std::vector<std::uint64_t>;

inline Support support_of(const std::vector<FieldCtx::Code>& w) {
    Support s((w.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) s[i / 64] |= std::uint64_t{1} << (i % 64);
    return s;
}

inline bool covers(const Support& big, const Support& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if ((small[i] & ~big[i]) != 0) return false;
    return true;
}

}  // namespace detail

/// Exhaustive check that every nonzero codeword covers only its own scalar
/// multiples. Quadratic in the number of codewords; limited by pair_cap.
template <EnumerableCode C>
bool minimal_codewords_bruteforce(const C& code, const Limits& limits = {}) {
    const auto total = code.message_count();
    if (total > limits.pair_cap)
        fail(ErrorKind::cap_exceeded, "pair_cap_exceeded",
             std::to_string(total) + " codewords exceed pair-check cap " + std::to_string(limits.pair_cap));
    const auto& f = code.field();
    std::vector<std::vector<FieldCtx::Code>> words;
    std::set<std::vector<FieldCtx::Code>> seen;
    code.for_each_codeword(0, total, [&](std::uint64_t, const std::vector<FieldCtx::Code>& w) {
        bool nonzero = std::any_of(w.begin(), w.end(), [](auto c) { return c != 0; });
        if (nonzero && seen.insert(w).second) words.push_back(w);
    });
    std::vector<detail::Support> supports;
    supports.reserve(words.size());
    for (const auto& w : words) supports.push_back(detail::support_of(w));

    auto proportional = [&](const std::vector<FieldCtx::Code>& x, const std::vector<FieldCtx::Code>& y) {
        std::size_t k = 0;
        while (x[k] == 0) ++k;
        auto lambda = f.mul_raw(y[k], f.inv_raw(x[k]));
        for (std::size_t i = 0; i < x.size(); ++i)
            if (f.mul_raw(x[i], lambda) != y[i]) return false;
        return true;
    };
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j || !detail::covers(supports[i], supports[j])) continue;
            if (supports[i] != supports[j]) return false;
            if (!proportional(words[i], words[j])) return false;
        }
    }
    return true;
}

enum class DualDistanceClass { one, two, at_least_three };

inline const char* to_string(DualDistanceClass c) {
    switch (c) {
        case DualDistanceClass::one: return "=1";
        case DualDistanceClass::two: return "=2";
        case DualDistanceClass::at_least_three: return ">=3";
    }
    return "?";
}

/// Looks for a zero column, then for two F_q-proportional columns, in the
/// matrix whose rows are generator_rows().
template <EnumerableCode C>
DualDistanceClass dual_distance_class(const C& code) {
    const auto rows = code.generator_rows();
    const auto& f = code.field();
    const auto len = code.length();
    std::set<std::vector<FieldCtx::Code>> normalized;
    bool proportional_pair = false;
    for (std::uint64_t j = 0; j < len; ++j) {
        std::vector<FieldCtx::Code> col(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) col[r] = rows[r].coords[j];
        auto lead = std::find_if(col.begin(), col.end(), [](auto c) { return c != 0; });
        if (lead == col.end()) return DualDistanceClass::one;
        auto inv = f.inv_raw(*lead);
        for (auto& c : col) c = f.mul_raw(c, inv);
        if (!normalized.insert(std::move(col)).second) proportional_pair = true;
    }
    return proportional_pair ? DualDistanceClass::two : DualDistanceClass::at_least_three;
}

struct SSSReport {
    MinimalityReport minimality;
    std::optional<bool> oracle_minimal;  ///< exhaustive check, when run
    std::optional<StructuralMinimality> structural;
    DualDistanceClass dual_distance = DualDistanceClass::at_least_three;
    std::string regime;  ///< "dictatorial" | "democratic" | "n/a"
    std::string reason;
};

/// Regime of the Massey scheme on a code: requires certified minimality (ratio
/// or exhaustive oracle), then d-perp >= 3 -> democratic, d-perp = 2 -> dictatorial.
template <EnumerableCode C>
SSSReport sss_classification(const C& code, const WeightDistribution& wd, std::optional<bool> oracle_minimal) {
    SSSReport r;
    r.minimality = minimality_report(wd, code.q());
    r.oracle_minimal = oracle_minimal;
    r.dual_distance = dual_distance_class(code);
    const bool certified = r.minimality.minimal_by_ratio || oracle_minimal.value_or(false);
    if (!certified) {
        r.regime = "n/a";
        r.reason = oracle_minimal.has_value() ? "code is not minimal" : "minimality not certified by the weight ratio";
        return r;
    }
    switch (r.dual_distance) {
        case DualDistanceClass::two:
            r.regime = "dictatorial";
            r.reason = "minimal code with dual distance 2";
            break;
        case DualDistanceClass::at_least_three:
            r.regime = "democratic";
            r.reason = "minimal code with dual distance >= 3";
            break;
        case DualDistanceClass::one:
            r.regime = "n/a";
            r.reason = "a coordinate is identically zero";
            break;
    }
    return r;
}

inline SSSReport sss_classification(const Code& code, const WeightDistribution& wd, std::optional<bool> oracle_minimal) {
    auto r = sss_classification<Code>(code, wd, oracle_minimal);
    r.structural = structural_minimality(code.spec());
    return r;
}

}  // namespace fewweight
