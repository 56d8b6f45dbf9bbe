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

// Algebraic property suites. Exhaustive on fields and codes of size at most
// 81, fixed-seed random sampling (at least 1000 cases per suite) above that.
// Usage: property_suites [suite-name ...]

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fewweight/code.hpp"
#include "fewweight/cyclotomy.hpp"

namespace {

using namespace fewweight;
using Code_t = FieldCtx::Code;

constexpr std::uint64_t exhaustive_limit = 81;
constexpr std::uint64_t random_cases = 1000;
constexpr std::uint64_t seed = 0x5eed2026;

struct Tally {
    std::uint64_t exhaustive = 0;
    std::uint64_t sampled = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void check(bool ok, bool random, const std::string& what) {
        (random ? sampled : exhaustive) += 1;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

const std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {2, 4},
                                                                            {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 1},
                                                                            {5, 2}, {7, 2}};
const std::vector<std::pair<std::uint32_t, std::uint32_t>> large_fields = {{3, 5}, {3, 6}, {5, 4}, {7, 3}, {2, 10}};

std::string field_name(const FieldCtx& f) { return "F_" + std::to_string(f.size()); }

void field_laws(Tally& t) {
    auto laws = [&](const FieldCtx& f, Code_t a, Code_t b, Code_t c, bool random) {
        bool ok = f.add_raw(a, b) == f.add_raw(b, a) && f.mul_raw(a, b) == f.mul_raw(b, a) &&
                  f.add_raw(f.add_raw(a, b), c) == f.add_raw(a, f.add_raw(b, c)) &&
                  f.mul_raw(f.mul_raw(a, b), c) == f.mul_raw(a, f.mul_raw(b, c)) &&
                  f.mul_raw(a, f.add_raw(b, c)) == f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c)) &&
                  f.add_raw(a, f.neg_raw(a)) == 0 && f.sub_raw(f.add_raw(a, b), b) == a &&
                  f.frobenius_raw(f.add_raw(a, b), 1) == f.add_raw(f.frobenius_raw(a, 1), f.frobenius_raw(b, 1)) &&
                  (a == 0 || f.mul_raw(a, f.inv_raw(a)) == 1);
        t.check(ok, random,
                field_name(f) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c));
    };
    for (auto [p, d] : small_fields) {
        auto f = build_field(p, d);
        const auto q = f->size();
        if (q > exhaustive_limit) continue;
        for (Code_t a = 0; a < q; ++a)
            for (Code_t b = 0; b < q; ++b)
                for (Code_t c = 0; c < q; ++c) laws(*f, a, b, c, false);
    }
    std::mt19937_64 rng(seed);
    for (auto [p, d] : large_fields) {
        auto f = build_field(p, d);
        std::uniform_int_distribution<Code_t> pick(0, f->size() - 1);
        for (std::uint64_t i = 0; i < random_cases; ++i) laws(*f, pick(rng), pick(rng), pick(rng), true);
    }
}

void trace_transitivity(Tally& t) {
    auto chains = [&](const FieldCtx& f, Code_t x, bool random) {
        const auto d = f.degree();
        for (auto e : nt::divisors(d))
            for (auto g : nt::divisors(e)) {
                // Tr_{d/g} = Tr_{e/g} o Tr_{d/e}
                auto direct = f.relative_trace_raw(x, d, static_cast<std::uint32_t>(g));
                auto mid = f.relative_trace_raw(x, d, static_cast<std::uint32_t>(e));
                auto composed = f.relative_trace_raw(mid, static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(g));
                t.check(direct == composed, random,
                        field_name(f) + " x=" + std::to_string(x) + " e=" + std::to_string(e) +
                            " g=" + std::to_string(g));
            }
    };
    for (auto [p, d] : small_fields) {
        auto f = build_field(p, d);
        if (f->size() > exhaustive_limit) continue;
        for (Code_t x = 0; x < f->size(); ++x) chains(*f, x, false);
    }
    std::mt19937_64 rng(seed + 1);
    for (auto [p, d] : large_fields) {
        auto f = build_field(p, d);
        std::uniform_int_distribution<Code_t> pick(0, f->size() - 1);
        for (std::uint64_t i = 0; i < random_cases; ++i) chains(*f, pick(rng), true);
    }
}

// sum_x chi(a x) = q [a = 0], evaluated exactly in Z[zeta_p]
void character_orthogonality(Tally& t) {
    auto sum_for = [&](const FieldCtx& f, Code_t a, bool random) {
        CyclotomicInteger s(f.p());
        for (Code_t x = 0; x < f.size(); ++x) s.add_zeta_power(f.prime_trace_raw(f.mul_raw(a, x)), 1);
        auto expect = CyclotomicInteger::integer(f.p(), a == 0 ? static_cast<std::int64_t>(f.size()) : 0);
        t.check(s == expect, random, field_name(f) + " a=" + std::to_string(a));
    };
    for (auto [p, d] : small_fields) {
        auto f = build_field(p, d);
        if (f->size() > exhaustive_limit) continue;
        for (Code_t a = 0; a < f->size(); ++a) sum_for(*f, a, false);
    }
    std::mt19937_64 rng(seed + 2);
    for (std::uint64_t i = 0; i < random_cases; ++i) {
        auto [p, d] = large_fields[i % large_fields.size()];
        auto f = build_field(p, d);
        std::uniform_int_distribution<Code_t> pick(0, f->size() - 1);
        sum_for(*f, pick(rng), true);
    }
}

// sum_i eta_i = -1 for every N | q - 1; sampled cases additionally check that
// scaling by omega^k rotates the periods: sum_{x in C_i} chi(omega^k x) = eta_{i+k}.
void period_partition(Tally& t) {
    for (auto [p, d] : small_fields) {
        auto f = build_field(p, d);
        if (f->size() > exhaustive_limit) continue;
        for (auto N : nt::divisors(f->order())) {
            auto eta = gauss_periods_direct(f, static_cast<std::uint32_t>(N));
            CyclotomicInteger s(f->p());
            for (const auto& e : eta) s += e;
            t.check(s == CyclotomicInteger::integer(f->p(), -1), false,
                    field_name(*f) + " N=" + std::to_string(N));
        }
    }
    std::mt19937_64 rng(seed + 3);
    std::vector<std::shared_ptr<const FieldCtx>> fields;
    for (auto [p, d] : large_fields) fields.push_back(build_field(p, d));
    for (std::uint64_t i = 0; i < random_cases; ++i) {
        const auto& f = fields[i % fields.size()];
        auto divs = nt::divisors(f->order());
        auto N = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
        auto k = std::uniform_int_distribution<std::uint64_t>(0, f->order() - 1)(rng);
        auto i0 = std::uniform_int_distribution<std::uint64_t>(0, N - 1)(rng);
        auto eta = gauss_periods_direct(f, static_cast<std::uint32_t>(N));
        CyclotomicInteger s(f->p()), shifted(f->p());
        for (const auto& e : eta) s += e;
        for (std::uint64_t l = i0; l < f->order(); l += N)
            shifted.add_zeta_power(f->prime_trace_raw(f->antilog_raw((l + k) % f->order())), 1);
        t.check(s == CyclotomicInteger::integer(f->p(), -1) && shifted == eta[(i0 + k) % N], true,
                field_name(*f) + " N=" + std::to_string(N) + " k=" + std::to_string(k));
    }
}

// c(a+a', b+b') = c(a,b) + c(a',b') and c(lambda a, lambda b) = lambda c(a,b)
void codeword_linearity(Tally& t) {
    auto add = [](const FieldCtx& f, const std::vector<Code_t>& x, const std::vector<Code_t>& y) {
        std::vector<Code_t> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add_raw(x[i], y[i]);
        return r;
    };
    auto scale = [](const FieldCtx& f, Code_t l, const std::vector<Code_t>& x) {
        std::vector<Code_t> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul_raw(l, x[i]);
        return r;
    };
    auto eval = [](const Code& c, Code_t a, Code_t b) {
        std::vector<Code_t> w;
        c.evaluate_into(a, b, w);
        return w;
    };

    for (CodeSpec spec : {CodeSpec{3, 1, 2, 1, 1, 4}, CodeSpec{3, 1, 2, 2, 2, 4}, CodeSpec{2, 2, 2, 1, 1, 5},
                          CodeSpec{2, 1, 4, 2, 3, 5}, CodeSpec{3, 1, 4, 1, 2, 20}, CodeSpec{3, 1, 4, 2, 5, 8}}) {
        auto code = build_code(spec);
        const auto& f = code.field();
        const auto total = code.message_count();
        std::vector<std::vector<Code_t>> words(total);
        std::vector<std::pair<Code_t, Code_t>> msgs(total);
        std::map<std::pair<Code_t, Code_t>, std::uint64_t> index;
        for (std::uint64_t i = 0; i < total; ++i) {
            msgs[i] = code.message(i);
            words[i] = eval(code, msgs[i].first, msgs[i].second);
            index[msgs[i]] = i;
        }
        for (std::uint64_t i = 0; i < total; ++i) {
            for (std::uint64_t j = i; j < total; ++j) {
                auto sum = index.at({f.add_raw(msgs[i].first, msgs[j].first), f.add_raw(msgs[i].second, msgs[j].second)});
                t.check(words[sum] == add(f, words[i], words[j]), false,
                        spec.to_string() + " pair " + std::to_string(i) + "," + std::to_string(j));
            }
            for (auto l : code.symbol_field().member_codes()) {
                auto sc = index.at({f.mul_raw(l, msgs[i].first), f.mul_raw(l, msgs[i].second)});
                t.check(words[sc] == scale(f, l, words[i]), false,
                        spec.to_string() + " scalar " + std::to_string(l) + " msg " + std::to_string(i));
            }
        }
    }

    std::mt19937_64 rng(seed + 4);
    for (CodeSpec spec : {CodeSpec{3, 1, 5, 1, 11, 11}, CodeSpec{5, 1, 3, 1, 1, 31}, CodeSpec{2, 1, 8, 4, 5, 51},
                          CodeSpec{3, 1, 6, 3, 7, 52}, CodeSpec{11, 1, 2, 1, 3, 4}}) {
        auto code = build_code(spec);
        const auto& f = code.field();
        std::uniform_int_distribution<std::uint64_t> pick(0, code.message_count() - 1);
        const auto& lambdas = code.symbol_field().member_codes();
        std::uniform_int_distribution<std::size_t> pick_l(0, lambdas.size() - 1);
        for (std::uint64_t i = 0; i < random_cases; ++i) {
            auto [a, b] = code.message(pick(rng));
            auto [a2, b2] = code.message(pick(rng));
            auto l = lambdas[pick_l(rng)];
            bool ok = eval(code, f.add_raw(a, a2), f.add_raw(b, b2)) == add(f, eval(code, a, b), eval(code, a2, b2)) &&
                      eval(code, f.mul_raw(l, a), f.mul_raw(l, b)) == scale(f, l, eval(code, a, b));
            t.check(ok, true, spec.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> suites = {
        {"field-laws", field_laws},
        {"trace-transitivity", trace_transitivity},
        {"character-orthogonality", character_orthogonality},
        {"period-partition", period_partition},
        {"codeword-linearity", codeword_linearity},
    };
    std::vector<std::string> wanted(argv + 1, argv + argc);
    int failed = 0;
    for (const auto& [name, run] : suites) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
        Tally t;
        try {
            run(t);
        } catch (const std::exception& e) {
            t.failures++;
            t.first_failure = std::string("exception: ") + e.what();
        }
        bool ok = t.failures == 0 && t.sampled >= random_cases;
        std::printf("%s %s exhaustive=%llu sampled=%llu failures=%llu%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    static_cast<unsigned long long>(t.exhaustive), static_cast<unsigned long long>(t.sampled),
                    static_cast<unsigned long long>(t.failures), t.first_failure.empty() ? "" : " first: ",
                    t.first_failure.c_str());
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
