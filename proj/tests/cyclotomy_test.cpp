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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fewweight/cyclotomy.hpp"
#include "oracle.hpp"

namespace fewweight {
namespace {

oracle::Field oracle_of(const FieldCtx& f) {
    oracle::Poly mod(f.modulus().begin(), f.modulus().end());
    return oracle::Field{f.p(), mod};
}

std::vector<std::int64_t> integers(const std::vector<CyclotomicInteger>& v) {
    std::vector<std::int64_t> out;
    for (const auto& e : v) {
        auto i = e.as_integer();
        EXPECT_TRUE(i.has_value());
        out.push_back(i.value_or(0));
    }
    return out;
}

TEST(CyclotomicInteger, Representation) {
    auto one = CyclotomicInteger::integer(3, 1);
    EXPECT_EQ(one.coeffs(), (std::vector<std::int64_t>{-1, -1}));
    EXPECT_EQ(CyclotomicInteger::zeta_power(3, 0), one);
    EXPECT_EQ(CyclotomicInteger::zeta_power(3, 4), CyclotomicInteger::zeta_power(3, 1));
    EXPECT_EQ(one.as_integer(), 1);
    EXPECT_FALSE(CyclotomicInteger::zeta_power(3, 1).as_integer().has_value());
    // 1 + zeta + zeta^2 = 0
    auto s = one + CyclotomicInteger::zeta_power(3, 1) + CyclotomicInteger::zeta_power(3, 2);
    EXPECT_EQ(s, CyclotomicInteger(3));
    EXPECT_NEAR(std::abs(CyclotomicInteger::zeta_power(5, 2).to_complex() - std::polar(1.0, 4 * std::numbers::pi / 5)),
                0.0, 1e-12);
    EXPECT_THROW(CyclotomicInteger(3) + CyclotomicInteger(5), Error);
}

TEST(CyclotomicInteger, RingLawsAndEmbedding) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto random = [&] {
            std::vector<std::int64_t> c(p - 1);
            for (auto& x : c) x = coeff(rng);
            return CyclotomicInteger(p, c);
        };
        for (int trial = 0; trial < 200; ++trial) {
            auto a = random(), b = random(), c = random();
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a - a, CyclotomicInteger(p));
            EXPECT_EQ(a * CyclotomicInteger::integer(p, 1), a);
            EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-9);
            EXPECT_LT(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 1e-9);
        }
    }
}

TEST(Character, ValuesAndOrthogonality) {
    auto f = build_field(3, 4);
    EXPECT_EQ(canonical_character(f->zero()), CyclotomicInteger::integer(3, 1));
    for (auto a : f->elements()) {
        CyclotomicInteger sum(3);
        for (auto x : f->elements()) sum += canonical_character(a * x);
        EXPECT_EQ(sum, CyclotomicInteger::integer(3, a.is_zero() ? 81 : 0));
    }
}

TEST(ClassIndexer, Examples) {
    auto f81 = build_field(3, 4);
    CyclotomicClassIndexer idx(f81, 4);
    EXPECT_EQ(idx.class_index(f81->primitive_element().pow(4)), 0u);
    EXPECT_EQ(idx.class_index(f81->primitive_element()), 1u);
    EXPECT_THROW(idx.class_index(f81->zero()), Error);
    EXPECT_THROW(CyclotomicClassIndexer(f81, 3), Error);

    // F_9, N = 2: squares are class 0, four per class
    auto f9 = build_field(3, 2);
    auto of = oracle_of(*f9);
    CyclotomicClassIndexer sq(f9, 2);
    std::array<int, 2> counts{};
    for (auto x : f9->elements()) {
        if (x.is_zero()) continue;
        bool square = of.pow(of.decode(x.code()), 4) == of.one();
        EXPECT_EQ(sq.class_index(x), square ? 0u : 1u);
        ++counts[sq.class_index(x)];
    }
    EXPECT_EQ(counts[0], 4);
    EXPECT_EQ(counts[1], 4);
}

TEST(GaussPeriodsDirect, Examples) {
    EXPECT_EQ(integers(gauss_periods_direct(build_field(3, 2), 1)), (std::vector<std::int64_t>{-1}));
    EXPECT_EQ(integers(gauss_periods_direct(build_field(3, 2), 2)), (std::vector<std::int64_t>{1, -2}));
    auto f81 = build_field(3, 4);
    EXPECT_EQ(integers(gauss_periods_direct(f81, 4)), (std::vector<std::int64_t>{-7, 2, 2, 2}));
    EXPECT_EQ(integers(gauss_periods_direct(f81, 5)), (std::vector<std::int64_t>{7, -2, -2, -2, -2}));
    EXPECT_THROW(gauss_periods_direct(f81, 3), Error);
}

TEST(GaussPeriodsDirect, MatchesFloatingPointCharacterSums) {
    for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {2, 4}, {7, 2}}) {
        auto f = build_field(p, d);
        auto of = oracle_of(*f);
        for (auto N : nt::divisors(f->order())) {
            auto direct = gauss_periods_direct(f, static_cast<std::uint32_t>(N));
            auto ref = oracle::gauss_periods(of, static_cast<std::int64_t>(N));
            for (std::size_t i = 0; i < N; ++i)
                EXPECT_LT(std::abs(direct[i].to_complex() - ref[i]), 1e-9) << "q=" << f->size() << " N=" << N;
        }
    }
}

TEST(GaussPeriodsClosedForm, Examples) {
    // (9, 2): p = 3 mod 4, k = 2: eta_0 = (-1 + (-1)(i^2) 3)/2 = 1
    auto q9 = gauss_periods_closed_form(9, 2);
    ASSERT_TRUE(q9);
    EXPECT_EQ(q9->branch, ClosedFormBranch::quadratic);
    EXPECT_EQ(q9->periods[0].rational_value(), Rational(1));
    EXPECT_EQ(q9->periods[1].rational_value(), Rational(-2));

    // (81, 4): j = 1, gamma = 2, case (b)
    auto q81_4 = gauss_periods_closed_form(81, 4);
    ASSERT_TRUE(q81_4);
    EXPECT_EQ(q81_4->branch, ClosedFormBranch::semiprimitive_b);
    EXPECT_EQ(q81_4->j, 1u);
    EXPECT_EQ(q81_4->gamma, 2u);
    EXPECT_EQ(q81_4->periods[0].rational_value(), Rational(-7));
    EXPECT_EQ(q81_4->periods[1].rational_value(), Rational(2));

    // (81, 5): j = 2, gamma = 1, case (b) since (9+1)/5 is even
    auto q81_5 = gauss_periods_closed_form(81, 5);
    ASSERT_TRUE(q81_5);
    EXPECT_EQ(q81_5->branch, ClosedFormBranch::semiprimitive_b);
    EXPECT_EQ(q81_5->j, 2u);
    EXPECT_EQ(q81_5->gamma, 1u);
    EXPECT_EQ(q81_5->periods[0].rational_value(), Rational(7));
    EXPECT_EQ(q81_5->periods[4].rational_value(), Rational(-2));

    auto trivial = gauss_periods_closed_form(81, 1);
    ASSERT_TRUE(trivial);
    EXPECT_EQ(trivial->periods.size(), 1u);
    EXPECT_EQ(trivial->periods[0].rational_value(), Rational(-1));

    EXPECT_FALSE(gauss_periods_closed_form(81, 8).has_value());
    EXPECT_THROW(gauss_periods_closed_form(12, 1), Error);
    EXPECT_THROW(gauss_periods_closed_form(81, 3), Error);
}

TEST(GaussPeriodsClosedForm, CaseA) {
    // (9, 4): j = 1, gamma = 1, p odd, (3+1)/4 = 1 odd
    auto cf = gauss_periods_closed_form(9, 4);
    ASSERT_TRUE(cf);
    EXPECT_EQ(cf->branch, ClosedFormBranch::semiprimitive_a);
    EXPECT_EQ(cf->distinguished_index, 2);
    EXPECT_EQ(cf->periods[2].rational_value(), Rational(2));
    EXPECT_EQ(cf->periods[0].rational_value(), Rational(-1));
    auto direct = integers(gauss_periods_direct(build_field(3, 2), 4));
    EXPECT_EQ(direct, (std::vector<std::int64_t>{-1, -1, 2, -1}));
}

TEST(GaussPeriodsClosedForm, ImaginaryQuadraticBranch) {
    // (27, 2): eta_0 = (-1 + i^3 sqrt 27)/2 = (-1 - i sqrt 27)/2
    auto cf = gauss_periods_closed_form(27, 2);
    ASSERT_TRUE(cf);
    EXPECT_TRUE(cf->periods[0].imaginary);
    EXPECT_FALSE(cf->periods[0].is_rational());
    EXPECT_EQ(cf->periods[0].sqrt_num, -1);
    auto direct = gauss_periods_direct(build_field(3, 3), 2);
    for (int i = 0; i < 2; ++i)
        EXPECT_LT(std::abs(direct[i].to_complex() - cf->periods[i].to_complex()), complex_tolerance);
}

TEST(GaussPeriodsClosedForm, CharacteristicTwo) {
    // F_4, N = 3: j = 1, gamma = 1, p even -> case (b): eta_0 = 1, others -1
    auto cf = gauss_periods_closed_form(4, 3);
    ASSERT_TRUE(cf);
    EXPECT_EQ(cf->branch, ClosedFormBranch::semiprimitive_b);
    EXPECT_EQ(integers(gauss_periods_direct(build_field(2, 2), 3)), (std::vector<std::int64_t>{1, -1, -1}));
    EXPECT_EQ(cf->periods[0].rational_value(), Rational(1));
    EXPECT_EQ(cf->periods[1].rational_value(), Rational(-1));
}

TEST(PeriodBound, Examples) {
    EXPECT_TRUE(period_bound_check(std::vector<std::complex<double>>{{-1.0, 0.0}}, 1, 81));
    EXPECT_TRUE(period_bound_check(std::vector<std::complex<double>>{{1.0, 0.0}, {-2.0, 0.0}}, 2, 9));
    EXPECT_FALSE(period_bound_check(std::vector<std::complex<double>>{{2.0, 0.0}, {-3.0, 0.0}}, 2, 9));
    EXPECT_FALSE(period_bound_check(std::vector<std::complex<double>>{{-0.5, 0.0}}, 1, 81));
}

}  // namespace
}  // namespace fewweight
