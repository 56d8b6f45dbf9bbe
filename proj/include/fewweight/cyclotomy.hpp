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
 * @file cyclotomy.hpp
 * @brief Additive characters, cyclotomic classes and Gauss periods.
 *
 * Character values live in Z[zeta_p] and are kept exact as CyclotomicInteger
 * in the basis {zeta, zeta^2, ..., zeta^{p-1}}; the constant 1 is written as
 * -(zeta + ... + zeta^{p-1}). Closed-form periods keep the square root
 * symbolic and are compared with the direct sums through a complex embedding.
 */

#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "number_theory.hpp"

namespace fewweight {

using Rational = boost::rational<std::int64_t>;

inline constexpr double complex_tolerance = 1e-9;

class CyclotomicInteger {
public:
    explicit CyclotomicInteger(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {}
    CyclotomicInteger(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != p - 1) fail(ErrorKind::validation, "bad_cyclotomic", "need p-1 coefficients");
    }

    static CyclotomicInteger integer(std::uint32_t p, std::int64_t c) {
        return CyclotomicInteger(p, std::vector<std::int64_t>(p - 1, -c));
    }
    /// zeta_p^k
    static CyclotomicInteger zeta_power(std::uint32_t p, std::int64_t k) {
        CyclotomicInteger z(p);
        z.add_zeta_power(k, 1);
        return z;
    }

    std::uint32_t conductor() const { return p_; }
    /// coefficients c_1..c_{p-1} of zeta^1..zeta^{p-1}
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Adds times * zeta^k in place.
    void add_zeta_power(std::int64_t k, std::int64_t times) {
        auto e = static_cast<std::uint32_t>(((k % p_) + p_) % p_);
        if (e == 0) {
            for (auto& c : coeffs_) c -= times;
        } else {
            coeffs_[e - 1] += times;
        }
    }

    /// Some(c) iff the value is the rational integer c.
    std::optional<std::int64_t> as_integer() const {
        for (auto c : coeffs_)
            if (c != coeffs_[0]) return std::nullopt;
        return -coeffs_[0];
    }

    std::complex<double> to_complex() const {
        std::complex<double> z{0.0, 0.0};
        for (std::uint32_t j = 1; j < p_; ++j) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_);
            z += static_cast<double>(coeffs_[j - 1]) * std::polar(1.0, theta);
        }
        return z;
    }

    CyclotomicInteger operator+(const CyclotomicInteger& o) const {
        check(o);
        CyclotomicInteger r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
        return r;
    }
    CyclotomicInteger operator-(const CyclotomicInteger& o) const {
        check(o);
        CyclotomicInteger r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
        return r;
    }
    CyclotomicInteger operator-() const { return CyclotomicInteger(p_) - *this; }
    CyclotomicInteger operator*(const CyclotomicInteger& o) const {
        check(o);
        CyclotomicInteger r(p_);
        for (std::uint32_t i = 1; i < p_; ++i) {
            if (coeffs_[i - 1] == 0) continue;
            for (std::uint32_t j = 1; j < p_; ++j)
                if (o.coeffs_[j - 1] != 0) r.add_zeta_power(i + j, coeffs_[i - 1] * o.coeffs_[j - 1]);
        }
        return r;
    }
    CyclotomicInteger& operator+=(const CyclotomicInteger& o) { return *this = *this + o; }

    bool operator==(const CyclotomicInteger& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }
    bool operator!=(const CyclotomicInteger& o) const { return !(*this == o); }

private:
    void check(const CyclotomicInteger& o) const {
        if (p_ != o.p_) fail(ErrorKind::validation, "mixed_conductor", "cyclotomic integers with different p");
    }

    std::uint32_t p_;
    std::vector<std::int64_t> coeffs_;
};

/// (c + t * i^u * sqrt(Q)) / N, with u in {0, 1}.
struct ClosedFormPeriod {
    std::int64_t const_num = 0;
    std::int64_t sqrt_num = 0;
    bool imaginary = false;
    std::uint64_t radicand = 1;
    std::int64_t denom = 1;

    bool is_rational() const { return sqrt_num == 0 || (!imaginary && nt::is_square(radicand)); }

    std::optional<Rational> rational_value() const {
        if (!is_rational()) return std::nullopt;
        auto root = static_cast<std::int64_t>(nt::isqrt(radicand));
        return Rational(const_num + (sqrt_num == 0 ? 0 : sqrt_num * root), denom);
    }

    std::complex<double> to_complex() const {
        double r = static_cast<double>(sqrt_num) * std::sqrt(static_cast<double>(radicand));
        std::complex<double> num = imaginary ? std::complex<double>(const_num, r)
                                             : std::complex<double>(static_cast<double>(const_num) + r, 0.0);
        return num / static_cast<double>(denom);
    }

    std::string to_string() const {
        if (sqrt_num == 0 && denom == 1) return std::to_string(const_num);
        std::string s = "(" + std::to_string(const_num);
        if (sqrt_num != 0) {
            s += sqrt_num < 0 ? " - " : " + ";
            auto t = sqrt_num < 0 ? -sqrt_num : sqrt_num;
            if (t != 1) s += std::to_string(t) + "*";
            if (imaginary) s += "i*";
            s += "sqrt(" + std::to_string(radicand) + ")";
        }
        return s + ")/" + std::to_string(denom);
    }

    bool operator==(const ClosedFormPeriod&) const = default;
};

enum class ClosedFormBranch { trivial, quadratic, semiprimitive_a, semiprimitive_b };

inline const char* to_string(ClosedFormBranch b) {
    switch (b) {
        case ClosedFormBranch::trivial: return "N=1";
        case ClosedFormBranch::quadratic: return "N=2";
        case ClosedFormBranch::semiprimitive_a: return "semiprimitive(a)";
        case ClosedFormBranch::semiprimitive_b: return "semiprimitive(b)";
    }
    return "?";
}

struct ClosedFormPeriods {
    ClosedFormBranch branch;
    std::vector<ClosedFormPeriod> periods;
    /// Index holding the value that differs from the rest (-1 if N <= 2).
    int distinguished_index = -1;
    std::uint32_t j = 0;      ///< semiprimitive: smallest j with N | p^j + 1
    std::uint32_t gamma = 0;  ///< semiprimitive: extension degree / (2j)
};

/// Classes C_i = omega^i <omega^N> of F^*.
class CyclotomicClassIndexer {
public:
    CyclotomicClassIndexer(std::shared_ptr<const FieldCtx> ctx, std::uint32_t n) : ctx_(std::move(ctx)), n_(n) {
        if (n_ == 0 || ctx_->order() % n_ != 0)
            fail(ErrorKind::validation, "N_not_divisor", "N must divide the multiplicative group order");
    }
    const FieldCtx& field() const { return *ctx_; }
    std::uint32_t order() const { return n_; }
    std::uint32_t class_size() const { return ctx_->order() / n_; }
    std::uint32_t class_index(const FieldElement& x) const { return ctx_->discrete_log(x) % n_; }

private:
    std::shared_ptr<const FieldCtx> ctx_;
    std::uint32_t n_;
};

/// zeta_p^{Tr(x)} with Tr the absolute trace to F_p.
inline CyclotomicInteger canonical_character(const FieldElement& x) {
    const auto& f = x.owner();
    return CyclotomicInteger::zeta_power(f.p(), f.prime_trace(x));
}

/// eta_i = sum over C_i of the canonical character, i = 0..N-1.
inline std::vector<CyclotomicInteger> gauss_periods_direct(const std::shared_ptr<const FieldCtx>& ctx,
                                                           std::uint32_t n) {
    CyclotomicClassIndexer idx(ctx, n);
    const auto p = ctx->p();
    // histogram[i][t] = #{x in C_i : Tr(x) = t}
    std::vector<std::vector<std::int64_t>> histogram(n, std::vector<std::int64_t>(p, 0));
    for (std::uint32_t l = 0; l < ctx->order(); ++l)
        ++histogram[l % n][ctx->prime_trace_raw(ctx->antilog_raw(l))];
    std::vector<CyclotomicInteger> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        CyclotomicInteger eta(p);
        for (std::uint32_t t = 0; t < p; ++t) eta.add_zeta_power(t, histogram[i][t]);
        out.push_back(std::move(eta));
    }
    return out;
}

/// Smallest j with N | p^j + 1 and 2j | degree, or 0.
inline std::uint32_t semiprimitive_j(std::uint64_t p, std::uint64_t degree, std::uint64_t n) {
    if (n < 2) return 0;
    for (std::uint64_t j = 1; 2 * j <= degree; ++j) {
        if ((nt::powmod(p, j, n) + 1) % n == 0) return degree % (2 * j) == 0 ? static_cast<std::uint32_t>(j) : 0;
    }
    return 0;
}

/**
 * Closed-form Gauss periods of order N in F_q, when known:
 *  - N = 1: [-1];
 *  - N = 2, p odd: quadratic periods (real or imaginary root depending on p mod 4);
 *  - semiprimitive N: rational periods determined by j and gamma.
 * Returns nullopt when no branch applies. N = 2 uses the quadratic branch even
 * when N = 2 is also semiprimitive; the two agree.
 */
inline std::optional<ClosedFormPeriods> gauss_periods_closed_form(std::uint64_t q, std::uint64_t n) {
    auto pp = nt::prime_power(q);
    if (!pp) fail(ErrorKind::validation, "q_not_prime_power", std::to_string(q) + " is not a prime power");
    auto [p, k] = *pp;
    if (n == 0 || (q - 1) % n != 0)
        fail(ErrorKind::validation, "N_not_divisor", "N must divide q - 1");
    auto N = static_cast<std::int64_t>(n);

    if (n == 1) return ClosedFormPeriods{ClosedFormBranch::trivial, {ClosedFormPeriod{-1, 0, false, 1, 1}}};

    if (n == 2 && p % 2 == 1) {
        // eta_0 = (-1 + (-1)^{k-1} sqrt(q)) / 2                 p = 1 mod 4
        //       = (-1 + (-1)^{k-1} (sqrt(-1))^k sqrt(q)) / 2    p = 3 mod 4
        std::int64_t sign = (k % 2 == 1) ? 1 : -1;
        bool imaginary = false;
        if (p % 4 == 3) {
            // i^k = (-1)^{k/2} for even k, (-1)^{(k-1)/2} i for odd k
            if (k % 2 == 0) {
                sign *= ((k / 2) % 2 == 0) ? 1 : -1;
            } else {
                sign *= (((k - 1) / 2) % 2 == 0) ? 1 : -1;
                imaginary = true;
            }
        }
        ClosedFormPeriod eta0{-1, sign, imaginary, q, 2};
        ClosedFormPeriod eta1{-1, -sign, imaginary, q, 2};  // -1 - eta_0
        return ClosedFormPeriods{ClosedFormBranch::quadratic, {eta0, eta1}};
    }

    auto j = semiprimitive_j(p, k, n);
    if (j == 0) return std::nullopt;
    auto gamma = static_cast<std::uint32_t>(k / (2 * j));
    auto cofactor = (nt::ipow(p, j) + 1) / n;
    ClosedFormPeriods out;
    out.j = j;
    out.gamma = gamma;
    if (gamma % 2 == 1 && p % 2 == 1 && cofactor % 2 == 1) {
        // eta_{N/2} = sqrt(q) - (sqrt(q)+1)/N, all others -(sqrt(q)+1)/N
        out.branch = ClosedFormBranch::semiprimitive_a;
        out.distinguished_index = static_cast<int>(n / 2);
        out.periods.assign(n, ClosedFormPeriod{-1, -1, false, q, N});
        out.periods[n / 2] = ClosedFormPeriod{-1, N - 1, false, q, N};
    } else {
        // eta_0 = ((-1)^{gamma+1}(N-1) sqrt(q) - 1)/N, others ((-1)^gamma sqrt(q) - 1)/N
        std::int64_t sg = (gamma % 2 == 0) ? 1 : -1;
        out.branch = ClosedFormBranch::semiprimitive_b;
        out.distinguished_index = 0;
        out.periods.assign(n, ClosedFormPeriod{-1, sg, false, q, N});
        out.periods[0] = ClosedFormPeriod{-1, -sg * (N - 1), false, q, N};
    }
    return out;
}

/// |eta_i + 1/N| <= (N-1) sqrt(q) / N for every period.
inline bool period_bound_check(const std::vector<std::complex<double>>& periods, std::uint64_t n, std::uint64_t q) {
    const double N = static_cast<double>(n);
    const double bound = (N - 1.0) * std::sqrt(static_cast<double>(q)) / N;
    for (const auto& eta : periods)
        if (std::abs(eta + 1.0 / N) > bound + complex_tolerance) return false;
    return true;
}

inline bool period_bound_check(const std::vector<CyclotomicInteger>& periods, std::uint64_t n, std::uint64_t q) {
    std::vector<std::complex<double>> z;
    for (const auto& e : periods) z.push_back(e.to_complex());
    return period_bound_check(z, n, q);
}

inline bool period_bound_check(const std::vector<ClosedFormPeriod>& periods, std::uint64_t n, std::uint64_t q) {
    std::vector<std::complex<double>> z;
    for (const auto& e : periods) z.push_back(e.to_complex());
    return period_bound_check(z, n, q);
}

}  // namespace fewweight
