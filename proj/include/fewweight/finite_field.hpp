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
 * @file finite_field.hpp
 * @brief Table-driven arithmetic in F_{p^d}.
 *
 * A FieldCtx fixes a monic primitive modulus f of degree d over F_p and
 * stores log/antilog tables for the residue class of the indeterminate.
 * Elements are encoded as integers whose base-p digits are the polynomial
 * coordinates (digit i = coefficient of x^i), so 0 and 1 encode the zero and
 * unit element and the prime field F_p is exactly the codes [0, p).
 *
 * The modulus is chosen deterministically:
 *  - d = 1: f = x - g with g the smallest primitive root mod p;
 *  - d > 1: the lexicographically smallest primitive f, comparing the
 *    coefficient vectors (c_0, c_1, ..., c_{d-1}) with c_0 most significant.
 *
 * Subfields are never materialized as standalone fields: F_{p^e} (e | d) is
 * a SubfieldView into the parent, which keeps products between elements of
 * different subfields free of embedding maps.
 *
 * A FieldCtx is immutable after construction and safe to share across threads.
 * FieldElement holds a raw pointer to its owner; the owning FieldCtx (normally
 * held through std::shared_ptr) must outlive it.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace fewweight {

class FieldCtx;

class FieldElement {
public:
    FieldElement(const FieldCtx* owner, std::uint32_t code) : owner_(owner), code_(code) {}

    const FieldCtx& owner() const { return *owner_; }
    const FieldCtx* owner_ptr() const { return owner_; }
    std::uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    /// Polynomial-basis coordinates, ascending degree.
    std::vector<std::uint32_t> coeffs() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;

    bool operator==(const FieldElement& o) const { return owner_ == o.owner_ && code_ == o.code_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    void check_owner(const FieldElement& o) const {
        if (owner_ != o.owner_) fail(ErrorKind::validation, "mixed_owner", "operands belong to different fields");
    }

    const FieldCtx* owner_;
    std::uint32_t code_;
};

class FieldCtx {
public:
    using Code = std::uint32_t;

    /// Use build_field(); public for make_shared.
    FieldCtx(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus)
        : p_(p), d_(d), modulus_(std::move(modulus)) {
        size_ = static_cast<std::uint32_t>(nt::ipow(p, d));
        order_ = size_ - 1;
        digit_weight_.resize(d_);
        std::uint32_t w = 1;
        for (std::uint32_t i = 0; i < d_; ++i, w *= p_) digit_weight_[i] = w;
        build_tables();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint32_t size() const { return size_; }
    /// Order of the multiplicative group, size - 1.
    std::uint32_t order() const { return order_; }
    /// Monic modulus, ascending coefficients, length degree()+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement element(Code c) const {
        if (c >= size_) fail(ErrorKind::validation, "bad_element", "element code out of range");
        return {this, c};
    }
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const {
        if (coeffs.size() > d_) fail(ErrorKind::validation, "bad_element", "too many coordinates");
        Code c = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] >= p_) fail(ErrorKind::validation, "bad_element", "coordinate out of range");
            c += coeffs[i] * digit_weight_[i];
        }
        return {this, c};
    }
    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement primitive_element() const { return {this, antilog_[1 % order_]}; }
    FieldElement antilog(std::uint64_t i) const { return {this, antilog_raw(i)}; }

    /// Discrete logarithm base the primitive element, in [0, size-1).
    std::uint32_t discrete_log(const FieldElement& x) const {
        check(x);
        return log_raw(x.code());
    }

    /// Every element: 0 first, then antilog order.
    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out;
        out.reserve(size_);
        out.push_back(zero());
        for (std::uint32_t i = 0; i < order_; ++i) out.emplace_back(this, antilog_[i]);
        return out;
    }

    /// Trace from F_{p^d} to its degree-e subfield: sum of x^{p^{e i}}, i < d/e.
    FieldElement trace(const FieldElement& x, std::uint32_t e) const { return relative_trace(x, d_, e); }

    /// Trace from the degree-`from` subfield to the degree-`to` subfield,
    /// computed in this field. `x` must lie in the degree-`from` subfield.
    FieldElement relative_trace(const FieldElement& x, std::uint32_t from, std::uint32_t to) const {
        check(x);
        if (from == 0 || to == 0 || d_ % from != 0 || from % to != 0)
            fail(ErrorKind::validation, "degree_not_divisor", "trace degrees must satisfy to | from | d");
        if (!in_subfield_raw(x.code(), from))
            fail(ErrorKind::validation, "not_in_subfield", "element outside the source subfield");
        return {this, relative_trace_raw(x.code(), from, to)};
    }

    /// Absolute trace to F_p as an integer in [0, p).
    std::uint32_t prime_trace(const FieldElement& x) const {
        check(x);
        return prime_trace_raw(x.code());
    }

    bool in_subfield(const FieldElement& x, std::uint32_t e) const {
        check(x);
        if (e == 0 || d_ % e != 0) fail(ErrorKind::validation, "degree_not_divisor", "subfield degree must divide d");
        return in_subfield_raw(x.code(), e);
    }

    // Raw arithmetic on codes. Callers guarantee codes < size().

    Code add_raw(Code a, Code b) const {
        if (p_ == 2) return a ^ b;
        Code r = 0;
        for (std::uint32_t i = 0; i < d_; ++i) {
            std::uint32_t s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            r += s * digit_weight_[i];
            a /= p_;
            b /= p_;
        }
        return r;
    }
    Code neg_raw(Code a) const {
        if (p_ == 2) return a;
        Code r = 0;
        for (std::uint32_t i = 0; i < d_; ++i) {
            std::uint32_t c = a % p_;
            r += (c == 0 ? 0 : p_ - c) * digit_weight_[i];
            a /= p_;
        }
        return r;
    }
    Code sub_raw(Code a, Code b) const { return add_raw(a, neg_raw(b)); }
    Code mul_raw(Code a, Code b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order_) s -= order_;
        return antilog_[s];
    }
    Code inv_raw(Code a) const {
        if (a == 0) fail(ErrorKind::validation, "zero_inverse", "zero has no inverse");
        std::uint32_t l = log_[a];
        return antilog_[l == 0 ? 0 : order_ - l];
    }
    Code pow_raw(Code a, std::int64_t e) const {
        if (a == 0) {
            if (e < 0) fail(ErrorKind::validation, "zero_inverse", "zero has no inverse");
            return e == 0 ? 1 : 0;
        }
        auto m = static_cast<std::int64_t>(order_);
        std::int64_t r = (e % m + m) % m;
        return antilog_[nt::mulmod(log_[a], static_cast<std::uint64_t>(r), order_)];
    }
    /// x^{p^k}.
    Code frobenius_raw(Code a, std::uint32_t k) const {
        if (a == 0) return 0;
        return antilog_[nt::mulmod(log_[a], nt::powmod(p_, k, order_), order_)];
    }
    Code antilog_raw(std::uint64_t i) const { return antilog_[i % order_]; }
    std::uint32_t log_raw(Code a) const {
        if (a == 0) fail(ErrorKind::validation, "log_of_zero", "discrete log of zero is undefined");
        return log_[a];
    }
    Code relative_trace_raw(Code a, std::uint32_t from, std::uint32_t to) const {
        Code r = 0;
        Code cur = a;
        for (std::uint32_t i = 0; i < from / to; ++i) {
            r = add_raw(r, cur);
            cur = frobenius_raw(cur, to);
        }
        return r;
    }
    std::uint32_t prime_trace_raw(Code a) const {
        // Linear in the coordinates: Tr(sum c_i x^i) = sum c_i Tr(x^i).
        std::uint64_t t = 0;
        for (std::uint32_t i = 0; i < d_; ++i) {
            t += static_cast<std::uint64_t>(a % p_) * basis_trace_[i];
            a /= p_;
        }
        return static_cast<std::uint32_t>(t % p_);
    }
    bool in_subfield_raw(Code a, std::uint32_t e) const {
        if (a == 0) return true;
        // x in F_{p^e}^* iff its log is a multiple of (p^d-1)/(p^e-1).
        return log_[a] % (order_ / static_cast<std::uint32_t>(nt::ipow(p_, e) - 1)) == 0;
    }

    std::vector<std::uint32_t> coeffs_of(Code a) const {
        std::vector<std::uint32_t> out(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    /// Modulus as text, e.g. "x^2 + x + 2".
    std::string modulus_string() const {
        std::string s;
        for (std::uint32_t i = d_ + 1; i-- > 0;) {
            auto c = modulus_[i];
            if (c == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void check(const FieldElement& x) const {
        if (x.owner_ptr() != this) fail(ErrorKind::validation, "mixed_owner", "element belongs to a different field");
    }

    void build_tables() {
        log_.assign(size_, 0);
        antilog_.assign(order_, 0);
        std::vector<std::uint32_t> cur(d_, 0);
        cur[0] = 1;
        for (std::uint32_t i = 0; i < order_; ++i) {
            Code c = 0;
            for (std::uint32_t j = 0; j < d_; ++j) c += cur[j] * digit_weight_[j];
            antilog_[i] = c;
            log_[c] = i;
            // multiply by x and reduce by the monic modulus
            std::uint32_t lead = cur[d_ - 1];
            for (std::uint32_t j = d_ - 1; j > 0; --j)
                cur[j] = (cur[j - 1] + (p_ - lead) * modulus_[j]) % p_;
            cur[0] = ((p_ - lead) * modulus_[0]) % p_;
        }
        basis_trace_.assign(d_, 0);
        Code xi = 1;
        for (std::uint32_t i = 0; i < d_; ++i) {
            // Tr(x^i) lies in F_p, i.e. is a constant polynomial.
            basis_trace_[i] = relative_trace_raw(xi, d_, 1);
            if (i + 1 < d_) xi = xi * p_;
        }
    }

    std::uint32_t p_;
    std::uint32_t d_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t size_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> digit_weight_;
    std::vector<std::uint32_t> log_;
    std::vector<Code> antilog_;
    std::vector<std::uint32_t> basis_trace_;
};

namespace detail {

// Dense polynomial arithmetic modulo a monic f over F_p, used only while
// searching for the modulus.
struct PolyMod {
    std::uint64_t p;
    std::vector<std::uint64_t> f;  // monic, ascending, size d+1

    std::size_t d() const { return f.size() - 1; }

    std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> prod(2 * d() - 1, 0);
        for (std::size_t i = 0; i < d(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < d(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
        for (std::size_t k = prod.size(); k-- > d();) {
            std::uint64_t c = prod[k];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= d(); ++j) {
                std::size_t idx = k - d() + j;
                prod[idx] = (prod[idx] + (p - c) * f[j]) % p;
            }
        }
        prod.resize(d());
        return prod;
    }

    std::vector<std::uint64_t> pow_x(std::uint64_t e) const {
        std::vector<std::uint64_t> r(d(), 0), base(d(), 0);
        r[0] = 1;
        if (d() == 1)
            base[0] = (p - f[0]) % p;
        else
            base[1] = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    static bool is_one(const std::vector<std::uint64_t>& a) {
        if (a[0] != 1) return false;
        return std::all_of(a.begin() + 1, a.end(), [](auto c) { return c == 0; });
    }

    /// The residue of x has order exactly p^d - 1.
    bool x_is_primitive(std::uint64_t order, const std::vector<std::uint64_t>& order_primes) const {
        if (f[0] == 0) return false;
        if (!is_one(pow_x(order))) return false;
        for (auto r : order_primes)
            if (is_one(pow_x(order / r))) return false;
        return true;
    }
};

}  // namespace detail

/// Builds F_{p^d} with the deterministic primitive modulus described above.
inline std::shared_ptr<const FieldCtx> build_field(std::uint64_t p, std::uint64_t d, const Limits& limits = {}) {
    if (!nt::is_prime(p)) fail(ErrorKind::validation, "p_not_prime", std::to_string(p) + " is not prime");
    if (d < 1) fail(ErrorKind::validation, "bad_degree", "extension degree must be positive");
    auto size = nt::checked_pow(p, d, limits.field_cap);
    if (!size || *size > limits.field_cap || *size > std::uint64_t{0xFFFFFFFF})
        fail(ErrorKind::cap_exceeded, "field_cap_exceeded",
             "field size " + std::to_string(p) + "^" + std::to_string(d) + " exceeds cap " +
                 std::to_string(limits.field_cap));

    std::vector<std::uint32_t> modulus;
    if (d == 1) {
        auto g = nt::smallest_primitive_root(p);
        modulus = {static_cast<std::uint32_t>((p - g) % p), 1};
    } else {
        std::uint64_t order = *size - 1;
        auto primes = nt::prime_divisors(order);
        detail::PolyMod pm{p, std::vector<std::uint64_t>(d + 1, 0)};
        pm.f[d] = 1;
        // Odometer over (c_0, ..., c_{d-1}) with c_{d-1} varying fastest.
        std::vector<std::uint64_t> digits(d, 0);
        bool found = false;
        while (true) {
            for (std::size_t i = 0; i < d; ++i) pm.f[i] = digits[i];
            if (pm.x_is_primitive(order, primes)) {
                found = true;
                break;
            }
            std::size_t pos = d;
            while (pos-- > 0) {
                if (++digits[pos] < p) break;
                digits[pos] = 0;
            }
            if (pos == static_cast<std::size_t>(-1)) break;
        }
        if (!found) fail(ErrorKind::internal, "no_primitive_polynomial", "no primitive polynomial found");
        modulus.assign(pm.f.begin(), pm.f.end());
    }
    return std::make_shared<const FieldCtx>(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(d),
                                            std::move(modulus));
}

/// F_{p^e} inside a parent F_{p^d}.
class SubfieldView {
public:
    SubfieldView(std::shared_ptr<const FieldCtx> parent, std::uint32_t sub_degree)
        : parent_(std::move(parent)), sub_degree_(sub_degree) {
        if (sub_degree_ == 0 || parent_->degree() % sub_degree_ != 0)
            fail(ErrorKind::validation, "degree_not_divisor", "subfield degree must divide the field degree");
        sub_order_ = static_cast<std::uint32_t>(nt::ipow(parent_->p(), sub_degree_) - 1);
        step_ = parent_->order() / sub_order_;
        member_logs_.reserve(sub_order_);
        for (std::uint32_t i = 0; i < sub_order_; ++i) member_logs_.push_back(i * step_);
        members_.reserve(sub_order_ + 1);
        members_.push_back(0);
        for (auto l : member_logs_) members_.push_back(parent_->antilog_raw(l));
    }

    const FieldCtx& parent() const { return *parent_; }
    const std::shared_ptr<const FieldCtx>& parent_ptr() const { return parent_; }
    std::uint32_t sub_degree() const { return sub_degree_; }
    std::uint32_t size() const { return sub_order_ + 1; }
    /// omega^{(p^d-1)/(p^e-1)}
    FieldElement generator() const { return parent_->antilog(step_); }
    const std::vector<std::uint32_t>& member_logs() const { return member_logs_; }
    /// Member codes: 0 first, then increasing discrete log.
    const std::vector<FieldCtx::Code>& member_codes() const { return members_; }
    std::vector<FieldElement> members() const {
        std::vector<FieldElement> out;
        out.reserve(members_.size());
        for (auto c : members_) out.push_back(parent_->element(c));
        return out;
    }
    bool contains(const FieldElement& x) const { return parent_->in_subfield(x, sub_degree_); }
    /// Position of a member in member_codes(), assuming contains(x).
    std::uint32_t index_of(FieldCtx::Code c) const { return c == 0 ? 0 : parent_->log_raw(c) / step_ + 1; }

private:
    std::shared_ptr<const FieldCtx> parent_;
    std::uint32_t sub_degree_;
    std::uint32_t sub_order_ = 0;
    std::uint32_t step_ = 0;
    std::vector<std::uint32_t> member_logs_;
    std::vector<FieldCtx::Code> members_;
};

inline SubfieldView subfield_view(std::shared_ptr<const FieldCtx> ctx, std::uint32_t e) {
    return SubfieldView(std::move(ctx), e);
}

// FieldElement out-of-line members.

inline std::vector<std::uint32_t> FieldElement::coeffs() const { return owner_->coeffs_of(code_); }
inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_owner(o);
    return {owner_, owner_->add_raw(code_, o.code_)};
}
inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_owner(o);
    return {owner_, owner_->sub_raw(code_, o.code_)};
}
inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_owner(o);
    return {owner_, owner_->mul_raw(code_, o.code_)};
}
inline FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_owner(o);
    return {owner_, owner_->mul_raw(code_, owner_->inv_raw(o.code_))};
}
inline FieldElement FieldElement::operator-() const { return {owner_, owner_->neg_raw(code_)}; }
inline FieldElement FieldElement::inverse() const { return {owner_, owner_->inv_raw(code_)}; }
inline FieldElement FieldElement::pow(std::int64_t e) const { return {owner_, owner_->pow_raw(code_, e)}; }

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    auto c = x.coeffs();
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os << "]";
}

}  // namespace fewweight
