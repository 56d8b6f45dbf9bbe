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
 * @file code.hpp
 * @brief Trace codes C_K and C_D over F_q, q = p^s.
 *
 * C_K has codewords indexed by (a, b) in F_{q^{m1}} x F_{q^m}:
 *
 *     c(a,b) = ( Tr1(a x) + Tr(b y)  |  Tr1(a x) + Tr((a+b) y) )   for (x, y) in K
 *
 * with K = F_{q^{m1}} x D, D = (omega^{h i})_{0 <= i < n}, Tr the trace
 * F_{q^m} -> F_q and Tr1 the trace F_{q^{m1}} -> F_q. All arithmetic happens
 * in the single field F_{p^{s m}}; F_q and F_{q^{m1}} are subfield views.
 *
 * Coordinate order: first half, then second half; inside a half, y-major
 * over D in sequence order, then x over F_{q^{m1}} with 0 first and the rest
 * in increasing discrete log.
 *
 * Codewords are produced on demand. Symbols are stored as element codes of
 * the big field (they always lie in the F_q subfield).
 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "number_theory.hpp"

namespace fewweight {

struct CodeSpec {
    std::uint64_t p = 0;
    std::uint64_t s = 0;
    std::uint64_t m = 0;
    std::uint64_t m1 = 0;
    std::uint64_t h = 0;
    std::uint64_t n = 0;

    std::uint64_t q() const { return nt::ipow(p, s); }
    std::uint64_t qm() const { return nt::ipow(p, s * m); }
    std::uint64_t qm1() const { return nt::ipow(p, s * m1); }
    /// (q^m - 1)/(q - 1)
    std::uint64_t projective_order() const { return (qm() - 1) / (q() - 1); }
    /// Smallest admissible n, (q^m - 1)/(h(q - 1)).
    std::uint64_t n_step() const { return projective_order() / h; }
    std::uint64_t length() const { return 2 * n * qm1(); }
    std::uint64_t expected_dimension() const { return m + m1; }

    std::string to_string() const {
        return "(p,s,m,m1,h,n)=(" + std::to_string(p) + "," + std::to_string(s) + "," + std::to_string(m) + "," +
               std::to_string(m1) + "," + std::to_string(h) + "," + std::to_string(n) + ")";
    }

    bool operator==(const CodeSpec&) const = default;
};

/// Checks the construction hypotheses; throws Error naming the violated one.
inline CodeSpec validate_spec(std::uint64_t p, std::uint64_t s, std::uint64_t m, std::uint64_t m1, std::uint64_t h,
                              std::uint64_t n, const Limits& limits = {}) {
    if (s == 0 || m == 0 || m1 == 0 || h == 0 || n == 0)
        fail(ErrorKind::validation, "nonpositive_parameter", "s, m, m1, h and n must be positive");
    if (!nt::is_prime(p)) fail(ErrorKind::validation, "p_not_prime", std::to_string(p) + " is not prime");
    if (m % m1 != 0)
        fail(ErrorKind::validation, "m1_not_divisor",
             "m1 = " + std::to_string(m1) + " does not divide m = " + std::to_string(m));
    auto qm = nt::checked_pow(p, s * m, limits.field_cap);
    if (!qm || *qm > limits.field_cap)
        fail(ErrorKind::cap_exceeded, "field_cap_exceeded",
             "q^m = " + std::to_string(p) + "^" + std::to_string(s * m) + " exceeds field cap " +
                 std::to_string(limits.field_cap));
    CodeSpec spec{p, s, m, m1, h, n};
    auto proj = spec.projective_order();
    if (proj % h != 0)
        fail(ErrorKind::validation, "h_not_divisor",
             "h = " + std::to_string(h) + " does not divide (q^m-1)/(q-1) = " + std::to_string(proj));
    if (n % (proj / h) != 0)
        fail(ErrorKind::validation, "n_not_multiple",
             "(q^m-1)/(h(q-1)) = " + std::to_string(proj / h) + " does not divide n = " + std::to_string(n));
    return spec;
}

inline CodeSpec validate_spec(const CodeSpec& raw, const Limits& limits = {}) {
    return validate_spec(raw.p, raw.s, raw.m, raw.m1, raw.h, raw.n, limits);
}

/// A word over F_q; symbols are codes of elements of the owning field.
struct Codeword {
    const FieldCtx* field = nullptr;
    std::vector<FieldCtx::Code> coords;

    std::size_t size() const { return coords.size(); }
    FieldElement operator[](std::size_t i) const { return field->element(coords[i]); }
    std::uint64_t weight() const {
        std::uint64_t w = 0;
        for (auto c : coords) w += (c != 0);
        return w;
    }
    bool is_zero() const { return weight() == 0; }

    Codeword operator+(const Codeword& o) const {
        if (o.field != field || o.size() != size())
            fail(ErrorKind::validation, "shape_mismatch", "codewords of different shape");
        Codeword r{field, coords};
        for (std::size_t i = 0; i < size(); ++i) r.coords[i] = field->add_raw(coords[i], o.coords[i]);
        return r;
    }
    Codeword scaled(const FieldElement& lambda) const {
        Codeword r{field, coords};
        for (auto& c : r.coords) c = field->mul_raw(c, lambda.code());
        return r;
    }
    bool operator==(const Codeword& o) const { return field == o.field && coords == o.coords; }
};

/// Callback signature for streaming enumeration: (message index, coordinates).
using CodewordSink = std::function<void(std::uint64_t, const std::vector<FieldCtx::Code>&)>;

/// C_K for a validated CodeSpec.
class Code {
public:
    /// Use build_code().
    Code(const CodeSpec& spec, std::shared_ptr<const FieldCtx> ctx)
        : spec_(spec),
          ctx_(std::move(ctx)),
          a_domain_(ctx_, static_cast<std::uint32_t>(spec.s * spec.m1)),
          symbols_(ctx_, static_cast<std::uint32_t>(spec.s)) {
        defining_set_.reserve(spec_.n);
        for (std::uint64_t i = 0; i < spec_.n; ++i)
            defining_set_.push_back(ctx_->antilog_raw(nt::mulmod(spec_.h, i, ctx_->order())));

        const auto d = ctx_->degree();
        const auto s = static_cast<std::uint32_t>(spec_.s);
        trace_m_.resize(ctx_->size());
        for (std::uint32_t v = 0; v < ctx_->size(); ++v) trace_m_[v] = ctx_->relative_trace_raw(v, d, s);
        const auto& sub = a_domain_.member_codes();
        trace_m1_.resize(sub.size());
        for (std::size_t i = 0; i < sub.size(); ++i)
            trace_m1_[i] = ctx_->relative_trace_raw(sub[i], a_domain_.sub_degree(), s);
    }

    const CodeSpec& spec() const { return spec_; }
    const FieldCtx& field() const { return *ctx_; }
    const std::shared_ptr<const FieldCtx>& field_ptr() const { return ctx_; }
    /// F_{q^{m1}}, the domain of a and of x.
    const SubfieldView& a_domain() const { return a_domain_; }
    /// F_q, the symbol alphabet.
    const SubfieldView& symbol_field() const { return symbols_; }
    const std::vector<FieldCtx::Code>& defining_set() const { return defining_set_; }

    std::uint64_t q() const { return spec_.q(); }
    std::uint64_t length() const { return 2 * half_length(); }
    std::uint64_t half_length() const { return spec_.n * a_domain_.size(); }
    std::uint64_t expected_dimension() const { return spec_.expected_dimension(); }
    /// Number of (a, b) pairs, q^{m+m1}.
    std::uint64_t message_count() const { return static_cast<std::uint64_t>(a_domain_.size()) * ctx_->size(); }

    /// Message index i <-> (a, b): a = a_domain member i / q^m, b = i % q^m
    /// (0 first, then antilog order).
    std::pair<FieldCtx::Code, FieldCtx::Code> message(std::uint64_t i) const {
        auto ai = i / ctx_->size();
        auto bi = i % ctx_->size();
        return {a_domain_.member_codes()[ai], bi == 0 ? 0 : ctx_->antilog_raw(bi - 1)};
    }

    Codeword evaluate(const FieldElement& a, const FieldElement& b) const {
        if (a.owner_ptr() != ctx_.get() || b.owner_ptr() != ctx_.get())
            fail(ErrorKind::validation, "mixed_owner", "a and b must belong to the code's field");
        if (!a_domain_.contains(a))
            fail(ErrorKind::validation, "a_outside_subfield", "a must lie in F_{q^{m1}}");
        Codeword w{ctx_.get(), {}};
        evaluate_into(a.code(), b.code(), w.coords);
        return w;
    }

    /// Raw evaluation; a must be a member of a_domain().
    void evaluate_into(FieldCtx::Code a, FieldCtx::Code b, std::vector<FieldCtx::Code>& out) const {
        const auto& xs = a_domain_.member_codes();
        const std::size_t nx = xs.size();
        out.resize(length());
        std::vector<FieldCtx::Code> tx(nx);
        for (std::size_t xi = 0; xi < nx; ++xi) tx[xi] = trace_m1_[a_domain_.index_of(ctx_->mul_raw(a, xs[xi]))];
        const auto ab = ctx_->add_raw(a, b);
        const auto half = half_length();
        for (std::size_t yi = 0; yi < defining_set_.size(); ++yi) {
            auto y = defining_set_[yi];
            auto t1 = trace_m_[ctx_->mul_raw(b, y)];
            auto t2 = trace_m_[ctx_->mul_raw(ab, y)];
            auto base = yi * nx;
            for (std::size_t xi = 0; xi < nx; ++xi) {
                out[base + xi] = ctx_->add_raw(tx[xi], t1);
                out[half + base + xi] = ctx_->add_raw(tx[xi], t2);
            }
        }
    }

    /// Streams codewords for message indices in [begin, end).
    void for_each_codeword(std::uint64_t begin, std::uint64_t end, const CodewordSink& sink) const {
        std::vector<FieldCtx::Code> buf;
        for (auto i = begin; i < end; ++i) {
            auto [a, b] = message(i);
            evaluate_into(a, b, buf);
            sink(i, buf);
        }
    }

    /// Images of the F_q-basis {(g^i, 0)}_{i<m1} u {(0, omega^j)}_{j<m}, g generating F_{q^{m1}}.
    std::vector<Codeword> generator_rows() const {
        std::vector<Codeword> rows;
        auto g = a_domain_.generator();
        auto w = ctx_->primitive_element();
        for (std::uint64_t i = 0; i < spec_.m1; ++i)
            rows.push_back(evaluate(g.pow(static_cast<std::int64_t>(i)), ctx_->zero()));
        for (std::uint64_t j = 0; j < spec_.m; ++j)
            rows.push_back(evaluate(ctx_->zero(), w.pow(static_cast<std::int64_t>(j))));
        return rows;
    }

    static std::string coordinate_order_statement() {
        return "coordinates = [first half | second half]; first half (x,y) -> Tr_{q^m1/q}(a x) + Tr_{q^m/q}(b y), "
               "second half (x,y) -> Tr_{q^m1/q}(a x) + Tr_{q^m/q}((a+b) y); within each half y-major over "
               "D = (omega^(h i))_{i=0..n-1} in order of i, then x over F_{q^m1} with 0 first followed by "
               "omega^(k (q^m-1)/(q^m1-1)) for k = 0..q^m1-2; omega = residue class of x modulo the field modulus; "
               "symbols are elements of F_q written in the polynomial basis of F_{p^(s m)}";
    }

private:
    CodeSpec spec_;
    std::shared_ptr<const FieldCtx> ctx_;
    SubfieldView a_domain_;
    SubfieldView symbols_;
    std::vector<FieldCtx::Code> defining_set_;
    std::vector<FieldCtx::Code> trace_m_;   // indexed by element code
    std::vector<FieldCtx::Code> trace_m1_;  // indexed by a_domain position
};

inline Code build_code(const CodeSpec& spec, const Limits& limits = {}) {
    auto checked = validate_spec(spec, limits);
    return Code(checked, build_field(checked.p, checked.s * checked.m, limits));
}

/// C_D = { (Tr(a d_i))_i : a in F_{q^m} } for an arbitrary sequence of nonzero d_i.
class TraceCodeCD {
public:
    TraceCodeCD(std::shared_ptr<const FieldCtx> ctx, std::uint32_t s, std::vector<FieldCtx::Code> defining_set)
        : ctx_(std::move(ctx)), symbols_(ctx_, s), defining_set_(std::move(defining_set)) {
        for (auto d : defining_set_) {
            if (d == 0) fail(ErrorKind::validation, "zero_in_defining_set", "defining set must avoid 0");
            if (d >= ctx_->size()) fail(ErrorKind::validation, "bad_element", "element code out of range");
        }
        trace_.resize(ctx_->size());
        for (std::uint32_t v = 0; v < ctx_->size(); ++v) trace_[v] = ctx_->relative_trace_raw(v, ctx_->degree(), s);
    }

    const FieldCtx& field() const { return *ctx_; }
    const SubfieldView& symbol_field() const { return symbols_; }
    const std::vector<FieldCtx::Code>& defining_set() const { return defining_set_; }
    std::uint64_t q() const { return symbols_.size(); }
    std::uint64_t length() const { return defining_set_.size(); }
    std::uint64_t expected_dimension() const { return ctx_->degree() / symbols_.sub_degree(); }
    std::uint64_t message_count() const { return ctx_->size(); }

    Codeword evaluate(const FieldElement& a) const {
        if (a.owner_ptr() != ctx_.get()) fail(ErrorKind::validation, "mixed_owner", "a must belong to the field");
        Codeword w{ctx_.get(), {}};
        evaluate_into(a.code(), w.coords);
        return w;
    }
    void evaluate_into(FieldCtx::Code a, std::vector<FieldCtx::Code>& out) const {
        out.resize(defining_set_.size());
        for (std::size_t i = 0; i < defining_set_.size(); ++i) out[i] = trace_[ctx_->mul_raw(a, defining_set_[i])];
    }
    void for_each_codeword(std::uint64_t begin, std::uint64_t end, const CodewordSink& sink) const {
        std::vector<FieldCtx::Code> buf;
        for (auto i = begin; i < end; ++i) {
            evaluate_into(i == 0 ? 0 : ctx_->antilog_raw(i - 1), buf);
            sink(i, buf);
        }
    }
    std::vector<Codeword> generator_rows() const {
        std::vector<Codeword> rows;
        auto w = ctx_->primitive_element();
        for (std::uint64_t j = 0; j < expected_dimension(); ++j) rows.push_back(evaluate(w.pow(static_cast<std::int64_t>(j))));
        return rows;
    }

private:
    std::shared_ptr<const FieldCtx> ctx_;
    SubfieldView symbols_;
    std::vector<FieldCtx::Code> defining_set_;
    std::vector<FieldCtx::Code> trace_;
};

inline TraceCodeCD build_trace_code_CD(std::shared_ptr<const FieldCtx> ctx, std::uint32_t s,
                                       std::vector<FieldCtx::Code> defining_set) {
    return TraceCodeCD(std::move(ctx), s, std::move(defining_set));
}

}  // namespace fewweight
