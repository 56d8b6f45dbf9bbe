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
 * @file report.hpp
 * @brief ReportDocument: the structured output of every CLI command, with
 *        JSON (canonical, round-trippable), CSV and text renderings.
 *
 * The JSON layout is described in docs/report-schema.md. Keys are emitted in
 * a fixed order and absent sections are omitted, so identical inputs give
 * byte-identical documents.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "json.hpp"

namespace fewweight {

inline constexpr const char* schema_version = "1.0";

using Json = nlohmann::ordered_json;
using Counts = std::map<std::uint64_t, std::uint64_t>;

struct FieldInfo {
    std::uint64_t p = 0;
    std::uint64_t degree = 0;
    std::vector<std::uint32_t> modulus;  ///< ascending, monic
    std::string modulus_text;
    bool operator==(const FieldInfo&) const = default;
};

struct CodeInfo {
    std::uint64_t length = 0;
    std::uint64_t expected_dimension = 0;
    std::string coordinate_order;
    bool operator==(const CodeInfo&) const = default;
};

struct DistributionDoc {
    std::string source;  ///< "enumeration" | "direct" | "closed-form"
    Counts counts;
    std::string enumerator;
    std::optional<std::uint64_t> measured_dimension;
    std::optional<std::uint64_t> kernel_size;
    std::vector<PredictedRow> rows;     ///< predicted only
    std::vector<std::string> periods;  ///< predicted only, "num/den"
    bool operator==(const DistributionDoc&) const = default;
};

struct BoundDoc {
    std::optional<std::uint64_t> lower_bound;  ///< nullopt: hypothesis h < q^{m/2}+1 fails
    std::optional<std::uint64_t> measured_d;
    std::optional<bool> bound_holds;
    bool operator==(const BoundDoc&) const = default;
};

struct SSSDoc {
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
    bool minimal_by_ratio = false;
    std::string ratio_margin;
    std::optional<bool> oracle_minimal;
    std::optional<std::string> structural_family;
    std::optional<std::string> structural_condition;
    std::optional<bool> structural_holds;
    std::string dual_distance;
    std::string regime;
    std::string reason;
    bool operator==(const SSSDoc&) const = default;
};

struct ComparisonDoc {
    bool match = false;
    std::vector<DistributionDiff> diff;
    bool operator==(const ComparisonDoc& o) const {
        if (match != o.match || diff.size() != o.diff.size()) return false;
        for (std::size_t i = 0; i < diff.size(); ++i)
            if (diff[i].weight != o.diff[i].weight || diff[i].predicted != o.diff[i].predicted ||
                diff[i].enumerated != o.diff[i].enumerated)
                return false;
        return true;
    }
};

struct DirectPeriodDoc {
    std::vector<std::int64_t> coeffs;
    double re = 0;
    double im = 0;
    bool operator==(const DirectPeriodDoc&) const = default;
};

struct ClosedPeriodDoc {
    std::string expression;
    double re = 0;
    double im = 0;
    bool operator==(const ClosedPeriodDoc&) const = default;
};

struct PeriodsDoc {
    std::uint64_t q = 0;
    std::uint64_t N = 0;
    std::vector<DirectPeriodDoc> direct;
    std::optional<std::string> branch;
    std::optional<std::uint64_t> j;
    std::optional<std::uint64_t> gamma;
    std::vector<ClosedPeriodDoc> closed_form;
    std::optional<bool> agreement;
    bool partition_sum_ok = false;
    bool bound_check = false;
    bool operator==(const PeriodsDoc&) const = default;
};

struct ExampleRow {
    std::string name;
    CodeSpec spec;
    std::uint64_t length = 0;
    std::uint64_t dimension = 0;
    std::uint64_t d = 0;
    std::string enumerator;
    std::string predicted_enumerator;
    std::string expected_enumerator;
    bool match = false;
    std::string griesmer;
    std::int64_t griesmer_defect = 0;
    std::string sss_regime;
    std::string dual_distance;
    std::optional<std::string> annotation;
    bool operator==(const ExampleRow&) const = default;
};

struct ErrorDoc {
    std::string kind;
    std::string condition;
    std::string message;
    bool operator==(const ErrorDoc&) const = default;
};

struct ReportDocument {
    std::string schema = schema_version;
    std::string command;
    std::optional<CodeSpec> spec;
    std::optional<FieldInfo> field;
    std::optional<CodeInfo> code;
    std::optional<DistributionDoc> enumerated;
    std::optional<DistributionDoc> predicted;
    std::optional<std::string> enumerator;
    std::optional<BoundDoc> bound;
    std::optional<OptimalityReport> optimality;
    std::optional<SSSDoc> sss;
    std::optional<ComparisonDoc> comparison;
    std::optional<PeriodsDoc> periods;
    std::vector<ExampleRow> examples;
    std::optional<bool> passed;
    std::optional<ErrorDoc> error;
    std::optional<double> timing_ms;
};

inline bool operator==(const OptimalityReport& a, const OptimalityReport& b) {
    return a.length == b.length && a.dimension == b.dimension && a.d == b.d && a.q == b.q &&
           a.griesmer_length == b.griesmer_length && a.meets_bound == b.meets_bound && a.defect == b.defect &&
           a.griesmer_unimprovable == b.griesmer_unimprovable && a.note == b.note;
}

inline bool operator==(const PredictedRow& a, const PredictedRow& b) {
    return a.weight == b.weight && a.frequency == b.frequency && a.provenance == b.provenance;
}

inline bool operator==(const ReportDocument& a, const ReportDocument& b) {
    return a.schema == b.schema && a.command == b.command && a.spec == b.spec && a.field == b.field &&
           a.code == b.code && a.enumerated == b.enumerated && a.predicted == b.predicted &&
           a.enumerator == b.enumerator && a.bound == b.bound && a.optimality == b.optimality && a.sss == b.sss &&
           a.comparison == b.comparison && a.periods == b.periods && a.examples == b.examples &&
           a.passed == b.passed && a.error == b.error && a.timing_ms == b.timing_ms;
}

// ---------------------------------------------------------------------------
// JSON

namespace json_detail {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

inline Json counts_to_json(const Counts& c) {
    Json arr = Json::array();
    for (auto [w, f] : c) arr.push_back(Json{{"weight", w}, {"frequency", f}});
    return arr;
}

inline Counts counts_from_json(const Json& arr) {
    Counts c;
    for (const auto& e : arr) c[e.at("weight").get<std::uint64_t>()] = e.at("frequency").get<std::uint64_t>();
    return c;
}

}  // namespace json_detail

inline Json spec_to_json(const CodeSpec& s) {
    return Json{{"p", s.p}, {"s", s.s}, {"m", s.m}, {"m1", s.m1}, {"h", s.h}, {"n", s.n}, {"q", s.q()}};
}

inline CodeSpec spec_from_json(const Json& j) {
    return CodeSpec{j.at("p").get<std::uint64_t>(),  j.at("s").get<std::uint64_t>(), j.at("m").get<std::uint64_t>(),
                    j.at("m1").get<std::uint64_t>(), j.at("h").get<std::uint64_t>(), j.at("n").get<std::uint64_t>()};
}

inline Json distribution_to_json(const DistributionDoc& d) {
    using namespace json_detail;
    Json j;
    j["source"] = d.source;
    j["enumerator"] = d.enumerator;
    j["counts"] = counts_to_json(d.counts);
    put(j, "measured_dimension", d.measured_dimension);
    put(j, "kernel_size", d.kernel_size);
    if (!d.rows.empty()) {
        Json rows = Json::array();
        for (const auto& r : d.rows)
            rows.push_back(Json{{"weight", r.weight}, {"frequency", r.frequency}, {"provenance", r.provenance}});
        j["rows"] = rows;
    }
    if (!d.periods.empty()) j["gauss_periods"] = d.periods;
    return j;
}

inline DistributionDoc distribution_from_json(const Json& j) {
    using namespace json_detail;
    DistributionDoc d;
    d.source = j.at("source").get<std::string>();
    d.enumerator = j.at("enumerator").get<std::string>();
    d.counts = counts_from_json(j.at("counts"));
    d.measured_dimension = get_opt<std::uint64_t>(j, "measured_dimension");
    d.kernel_size = get_opt<std::uint64_t>(j, "kernel_size");
    if (j.contains("rows"))
        for (const auto& r : j.at("rows"))
            d.rows.push_back({r.at("weight").get<std::uint64_t>(), r.at("frequency").get<std::uint64_t>(),
                              r.at("provenance").get<std::string>()});
    if (j.contains("gauss_periods")) d.periods = j.at("gauss_periods").get<std::vector<std::string>>();
    return d;
}

inline Json to_json(const ReportDocument& doc) {
    using namespace json_detail;
    Json j;
    j["schema_version"] = doc.schema;
    j["command"] = doc.command;
    if (doc.spec) j["spec"] = spec_to_json(*doc.spec);
    if (doc.field)
        j["field"] = Json{{"p", doc.field->p},
                          {"degree", doc.field->degree},
                          {"modulus", doc.field->modulus},
                          {"modulus_text", doc.field->modulus_text}};
    if (doc.code)
        j["code"] = Json{{"length", doc.code->length},
                         {"expected_dimension", doc.code->expected_dimension},
                         {"coordinate_order", doc.code->coordinate_order}};
    if (doc.enumerated || doc.predicted) {
        Json d;
        if (doc.enumerated) d["enumerated"] = distribution_to_json(*doc.enumerated);
        if (doc.predicted) d["predicted"] = distribution_to_json(*doc.predicted);
        j["distributions"] = d;
    }
    put(j, "enumerator", doc.enumerator);
    if (doc.bound) {
        Json b;
        b["lower_bound"] = doc.bound->lower_bound ? Json(*doc.bound->lower_bound) : Json(nullptr);
        put(b, "measured_d", doc.bound->measured_d);
        put(b, "bound_holds", doc.bound->bound_holds);
        j["distance_bound"] = b;
    }
    if (doc.optimality) {
        const auto& o = *doc.optimality;
        j["optimality"] = Json{{"length", o.length},
                               {"dimension", o.dimension},
                               {"d", o.d},
                               {"q", o.q},
                               {"griesmer_length", o.griesmer_length},
                               {"meets_bound", o.meets_bound},
                               {"defect", o.defect},
                               {"griesmer_unimprovable", o.griesmer_unimprovable},
                               {"note", o.note}};
    }
    if (doc.sss) {
        const auto& s = *doc.sss;
        Json js{{"w_min", s.w_min},
                {"w_max", s.w_max},
                {"minimal_by_ratio", s.minimal_by_ratio},
                {"ratio_margin", s.ratio_margin}};
        put(js, "oracle_minimal", s.oracle_minimal);
        put(js, "structural_family", s.structural_family);
        put(js, "structural_condition", s.structural_condition);
        put(js, "structural_holds", s.structural_holds);
        js["dual_distance"] = s.dual_distance;
        js["regime"] = s.regime;
        js["reason"] = s.reason;
        j["sss"] = js;
    }
    if (doc.comparison) {
        Json diff = Json::array();
        for (const auto& d : doc.comparison->diff)
            diff.push_back(Json{{"weight", d.weight}, {"predicted", d.predicted}, {"enumerated", d.enumerated}});
        j["comparison"] = Json{{"match", doc.comparison->match}, {"diff", diff}};
    }
    if (doc.periods) {
        const auto& p = *doc.periods;
        Json jp{{"q", p.q}, {"N", p.N}};
        Json direct = Json::array();
        for (const auto& d : p.direct) direct.push_back(Json{{"coeffs", d.coeffs}, {"re", d.re}, {"im", d.im}});
        jp["direct"] = direct;
        put(jp, "branch", p.branch);
        put(jp, "j", p.j);
        put(jp, "gamma", p.gamma);
        if (!p.closed_form.empty()) {
            Json cf = Json::array();
            for (const auto& c : p.closed_form)
                cf.push_back(Json{{"expression", c.expression}, {"re", c.re}, {"im", c.im}});
            jp["closed_form"] = cf;
        }
        put(jp, "agreement", p.agreement);
        jp["partition_sum_ok"] = p.partition_sum_ok;
        jp["bound_check"] = p.bound_check;
        j["periods"] = jp;
    }
    if (!doc.examples.empty()) {
        Json rows = Json::array();
        for (const auto& r : doc.examples) {
            Json jr{{"name", r.name},
                    {"spec", spec_to_json(r.spec)},
                    {"length", r.length},
                    {"dimension", r.dimension},
                    {"d", r.d},
                    {"enumerator", r.enumerator},
                    {"predicted_enumerator", r.predicted_enumerator},
                    {"expected_enumerator", r.expected_enumerator},
                    {"match", r.match},
                    {"griesmer", r.griesmer},
                    {"griesmer_defect", r.griesmer_defect},
                    {"sss_regime", r.sss_regime},
                    {"dual_distance", r.dual_distance}};
            put(jr, "annotation", r.annotation);
            rows.push_back(jr);
        }
        j["examples"] = rows;
    }
    put(j, "passed", doc.passed);
    if (doc.error)
        j["error"] = Json{{"kind", doc.error->kind}, {"condition", doc.error->condition}, {"message", doc.error->message}};
    put(j, "timing_ms", doc.timing_ms);
    return j;
}

inline ReportDocument from_json(const Json& j) {
    using namespace json_detail;
    ReportDocument doc;
    doc.schema = j.at("schema_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    if (j.contains("spec")) doc.spec = spec_from_json(j.at("spec"));
    if (j.contains("field")) {
        const auto& f = j.at("field");
        doc.field = FieldInfo{f.at("p").get<std::uint64_t>(), f.at("degree").get<std::uint64_t>(),
                              f.at("modulus").get<std::vector<std::uint32_t>>(),
                              f.at("modulus_text").get<std::string>()};
    }
    if (j.contains("code")) {
        const auto& c = j.at("code");
        doc.code = CodeInfo{c.at("length").get<std::uint64_t>(), c.at("expected_dimension").get<std::uint64_t>(),
                            c.at("coordinate_order").get<std::string>()};
    }
    if (j.contains("distributions")) {
        const auto& d = j.at("distributions");
        if (d.contains("enumerated")) doc.enumerated = distribution_from_json(d.at("enumerated"));
        if (d.contains("predicted")) doc.predicted = distribution_from_json(d.at("predicted"));
    }
    doc.enumerator = get_opt<std::string>(j, "enumerator");
    if (j.contains("distance_bound")) {
        const auto& b = j.at("distance_bound");
        doc.bound = BoundDoc{get_opt<std::uint64_t>(b, "lower_bound"), get_opt<std::uint64_t>(b, "measured_d"),
                             get_opt<bool>(b, "bound_holds")};
    }
    if (j.contains("optimality")) {
        const auto& o = j.at("optimality");
        OptimalityReport r;
        r.length = o.at("length").get<std::uint64_t>();
        r.dimension = o.at("dimension").get<std::uint64_t>();
        r.d = o.at("d").get<std::uint64_t>();
        r.q = o.at("q").get<std::uint64_t>();
        r.griesmer_length = o.at("griesmer_length").get<std::uint64_t>();
        r.meets_bound = o.at("meets_bound").get<bool>();
        r.defect = o.at("defect").get<std::int64_t>();
        r.griesmer_unimprovable = o.at("griesmer_unimprovable").get<bool>();
        r.note = o.at("note").get<std::string>();
        doc.optimality = r;
    }
    if (j.contains("sss")) {
        const auto& s = j.at("sss");
        SSSDoc d;
        d.w_min = s.at("w_min").get<std::uint64_t>();
        d.w_max = s.at("w_max").get<std::uint64_t>();
        d.minimal_by_ratio = s.at("minimal_by_ratio").get<bool>();
        d.ratio_margin = s.at("ratio_margin").get<std::string>();
        d.oracle_minimal = get_opt<bool>(s, "oracle_minimal");
        d.structural_family = get_opt<std::string>(s, "structural_family");
        d.structural_condition = get_opt<std::string>(s, "structural_condition");
        d.structural_holds = get_opt<bool>(s, "structural_holds");
        d.dual_distance = s.at("dual_distance").get<std::string>();
        d.regime = s.at("regime").get<std::string>();
        d.reason = s.at("reason").get<std::string>();
        doc.sss = d;
    }
    if (j.contains("comparison")) {
        ComparisonDoc c;
        c.match = j.at("comparison").at("match").get<bool>();
        for (const auto& d : j.at("comparison").at("diff"))
            c.diff.push_back({d.at("weight").get<std::uint64_t>(), d.at("predicted").get<std::uint64_t>(),
                              d.at("enumerated").get<std::uint64_t>()});
        doc.comparison = c;
    }
    if (j.contains("periods")) {
        const auto& jp = j.at("periods");
        PeriodsDoc p;
        p.q = jp.at("q").get<std::uint64_t>();
        p.N = jp.at("N").get<std::uint64_t>();
        for (const auto& d : jp.at("direct"))
            p.direct.push_back(
                {d.at("coeffs").get<std::vector<std::int64_t>>(), d.at("re").get<double>(), d.at("im").get<double>()});
        p.branch = get_opt<std::string>(jp, "branch");
        p.j = get_opt<std::uint64_t>(jp, "j");
        p.gamma = get_opt<std::uint64_t>(jp, "gamma");
        if (jp.contains("closed_form"))
            for (const auto& c : jp.at("closed_form"))
                p.closed_form.push_back(
                    {c.at("expression").get<std::string>(), c.at("re").get<double>(), c.at("im").get<double>()});
        p.agreement = get_opt<bool>(jp, "agreement");
        p.partition_sum_ok = jp.at("partition_sum_ok").get<bool>();
        p.bound_check = jp.at("bound_check").get<bool>();
        doc.periods = p;
    }
    if (j.contains("examples")) {
        for (const auto& r : j.at("examples")) {
            ExampleRow row;
            row.name = r.at("name").get<std::string>();
            row.spec = spec_from_json(r.at("spec"));
            row.length = r.at("length").get<std::uint64_t>();
            row.dimension = r.at("dimension").get<std::uint64_t>();
            row.d = r.at("d").get<std::uint64_t>();
            row.enumerator = r.at("enumerator").get<std::string>();
            row.predicted_enumerator = r.at("predicted_enumerator").get<std::string>();
            row.expected_enumerator = r.at("expected_enumerator").get<std::string>();
            row.match = r.at("match").get<bool>();
            row.griesmer = r.at("griesmer").get<std::string>();
            row.griesmer_defect = r.at("griesmer_defect").get<std::int64_t>();
            row.sss_regime = r.at("sss_regime").get<std::string>();
            row.dual_distance = r.at("dual_distance").get<std::string>();
            row.annotation = get_opt<std::string>(r, "annotation");
            doc.examples.push_back(row);
        }
    }
    doc.passed = get_opt<bool>(j, "passed");
    if (j.contains("error")) {
        const auto& e = j.at("error");
        doc.error = ErrorDoc{e.at("kind").get<std::string>(), e.at("condition").get<std::string>(),
                             e.at("message").get<std::string>()};
    }
    doc.timing_ms = get_opt<double>(j, "timing_ms");
    return doc;
}

inline std::string render_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline ReportDocument parse_report(const std::string& text) {
    try {
        return from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::validation, "bad_report", std::string("cannot parse report: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// CSV: one row per weight for distributions, one row per example for verify-paper.

inline std::string render_csv(const ReportDocument& doc) {
    std::ostringstream os;
    if (!doc.examples.empty()) {
        os << "name,p,s,m,m1,h,n,length,dimension,d,enumerator,match,griesmer_defect,sss_regime,dual_distance\n";
        for (const auto& r : doc.examples)
            os << r.name << ',' << r.spec.p << ',' << r.spec.s << ',' << r.spec.m << ',' << r.spec.m1 << ','
               << r.spec.h << ',' << r.spec.n << ',' << r.length << ',' << r.dimension << ',' << r.d << ",\""
               << r.enumerator << "\"," << (r.match ? "true" : "false") << ',' << r.griesmer_defect << ','
               << r.sss_regime << ',' << r.dual_distance << '\n';
        return os.str();
    }
    if (doc.periods) {
        os << "index,direct_re,direct_im,closed_form\n";
        for (std::size_t i = 0; i < doc.periods->direct.size(); ++i) {
            os << i << ',' << doc.periods->direct[i].re << ',' << doc.periods->direct[i].im << ',';
            if (i < doc.periods->closed_form.size()) os << '"' << doc.periods->closed_form[i].expression << '"';
            os << '\n';
        }
        return os.str();
    }
    os << "distribution,weight,frequency\n";
    auto emit = [&](const char* name, const std::optional<DistributionDoc>& d) {
        if (!d) return;
        for (auto [w, f] : d->counts) os << name << ',' << w << ',' << f << '\n';
    };
    emit("enumerated", doc.enumerated);
    emit("predicted", doc.predicted);
    if (doc.error) os << "error," << doc.error->condition << ",\"" << doc.error->message << "\"\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Text: human-oriented summary.

inline std::string render_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << "command: " << doc.command << '\n';
    if (doc.error) {
        os << "error [" << doc.error->kind << "/" << doc.error->condition << "]: " << doc.error->message << '\n';
        return os.str();
    }
    if (doc.spec) os << "spec: " << doc.spec->to_string() << ", q = " << doc.spec->q() << '\n';
    if (doc.field) os << "field: F_" << doc.field->p << "^" << doc.field->degree << " mod " << doc.field->modulus_text << '\n';
    if (doc.code) os << "length " << doc.code->length << ", expected dimension " << doc.code->expected_dimension << '\n';
    if (doc.enumerated)
        os << "enumerated: " << doc.enumerated->enumerator << " (dimension "
           << doc.enumerated->measured_dimension.value_or(0) << ")\n";
    if (doc.predicted) {
        os << "predicted (" << doc.predicted->source << "): " << doc.predicted->enumerator << '\n';
        for (const auto& r : doc.predicted->rows)
            os << "  " << r.provenance << ": weight " << r.weight << " x " << r.frequency << '\n';
    }
    if (doc.comparison) {
        os << "match: " << (doc.comparison->match ? "yes" : "no") << '\n';
        for (const auto& d : doc.comparison->diff)
            os << "  weight " << d.weight << ": predicted " << d.predicted << ", enumerated " << d.enumerated << '\n';
    }
    if (doc.bound) {
        os << "distance bound: ";
        if (doc.bound->lower_bound)
            os << *doc.bound->lower_bound;
        else
            os << "not applicable";
        if (doc.bound->measured_d) os << " vs measured d = " << *doc.bound->measured_d;
        os << '\n';
    }
    if (doc.optimality)
        os << "griesmer: [" << doc.optimality->length << "," << doc.optimality->dimension << "," << doc.optimality->d
           << "] sum = " << doc.optimality->griesmer_length << ", " << doc.optimality->note << '\n';
    if (doc.sss)
        os << "sss: w_min/w_max = " << doc.sss->w_min << "/" << doc.sss->w_max
           << (doc.sss->minimal_by_ratio ? " certifies" : " does not certify") << " minimality; dual distance "
           << doc.sss->dual_distance << "; regime " << doc.sss->regime << '\n';
    if (doc.periods) {
        os << "Gauss periods of order " << doc.periods->N << " in F_" << doc.periods->q << ":\n";
        for (std::size_t i = 0; i < doc.periods->direct.size(); ++i) {
            os << "  eta_" << i << " = " << doc.periods->direct[i].re;
            if (auto im = doc.periods->direct[i].im; im != 0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
            if (i < doc.periods->closed_form.size()) os << "   closed form " << doc.periods->closed_form[i].expression;
            os << '\n';
        }
        if (doc.periods->branch) os << "  branch: " << *doc.periods->branch << '\n';
        os << "  magnitude bound: " << (doc.periods->bound_check ? "holds" : "violated") << '\n';
    }
    for (const auto& r : doc.examples)
        os << (r.match ? "PASS " : "FAIL ") << r.name << " [" << r.length << "," << r.dimension << "," << r.d << "] "
           << r.enumerator << " | " << r.griesmer << " | " << r.sss_regime << '\n';
    if (doc.passed) os << (*doc.passed ? "all checks passed" : "some checks failed") << '\n';
    return os.str();
}

}  // namespace fewweight
