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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fewweight/commands.hpp"

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoull(v);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed " << name << "=" << v << "\n";
        }
    }
    return fallback;
}

struct SpecFlags {
    std::uint64_t p = 0, s = 1, m = 0, m1 = 0, h = 0, n = 0;
};

void add_spec_flags(CLI::App* sub, SpecFlags& f) {
    sub->add_option("--p", f.p, "characteristic")->required();
    sub->add_option("--s", f.s, "q = p^s")->capture_default_str();
    sub->add_option("--m", f.m, "extension degree of F_{q^m} over F_q")->required();
    sub->add_option("--m1", f.m1, "divisor of m, F_{q^m1} holds a and x")->required();
    sub->add_option("--h", f.h, "D = (omega^(h i))")->required();
    sub->add_option("--n", f.n, "|D|")->required();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace fewweight;

    CLI::App app{"fewweight: few-weight trace codes C_K over F_q, their weight distributions and optimality checks"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");  // -h is taken by --h

    RunConfig cfg;
    cfg.limits.field_cap = env_or("FEWWEIGHT_FIELD_CAP", cfg.limits.field_cap);
    cfg.limits.enum_cap = env_or("FEWWEIGHT_ENUM_CAP", cfg.limits.enum_cap);
    std::string out_path;
    SpecFlags spec;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--field-cap", cfg.limits.field_cap, "largest field size")->capture_default_str();
        sub->add_option("--enum-cap", cfg.limits.enum_cap, "largest number of enumerated codewords")
            ->capture_default_str();
        sub->add_option("--pair-cap", cfg.limits.pair_cap, "largest code for the exhaustive minimality check")
            ->capture_default_str();
        sub->add_option("--threads", cfg.threads, "enumeration threads")->capture_default_str();
        sub->add_flag("--timing", cfg.timing, "include wall-clock timing in the report");
    };

    auto* construct = app.add_subcommand("construct", "describe C_K: field modulus, length, coordinate order");
    auto* analyze = app.add_subcommand("analyze", "enumerate C_K; Griesmer, distance bound and secret-sharing reports");
    auto* predict = app.add_subcommand("predict", "weight distribution from Gauss periods");
    auto* compare = app.add_subcommand("compare", "prediction versus enumeration");
    auto* verify = app.add_subcommand("verify-paper", "run the seven built-in reference examples");
    auto* periods = app.add_subcommand("periods", "Gauss periods of order N in F_q");

    for (auto* sub : {construct, analyze, predict, compare}) {
        add_spec_flags(sub, spec);
        common(sub);
    }
    compare->add_option("--corrupt-period", cfg.corrupt_period, "test hook: add this to eta_0 before predicting")
        ->group("");
    common(verify);
    common(periods);
    periods->add_option("--q", cfg.periods_q, "field size (prime power)")->required();
    periods->add_option("--N", cfg.periods_N, "order of the cyclotomic classes")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ErrorKind::validation);
    }

    auto* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (chosen != verify && chosen != periods) cfg.spec = CodeSpec{spec.p, spec.s, spec.m, spec.m1, spec.h, spec.n};
    if (!out_path.empty()) cfg.output_path = out_path;

    CommandResult result;
    try {
        result = run_command(cfg);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::internal);
    }

    auto text = render(result.doc, cfg.format);
    if (cfg.output_path) {
        std::ofstream os(*cfg.output_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << *cfg.output_path << "\n";
            return static_cast<int>(ErrorKind::validation);
        }
        os << text;
    } else {
        std::cout << text;
    }
    if (result.doc.error) std::cerr << "error: " << result.doc.error->message << "\n";
    return result.exit_code;
}
