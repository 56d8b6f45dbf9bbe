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

// Builds one code, enumerates it, predicts its distribution from Gauss
// periods and prints both next to the Griesmer verdict.
//   weight_distribution [p m m1 h n]     (s = 1)

#include <cstdlib>
#include <iostream>

#include "fewweight/fewweight.hpp"

int main(int argc, char** argv) {
    using namespace fewweight;
    CodeSpec spec{3, 1, 4, 2, 4, 10};
    if (argc == 6) {
        spec.p = std::strtoull(argv[1], nullptr, 10);
        spec.m = std::strtoull(argv[2], nullptr, 10);
        spec.m1 = std::strtoull(argv[3], nullptr, 10);
        spec.h = std::strtoull(argv[4], nullptr, 10);
        spec.n = std::strtoull(argv[5], nullptr, 10);
    }
    try {
        auto code = build_code(spec);
        auto wd = weight_distribution_bruteforce(code);
        auto pd = predicted_distribution(spec, preferred_period_source(spec));

        std::cout << spec.to_string() << " over F_" << code.q() << ", field modulus "
                  << code.field().modulus_string() << "\n";
        std::cout << "[" << code.length() << "," << wd.measured_dimension << "," << wd.min_distance() << "]\n";
        std::cout << "enumerated: " << enumerator_string(wd) << "\n";
        std::cout << "predicted:  " << enumerator_string(pd.code_counts()) << " (" << to_string(pd.source)
                  << " periods)\n";
        auto g = griesmer_report(code.length(), wd.measured_dimension, wd.min_distance(), code.q());
        std::cout << "Griesmer:   " << g.note << "\n";
        return pd.code_counts() == wd.counts ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.condition() << ": " << e.what() << "\n";
        return e.exit_code();
    }
}
