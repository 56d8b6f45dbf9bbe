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

// Gauss periods of every admissible order in F_q, exact and as complex numbers.
//   gauss_periods [q]

#include <cstdlib>
#include <iostream>

#include "fewweight/fewweight.hpp"

int main(int argc, char** argv) {
    using namespace fewweight;
    std::uint64_t q = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 81;
    auto pp = nt::prime_power(q);
    if (!pp) {
        std::cerr << q << " is not a prime power\n";
        return 2;
    }
    auto f = build_field(pp->first, pp->second);
    for (auto N : nt::divisors(q - 1)) {
        auto direct = gauss_periods_direct(f, static_cast<std::uint32_t>(N));
        auto cf = gauss_periods_closed_form(q, N);
        std::cout << "N = " << N;
        if (cf) std::cout << "  [" << to_string(cf->branch) << "]";
        std::cout << "\n";
        for (std::size_t i = 0; i < direct.size(); ++i) {
            std::cout << "  eta_" << i << " = ";
            if (auto v = direct[i].as_integer())
                std::cout << *v;
            else
                std::cout << direct[i].to_complex();
            if (cf) std::cout << "   = " << cf->periods[i].to_string();
            std::cout << "\n";
        }
    }
}
