/*
 * Copyright 2026 The etog authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "etog/ramsey.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "etog/free_word.hpp"

namespace etog {

RamseyReport ramseyDistinctCheck(unsigned depth)
{
    if (depth == 0) throw std::invalid_argument("Ramsey depth must be at least 1");
    if (depth > 12) throw std::invalid_argument("Ramsey depth above 12 is not supported");
    static const std::vector<std::string> gens{"a", "b"};

    RamseyReport report;
    report.depth = depth;
    const std::size_t steps = 2 * static_cast<std::size_t>(depth);
    const std::size_t paths = std::size_t{1} << steps;
    for (std::size_t mask = 0; mask < paths; ++mask) {
        ++report.paths;
        std::set<FreeWord> seen;
        FreeWord product;
        std::string trail;
        for (std::size_t i = 0; i < steps; ++i) {
            const int exp = (mask >> (steps - 1 - i)) & 1 ? -1 : 1;
            product *= FreeWord::generator(static_cast<std::uint32_t>(i % 2), exp);
            trail += std::string(i ? " " : "") + gens[i % 2] + (exp < 0 ? "^-1" : "");
            ++report.wordsChecked;
            if (product.isIdentity() || !seen.insert(product).second) {
                report.pass = false;
                report.counterexample = "path " + trail + " repeats " + product.toString(gens);
                return report;
            }
        }
    }
    return report;
}

}
