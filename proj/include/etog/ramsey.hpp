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

#ifndef ETOG_RAMSEY_HPP
#define ETOG_RAMSEY_HPP

#include <string>

namespace etog {

struct RamseyReport
{
    bool pass = true;
    unsigned depth = 0;
    std::size_t paths = 0;         // 4^depth sign vectors
    std::size_t wordsChecked = 0;  // prefix products examined
    std::string counterexample;
};

/**
 * For every sign vector (e1, d1, ..., e_depth, d_depth) in {+1,-1}^(2 depth),
 * forms the prefix products a^e1, a^e1 b^d1, a^e1 b^d1 a^e2, ... in F(a,b)
 * and checks that along each path they are pairwise distinct and never the
 * identity.
 */
RamseyReport ramseyDistinctCheck(unsigned depth);

}

#endif
