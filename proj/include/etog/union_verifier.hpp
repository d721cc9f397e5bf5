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

#ifndef ETOG_UNION_VERIFIER_HPP
#define ETOG_UNION_VERIFIER_HPP

#include <optional>

#include "etog/condition.hpp"
#include "etog/strategy.hpp"

namespace etog {

struct UnionVerdict
{
    bool winsWithinBound = true;
    std::size_t bobMemoryBound = 0;
    std::size_t strategiesExplored = 0;        // play-distinct Bob strategy classes
    std::optional<MealyStrategy> counterStrategy;
    std::optional<Lasso> counterPlay;
};

/**
 * Bounded check of a fixed Alice strategy against every Bob Mealy strategy
 * with at most bobMemoryBound states, from one start node.
 *
 * Bob's tables are filled lazily along the play: an entry is branched on
 * only when the play first reads it, and a fresh state may only be the next
 * unused index. Strategies that agree on every entry the play reads induce
 * the same lasso, so each leaf of the search stands for a whole class.
 * The verdict holds for this bound only.
 *
 * Throws AlphabetMismatch if arena colors are outside the condition's.
 */
UnionVerdict verifyUnionStrategy(const Arena& arena, const Condition& cond, std::size_t start,
                                 const Strategy& alice, std::size_t bobMemoryBound);

}

#endif
