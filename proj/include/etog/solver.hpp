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

#ifndef ETOG_SOLVER_HPP
#define ETOG_SOLVER_HPP

#include <vector>

#include "etog/condition.hpp"
#include "etog/strategy.hpp"

namespace etog {

/**
 * Translates arena color indices into the condition's color indices.
 * Throws AlphabetMismatch if an arena color is missing from the condition.
 */
class ColorMap
{
public:
    ColorMap(const Arena& arena, const std::vector<std::string>& conditionColors);

    std::size_t operator()(std::size_t arenaColor) const { return map_[arenaColor]; }

    /** Condition-side color word of an edge path. */
    ColorWord word(const Arena& arena, const std::vector<std::size_t>& edges) const;

private:
    std::vector<std::size_t> map_;
};

struct EtogSolution
{
    std::vector<Player> winner;  // per node
    PositionalStrategy alice;    // wins from every Alice-winning node
    PositionalStrategy bob;      // wins from every Bob-winning node
    std::size_t aliceStrategies = 0;
    std::size_t bobStrategies = 0;
};

/**
 * Exact solver for one ETOG condition by exhaustive enumeration of
 * positional strategy pairs. ETOG conditions are bi-positional, so Alice
 * wins from s iff some positional strategy beats every positional Bob
 * strategy from s, and symmetrically for Bob. Witnesses are the first
 * uniform strategies in enumeration order. Throws AlphabetMismatch, and
 * std::logic_error if the enumeration contradicts positional determinacy.
 */
EtogSolution solveEtog(const Arena& arena, const EtogCondition& cond);

}

#endif
