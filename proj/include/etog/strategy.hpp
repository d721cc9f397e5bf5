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

#ifndef ETOG_STRATEGY_HPP
#define ETOG_STRATEGY_HPP

#include <string>
#include <variant>
#include <vector>

#include "etog/arena.hpp"
#include "etog/valuation.hpp"

namespace etog {

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

/** One fixed outgoing edge per owned node; kNoEdge elsewhere. */
struct PositionalStrategy
{
    Player owner = Player::Alice;
    std::vector<std::size_t> choice; // indexed by node

    /** Throws std::invalid_argument unless choice covers exactly the owner's nodes with their own edges. */
    void validate(const Arena& arena) const;

    friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;
};

/**
 * Finite-memory strategy. move[state][node] is the edge played at an owned
 * node; update[state][edge] is the next state after any edge is taken (by
 * either player). Starts in `initial`.
 */
struct MealyStrategy
{
    Player owner = Player::Alice;
    std::size_t states = 1;
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> move;
    std::vector<std::vector<std::size_t>> update;

    void validate(const Arena& arena) const;

    static MealyStrategy fromPositional(const Arena& arena, const PositionalStrategy& s);

    friend bool operator==(const MealyStrategy&, const MealyStrategy&) = default;
};

using Strategy = std::variant<PositionalStrategy, MealyStrategy>;

/** Edge path start -> ... ; cycle is non-empty and closes on itself. */
struct Lasso
{
    std::size_t start = 0;
    std::vector<std::size_t> stem;
    std::vector<std::size_t> cycle;

    ColorWord stemColors(const Arena& arena) const;
    ColorWord cycleColors(const Arena& arena) const;
};

/**
 * The unique play from start under the two strategies, cut at the first
 * repeated (node, Alice state, Bob state). |stem| + |cycle| is at most the
 * number of joint states.
 */
Lasso playLasso(const Arena& arena, std::size_t start, const Strategy& alice, const Strategy& bob);

/** Every positional strategy of p, lexicographic: earlier nodes vary slowest, edges in declaration order. */
std::vector<PositionalStrategy> enumeratePositional(const Arena& arena, Player p);

/** Owned node -> edge-index-within-node lines, e.g. "sq -> 0 (eps to lc)". */
std::string describe(const Arena& arena, const PositionalStrategy& s);
std::string describe(const Arena& arena, const MealyStrategy& s);

/** Space-separated color names along an edge path. */
std::string formatPath(const Arena& arena, const std::vector<std::size_t>& edges);

}

#endif
