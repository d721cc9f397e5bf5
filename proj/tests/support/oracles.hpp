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

#ifndef ETOG_TESTS_ORACLES_HPP
#define ETOG_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "etog/arena.hpp"
#include "etog/free_word.hpp"
#include "etog/magnus.hpp"

namespace oracle {

/** Deletes the leftmost cancelling pair until none is left. */
std::vector<etog::Letter> naiveReduce(std::vector<etog::Letter> w);

/**
 * Coefficient of monomial m in the Magnus image of the (unreduced) letter
 * sequence w, by counting: each letter g contributes the block g once, each
 * g^-1 contributes g^k with sign (-1)^k, and blocks are laid out in order.
 */
std::int64_t magnusCoefficient(const std::vector<etog::Letter>& w, const etog::Monomial& m);

/** All monomials over k generators of degree 1..d, in degree-then-lex order. */
std::vector<etog::Monomial> degLexMonomials(std::size_t k, std::size_t d);

/**
 * Compares x and y through the first deg-lex monomial where their Magnus
 * images differ; -1, 0 or +1.
 */
int compareByExpansion(const etog::FreeWord& x, const etog::FreeWord& y, std::size_t k);

/** Random unreduced letter sequence of length 0..maxLen over k generators. */
std::vector<etog::Letter> randomLetters(std::mt19937_64& rng, std::size_t k, std::size_t maxLen);

/**
 * Brute force: Alice wins from s iff some positional sigma makes every
 * positional tau produce a winning cycle, where cycleWins judges the colors
 * of the cycle. Uses its own play simulation.
 */
template <class CycleWins>
std::vector<bool> bruteForceWinners(const etog::Arena& arena, CycleWins cycleWins);

/** Random arena with the given bounds; each node gets 1..maxOut edges. */
etog::Arena randomArena(std::mt19937_64& rng, std::size_t maxNodes, std::size_t maxOut,
                        const std::vector<std::string>& colors);

/** Every positional choice vector (edge index per node) for the owner's nodes; others -1. */
std::vector<std::vector<long>> allChoices(const etog::Arena& arena, etog::Player p);

/** Colors along the cycle reached from s under a full choice vector. */
std::vector<std::size_t> cycleColors(const etog::Arena& arena, const std::vector<long>& choice, std::size_t s);

template <class CycleWins>
std::vector<bool> bruteForceWinners(const etog::Arena& arena, CycleWins cycleWins)
{
    const auto sigmas = allChoices(arena, etog::Player::Alice);
    const auto taus = allChoices(arena, etog::Player::Bob);
    std::vector<bool> win(arena.nodeCount(), false);
    for (std::size_t s = 0; s < arena.nodeCount(); ++s) {
        for (const auto& sigma : sigmas) {
            bool all = true;
            for (const auto& tau : taus) {
                std::vector<long> joint(arena.nodeCount());
                for (std::size_t v = 0; v < arena.nodeCount(); ++v)
                    joint[v] = arena.owner(v) == etog::Player::Alice ? sigma[v] : tau[v];
                if (!cycleWins(cycleColors(arena, joint, s))) {
                    all = false;
                    break;
                }
            }
            if (all) {
                win[s] = true;
                break;
            }
        }
    }
    return win;
}

}

#endif
