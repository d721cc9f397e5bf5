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

#ifndef ETOG_EXPERIMENTS_HPP
#define ETOG_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "etog/condition.hpp"
#include "etog/report.hpp"
#include "etog/strategy.hpp"

namespace etog {

/** Same text as data/counterexample.arena. */
extern const std::string_view kCounterexampleArenaText;
/** Same text as data/free_ab.val. */
extern const std::string_view kFreeValuationText;

/** Colors eps, a, a^-1, b, b^-1 mapped to the like-named elements of free(a,b). */
Valuation counterexampleValuation();
/** Three-node arena: Alice at sq picks a circle, Bob at lc plays a^{+-1}, at rc b^{+-1}. */
Arena counterexampleArena();

/** W1: decreasing subsequence under the Magnus order. */
EtogCondition w1();
/** W2: same valuation, reversed order (an increasing subsequence in the Magnus order). */
EtogCondition w2();
UnionCondition w1UnionW2();

/** Alice's two positional strategies: sq always to lc, sq always to rc. */
PositionalStrategy aliceAlwaysLeft(const Arena& arena);
PositionalStrategy aliceAlwaysRight(const Arena& arena);
/** Two states: go left, then right, then left, ... */
MealyStrategy aliceAlternating(const Arena& arena);

struct SuiteValuation
{
    std::string name;
    Valuation valuation;
};

/**
 * Valuations every condition-level law is checked on: int and zlex(2)
 * over four colors, the free(a,b) valuation, and the same under inv(...).
 */
std::vector<SuiteValuation> suiteValuations();

/** Prefix-dependent control condition over {x, y}: the second letter of the word is x. */
bool secondLetterIsX(const UPWord& w);

struct CheckBudgets
{
    std::size_t orderSamples = 10000;
    std::size_t wordLen = 6;          // random free words for the order axioms
    std::size_t periodMaxLen = 5;     // per-law oracle equivalence
    std::size_t horizonFactor = 50;   // oracle horizon = factor * |period|
    std::size_t closureMaxLen = 6;
    std::size_t mixingSamples = 1000;
    std::size_t subsemigroupMaxLen = 4;
};

/**
 * The counterexample run on the shipped arena and W1 u W2: both positional
 * Alice strategies must be beaten by a Bob strategy with at most 2 states,
 * the alternating strategy must win against every Bob strategy with at most
 * bobMemory states, and the prefix products must be distinct to ramseyDepth.
 * Also solves W1 alone as a sanity control.
 */
RunReport runCounterexample(std::size_t bobMemory, unsigned ramseyDepth);

/**
 * Full property battery. With injectFault the free-group order scans ab
 * right after a, which breaks bi-invariance; the order-axiom verdicts are
 * then expected to fail.
 */
RunReport runChecks(std::uint64_t seed, const CheckBudgets& budgets, bool injectFault);

}

#endif
