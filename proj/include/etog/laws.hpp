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

#ifndef ETOG_LAWS_HPP
#define ETOG_LAWS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etog/condition.hpp"

namespace etog {

/** Predicate on finite non-empty words over an alphabet of a given size. */
using WordPredicate = std::function<bool(std::span<const std::size_t>)>;

/** {w : val(w) < identity}. */
WordPredicate negativeWords(const Valuation& v);
/** {w : val(w) >= identity}. */
WordPredicate nonNegativeWords(const Valuation& v);

struct ClosureCounterexample
{
    enum class Kind { ConcatenationInside, ConcatenationOutside, CyclicShift };
    Kind kind;
    ColorWord first;   // u, or the word w for a shift
    ColorWord second;  // v, or the shifted word
};

struct ClosureReport
{
    bool pass = true;
    std::size_t maxLen = 0;
    std::size_t pairsChecked = 0;
    std::size_t shiftsChecked = 0;
    std::optional<ClosureCounterexample> counterexample;
};

/**
 * Exhaustively checks that P and its complement are closed under
 * concatenation (all non-empty u, v with |u| + |v| <= maxLen) and that P is
 * invariant under cyclic shifts (all w with |w| <= maxLen). Stops at the
 * first counterexample.
 */
ClosureReport checkClosure(std::size_t alphabetSize, const WordPredicate& inP, std::size_t maxLen);

/**
 * Splits w into one or more consecutive blocks each satisfying P. Returns the
 * block end positions (the last one is |w|), or nullopt. Dynamic programming
 * over cut positions; prefers the earliest last cut.
 */
std::optional<std::vector<std::size_t>> factorizeWP(const WordPredicate& inP, std::span<const std::size_t> w);

// fairly mixing ------------------------------------------------------------------

using UpPredicate = std::function<bool(const UPWord&)>;

struct FairlyMixingOptions
{
    std::size_t samples = 1000;  // instances per condition (A), (B), (C)
    std::size_t maxLen = 3;      // longest sampled block
    std::size_t maxPairs = 2;    // (C): at most this many leading pairs x_{2i-1}, x_{2i}
    std::uint64_t seed = 1;
};

struct MixingVerdict
{
    bool pass = true;
    std::size_t instances = 0;
    std::size_t nonVacuous = 0;  // instances whose hypothesis held
    std::string counterexample;
};

struct FairlyMixingReport
{
    MixingVerdict prefixCondition;       // (A)
    MixingVerdict prefixPeriodCondition; // (B)
    MixingVerdict interleaving;          // (C)
    bool pass() const { return prefixCondition.pass && prefixPeriodCondition.pass && interleaving.pass; }
};

/**
 * Bounded, sampled check of the three fairly-mixing conditions on ultimately
 * periodic instances only. (C) is restricted to sequences x1..x2n followed
 * by a repeating pair (u, v), so all three interleavings are ultimately
 * periodic. A pass is evidence, not a decision.
 */
FairlyMixingReport checkFairlyMixing(std::size_t alphabetSize, const UpPredicate& inW,
                                     const FairlyMixingOptions& options,
                                     const std::function<std::string(const ColorWord&)>& format = {});
FairlyMixingReport checkFairlyMixing(const Condition& cond, const FairlyMixingOptions& options);

// invariant sub-semigroups ------------------------------------------------------------

struct InvariantSubsemigroupReport
{
    enum class Law { None, Multiplication, Conjugation, Totality };
    bool pass = true;
    std::size_t maxLen = 0;
    std::size_t wordsEnumerated = 0;
    std::size_t distinctImages = 0;
    Law failedLaw = Law::None;
    std::string counterexample;
};

/**
 * All reduced words over the alphabet and formal inverses, of length <= maxLen,
 * in length-then-lexicographic order (letter order: c0, c0^-1, c1, c1^-1, ...).
 */
std::vector<FreeWord> enumerateGroupWords(std::size_t alphabetSize, std::size_t maxLen);

/**
 * S = {g in F_C : val(g) >= 0}, with val extended by val(c^-1) = -val(c).
 * Checks over all group words g, x, y of length <= maxLen:
 * g in S or g^-1 in S; x, y in S => xy in S; x in S => g x g^-1 in S.
 * Laws are checked in that order; the first failure is reported.
 */
InvariantSubsemigroupReport checkInvariantSubsemigroup(const Valuation& v, std::size_t maxLen);

/** Same laws for an arbitrary subset of F_C given by membership on reduced words. */
InvariantSubsemigroupReport checkInvariantSubsemigroupSet(std::size_t alphabetSize, std::size_t maxLen,
                                                          const std::function<bool(const FreeWord&)>& inS);

std::string lawName(InvariantSubsemigroupReport::Law law);

/** val extended to a reduced word over colors and their formal inverses. */
GroupElement valGroupWord(const Valuation& v, const FreeWord& word);

}

#endif
