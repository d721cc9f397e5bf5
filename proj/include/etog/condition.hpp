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

#ifndef ETOG_CONDITION_HPP
#define ETOG_CONDITION_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "etog/valuation.hpp"

namespace etog {

/** The infinite word prefix . period^omega; period is non-empty. */
struct UPWord
{
    ColorWord prefix;
    ColorWord period;

    UPWord() = default;
    UPWord(ColorWord prefix, ColorWord period);
};

/**
 * Energy condition over a totally ordered group: an infinite word wins for
 * Alice iff its prefix-value sequence has an infinite strictly decreasing
 * subsequence.
 */
class EtogCondition
{
public:
    explicit EtogCondition(Valuation valuation) : valuation_(std::move(valuation)) {}

    const Valuation& valuation() const { return valuation_; }
    const std::vector<std::string>& colors() const { return valuation_.colors(); }

private:
    Valuation valuation_;
};

/** Disjunction of ETOG conditions over one alphabet (same colors, same order). */
class UnionCondition
{
public:
    /** Members with the same color set are reordered to the first member's order. */
    explicit UnionCondition(std::vector<EtogCondition> members);

    const std::vector<EtogCondition>& members() const { return members_; }
    const std::vector<std::string>& colors() const { return members_.front().colors(); }

private:
    std::vector<EtogCondition> members_;
};

using Condition = std::variant<EtogCondition, UnionCondition>;

const std::vector<std::string>& colors(const Condition& cond);

/** Membership of an ultimately periodic word: val(period) < identity; the prefix is irrelevant. */
bool upMember(const EtogCondition& cond, const UPWord& w);
bool upMember(const UnionCondition& cond, const UPWord& w);
bool upMember(const Condition& cond, const UPWord& w);

/**
 * Brute-force membership used as a test oracle. Lays out the prefix
 * followed by `horizon` letters of period^omega, and reports whether some
 * pair of positions i < j inside the periodic part with j - i a multiple of
 * |period| has value(j) < value(i). Requires horizon >= 2 |period|.
 *
 * Free-group components are compared through their Magnus expansions
 * directly (lexicographically, deg-lex monomial order) rather than through
 * compare(), so that this stays an independent route.
 */
bool upMemberOracle(const EtogCondition& cond, const UPWord& w, std::size_t horizon);

/**
 * Parity over priorities 1..d as an energy condition over zlex(d):
 * val(k) has (-1)^k at coordinate d - k (0-based), zero elsewhere.
 * Colors are named "1".."d".
 */
EtogCondition parityAsEtog(unsigned d);

/**
 * Condition strings: `etog(<file>)`, `inv-etog(<file>)` (same valuation,
 * reversed order), `union(<cond>,<cond>,...)`. Files are read through load.
 */
using ValuationLoader = std::function<Valuation(const std::string&)>;
Condition parseCondition(std::string_view text, const ValuationLoader& load);
Condition parseCondition(std::string_view text);

}

#endif
