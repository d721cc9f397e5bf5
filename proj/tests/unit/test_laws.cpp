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

#include <doctest.h>

#include <set>

#include "etog/experiments.hpp"
#include "etog/laws.hpp"

using namespace etog;

namespace {

Valuation intXY()
{
    return parseValuation("group int\nval x = -1\nval y = 1\n");
}

}

TEST_CASE("closure of negative words over the integers")
{
    const auto r = checkClosure(2, negativeWords(intXY()), 6);
    CHECK(r.pass);
    CHECK(r.pairsChecked > 0);
    CHECK(r.shiftsChecked > 0);
}

TEST_CASE("closure fails for a prefix-dependent predicate")
{
    // color 0 is x
    const WordPredicate startsWithX = [](std::span<const std::size_t> w) { return w[0] == 0; };
    const auto r = checkClosure(2, startsWithX, 3);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->kind == ClosureCounterexample::Kind::CyclicShift);
    CHECK(r.counterexample->first == ColorWord{0, 1});
    CHECK(r.counterexample->second == ColorWord{1, 0});
}

TEST_CASE("closure holds for every suite valuation and its complement")
{
    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        CHECK(checkClosure(v.colorCount(), negativeWords(v), 5).pass);
        CHECK(checkClosure(v.colorCount(), nonNegativeWords(v), 5).pass);
    }
}

TEST_CASE("closure detects a non-closed set")
{
    // words of even value over the integers: not closed outside (odd + odd is even)
    const WordPredicate even = [](std::span<const std::size_t> w) { return w.size() % 2 == 0; };
    const auto r = checkClosure(2, even, 4);
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample->kind == ClosureCounterexample::Kind::ConcatenationOutside);
}

TEST_CASE("factorizeWP examples")
{
    const Valuation v = intXY();
    const WordPredicate p = negativeWords(v);
    const auto xyx = factorizeWP(p, v.parseWord("x y x"));
    REQUIRE(xyx.has_value());
    CHECK(xyx->back() == 3);
    CHECK_FALSE(factorizeWP(p, v.parseWord("y")).has_value());
    CHECK_FALSE(factorizeWP(p, v.parseWord("")).has_value());

    // every reported block is in P
    const ColorWord w = v.parseWord("x x y x y y x x");
    const auto cuts = factorizeWP(p, w);
    REQUIRE(cuts.has_value());
    std::size_t start = 0;
    for (std::size_t end : *cuts) {
        CHECK(p(std::span(w).subspan(start, end - start)));
        start = end;
    }
    CHECK(start == w.size());
}

TEST_CASE("powers of P-words factorize")
{
    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        const WordPredicate p = negativeWords(v);
        for (std::size_t c = 0; c < v.colorCount(); ++c) {
            for (std::size_t d = 0; d < v.colorCount(); ++d) {
                const ColorWord y{c, d};
                if (!p(y)) continue;
                ColorWord power;
                for (int n = 1; n <= 5; ++n) {
                    power.insert(power.end(), y.begin(), y.end());
                    CHECK(factorizeWP(p, power).has_value());
                }
            }
        }
    }
}

TEST_CASE("energy conditions pass the fairly-mixing battery")
{
    FairlyMixingOptions opt;
    opt.samples = 400;
    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        const auto r = checkFairlyMixing(Condition(EtogCondition(v)), opt);
        CHECK(r.pass());
        CHECK(r.prefixCondition.nonVacuous > 0);
        CHECK(r.prefixPeriodCondition.nonVacuous > 0);
        CHECK(r.interleaving.nonVacuous > 0);
    }
}

TEST_CASE("fairly-mixing verdicts do not depend on the seed")
{
    const Condition c{EtogCondition(counterexampleValuation())};
    for (std::uint64_t seed : {2u, 3u, 99u}) {
        FairlyMixingOptions opt;
        opt.samples = 200;
        opt.seed = seed;
        CHECK(checkFairlyMixing(c, opt).pass());
    }
}

TEST_CASE("prefix-dependent control fails condition A")
{
    FairlyMixingOptions opt;
    const auto r = checkFairlyMixing(2, secondLetterIsX, opt);
    CHECK_FALSE(r.prefixCondition.pass);
    CHECK_FALSE(r.prefixCondition.counterexample.empty());
}

TEST_CASE("the first-letter predicate satisfies condition A vacuously")
{
    // x.alpha and x.beta share their first letter unless x is empty,
    // and for empty x the conclusion is the hypothesis
    const UpPredicate firstIsX = [](const UPWord& w) { return (w.prefix.empty() ? w.period[0] : w.prefix[0]) == 0; };
    FairlyMixingOptions opt;
    CHECK(checkFairlyMixing(2, firstIsX, opt).prefixCondition.pass);
}

TEST_CASE("the union of W1 and W2 fails only the interleaving condition")
{
    FairlyMixingOptions opt;
    const auto r = checkFairlyMixing(Condition(w1UnionW2()), opt);
    CHECK(r.prefixCondition.pass);
    CHECK(r.prefixPeriodCondition.pass);
    CHECK_FALSE(r.interleaving.pass);

    // the interleaving of eps a and eps a^-1 blocks
    const Valuation f = counterexampleValuation();
    const UnionCondition u = w1UnionW2();
    CHECK(upMember(u, UPWord({}, f.parseWord("eps a"))));
    CHECK(upMember(u, UPWord({}, f.parseWord("eps a^-1"))));
    CHECK_FALSE(upMember(u, UPWord({}, f.parseWord("eps a eps a^-1"))));
}

TEST_CASE("group words are enumerated reduced and without repeats")
{
    const auto words = enumerateGroupWords(2, 4);
    // 1 + 4 + 12 + 36 + 108
    CHECK(words.size() == 161);
    std::set<FreeWord> unique(words.begin(), words.end());
    CHECK(unique.size() == words.size());
    for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1].size() <= words[i].size());
}

TEST_CASE("non-negative words form an invariant sub-semigroup")
{
    const auto r = checkInvariantSubsemigroup(counterexampleValuation(), 3);
    CHECK(r.pass);
    CHECK(r.wordsEnumerated == enumerateGroupWords(5, 3).size());

    const auto all = checkInvariantSubsemigroup(parseValuation("group free(a,b)\nval p = e\nval q = e\n"), 4);
    CHECK(all.pass);
    CHECK(all.distinctImages == 1);

    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        if (v.colorCount() > 4) continue;
        CHECK(checkInvariantSubsemigroup(v, 3).pass);
    }
}

TEST_CASE("even-length words are not an invariant sub-semigroup")
{
    const auto r = checkInvariantSubsemigroupSet(2, 4, [](const FreeWord& w) { return w.size() % 2 == 0; });
    CHECK_FALSE(r.pass);
    CHECK(r.failedLaw == InvariantSubsemigroupReport::Law::Totality);
}

TEST_CASE("even-length words are still closed under products and conjugation")
{
    const auto words = enumerateGroupWords(2, 3);
    for (const auto& x : words) {
        if (x.size() % 2) continue;
        for (const auto& y : words) {
            if (y.size() % 2 == 0) CHECK((x * y).size() % 2 == 0);
            CHECK((y * x * y.inverse()).size() % 2 == 0);
        }
    }
}

TEST_CASE("the non-negative set of a misordered scan is caught")
{
    const GroupSpec faulty = GroupSpec::free({"a", "b"}, MonomialScan::FaultyAbFirst);
    const auto r = checkInvariantSubsemigroupSet(2, 3, [&](const FreeWord& w) { return sign(faulty, w) >= 0; });
    CHECK_FALSE(r.pass);
    CHECK(r.failedLaw != InvariantSubsemigroupReport::Law::None);
}
