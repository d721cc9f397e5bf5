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

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "etog/experiments.hpp"
#include "etog/laws.hpp"
#include "etog/order_axioms.hpp"
#include "etog/ramsey.hpp"
#include "etog/solver.hpp"
#include "etog/union_verifier.hpp"
#include "oracles.hpp"

using namespace etog;

namespace {

struct Outcome
{
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limitSeconds, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool inTime = limitSeconds <= 0 || secs < limitSeconds;
    const bool pass = o.pass && inTime;
    if (!pass) ++failures;
    std::printf("[%s] %d %s (%.2fs%s) %s\n", pass ? "PASS" : "FAIL", id, title, secs,
                limitSeconds > 0 ? (" < " + std::to_string(static_cast<int>(limitSeconds)) + "s").c_str() : "",
                o.detail.c_str());
}

ColorWord decode(std::size_t index, std::size_t length, std::size_t k)
{
    ColorWord w(length);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = index % k;
        index /= k;
    }
    return w;
}

bool isRotation(const std::string& cycle, const std::string& target)
{
    // rotations of space-separated tokens
    std::vector<std::string> a, b;
    auto split = [](const std::string& s, std::vector<std::string>& out) {
        std::size_t i = 0;
        while (i < s.size()) {
            const std::size_t j = s.find(' ', i);
            out.push_back(s.substr(i, j == std::string::npos ? std::string::npos : j - i));
            if (j == std::string::npos) break;
            i = j + 1;
        }
    };
    split(cycle, a);
    split(target, b);
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        bool same = true;
        for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + r) % a.size()] == b[i];
        if (same) return true;
    }
    return false;
}

Outcome counterexample()
{
    const Arena arena = counterexampleArena();
    const UnionCondition cond = w1UnionW2();
    const Valuation v = counterexampleValuation();
    const ColorMap map(arena, v.colors());
    const std::size_t sq = arena.nodeIndex("sq");
    std::string detail;
    bool ok = true;
    for (const auto& [alice, letter] : {std::pair{aliceAlwaysLeft(arena), std::string("a")},
                                        std::pair{aliceAlwaysRight(arena), std::string("b")}}) {
        const UnionVerdict r = verifyUnionStrategy(arena, cond, sq, alice, 2);
        if (r.winsWithinBound || !r.counterPlay) {
            ok = false;
            detail += "positional strategy not beaten; ";
            continue;
        }
        const std::string cycle = formatPath(arena, r.counterPlay->cycle);
        const bool shape = isRotation(cycle, "eps " + letter + " eps " + letter + "^-1") ||
                           isRotation(cycle, "eps " + letter + "^-1 eps " + letter);
        const bool zero = isIdentity(v.spec(), valWord(v, map.word(arena, r.counterPlay->cycle)));
        const bool outside = !upMember(cond, UPWord({}, map.word(arena, r.counterPlay->cycle)));
        ok = ok && shape && zero && outside && r.counterStrategy->states <= 2;
        detail += "cycle '" + cycle + "'; ";
    }
    const UnionVerdict alt = verifyUnionStrategy(arena, cond, sq, aliceAlternating(arena), 2);
    ok = ok && alt.winsWithinBound;
    detail += "alternating " + std::string(alt.winsWithinBound ? "wins" : "beaten") + " over " +
              std::to_string(alt.strategiesExplored) + " Bob classes; ";
    const RamseyReport ramsey = ramseyDistinctCheck(3);
    ok = ok && ramsey.pass && ramsey.paths == 64;
    detail += "ramsey depth 3: " + std::to_string(ramsey.paths) + " paths";
    return {ok, detail};
}

Outcome perLaw()
{
    std::size_t periods = 0;
    for (const auto& [name, v] : suiteValuations()) {
        const EtogCondition cond(v);
        const std::size_t k = v.colorCount();
        for (std::size_t len = 1; len <= 5; ++len) {
            std::size_t count = 1;
            for (std::size_t i = 0; i < len; ++i) count *= k;
            for (std::size_t idx = 0; idx < count; ++idx) {
                const UPWord w({}, decode(idx, len, k));
                ++periods;
                if (upMember(cond, w) != upMemberOracle(cond, w, 50 * len))
                    return {false, name + ": disagreement on '" + v.formatWord(w.period) + "'"};
            }
        }
    }
    return {true, std::to_string(periods) + " periods agree"};
}

Outcome orderAxioms()
{
    const OrderAxiomReport r = checkOrderAxioms(GroupSpec::free({"a", "b"}), 10000, 20240601, 6);
    return {r.pass, r.pass ? std::to_string(r.samples) + " triples, 0 failures" : r.failedLaw + ": " + r.counterexample};
}

Outcome closure()
{
    std::size_t pairs = 0;
    for (const auto& [name, v] : suiteValuations()) {
        const ClosureReport neg = checkClosure(v.colorCount(), negativeWords(v), 6);
        const ClosureReport non = checkClosure(v.colorCount(), nonNegativeWords(v), 6);
        if (!neg.pass || !non.pass) return {false, name + ": closure fails"};
        pairs += neg.pairsChecked + non.pairsChecked;
    }
    return {true, std::to_string(pairs) + " concatenations checked"};
}

Outcome parity()
{
    std::mt19937_64 rng(31337);
    const EtogCondition cond = parityAsEtog(3);
    std::size_t nodes = 0;
    for (int n = 0; n < 100; ++n) {
        const Arena arena = oracle::randomArena(rng, 5, 3, cond.colors());
        const EtogSolution sol = solveEtog(arena, cond);
        const auto expected = oracle::bruteForceWinners(arena, [&](const std::vector<std::size_t>& cycle) {
            unsigned long top = 0;
            for (std::size_t c : cycle) top = std::max(top, std::stoul(arena.colors()[c]));
            return top % 2 == 1;
        });
        for (std::size_t s = 0; s < arena.nodeCount(); ++s, ++nodes) {
            if ((sol.winner[s] == Player::Alice) != expected[s])
                return {false, "arena " + std::to_string(n) + " node " + arena.node(s).name};
        }
    }
    return {true, "100 arenas, " + std::to_string(nodes) + " nodes agree"};
}

Outcome witness()
{
    const EtogCondition cond = w1();
    const Valuation& v = cond.valuation();
    const bool zero = upMember(cond, UPWord({}, v.parseWord("a a^-1 b b^-1")));
    const bool first = upMember(cond, UPWord({}, v.parseWord("a b a^-1 b^-1")));
    const bool second = upMember(cond, UPWord({}, v.parseWord("b a b^-1 a^-1")));
    return {!zero && first != second, std::string("a a^-1 b b^-1 ") + (zero ? "member" : "non-member") +
                                          "; a b a^-1 b^-1 " + (first ? "member" : "non-member") +
                                          "; b a b^-1 a^-1 " + (second ? "member" : "non-member")};
}

Outcome fairlyMixing()
{
    FairlyMixingOptions opt;
    opt.samples = 1000;
    opt.seed = 7;
    for (const auto& [name, v] : suiteValuations()) {
        const FairlyMixingReport r = checkFairlyMixing(Condition(EtogCondition(v)), opt);
        if (!r.pass()) return {false, name + " fails"};
    }
    const FairlyMixingReport control = checkFairlyMixing(2, secondLetterIsX, opt);
    if (control.prefixCondition.pass) return {false, "prefix-dependent control passes (A)"};
    return {true, "4 conditions pass (A)(B)(C); control fails (A)"};
}

Outcome subsemigroup()
{
    const auto main = checkInvariantSubsemigroup(counterexampleValuation(), 4);
    const auto even = checkInvariantSubsemigroupSet(2, 4, [](const FreeWord& w) { return w.size() % 2 == 0; });
    return {main.pass && !even.pass, std::to_string(main.wordsEnumerated) + " words; even-length control " +
                                         (even.pass ? "passes" : "fails at " + lawName(even.failedLaw))};
}

}

int main()
{
    criterion(1, "counterexample reproduction", 10, counterexample);
    criterion(2, "per-law oracle equivalence", 60, perLaw);
    criterion(3, "Magnus order axioms", 30, orderAxioms);
    criterion(4, "closure laws", 60, closure);
    criterion(5, "parity equivalence", 120, parity);
    criterion(6, "non-permuting witness", 0, witness);
    criterion(7, "fairly-mixing battery", 60, fairlyMixing);
    criterion(8, "invariant sub-semigroup", 30, subsemigroup);
    return failures == 0 ? 0 : 1;
}
