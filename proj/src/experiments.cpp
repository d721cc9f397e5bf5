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

#include "etog/experiments.hpp"

#include <stdexcept>

#include "etog/laws.hpp"
#include "etog/order_axioms.hpp"
#include "etog/ramsey.hpp"
#include "etog/solver.hpp"
#include "etog/union_verifier.hpp"

namespace etog {

const std::string_view kCounterexampleArenaText = R"(# Alice owns the square, Bob the two circles.
node sq A
node lc B
node rc B
edge sq eps lc
edge sq eps rc
edge lc a sq
edge lc a^-1 sq
edge rc b sq
edge rc b^-1 sq
)";

const std::string_view kFreeValuationText = R"(# colors read as the like-named elements of F(a,b)
group free(a,b)
val eps = e
val a = a
val a^-1 = a^-1
val b = b
val b^-1 = b^-1
)";

Valuation counterexampleValuation()
{
    return parseValuation(kFreeValuationText);
}

Arena counterexampleArena()
{
    const Valuation v = counterexampleValuation();
    return parseArena(kCounterexampleArenaText, v.colors());
}

EtogCondition w1()
{
    return EtogCondition(counterexampleValuation());
}

EtogCondition w2()
{
    const Valuation v = counterexampleValuation();
    return EtogCondition(v.withSpec(GroupSpec::inverse(v.spec())));
}

UnionCondition w1UnionW2()
{
    return UnionCondition({w1(), w2()});
}

namespace {

PositionalStrategy aliceTowards(const Arena& arena, std::string_view circle)
{
    PositionalStrategy s;
    s.owner = Player::Alice;
    s.choice.assign(arena.nodeCount(), kNoEdge);
    const std::size_t sq = arena.nodeIndex("sq");
    const std::size_t target = arena.nodeIndex(circle);
    for (std::size_t e : arena.outEdges(sq)) {
        if (arena.edge(e).target == target) s.choice[sq] = e;
    }
    s.validate(arena);
    return s;
}

}

PositionalStrategy aliceAlwaysLeft(const Arena& arena)
{
    return aliceTowards(arena, "lc");
}

PositionalStrategy aliceAlwaysRight(const Arena& arena)
{
    return aliceTowards(arena, "rc");
}

MealyStrategy aliceAlternating(const Arena& arena)
{
    const PositionalStrategy left = aliceAlwaysLeft(arena), right = aliceAlwaysRight(arena);
    const std::size_t sq = arena.nodeIndex("sq");
    MealyStrategy m;
    m.owner = Player::Alice;
    m.states = 2;
    m.initial = 0;
    m.move = {left.choice, right.choice};
    m.update.assign(2, std::vector<std::size_t>(arena.edgeCount()));
    for (std::size_t q = 0; q < 2; ++q) {
        for (std::size_t e = 0; e < arena.edgeCount(); ++e) m.update[q][e] = arena.edge(e).source == sq ? 1 - q : q;
    }
    m.validate(arena);
    return m;
}

std::vector<SuiteValuation> suiteValuations()
{
    std::vector<SuiteValuation> suite;
    suite.push_back({"int", parseValuation("group int\nval x = -1\nval y = 1\nval z = 0\nval w = 2\n")});
    suite.push_back({"zlex(2)", parseValuation("group zlex(2)\nval c = (0,1)\nval d = (-1,0)\nval f = (1,-2)\nval g = (0,0)\n")});
    const Valuation free = counterexampleValuation();
    suite.push_back({"free(a,b)", free});
    suite.push_back({"inv(free(a,b))", free.withSpec(GroupSpec::inverse(free.spec()))});
    return suite;
}

bool secondLetterIsX(const UPWord& w)
{
    const std::size_t i = 1;
    const std::size_t letter = i < w.prefix.size() ? w.prefix[i] : w.period[(i - w.prefix.size()) % w.period.size()];
    return letter == 0;
}

namespace {

std::string cycleText(const Arena& arena, const Lasso& l)
{
    return "stem '" + formatPath(arena, l.stem) + "' cycle '" + formatPath(arena, l.cycle) + "'";
}

Verdict positionalBeaten(const Arena& arena, const UnionCondition& cond, const std::string& name,
                         const PositionalStrategy& alice, RunReport& report)
{
    const UnionVerdict v = verifyUnionStrategy(arena, cond, arena.nodeIndex("sq"), alice, 2);
    Verdict out{name, false, "Bob memory <= 2", ""};
    if (v.winsWithinBound) {
        out.detail = "no Bob strategy with at most 2 states beats it (" + std::to_string(v.strategiesExplored) + " explored)";
        return out;
    }
    const Valuation& val = cond.members().front().valuation();
    const ColorMap colors(arena, val.colors());
    const GroupElement value = valWord(val, colors.word(arena, v.counterPlay->cycle));
    out.pass = isIdentity(val.spec(), value);
    out.detail = "beaten: " + cycleText(arena, *v.counterPlay) + " value " + formatElement(val.spec(), value);
    report.counterexamples.emplace_back(name, "Bob strategy:\n" + describe(arena, *v.counterStrategy) + "play: " +
                                                  cycleText(arena, *v.counterPlay));
    return out;
}

}

RunReport runCounterexample(std::size_t bobMemory, unsigned ramseyDepth)
{
    if (bobMemory < 2 || ramseyDepth < 2) throw std::invalid_argument("counterexample bounds must be at least 2");
    RunReport report;
    report.command = "counterexample";
    report.inputs = {{"arena", "built-in counterexample arena"},
                     {"condition", "union(etog(free_ab), inv-etog(free_ab))"},
                     {"bob-memory", std::to_string(bobMemory)},
                     {"ramsey-depth", std::to_string(ramseyDepth)}};

    const Arena arena = counterexampleArena();
    const UnionCondition cond = w1UnionW2();

    report.add(positionalBeaten(arena, cond, "positional-left-beaten", aliceAlwaysLeft(arena), report));
    report.add(positionalBeaten(arena, cond, "positional-right-beaten", aliceAlwaysRight(arena), report));

    const UnionVerdict alt = verifyUnionStrategy(arena, cond, arena.nodeIndex("sq"), aliceAlternating(arena), bobMemory);
    report.add({"alternating-wins", alt.winsWithinBound, "Bob memory <= " + std::to_string(bobMemory),
                std::to_string(alt.strategiesExplored) + " Bob strategy classes explored" +
                    (alt.counterPlay ? "; beaten by " + cycleText(arena, *alt.counterPlay) : "")});

    const RamseyReport ramsey = ramseyDistinctCheck(ramseyDepth);
    report.add({"ramsey-distinct", ramsey.pass, "depth " + std::to_string(ramseyDepth),
                std::to_string(ramsey.paths) + " paths, " + std::to_string(ramsey.wordsChecked) + " prefix products" +
                    (ramsey.pass ? "" : "; " + ramsey.counterexample)});

    Verdict control{"w1-alone-positional", false, "exhaustive positional pairs", ""};
    try {
        const EtogSolution sol = solveEtog(arena, w1());
        control.pass = true;
        for (std::size_t v = 0; v < arena.nodeCount(); ++v) {
            control.detail += (v ? ", " : "") + arena.node(v).name + ": " + std::string(playerName(sol.winner[v]));
        }
    } catch (const std::exception& ex) {
        control.detail = ex.what();
    }
    report.add(control);

    const bool all = report.pass();
    report.add({"union-not-half-positional", all,
                "Bob memory <= " + std::to_string(bobMemory) + ", depth " + std::to_string(ramseyDepth),
                all ? "union not half-positional (within stated bounds)" : "some component verdict failed"});
    return report;
}

namespace {

std::string orderSpecName(const GroupSpec& spec, bool faulty)
{
    return spec.toString() + (faulty ? "+fault" : "");
}

void addOrderAxioms(RunReport& report, std::uint64_t seed, const CheckBudgets& b, bool injectFault)
{
    const GroupSpec freeAb = GroupSpec::free({"a", "b"});
    std::vector<std::pair<GroupSpec, bool>> specs{
        {injectFault ? freeAb.withScan(MonomialScan::FaultyAbFirst) : freeAb, injectFault},
        {GroupSpec::integers(), false},
        {GroupSpec::lexVec(3), false},
        {GroupSpec::inverse(freeAb), false},
        {GroupSpec::product(freeAb, GroupSpec::integers()), false},
    };
    for (const auto& [spec, faulty] : specs) {
        const OrderAxiomReport r = checkOrderAxioms(spec, b.orderSamples, seed, b.wordLen);
        report.add({"order-axioms:" + orderSpecName(spec, faulty), r.pass,
                    std::to_string(b.orderSamples) + " samples, words <= " + std::to_string(b.wordLen),
                    r.pass ? "" : r.failedLaw + ": " + r.counterexample});
    }
}

ColorWord decodeWord(std::size_t index, std::size_t length, std::size_t k)
{
    ColorWord w(length);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = index % k;
        index /= k;
    }
    return w;
}

void addPerLaw(RunReport& report, const CheckBudgets& b)
{
    for (const auto& [name, v] : suiteValuations()) {
        const EtogCondition cond(v);
        const std::size_t k = v.colorCount();
        std::size_t periods = 0;
        std::string mismatch;
        for (std::size_t len = 1; len <= b.periodMaxLen && mismatch.empty(); ++len) {
            std::size_t count = 1;
            for (std::size_t i = 0; i < len; ++i) count *= k;
            for (std::size_t idx = 0; idx < count && mismatch.empty(); ++idx) {
                const UPWord w({}, decodeWord(idx, len, k));
                ++periods;
                if (upMember(cond, w) != upMemberOracle(cond, w, b.horizonFactor * len))
                    mismatch = "period '" + v.formatWord(w.period) + "'";
            }
        }
        report.add({"per-law-oracle:" + name, mismatch.empty(),
                    "periods <= " + std::to_string(b.periodMaxLen) + ", horizon " + std::to_string(b.horizonFactor) + "|y|",
                    mismatch.empty() ? std::to_string(periods) + " periods agree" : "disagreement on " + mismatch});
    }
}

std::string closureText(const Valuation& v, const ClosureCounterexample& c)
{
    switch (c.kind) {
    case ClosureCounterexample::Kind::ConcatenationInside:
        return "u='" + v.formatWord(c.first) + "' v='" + v.formatWord(c.second) + "' in P, uv not";
    case ClosureCounterexample::Kind::ConcatenationOutside:
        return "u='" + v.formatWord(c.first) + "' v='" + v.formatWord(c.second) + "' outside P, uv in P";
    case ClosureCounterexample::Kind::CyclicShift:
        return "'" + v.formatWord(c.first) + "' and its shift '" + v.formatWord(c.second) + "' differ";
    }
    return {};
}

void addClosure(RunReport& report, const CheckBudgets& b)
{
    for (const auto& [name, v] : suiteValuations()) {
        const ClosureReport neg = checkClosure(v.colorCount(), negativeWords(v), b.closureMaxLen);
        const ClosureReport nonNeg = checkClosure(v.colorCount(), nonNegativeWords(v), b.closureMaxLen);
        const bool pass = neg.pass && nonNeg.pass;
        std::string detail = std::to_string(neg.pairsChecked + nonNeg.pairsChecked) + " pairs, " +
                             std::to_string(neg.shiftsChecked + nonNeg.shiftsChecked) + " shifts";
        if (!neg.pass) detail = closureText(v, *neg.counterexample);
        else if (!nonNeg.pass) detail = "complement: " + closureText(v, *nonNeg.counterexample);
        report.add({"closure:" + name, pass, "words <= " + std::to_string(b.closureMaxLen), detail});

        const WordPredicate inP = negativeWords(v);
        std::string fact;
        for (std::size_t len = 1; len <= 3 && fact.empty(); ++len) {
            std::size_t count = 1;
            for (std::size_t i = 0; i < len; ++i) count *= v.colorCount();
            for (std::size_t idx = 0; idx < count && fact.empty(); ++idx) {
                const ColorWord y = decodeWord(idx, len, v.colorCount());
                if (!inP(y)) continue;
                ColorWord power;
                for (std::size_t n = 1; n <= 4 && fact.empty(); ++n) {
                    power.insert(power.end(), y.begin(), y.end());
                    if (!factorizeWP(inP, power)) fact = "y='" + v.formatWord(y) + "' n=" + std::to_string(n);
                }
            }
        }
        report.add({"factorization:" + name, fact.empty(), "|y| <= 3, n <= 4", fact});
    }
}

std::string mixingDetail(const FairlyMixingReport& r)
{
    auto part = [](const char* label, const MixingVerdict& m) {
        return std::string(label) + (m.pass ? " pass " : " FAIL ") + std::to_string(m.nonVacuous) + "/" +
               std::to_string(m.instances) + (m.pass ? "" : " (" + m.counterexample + ")");
    };
    return part("A", r.prefixCondition) + "; " + part("B", r.prefixPeriodCondition) + "; " + part("C", r.interleaving);
}

void addFairlyMixing(RunReport& report, std::uint64_t seed, const CheckBudgets& b)
{
    FairlyMixingOptions opt;
    opt.samples = b.mixingSamples;
    opt.seed = seed;
    const std::string bound = std::to_string(b.mixingSamples) + " samples per condition";
    for (const auto& [name, v] : suiteValuations()) {
        const FairlyMixingReport r = checkFairlyMixing(Condition(EtogCondition(v)), opt);
        report.add({"fairly-mixing:" + name, r.pass(), bound, mixingDetail(r)});
    }

    const FairlyMixingReport control = checkFairlyMixing(2, secondLetterIsX, opt);
    report.add({"fairly-mixing-control:second-letter", !control.prefixCondition.pass, bound,
                "expected (A) to fail; " + mixingDetail(control)});

    const FairlyMixingReport uni = checkFairlyMixing(Condition(w1UnionW2()), opt);
    const bool onlyC = uni.prefixCondition.pass && uni.prefixPeriodCondition.pass && !uni.interleaving.pass;
    report.add({"fairly-mixing-control:w1-union-w2", onlyC, bound, "expected only (C) to fail; " + mixingDetail(uni)});
}

void addInvariantSubsemigroup(RunReport& report, const CheckBudgets& b)
{
    const std::string bound = "group words <= " + std::to_string(b.subsemigroupMaxLen);
    auto detail = [](const InvariantSubsemigroupReport& r) {
        std::string s = std::to_string(r.wordsEnumerated) + " words";
        if (r.distinctImages) s += ", " + std::to_string(r.distinctImages) + " images";
        if (!r.pass) s += "; " + lawName(r.failedLaw) + " fails: " + r.counterexample;
        return s;
    };

    const auto main = checkInvariantSubsemigroup(counterexampleValuation(), b.subsemigroupMaxLen);
    report.add({"invariant-subsemigroup:free(a,b)", main.pass, bound, detail(main)});

    const Valuation trivial = parseValuation("group free(a,b)\nval p = e\nval q = e\n");
    const auto all = checkInvariantSubsemigroup(trivial, b.subsemigroupMaxLen);
    report.add({"invariant-subsemigroup:identity-valuation", all.pass, bound, detail(all)});

    const auto even = checkInvariantSubsemigroupSet(2, b.subsemigroupMaxLen, [](const FreeWord& w) { return w.size() % 2 == 0; });
    report.add({"invariant-subsemigroup-control:even-length", !even.pass, bound, "expected a failure; " + detail(even)});
}

}

RunReport runChecks(std::uint64_t seed, const CheckBudgets& budgets, bool injectFault)
{
    RunReport report;
    report.command = "check";
    report.inputs = {{"seed", std::to_string(seed)},
                     {"order samples", std::to_string(budgets.orderSamples)},
                     {"closure max length", std::to_string(budgets.closureMaxLen)},
                     {"period max length", std::to_string(budgets.periodMaxLen)},
                     {"mixing samples", std::to_string(budgets.mixingSamples)},
                     {"sub-semigroup max length", std::to_string(budgets.subsemigroupMaxLen)},
                     {"inject fault", injectFault ? "yes" : "no"}};
    addOrderAxioms(report, seed, budgets, injectFault);
    addPerLaw(report, budgets);
    addClosure(report, budgets);
    addFairlyMixing(report, seed, budgets);
    addInvariantSubsemigroup(report, budgets);
    return report;
}

}
