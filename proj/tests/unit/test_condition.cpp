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

#include <random>

#include "etog/condition.hpp"
#include "etog/error.hpp"
#include "etog/experiments.hpp"
#include "etog/laws.hpp"

using namespace etog;

namespace {

Valuation intXY()
{
    return parseValuation("group int\nval x = -1\nval y = 1\n");
}

std::string fmt(const Valuation& v, const GroupElement& g)
{
    return formatElement(v.spec(), g);
}

std::vector<std::string> fmtAll(const Valuation& v, const std::vector<GroupElement>& gs)
{
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(fmt(v, g));
    return out;
}

UPWord up(const Valuation& v, const std::string& prefix, const std::string& period)
{
    return UPWord(v.parseWord(prefix), v.parseWord(period));
}

/** All words over k letters of length 1..maxLen. */
std::vector<ColorWord> allWords(std::size_t k, std::size_t maxLen)
{
    std::vector<ColorWord> out, layer{{}};
    for (std::size_t len = 1; len <= maxLen; ++len) {
        std::vector<ColorWord> next;
        for (const auto& w : layer) {
            for (std::size_t c = 0; c < k; ++c) {
                auto n = w;
                n.push_back(c);
                next.push_back(n);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}

TEST_CASE("valWord examples")
{
    const Valuation v = intXY();
    CHECK(fmt(v, valWord(v, v.parseWord("x x y"))) == "-1");
    CHECK(fmt(v, valWord(v, v.parseWord(""))) == "0");
    const Valuation f = counterexampleValuation();
    CHECK(isIdentity(f.spec(), valWord(f, f.parseWord("eps a eps a^-1"))));
    CHECK_THROWS_AS(v.parseWord("x z"), UnknownColor);
}

TEST_CASE("prefixSums examples")
{
    const Valuation f = counterexampleValuation();
    CHECK(fmtAll(f, prefixSums(f, f.parseWord("eps a eps a^-1"))) == std::vector<std::string>{"e", "a", "a", "e"});
    CHECK(fmtAll(f, prefixSums(f, f.parseWord("eps a eps b"))) == std::vector<std::string>{"e", "a", "a", "a b"});
    const Valuation v = intXY();
    CHECK(fmtAll(v, prefixSums(v, v.parseWord("x x x"))) == std::vector<std::string>{"-1", "-2", "-3"});
}

TEST_CASE("prefixSums entries are valWord of prefixes")
{
    const Valuation f = counterexampleValuation();
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> c(0, 4), len(0, 12);
    for (int n = 0; n < 200; ++n) {
        ColorWord w(len(rng));
        for (auto& x : w) x = c(rng);
        const auto sums = prefixSums(f, w);
        REQUIRE(sums.size() == w.size());
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(sums[i] == valWord(f, std::span(w).first(i + 1)));
    }
}

TEST_CASE("upMember examples")
{
    const Valuation f = counterexampleValuation();
    const UnionCondition u = w1UnionW2();
    const UPWord w = up(f, "eps", "a eps a^-1 eps");
    CHECK_FALSE(upMember(w1(), w));
    CHECK_FALSE(upMember(w2(), w));
    CHECK_FALSE(upMember(u, w));

    // ab is not the identity, so exactly one of the two reversed orders makes it negative
    const UPWord ab = up(f, "", "eps a eps b");
    CHECK(upMember(w1(), ab) != upMember(w2(), ab));
    CHECK(upMember(u, ab));

    CHECK(upMember(EtogCondition(intXY()), up(intXY(), "", "x")));
}

TEST_CASE("non-permuting witness under the fixed orientation")
{
    const Valuation f = counterexampleValuation();
    CHECK_FALSE(upMember(w1(), up(f, "", "a a^-1 b b^-1")));
    CHECK_FALSE(upMember(w1(), up(f, "", "a b a^-1 b^-1")));
    CHECK(upMember(w1(), up(f, "", "b a b^-1 a^-1")));
}

TEST_CASE("upMemberOracle examples")
{
    CHECK(upMemberOracle(EtogCondition(intXY()), up(intXY(), "", "x"), 4));
    const Valuation f = counterexampleValuation();
    CHECK_FALSE(upMemberOracle(w1(), up(f, "", "a eps a^-1 eps"), 8));
    CHECK_FALSE(upMemberOracle(w2(), up(f, "", "a eps a^-1 eps"), 8));
    const Valuation z = parseValuation("group zlex(2)\nval c = (0,1)\nval d = (-1,0)\n");
    CHECK(fmt(z, valWord(z, z.parseWord("c d"))) == "(-1,1)");
    CHECK(upMemberOracle(EtogCondition(z), up(z, "", "c d"), 6));
    CHECK_THROWS(upMemberOracle(EtogCondition(z), up(z, "", "c d"), 3));
}

TEST_CASE("per-law: membership equals the brute-force oracle on short periods")
{
    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        const EtogCondition cond(v);
        for (const auto& y : allWords(v.colorCount(), 3)) {
            const UPWord w({}, y);
            const bool member = upMember(cond, w);
            REQUIRE(member == upMemberOracle(cond, w, 50 * y.size()));
            CHECK(member == (compare(v.spec(), valWord(v, y), identity(v.spec())) < 0));
        }
    }
}

TEST_CASE("membership ignores prefixes and period unrolling")
{
    std::mt19937_64 rng(42);
    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        const EtogCondition cond(v);
        std::uniform_int_distribution<std::size_t> c(0, v.colorCount() - 1), len(0, 4);
        for (int n = 0; n < 300; ++n) {
            ColorWord x(len(rng)), y(len(rng) + 1);
            for (auto& l : x) l = c(rng);
            for (auto& l : y) l = c(rng);
            const bool base = upMember(cond, UPWord({}, y));
            CHECK(upMember(cond, UPWord(x, y)) == base);
            ColorWord xy = x, yy = y;
            xy.insert(xy.end(), y.begin(), y.end());
            yy.insert(yy.end(), y.begin(), y.end());
            CHECK(upMember(cond, UPWord(xy, y)) == base);
            CHECK(upMember(cond, UPWord(x, yy)) == base);
            // the oracle sees the prefix too
            CHECK(upMemberOracle(cond, UPWord(x, y), 50 * y.size()) == base);
        }
    }
}

TEST_CASE("parity as an energy condition")
{
    const EtogCondition p = parityAsEtog(2);
    const Valuation& v = p.valuation();
    CHECK(v.colors() == std::vector<std::string>{"1", "2"});
    CHECK(fmt(v, v.image(v.colorIndex("2"))) == "(1,0)");
    CHECK(fmt(v, v.image(v.colorIndex("1"))) == "(0,-1)");
    CHECK(upMember(p, up(v, "", "1")));
    CHECK_FALSE(upMember(p, up(v, "", "1 2")));
    CHECK(compare(v.spec(), valWord(v, v.parseWord("1 2")), identity(v.spec())) > 0);

    // limsup is the largest priority on the cycle
    for (unsigned d = 1; d <= 4; ++d) {
        const EtogCondition q = parityAsEtog(d);
        for (const auto& y : allWords(d, 4)) {
            std::size_t top = 0;
            for (std::size_t c : y) top = std::max(top, c + 1);
            CHECK(upMember(q, UPWord({}, y)) == (top % 2 == 1));
        }
    }
}

TEST_CASE("strictify keeps negative words and removes zeros")
{
    const Valuation zero = parseValuation("group int\nval x = 0\n");
    const Valuation s = strictify(zero);
    CHECK(s.spec().toString() == "prod(int,int)");
    CHECK(fmt(s, valWord(s, s.parseWord("x"))) == "[0;1]");
    CHECK(compare(s.spec(), valWord(s, s.parseWord("x")), identity(s.spec())) > 0);

    const Valuation neg = strictify(parseValuation("group int\nval x = -1\n"));
    CHECK(compare(neg.spec(), valWord(neg, neg.parseWord("x")), identity(neg.spec())) < 0);

    const Valuation f = strictify(counterexampleValuation());
    CHECK(fmt(f, valWord(f, f.parseWord("eps"))) == "[e;1]");
    CHECK(compare(f.spec(), valWord(f, f.parseWord("eps")), identity(f.spec())) > 0);

    for (const auto& [name, v] : suiteValuations()) {
        CAPTURE(name);
        const Valuation sv = strictify(v);
        for (const auto& y : allWords(v.colorCount(), 3)) {
            CHECK((sign(v.spec(), valWord(v, y)) < 0) == (sign(sv.spec(), valWord(sv, y)) < 0));
            CHECK_FALSE(isIdentity(sv.spec(), valWord(sv, y)));
        }
    }
}

TEST_CASE("valuation files")
{
    CHECK_THROWS_AS(parseValuation("val x = 1\n"), ParseError);
    CHECK_THROWS_AS(parseValuation("group int\nval x = 1\nval x = 2\n"), std::exception);
    CHECK_THROWS_AS(parseValuation("group int\n"), std::exception);
    CHECK_THROWS_AS(parseValuation("group free(a,b)\nval x = c\n"), ParseError);
    const Valuation v = parseValuation("# comment\ngroup zlex(2)  # trailing\n\nval p = (1,2)\n");
    CHECK(v.colors() == std::vector<std::string>{"p"});
}

TEST_CASE("condition strings")
{
    const std::string text(kFreeValuationText);
    auto load = [&](const std::string& path) {
        if (path != "f.val") throw Error("no such file " + path);
        return parseValuation(text);
    };
    const Condition single = parseCondition("etog(f.val)", load);
    CHECK(std::holds_alternative<EtogCondition>(single));
    const Condition inv = parseCondition("inv-etog(f.val)", load);
    CHECK(std::get<EtogCondition>(inv).valuation().spec().toString() == "inv(free(a,b))");
    const Condition u = parseCondition("union(etog(f.val), union(inv-etog(f.val), etog(f.val)))", load);
    CHECK(std::get<UnionCondition>(u).members().size() == 3);
    CHECK_THROWS(parseCondition("etog(g.val)", load));
    CHECK_THROWS_AS(parseCondition("both(f.val)", load), ParseError);
}

TEST_CASE("union members are aligned to one alphabet")
{
    const Valuation a = parseValuation("group int\nval x = -1\nval y = 1\n");
    const Valuation b = parseValuation("group int\nval y = -5\nval x = 3\n");
    const UnionCondition u({EtogCondition(a), EtogCondition(b)});
    CHECK(u.members()[1].colors() == a.colors());
    CHECK(fmt(u.members()[1].valuation(), u.members()[1].valuation().image(0)) == "3");
    const Valuation c = parseValuation("group int\nval z = -1\n");
    CHECK_THROWS_AS(UnionCondition({EtogCondition(a), EtogCondition(c)}), AlphabetMismatch);
}
