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

#include "etog/error.hpp"
#include "etog/order_axioms.hpp"
#include "etog/ordered_group.hpp"
#include "oracles.hpp"

using namespace etog;

namespace {

std::strong_ordering cmp(const std::string& spec, const std::string& a, const std::string& b)
{
    const GroupSpec s = parseGroupSpec(spec);
    return compare(s, parseElement(s, a), parseElement(s, b));
}

std::string composed(const std::string& spec, const std::string& a, const std::string& b)
{
    const GroupSpec s = parseGroupSpec(spec);
    return formatElement(s, compose(s, parseElement(s, a), parseElement(s, b)));
}

std::string inverted(const std::string& spec, const std::string& a)
{
    const GroupSpec s = parseGroupSpec(spec);
    return formatElement(s, invert(s, parseElement(s, a)));
}

int oracleSign(const std::string& word)
{
    const GroupSpec s = GroupSpec::free({"a", "b"});
    return oracle::compareByExpansion(parseElement(s, word).asWord(), FreeWord(), 2);
}

}

TEST_CASE("compose examples")
{
    CHECK(composed("int", "2", "3") == "5");
    CHECK(composed("free(a,b)", "a b", "b^-1 a") == "a a");
    CHECK(composed("zlex(2)", "(1,0)", "(0,-1)") == "(1,-1)");
    CHECK(composed("prod(free(a,b),int)", "[a;2]", "[a^-1 b;-2]") == "[b;0]");
    CHECK(composed("inv(int)", "2", "3") == "5");
}

TEST_CASE("invert examples")
{
    CHECK(inverted("free(a,b)", "a b a^-1") == "a b^-1 a^-1");
    CHECK(inverted("int", "7") == "-7");
    CHECK(inverted("zlex(3)", "(1,-2,0)") == "(-1,2,0)");
}

TEST_CASE("free-group comparisons follow the expansion oracle")
{
    CHECK(oracleSign("a") > 0);
    CHECK(cmp("free(a,b)", "a", "e") == std::strong_ordering::greater);
    CHECK(oracleSign("a b a^-1 b^-1") > 0);
    CHECK(cmp("free(a,b)", "a b a^-1 b^-1", "e") == std::strong_ordering::greater);
    CHECK(oracleSign("b a b^-1 a^-1") < 0);
    CHECK(cmp("free(a,b)", "b a b^-1 a^-1", "e") == std::strong_ordering::less);
}

TEST_CASE("inverse order reverses comparisons")
{
    CHECK(cmp("inv(int)", "3", "5") == std::strong_ordering::greater);
    CHECK(cmp("inv(free(a,b))", "a", "e") == std::strong_ordering::less);
    CHECK(cmp("inv(inv(int))", "3", "5") == std::strong_ordering::less);
}

TEST_CASE("lexicographic vectors and products are left dominant")
{
    CHECK(cmp("zlex(2)", "(0,5)", "(1,-9)") == std::strong_ordering::less);
    CHECK(cmp("zlex(2)", "(1,-1)", "(0,0)") == std::strong_ordering::greater);
    CHECK(cmp("prod(int,free(a,b))", "[0;a]", "[0;b]") == std::strong_ordering::greater);
    CHECK(cmp("prod(int,free(a,b))", "[-1;a]", "[0;b]") == std::strong_ordering::less);
    CHECK(cmp("prod(free(a,b),int)", "[a;-100]", "[e;100]") == std::strong_ordering::greater);
}

TEST_CASE("generator order is the declaration order")
{
    // b a^-1 compares with the monomial b coming first once b is declared first
    CHECK(cmp("free(a,b)", "a^-1 b", "e") == std::strong_ordering::less);
    CHECK(cmp("free(b,a)", "a^-1 b", "e") == std::strong_ordering::greater);
}

TEST_CASE("compare agrees with the expansion oracle on random pairs")
{
    const GroupSpec s = GroupSpec::free({"a", "b"});
    std::mt19937_64 rng(31);
    for (int n = 0; n < 1500; ++n) {
        const FreeWord x = reduce(oracle::randomLetters(rng, 2, 5));
        const FreeWord y = reduce(oracle::randomLetters(rng, 2, 5));
        const int expected = oracle::compareByExpansion(x, y, 2);
        const auto got = compare(s, x, y);
        CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == expected);
    }
}

TEST_CASE("order axioms hold for every spec kind")
{
    for (const char* text : {"int", "zlex(1)", "zlex(3)", "free(a,b)", "free(a,b,c)", "inv(free(a,b))", "inv(zlex(2))",
                             "prod(free(a,b),int)", "prod(int,inv(free(x,y)))"}) {
        CAPTURE(text);
        const auto r = checkOrderAxioms(parseGroupSpec(text), 2000, 5);
        CHECK(r.pass);
        CHECK(r.samples == 2000);
    }
}

TEST_CASE("a misordered monomial scan is caught by the order axioms")
{
    const GroupSpec faulty = GroupSpec::free({"a", "b"}, MonomialScan::FaultyAbFirst);
    const auto r = checkOrderAxioms(faulty, 10000, 1);
    CHECK_FALSE(r.pass);
    const GroupElement b = FreeWord::generator(1);
    const GroupElement conj = FreeWord::generator(0, -1) * FreeWord::generator(1) * FreeWord::generator(0);
    CHECK(compare(faulty, b, FreeWord()) > 0);
    CHECK(compare(faulty, conj, FreeWord()) < 0);
}

TEST_CASE("elements of the wrong spec are rejected")
{
    const GroupSpec f = GroupSpec::free({"a", "b"});
    CHECK_THROWS_AS(compose(f, GroupElement(std::int64_t{3}), FreeWord()), SpecMismatch);
    CHECK_THROWS_AS(compare(GroupSpec::lexVec(2), GroupElement(GroupElement::Vec{1, 2, 3}), GroupElement(GroupElement::Vec{1, 2})),
                    SpecMismatch);
    CHECK_THROWS_AS(invert(GroupSpec::integers(), FreeWord()), SpecMismatch);
}

TEST_CASE("integer overflow is reported")
{
    const GroupSpec z = GroupSpec::integers();
    CHECK_THROWS(compose(z, GroupElement(std::numeric_limits<std::int64_t>::max()), GroupElement(std::int64_t{1})));
}

TEST_CASE("spec and literal parsing")
{
    CHECK(parseGroupSpec(" prod( inv(free(a,b)) , zlex(2) ) ").toString() == "prod(inv(free(a,b)),zlex(2))");
    CHECK_THROWS_AS(parseGroupSpec("zlex(0)"), std::exception);
    CHECK_THROWS_AS(parseGroupSpec("free(a,a)"), std::exception);
    CHECK_THROWS_AS(parseGroupSpec("free()"), std::exception);
    CHECK_THROWS_AS(parseGroupSpec("int int"), ParseError);
    CHECK_THROWS_AS(parseGroupSpec("real"), ParseError);

    const GroupSpec f = GroupSpec::free({"a", "b"});
    CHECK(formatElement(f, parseElement(f, "a^2 b^-2 b^0")) == "a a b^-1 b^-1");
    CHECK_THROWS_AS(parseElement(f, "a c"), UnknownGenerator);
    CHECK_THROWS_AS(parseElement(f, "c^0"), UnknownGenerator);
    CHECK_THROWS_AS(parseElement(GroupSpec::lexVec(2), "(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parseElement(GroupSpec::integers(), "x"), ParseError);
    const GroupSpec p = parseGroupSpec("prod(prod(int,int),free(a,b))");
    CHECK(formatElement(p, parseElement(p, "[[1;2];a b]")) == "[[1;2];a b]");
    CHECK(formatElement(p, parseElement(p, "e")) == "[[0;0];e]");
}
