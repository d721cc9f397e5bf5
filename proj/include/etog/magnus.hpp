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

#ifndef ETOG_MAGNUS_HPP
#define ETOG_MAGNUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "etog/free_word.hpp"

namespace etog {

using BigInt = boost::multiprecision::cpp_int;

/** Non-commuting monomial: a word over generator indices, no inverses. */
using Monomial = std::vector<std::uint32_t>;

/** Degree first, then lexicographic by generator index. */
struct DegLexLess
{
    bool operator()(const Monomial& lhs, const Monomial& rhs) const
    {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
    }
};

/**
 * Order in which monomials are scanned when looking for the leading
 * coefficient. FaultyAbFirst promotes the monomial g0 g1 to sit right after
 * g0; it exists only to demonstrate that the order-axiom checks notice a
 * broken order.
 */
enum class MonomialScan { DegLex, FaultyAbFirst };

/**
 * Element of Z<<X>> truncated above maxDegree. Zero coefficients are never
 * stored.
 */
class TruncatedSeries
{
public:
    using Coefficients = std::map<Monomial, BigInt, DegLexLess>;

    /** The series 1. */
    explicit TruncatedSeries(unsigned maxDegree);

    unsigned maxDegree() const { return maxDegree_; }
    const Coefficients& coefficients() const { return coeffs_; }
    BigInt coefficient(const Monomial& m) const;

    /** Adds c to the coefficient of m; ignored if deg(m) > maxDegree. */
    void add(const Monomial& m, const BigInt& c);

    /** Right multiplication by the image of one letter. */
    TruncatedSeries& multiplyLetter(const Letter& letter);

    /** Truncated product; the result keeps the smaller of the two degrees. */
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    /**
     * First nonzero non-constant coefficient in the given scan order, or
     * nullopt if the series is 1 up to maxDegree.
     */
    std::optional<std::pair<Monomial, BigInt>> leadingTerm(MonomialScan scan = MonomialScan::DegLex) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    unsigned maxDegree_;
    Coefficients coeffs_;
};

/** Homomorphic image of word under g -> 1 + g, truncated above maxDegree. */
TruncatedSeries magnusExpand(const FreeWord& word, unsigned maxDegree);

/**
 * Sign (+1 / -1) of the leading Magnus coefficient of a non-identity reduced
 * word, computed the direct way: expand at degree |word| and scan.
 * Throws FirstCoefficientMissing if nothing nonzero is found.
 */
int magnusSignReference(const FreeWord& word, MonomialScan scan = MonomialScan::DegLex);

/**
 * Same value as magnusSignReference with the DegLex scan, computed by
 * deepening the truncation degree one step at a time over a dense
 * fixed-width table (falls back to exact arithmetic on overflow).
 * generatorCount bounds the generator indices occurring in word.
 */
int magnusSign(const FreeWord& word, std::size_t generatorCount);

}

#endif
