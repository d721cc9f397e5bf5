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

#ifndef ETOG_ORDERED_GROUP_HPP
#define ETOG_ORDERED_GROUP_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "etog/free_word.hpp"
#include "etog/magnus.hpp"

namespace etog {

/**
 * A computable totally ordered group:
 *
 *   int           Z with the usual order
 *   zlex(d)       Z^d, lexicographic, leftmost coordinate dominant
 *   free(g1,...)  free group, Magnus order (generator order = declaration order)
 *   inv(G)        same group as G, order reversed
 *   prod(G,H)     G x H, lexicographic, G dominant
 *
 * GroupSpec is an immutable value; copies share structure.
 */
class GroupSpec
{
public:
    enum class Kind { Int, LexVec, Free, Inverse, Product };

    static GroupSpec integers();
    static GroupSpec lexVec(std::size_t dimension);
    static GroupSpec free(std::vector<std::string> generators, MonomialScan scan = MonomialScan::DegLex);
    static GroupSpec inverse(GroupSpec inner);
    static GroupSpec product(GroupSpec left, GroupSpec right);

    Kind kind() const;
    std::size_t dimension() const;                       // LexVec
    const std::vector<std::string>& generators() const;  // Free
    MonomialScan scan() const;                           // Free
    const GroupSpec& inner() const;                      // Inverse
    const GroupSpec& left() const;                       // Product
    const GroupSpec& right() const;                      // Product

    /** Same spec with every free component switched to the given monomial scan. */
    GroupSpec withScan(MonomialScan scan) const;

    /** Canonical text in the spec grammar, e.g. "prod(free(a,b),int)". */
    std::string toString() const;

    friend bool operator==(const GroupSpec& lhs, const GroupSpec& rhs);

private:
    struct Node;
    explicit GroupSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/**
 * Element of some GroupSpec. Int: one integer; LexVec: d integers; Free: a
 * reduced word; Product: a pair. Inverse specs reuse the inner element
 * representation unchanged.
 */
class GroupElement
{
public:
    using Vec = std::vector<std::int64_t>;
    struct Pair;

    GroupElement() : value_(std::int64_t{0}) {}
    GroupElement(std::int64_t v) : value_(v) {}
    GroupElement(Vec v) : value_(std::move(v)) {}
    GroupElement(FreeWord w) : value_(std::move(w)) {}
    static GroupElement pair(GroupElement first, GroupElement second);

    bool isInt() const { return std::holds_alternative<std::int64_t>(value_); }
    bool isVec() const { return std::holds_alternative<Vec>(value_); }
    bool isWord() const { return std::holds_alternative<FreeWord>(value_); }
    bool isPair() const { return std::holds_alternative<std::shared_ptr<const Pair>>(value_); }

    std::int64_t asInt() const;
    const Vec& asVec() const;
    const FreeWord& asWord() const;
    const GroupElement& first() const;
    const GroupElement& second() const;

    /** Structural equality. Group equality under a spec coincides with it. */
    friend bool operator==(const GroupElement& lhs, const GroupElement& rhs);

private:
    std::variant<std::int64_t, Vec, FreeWord, std::shared_ptr<const Pair>> value_;
};

struct GroupElement::Pair
{
    GroupElement first;
    GroupElement second;
};

/** True iff x has the shape required by spec (and generator indices in range). */
bool belongsTo(const GroupSpec& spec, const GroupElement& x);

GroupElement identity(const GroupSpec& spec);
bool isIdentity(const GroupSpec& spec, const GroupElement& x);

/** x * y (written additively for abelian kinds). Throws SpecMismatch. */
GroupElement compose(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupSpec& spec, const GroupElement& x);

/**
 * Total bi-invariant order. For free groups the sign of reduce(x y^-1)
 * is read off its Magnus expansion.
 */
std::strong_ordering compare(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);

/** compare(spec, x, identity). */
std::strong_ordering sign(const GroupSpec& spec, const GroupElement& x);

std::string_view orderingName(std::strong_ordering o);

// text forms ---------------------------------------------------------------

/** Parses `int | zlex(d) | free(g1,...) | inv(S) | prod(S,S)`. */
GroupSpec parseGroupSpec(std::string_view text);

/**
 * Parses an element literal under spec: `e`, integers, `(1,0,-1)`,
 * `a b^-1 a`, `[x;y]`.
 */
GroupElement parseElement(const GroupSpec& spec, std::string_view text);

std::string formatElement(const GroupSpec& spec, const GroupElement& x);

}

#endif
