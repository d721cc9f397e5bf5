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

#include "etog/ordered_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "etog/error.hpp"

namespace etog {

struct GroupSpec::Node
{
    explicit Node(Kind k) : kind(k) {}

    Kind kind;
    std::size_t dimension = 0;
    std::vector<std::string> generators;
    MonomialScan scan = MonomialScan::DegLex;
    std::vector<GroupSpec> children;
};

GroupSpec GroupSpec::integers()
{
    return GroupSpec(std::make_shared<const Node>(Kind::Int));
}

GroupSpec GroupSpec::lexVec(std::size_t dimension)
{
    if (dimension == 0) throw std::invalid_argument("zlex dimension must be at least 1");
    Node n(Kind::LexVec);
    n.dimension = dimension;
    return GroupSpec(std::make_shared<const Node>(std::move(n)));
}

GroupSpec GroupSpec::free(std::vector<std::string> generators, MonomialScan scan)
{
    if (generators.empty()) throw std::invalid_argument("free group needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.empty() || g == "e") throw std::invalid_argument("invalid generator name '" + g + "'");
        if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator '" + g + "'");
    }
    Node n(Kind::Free);
    n.generators = std::move(generators);
    n.scan = scan;
    return GroupSpec(std::make_shared<const Node>(std::move(n)));
}

GroupSpec GroupSpec::inverse(GroupSpec inner)
{
    Node n(Kind::Inverse);
    n.children.push_back(std::move(inner));
    return GroupSpec(std::make_shared<const Node>(std::move(n)));
}

GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right)
{
    Node n(Kind::Product);
    n.children.push_back(std::move(left));
    n.children.push_back(std::move(right));
    return GroupSpec(std::make_shared<const Node>(std::move(n)));
}

GroupSpec::Kind GroupSpec::kind() const { return node_->kind; }

std::size_t GroupSpec::dimension() const
{
    if (kind() != Kind::LexVec) throw std::logic_error("dimension() on a non-zlex spec");
    return node_->dimension;
}

const std::vector<std::string>& GroupSpec::generators() const
{
    if (kind() != Kind::Free) throw std::logic_error("generators() on a non-free spec");
    return node_->generators;
}

MonomialScan GroupSpec::scan() const
{
    if (kind() != Kind::Free) throw std::logic_error("scan() on a non-free spec");
    return node_->scan;
}

const GroupSpec& GroupSpec::inner() const
{
    if (kind() != Kind::Inverse) throw std::logic_error("inner() on a non-inv spec");
    return node_->children[0];
}

const GroupSpec& GroupSpec::left() const
{
    if (kind() != Kind::Product) throw std::logic_error("left() on a non-prod spec");
    return node_->children[0];
}

const GroupSpec& GroupSpec::right() const
{
    if (kind() != Kind::Product) throw std::logic_error("right() on a non-prod spec");
    return node_->children[1];
}

GroupSpec GroupSpec::withScan(MonomialScan scan) const
{
    switch (kind()) {
    case Kind::Int:
    case Kind::LexVec: return *this;
    case Kind::Free: return free(generators(), scan);
    case Kind::Inverse: return inverse(inner().withScan(scan));
    case Kind::Product: return product(left().withScan(scan), right().withScan(scan));
    }
    return *this;
}

std::string GroupSpec::toString() const
{
    switch (kind()) {
    case Kind::Int: return "int";
    case Kind::LexVec: return "zlex(" + std::to_string(dimension()) + ")";
    case Kind::Free: {
        std::string s = "free(";
        for (std::size_t i = 0; i < generators().size(); ++i) s += (i ? "," : "") + generators()[i];
        return s + ")";
    }
    case Kind::Inverse: return "inv(" + inner().toString() + ")";
    case Kind::Product: return "prod(" + left().toString() + "," + right().toString() + ")";
    }
    return {};
}

bool operator==(const GroupSpec& lhs, const GroupSpec& rhs)
{
    if (lhs.node_ == rhs.node_) return true;
    if (lhs.kind() != rhs.kind()) return false;
    const auto& a = *lhs.node_;
    const auto& b = *rhs.node_;
    return a.dimension == b.dimension && a.generators == b.generators && a.scan == b.scan && a.children == b.children;
}

// elements -------------------------------------------------------------------

GroupElement GroupElement::pair(GroupElement first, GroupElement second)
{
    GroupElement out;
    out.value_ = std::make_shared<const Pair>(Pair{std::move(first), std::move(second)});
    return out;
}

std::int64_t GroupElement::asInt() const
{
    if (!isInt()) throw SpecMismatch("element is not an integer");
    return std::get<std::int64_t>(value_);
}

const GroupElement::Vec& GroupElement::asVec() const
{
    if (!isVec()) throw SpecMismatch("element is not a vector");
    return std::get<Vec>(value_);
}

const FreeWord& GroupElement::asWord() const
{
    if (!isWord()) throw SpecMismatch("element is not a free-group word");
    return std::get<FreeWord>(value_);
}

const GroupElement& GroupElement::first() const
{
    if (!isPair()) throw SpecMismatch("element is not a pair");
    return std::get<std::shared_ptr<const Pair>>(value_)->first;
}

const GroupElement& GroupElement::second() const
{
    if (!isPair()) throw SpecMismatch("element is not a pair");
    return std::get<std::shared_ptr<const Pair>>(value_)->second;
}

bool operator==(const GroupElement& lhs, const GroupElement& rhs)
{
    if (lhs.isPair() && rhs.isPair()) return lhs.first() == rhs.first() && lhs.second() == rhs.second();
    return lhs.value_ == rhs.value_;
}

bool belongsTo(const GroupSpec& spec, const GroupElement& x)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return x.isInt();
    case GroupSpec::Kind::LexVec: return x.isVec() && x.asVec().size() == spec.dimension();
    case GroupSpec::Kind::Free: {
        if (!x.isWord()) return false;
        const auto n = spec.generators().size();
        const auto& ls = x.asWord().letters();
        return std::all_of(ls.begin(), ls.end(), [n](const Letter& l) { return l.gen < n; });
    }
    case GroupSpec::Kind::Inverse: return belongsTo(spec.inner(), x);
    case GroupSpec::Kind::Product:
        return x.isPair() && belongsTo(spec.left(), x.first()) && belongsTo(spec.right(), x.second());
    }
    return false;
}

namespace {

void require(const GroupSpec& spec, const GroupElement& x)
{
    if (!belongsTo(spec, x)) throw SpecMismatch("element does not belong to " + spec.toString());
}

std::int64_t checkedAdd(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in group operation");
    return r;
}

std::int64_t checkedNeg(std::int64_t a)
{
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw std::overflow_error("integer overflow in group inverse");
    return r;
}

GroupElement composeUnchecked(const GroupSpec& spec, const GroupElement& x, const GroupElement& y)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return checkedAdd(x.asInt(), y.asInt());
    case GroupSpec::Kind::LexVec: {
        GroupElement::Vec v = x.asVec();
        const auto& w = y.asVec();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = checkedAdd(v[i], w[i]);
        return v;
    }
    case GroupSpec::Kind::Free: return x.asWord() * y.asWord();
    case GroupSpec::Kind::Inverse: return composeUnchecked(spec.inner(), x, y);
    case GroupSpec::Kind::Product:
        return GroupElement::pair(composeUnchecked(spec.left(), x.first(), y.first()),
                                  composeUnchecked(spec.right(), x.second(), y.second()));
    }
    throw std::logic_error("unreachable");
}

GroupElement invertUnchecked(const GroupSpec& spec, const GroupElement& x)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return checkedNeg(x.asInt());
    case GroupSpec::Kind::LexVec: {
        GroupElement::Vec v = x.asVec();
        for (auto& c : v) c = checkedNeg(c);
        return v;
    }
    case GroupSpec::Kind::Free: return x.asWord().inverse();
    case GroupSpec::Kind::Inverse: return invertUnchecked(spec.inner(), x);
    case GroupSpec::Kind::Product:
        return GroupElement::pair(invertUnchecked(spec.left(), x.first()), invertUnchecked(spec.right(), x.second()));
    }
    throw std::logic_error("unreachable");
}

std::strong_ordering compareUnchecked(const GroupSpec& spec, const GroupElement& x, const GroupElement& y)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return x.asInt() <=> y.asInt();
    case GroupSpec::Kind::LexVec: return x.asVec() <=> y.asVec();
    case GroupSpec::Kind::Free: {
        const FreeWord w = x.asWord() * y.asWord().inverse();
        if (w.isIdentity()) return std::strong_ordering::equal;
        const int s = spec.scan() == MonomialScan::DegLex ? magnusSign(w, spec.generators().size())
                                                          : magnusSignReference(w, spec.scan());
        return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    case GroupSpec::Kind::Inverse: return 0 <=> compareUnchecked(spec.inner(), x, y);
    case GroupSpec::Kind::Product: {
        auto c = compareUnchecked(spec.left(), x.first(), y.first());
        if (c != 0) return c;
        return compareUnchecked(spec.right(), x.second(), y.second());
    }
    }
    throw std::logic_error("unreachable");
}

}

GroupElement identity(const GroupSpec& spec)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return std::int64_t{0};
    case GroupSpec::Kind::LexVec: return GroupElement::Vec(spec.dimension(), 0);
    case GroupSpec::Kind::Free: return FreeWord{};
    case GroupSpec::Kind::Inverse: return identity(spec.inner());
    case GroupSpec::Kind::Product: return GroupElement::pair(identity(spec.left()), identity(spec.right()));
    }
    throw std::logic_error("unreachable");
}

bool isIdentity(const GroupSpec& spec, const GroupElement& x)
{
    require(spec, x);
    return x == identity(spec);
}

GroupElement compose(const GroupSpec& spec, const GroupElement& x, const GroupElement& y)
{
    require(spec, x);
    require(spec, y);
    return composeUnchecked(spec, x, y);
}

GroupElement invert(const GroupSpec& spec, const GroupElement& x)
{
    require(spec, x);
    return invertUnchecked(spec, x);
}

std::strong_ordering compare(const GroupSpec& spec, const GroupElement& x, const GroupElement& y)
{
    require(spec, x);
    require(spec, y);
    return compareUnchecked(spec, x, y);
}

std::strong_ordering sign(const GroupSpec& spec, const GroupElement& x)
{
    return compare(spec, x, identity(spec));
}

std::string_view orderingName(std::strong_ordering o)
{
    if (o < 0) return "Less";
    if (o > 0) return "Greater";
    return "Equal";
}

}
