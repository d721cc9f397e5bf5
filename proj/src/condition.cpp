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

#include "etog/condition.hpp"

#include <algorithm>
#include <stdexcept>

#include "etog/error.hpp"

namespace etog {

UPWord::UPWord(ColorWord prefix_, ColorWord period_) : prefix(std::move(prefix_)), period(std::move(period_))
{
    if (period.empty()) throw std::invalid_argument("ultimately periodic word needs a non-empty period");
}

UnionCondition::UnionCondition(std::vector<EtogCondition> members)
{
    if (members.empty()) throw std::invalid_argument("union of zero conditions");
    const std::vector<std::string> base = members.front().colors();
    for (auto& m : members) {
        if (m.colors() == base) {
            members_.push_back(std::move(m));
            continue;
        }
        auto sorted = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(m.colors()) != sorted(base)) throw AlphabetMismatch("union members use different color alphabets");
        members_.emplace_back(m.valuation().reordered(base));
    }
}

const std::vector<std::string>& colors(const Condition& cond)
{
    return std::visit([](const auto& c) -> const std::vector<std::string>& { return c.colors(); }, cond);
}

bool upMember(const EtogCondition& cond, const UPWord& w)
{
    if (w.period.empty()) throw std::invalid_argument("empty period");
    const auto& v = cond.valuation();
    for (std::size_t c : w.prefix) v.image(c); // validates prefix colors
    return sign(v.spec(), valWord(v, w.period)) < 0;
}

bool upMember(const UnionCondition& cond, const UPWord& w)
{
    return std::any_of(cond.members().begin(), cond.members().end(),
                       [&](const EtogCondition& m) { return upMember(m, w); });
}

bool upMember(const Condition& cond, const UPWord& w)
{
    return std::visit([&](const auto& c) { return upMember(c, w); }, cond);
}

// oracle ---------------------------------------------------------------------

namespace {

int lexCompare(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const DegLexLess less;
    auto ia = a.coefficients().begin(), ea = a.coefficients().end();
    auto ib = b.coefficients().begin(), eb = b.coefficients().end();
    while (ia != ea || ib != eb) {
        BigInt diff;
        if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
            diff = ia->second;
            ++ia;
        } else if (ia == ea || less(ib->first, ia->first)) {
            diff = -ib->second;
            ++ib;
        } else {
            diff = ia->second - ib->second;
            ++ia;
            ++ib;
        }
        if (diff != 0) return diff > 0 ? 1 : -1;
    }
    return 0;
}

/** Magnus expansions of every free component of an element, in pre-order. */
using Keys = std::vector<TruncatedSeries>;

void collectKeys(const GroupSpec& spec, const GroupElement& x, unsigned degree, Keys& out)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int:
    case GroupSpec::Kind::LexVec: return;
    case GroupSpec::Kind::Free: out.push_back(magnusExpand(x.asWord(), degree)); return;
    case GroupSpec::Kind::Inverse: collectKeys(spec.inner(), x, degree, out); return;
    case GroupSpec::Kind::Product:
        collectKeys(spec.left(), x.first(), degree, out);
        collectKeys(spec.right(), x.second(), degree, out);
        return;
    }
}

int compareFreeByExpansion(const FreeWord& x, const FreeWord& y, unsigned startDegree)
{
    if (x == y) return 0;
    // the first difference of the expansions sits at degree <= |x y^-1| <= |x| + |y|
    const auto top = static_cast<unsigned>(x.size() + y.size());
    for (unsigned d = startDegree; d <= top; ++d) {
        if (int c = lexCompare(magnusExpand(x, d), magnusExpand(y, d))) return c;
    }
    throw FirstCoefficientMissing("expansions of distinct words agree up to degree " + std::to_string(top));
}

int compareWithKeys(const GroupSpec& spec, const GroupElement& x, const GroupElement& y, const Keys& kx,
                    const Keys& ky, std::size_t& slot, unsigned degree)
{
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return x.asInt() < y.asInt() ? -1 : (x.asInt() > y.asInt() ? 1 : 0);
    case GroupSpec::Kind::LexVec: return x.asVec() < y.asVec() ? -1 : (x.asVec() > y.asVec() ? 1 : 0);
    case GroupSpec::Kind::Free: {
        const std::size_t i = slot++;
        if (int c = lexCompare(kx[i], ky[i])) return c;
        return compareFreeByExpansion(x.asWord(), y.asWord(), degree + 1);
    }
    case GroupSpec::Kind::Inverse: return -compareWithKeys(spec.inner(), x, y, kx, ky, slot, degree);
    case GroupSpec::Kind::Product: {
        const int l = compareWithKeys(spec.left(), x.first(), y.first(), kx, ky, slot, degree);
        const int r = compareWithKeys(spec.right(), x.second(), y.second(), kx, ky, slot, degree);
        return l != 0 ? l : r;
    }
    }
    throw std::logic_error("unreachable");
}

constexpr unsigned kOracleDegree = 2;

}

bool upMemberOracle(const EtogCondition& cond, const UPWord& w, std::size_t horizon)
{
    const std::size_t p = w.period.size();
    if (p == 0) throw std::invalid_argument("empty period");
    if (horizon < 2 * p) throw std::invalid_argument("oracle horizon must be at least twice the period length");

    const auto& v = cond.valuation();
    const auto& spec = v.spec();

    std::vector<Keys> imageKeys(v.colorCount());
    for (std::size_t c = 0; c < v.colorCount(); ++c) collectKeys(spec, v.image(c), kOracleDegree, imageKeys[c]);

    // values and keys at positions |prefix| .. |prefix| + horizon
    GroupElement value = valWord(v, w.prefix);
    Keys keys;
    collectKeys(spec, value, kOracleDegree, keys);
    std::vector<GroupElement> values{value};
    std::vector<Keys> valueKeys{keys};
    for (std::size_t n = 0; n < horizon; ++n) {
        const std::size_t c = w.period[n % p];
        value = compose(spec, value, v.image(c));
        for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = keys[i] * imageKeys[c][i];
        values.push_back(value);
        valueKeys.push_back(keys);
    }

    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + p; j < values.size(); j += p) {
            std::size_t slot = 0;
            if (compareWithKeys(spec, values[j], values[i], valueKeys[j], valueKeys[i], slot, kOracleDegree) < 0)
                return true;
        }
    }
    return false;
}

EtogCondition parityAsEtog(unsigned d)
{
    if (d == 0) throw std::invalid_argument("parity needs at least one priority");
    std::vector<std::string> colors;
    std::vector<GroupElement> images;
    for (unsigned k = 1; k <= d; ++k) {
        GroupElement::Vec vec(d, 0);
        vec[d - k] = (k % 2 == 0) ? 1 : -1;
        colors.push_back(std::to_string(k));
        images.emplace_back(std::move(vec));
    }
    return EtogCondition(Valuation(std::move(colors), GroupSpec::lexVec(d), std::move(images)));
}

// condition strings ------------------------------------------------------------

namespace {

std::string_view trimView(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/** Splits "name(args)" and args at top-level commas. */
std::vector<std::string_view> splitCall(std::string_view text, std::string_view name)
{
    const std::string_view body = text.substr(name.size() + 1, text.size() - name.size() - 2);
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') --depth;
        else if (body[i] == ',' && depth == 0) {
            parts.push_back(trimView(body.substr(start, i - start)));
            start = i + 1;
        }
        if (depth < 0) throw ParseError("unbalanced parentheses in condition '" + std::string(text) + "'");
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in condition '" + std::string(text) + "'");
    parts.push_back(trimView(body.substr(start)));
    return parts;
}

bool isCall(std::string_view text, std::string_view name)
{
    return text.size() > name.size() + 1 && text.substr(0, name.size()) == name && text[name.size()] == '(' &&
           text.back() == ')';
}

}

Condition parseCondition(std::string_view text, const ValuationLoader& load)
{
    text = trimView(text);
    if (isCall(text, "etog")) {
        auto args = splitCall(text, "etog");
        if (args.size() != 1 || args[0].empty()) throw ParseError("etog(...) takes one valuation file");
        return EtogCondition(load(std::string(args[0])));
    }
    if (isCall(text, "inv-etog")) {
        auto args = splitCall(text, "inv-etog");
        if (args.size() != 1 || args[0].empty()) throw ParseError("inv-etog(...) takes one valuation file");
        Valuation v = load(std::string(args[0]));
        return EtogCondition(v.withSpec(GroupSpec::inverse(v.spec())));
    }
    if (isCall(text, "union")) {
        std::vector<EtogCondition> members;
        for (auto part : splitCall(text, "union")) {
            Condition c = parseCondition(part, load);
            if (auto* e = std::get_if<EtogCondition>(&c)) members.push_back(*e);
            else {
                for (const auto& m : std::get<UnionCondition>(c).members()) members.push_back(m);
            }
        }
        return UnionCondition(std::move(members));
    }
    throw ParseError("unknown condition '" + std::string(text) + "'; expected etog(...), inv-etog(...) or union(...)");
}

Condition parseCondition(std::string_view text)
{
    return parseCondition(text, [](const std::string& path) { return loadValuation(path); });
}

}
