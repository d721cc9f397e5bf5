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

// Text forms of group specs and element literals.

#include <cctype>
#include <charconv>

#include "etog/error.hpp"
#include "etog/ordered_group.hpp"

namespace etog {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool isNameChar(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::int64_t parseInteger(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return v;
}

class SpecParser
{
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GroupSpec parseAll()
    {
        GroupSpec s = parseSpec();
        skipSpace();
        if (pos_ != text_.size()) fail("trailing characters");
        return s;
    }

private:
    GroupSpec parseSpec()
    {
        const std::string name = parseName();
        if (name == "int") return GroupSpec::integers();
        expect('(');
        if (name == "zlex") {
            skipSpace();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
            const auto d = parseInteger(text_.substr(start, pos_ - start));
            expect(')');
            if (d < 1) fail("zlex dimension must be at least 1");
            return GroupSpec::lexVec(static_cast<std::size_t>(d));
        }
        if (name == "free") {
            std::vector<std::string> gens;
            do {
                gens.push_back(parseName());
            } while (accept(','));
            expect(')');
            try {
                return GroupSpec::free(std::move(gens));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        }
        if (name == "inv") {
            GroupSpec inner = parseSpec();
            expect(')');
            return GroupSpec::inverse(std::move(inner));
        }
        if (name == "prod") {
            GroupSpec left = parseSpec();
            expect(',');
            GroupSpec right = parseSpec();
            expect(')');
            return GroupSpec::product(std::move(left), std::move(right));
        }
        fail("unknown group kind '" + name + "'");
    }

    std::string parseName()
    {
        skipSpace();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && isNameChar(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skipSpace()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("group spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

FreeWord parseWord(const std::vector<std::string>& gens, std::string_view text)
{
    std::vector<SymbolLetter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const std::string_view token = text.substr(i, j - i);
        i = j;
        if (token == "e") continue;
        const auto caret = token.find('^');
        const std::string symbol(token.substr(0, caret));
        const std::int64_t power = caret == std::string_view::npos ? 1 : parseInteger(token.substr(caret + 1));
        if (power > 1'000'000 || power < -1'000'000) throw ParseError("exponent too large in '" + std::string(token) + "'");
        if (power == 0) {
            // g^0 is the identity; the symbol is still validated
            letters.push_back({symbol, 1});
            letters.push_back({symbol, -1});
        }
        for (std::int64_t k = 0; k < (power < 0 ? -power : power); ++k) letters.push_back({symbol, power < 0 ? -1 : 1});
    }
    return reduce(letters, gens);
}

/** Splits "[x;y]" at the top-level ';'. */
std::pair<std::string_view, std::string_view> splitPair(std::string_view text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("expected a pair literal [x;y], got '" + std::string(text) + "'");
    const std::string_view body = text.substr(1, text.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '[') ++depth;
        else if (body[i] == ']') --depth;
        else if (body[i] == ';' && depth == 0) return {body.substr(0, i), body.substr(i + 1)};
    }
    throw ParseError("pair literal without top-level ';': '" + std::string(text) + "'");
}

}

GroupSpec parseGroupSpec(std::string_view text)
{
    return SpecParser(text).parseAll();
}

GroupElement parseElement(const GroupSpec& spec, std::string_view text)
{
    text = trim(text);
    if (text == "e") return identity(spec);
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return parseInteger(text);
    case GroupSpec::Kind::LexVec: {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
            throw ParseError("expected a vector literal (c1,...,cd), got '" + std::string(text) + "'");
        GroupElement::Vec v;
        std::string_view body = text.substr(1, text.size() - 2);
        while (true) {
            const auto comma = body.find(',');
            v.push_back(parseInteger(body.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        if (v.size() != spec.dimension())
            throw ParseError("vector literal has " + std::to_string(v.size()) + " coordinates, " + spec.toString() +
                             " needs " + std::to_string(spec.dimension()));
        return v;
    }
    case GroupSpec::Kind::Free: return parseWord(spec.generators(), text);
    case GroupSpec::Kind::Inverse: return parseElement(spec.inner(), text);
    case GroupSpec::Kind::Product: {
        auto [l, r] = splitPair(text);
        return GroupElement::pair(parseElement(spec.left(), l), parseElement(spec.right(), r));
    }
    }
    throw std::logic_error("unreachable");
}

std::string formatElement(const GroupSpec& spec, const GroupElement& x)
{
    if (!belongsTo(spec, x)) throw SpecMismatch("element does not belong to " + spec.toString());
    switch (spec.kind()) {
    case GroupSpec::Kind::Int: return std::to_string(x.asInt());
    case GroupSpec::Kind::LexVec: {
        std::string s = "(";
        for (std::size_t i = 0; i < x.asVec().size(); ++i) s += (i ? "," : "") + std::to_string(x.asVec()[i]);
        return s + ")";
    }
    case GroupSpec::Kind::Free: return x.asWord().toString(spec.generators());
    case GroupSpec::Kind::Inverse: return formatElement(spec.inner(), x);
    case GroupSpec::Kind::Product:
        return "[" + formatElement(spec.left(), x.first()) + ";" + formatElement(spec.right(), x.second()) + "]";
    }
    return {};
}

}
