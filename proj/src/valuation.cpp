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

#include "etog/valuation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "etog/error.hpp"

namespace etog {

Valuation::Valuation(std::vector<std::string> colors, GroupSpec spec, std::vector<GroupElement> images)
    : colors_(std::move(colors)), spec_(std::move(spec)), images_(std::move(images))
{
    if (colors_.empty()) throw std::invalid_argument("a valuation needs at least one color");
    if (colors_.size() != images_.size()) throw std::invalid_argument("one image per color required");
    std::set<std::string> seen;
    for (const auto& c : colors_) {
        if (c.empty()) throw std::invalid_argument("empty color name");
        if (!seen.insert(c).second) throw std::invalid_argument("duplicate color '" + c + "'");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!belongsTo(spec_, images_[i]))
            throw SpecMismatch("image of color '" + colors_[i] + "' does not belong to " + spec_.toString());
    }
}

const GroupElement& Valuation::image(std::size_t color) const
{
    if (color >= images_.size()) throw UnknownColor("#" + std::to_string(color));
    return images_[color];
}

std::size_t Valuation::colorIndex(std::string_view name) const
{
    auto it = std::find(colors_.begin(), colors_.end(), name);
    if (it == colors_.end()) throw UnknownColor(std::string(name));
    return static_cast<std::size_t>(it - colors_.begin());
}

ColorWord Valuation::parseWord(std::string_view text) const
{
    ColorWord out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) out.push_back(colorIndex(token));
    return out;
}

std::string Valuation::formatWord(std::span<const std::size_t> word) const
{
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ' ';
        s += word[i] < colors_.size() ? colors_[word[i]] : "#" + std::to_string(word[i]);
    }
    return s;
}

Valuation Valuation::withSpec(GroupSpec spec) const
{
    return Valuation(colors_, std::move(spec), images_);
}

Valuation Valuation::reordered(std::span<const std::string> colorOrder) const
{
    if (colorOrder.size() != colors_.size()) throw std::invalid_argument("color sets differ");
    std::vector<GroupElement> images;
    for (const auto& c : colorOrder) images.push_back(images_[colorIndex(c)]);
    return Valuation(std::vector<std::string>(colorOrder.begin(), colorOrder.end()), spec_, std::move(images));
}

GroupElement valWord(const Valuation& v, std::span<const std::size_t> word)
{
    GroupElement acc = identity(v.spec());
    for (std::size_t c : word) acc = compose(v.spec(), acc, v.image(c));
    return acc;
}

std::vector<GroupElement> prefixSums(const Valuation& v, std::span<const std::size_t> word)
{
    std::vector<GroupElement> out;
    out.reserve(word.size());
    GroupElement acc = identity(v.spec());
    for (std::size_t c : word) {
        acc = compose(v.spec(), acc, v.image(c));
        out.push_back(acc);
    }
    return out;
}

Valuation strictify(const Valuation& v)
{
    std::vector<GroupElement> images;
    for (std::size_t c = 0; c < v.colorCount(); ++c) images.push_back(GroupElement::pair(v.image(c), std::int64_t{1}));
    return Valuation(v.colors(), GroupSpec::product(v.spec(), GroupSpec::integers()), std::move(images));
}

Valuation parseValuation(std::string_view text)
{
    std::optional<GroupSpec> spec;
    std::vector<std::string> colors;
    std::vector<GroupElement> images;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        try {
            if (keyword == "group") {
                if (spec) throw ParseError("duplicate 'group' line", lineNo);
                std::string rest;
                std::getline(ls, rest);
                spec = parseGroupSpec(rest);
            } else if (keyword == "val") {
                if (!spec) throw ParseError("'val' before 'group'", lineNo);
                std::string color, eq;
                if (!(ls >> color >> eq) || eq != "=") throw ParseError("expected 'val <color> = <element>'", lineNo);
                if (std::find(colors.begin(), colors.end(), color) != colors.end())
                    throw ParseError("duplicate color '" + color + "'", lineNo);
                std::string rest;
                std::getline(ls, rest);
                images.push_back(parseElement(*spec, rest));
                colors.push_back(color);
            } else {
                throw ParseError("unknown keyword '" + keyword + "'", lineNo);
            }
        } catch (const ParseError& e) {
            if (e.line() > 0) throw;
            throw ParseError(e.what(), lineNo);
        } catch (const UnknownGenerator& e) {
            throw ParseError(e.what(), lineNo);
        }
    }
    if (!spec) throw ParseError("missing 'group' line");
    if (colors.empty()) throw ParseError("no 'val' lines");
    return Valuation(std::move(colors), *spec, std::move(images));
}

Valuation loadValuation(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open valuation file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parseValuation(buf.str());
}

}
