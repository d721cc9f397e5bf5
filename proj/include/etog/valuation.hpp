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

#ifndef ETOG_VALUATION_HPP
#define ETOG_VALUATION_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etog/ordered_group.hpp"

namespace etog {

/** Finite word over a color alphabet, as color indices. */
using ColorWord = std::vector<std::size_t>;

/**
 * Map from a finite color alphabet into an ordered group. Every color has
 * exactly one image and every image belongs to spec().
 */
class Valuation
{
public:
    Valuation(std::vector<std::string> colors, GroupSpec spec, std::vector<GroupElement> images);

    const std::vector<std::string>& colors() const { return colors_; }
    std::size_t colorCount() const { return colors_.size(); }
    const GroupSpec& spec() const { return spec_; }
    const GroupElement& image(std::size_t color) const;

    /** Throws UnknownColor. */
    std::size_t colorIndex(std::string_view name) const;

    /** Space-separated color names; "" is the empty word. */
    ColorWord parseWord(std::string_view text) const;
    std::string formatWord(std::span<const std::size_t> word) const;

    /** Same images under another spec with the same carrier, e.g. inv(spec()). */
    Valuation withSpec(GroupSpec spec) const;

    /** Same colors and images, listed in the given color order. */
    Valuation reordered(std::span<const std::string> colorOrder) const;

private:
    std::vector<std::string> colors_;
    GroupSpec spec_;
    std::vector<GroupElement> images_;
};

/** val(c1 ... cn) = val(c1) + ... + val(cn); identity on the empty word. */
GroupElement valWord(const Valuation& v, std::span<const std::size_t> word);

/** Entry n-1 is valWord of the length-n prefix, n = 1..|word|. */
std::vector<GroupElement> prefixSums(const Valuation& v, std::span<const std::size_t> word);

/**
 * c -> (val(c), 1) into prod(spec, int). Keeps the set of words with
 * negative value and is never the identity on a non-empty word.
 */
Valuation strictify(const Valuation& v);

/**
 * Line format:
 *
 *   group <spec>
 *   val <color> = <element literal>
 *
 * '#' starts a comment.
 */
Valuation parseValuation(std::string_view text);
Valuation loadValuation(const std::filesystem::path& path);

}

#endif
