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

#include "etog/free_word.hpp"

#include <algorithm>
#include <stdexcept>

#include "etog/error.hpp"

namespace etog {

FreeWord reduce(std::span<const Letter> letters)
{
    FreeWord out;
    auto& stack = out.letters_;
    stack.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
        if (!stack.empty() && stack.back().cancels(l)) stack.pop_back();
        else stack.push_back(l);
    }
    return out;
}

FreeWord reduce(std::span<const SymbolLetter> letters, std::span<const std::string> generators)
{
    std::vector<Letter> raw;
    raw.reserve(letters.size());
    for (const auto& sl : letters) {
        auto it = std::find(generators.begin(), generators.end(), sl.symbol);
        if (it == generators.end()) throw UnknownGenerator(sl.symbol);
        if (sl.exp != 1 && sl.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
        raw.push_back({static_cast<std::uint32_t>(it - generators.begin()), static_cast<std::int8_t>(sl.exp)});
    }
    return reduce(raw);
}

FreeWord FreeWord::generator(std::uint32_t gen, int exp)
{
    Letter l{gen, static_cast<std::int8_t>(exp)};
    return reduce(std::span<const Letter>(&l, 1));
}

FreeWord FreeWord::inverse() const
{
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
}

FreeWord FreeWord::operator*(const FreeWord& other) const
{
    FreeWord out = *this;
    out *= other;
    return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& other)
{
    // both operands are reduced, so cancellation only happens at the seam
    std::size_t k = 0;
    while (k < other.letters_.size() && !letters_.empty() && letters_.back().cancels(other.letters_[k])) {
        letters_.pop_back();
        ++k;
    }
    letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(k), other.letters_.end());
    return *this;
}

std::string FreeWord::toString(std::span<const std::string> generators) const
{
    if (letters_.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        const Letter& l = letters_[i];
        s += l.gen < generators.size() ? generators[l.gen] : "g" + std::to_string(l.gen);
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

}
