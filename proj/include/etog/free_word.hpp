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

#ifndef ETOG_FREE_WORD_HPP
#define ETOG_FREE_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace etog {

/** One letter g^exp of a free-group word; gen indexes the declared generator list. */
struct Letter
{
    std::uint32_t gen = 0;
    std::int8_t exp = 1; // +1 or -1

    Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
    bool cancels(const Letter& other) const { return gen == other.gen && exp == -other.exp; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/** A letter named by its generator symbol, as read from user input. */
struct SymbolLetter
{
    std::string symbol;
    int exp = 1;
};

/**
 * Freely reduced word. The empty word is the identity. Every constructor
 * path goes through reduction, so a FreeWord never holds g g^-1.
 */
class FreeWord
{
public:
    FreeWord() = default;

    static FreeWord generator(std::uint32_t gen, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool isIdentity() const { return letters_.empty(); }

    FreeWord inverse() const;

    /** Reduced product this * other. */
    FreeWord operator*(const FreeWord& other) const;
    FreeWord& operator*=(const FreeWord& other);

    std::string toString(std::span<const std::string> generators) const;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

private:
    friend FreeWord reduce(std::span<const Letter> letters);
    std::vector<Letter> letters_;
};

/** Free reduction; idempotent. */
FreeWord reduce(std::span<const Letter> letters);

/** Reduction of a symbolic word; throws UnknownGenerator for symbols outside generators. */
FreeWord reduce(std::span<const SymbolLetter> letters, std::span<const std::string> generators);

}

#endif
