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

#ifndef ETOG_ERROR_HPP
#define ETOG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace etog {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/** Two values built under different group specs were mixed. */
class SpecMismatch : public Error
{
public:
    using Error::Error;
};

class UnknownGenerator : public Error
{
public:
    explicit UnknownGenerator(const std::string& symbol)
        : Error("unknown generator '" + symbol + "'"), symbol_(symbol) {}
    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

class UnknownColor : public Error
{
public:
    explicit UnknownColor(const std::string& color)
        : Error("unknown color '" + color + "'"), color_(color) {}
    const std::string& color() const { return color_; }

private:
    std::string color_;
};

/**
 * The Magnus expansion of a non-identity word had no nonzero non-constant
 * coefficient. Cannot happen for a correct expansion; raised instead of
 * silently returning Equal.
 */
class FirstCoefficientMissing : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/** Structural violation in an arena description. */
class ArenaError : public Error
{
public:
    enum class Kind { MissingOutgoingEdge, DuplicateNode, UnknownEndpoint, UnknownColor, Syntax };

    ArenaError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/** Arena colors are not covered by the condition's alphabet. */
class AlphabetMismatch : public Error
{
public:
    using Error::Error;
};

}

#endif
