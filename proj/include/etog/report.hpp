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

#ifndef ETOG_REPORT_HPP
#define ETOG_REPORT_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace etog {

struct Verdict
{
    std::string name;
    bool pass = false;
    std::string bound;   // budget or bound the verdict holds under
    std::string detail;
};

/**
 * Outcome of one CLI run. Everything except the duration is a function of
 * the inputs and seed; render() leaves the duration out so output stays
 * reproducible.
 */
struct RunReport
{
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Verdict> verdicts;
    std::vector<std::pair<std::string, std::string>> counterexamples; // verdict name, witness text
    std::chrono::milliseconds duration{0};

    void add(Verdict v) { verdicts.push_back(std::move(v)); }
    bool pass() const;

    /** Human-readable text followed by one `CHECK <name> PASS|FAIL <detail>` line per verdict. */
    std::string render() const;
    /** Only the CHECK lines. */
    std::string renderMachine() const;
};

}

#endif
