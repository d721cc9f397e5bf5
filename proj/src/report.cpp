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

#include "etog/report.hpp"

#include <algorithm>

namespace etog {

bool RunReport::pass() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

std::string oneLine(std::string s)
{
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

}

std::string RunReport::renderMachine() const
{
    std::string out;
    for (const auto& v : verdicts) {
        out += "CHECK " + v.name + (v.pass ? " PASS " : " FAIL ") + "[" + v.bound + "]";
        if (!v.detail.empty()) out += " " + oneLine(v.detail);
        out += "\n";
    }
    return out;
}

std::string RunReport::render() const
{
    std::string out = "command: " + command + "\n";
    for (const auto& [k, val] : inputs) out += "  " + k + ": " + val + "\n";
    out += "\n";
    for (const auto& v : verdicts) {
        out += std::string(v.pass ? "[pass] " : "[FAIL] ") + v.name + " (" + v.bound + ")\n";
        if (!v.detail.empty()) out += "       " + v.detail + "\n";
    }
    for (const auto& [name, text] : counterexamples) {
        out += "\ncounterexample for " + name + ":\n";
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string::npos) nl = text.size();
            out += "  " + text.substr(pos, nl - pos) + "\n";
            pos = nl + 1;
        }
    }
    out += "\n" + std::string(pass() ? "all verdicts pass" : "some verdicts FAIL") + "\n\n";
    out += renderMachine();
    return out;
}

}
