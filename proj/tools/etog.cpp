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

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "etog/error.hpp"
#include "etog/experiments.hpp"
#include "etog/solver.hpp"

namespace {

using namespace etog;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int cmdCompare(const std::string& specText, const std::string& a, const std::string& b)
{
    const GroupSpec spec = parseGroupSpec(specText);
    const auto order = compare(spec, parseElement(spec, a), parseElement(spec, b));
    std::cout << orderingName(order) << "\n";
    return 0;
}

int cmdMembership(const std::string& condText, const std::string& prefixText, const std::string& periodText)
{
    const Condition cond = parseCondition(condText);
    auto describeMember = [&](const EtogCondition& c, const UPWord& w) {
        const Valuation& v = c.valuation();
        const GroupElement value = valWord(v, w.period);
        std::cout << "  " << v.spec().toString() << ": value " << formatElement(v.spec(), value) << ", sign "
                  << orderingName(sign(v.spec(), value)) << "\n";
    };
    if (const auto* e = std::get_if<EtogCondition>(&cond)) {
        const UPWord w(e->valuation().parseWord(prefixText), e->valuation().parseWord(periodText));
        std::cout << (upMember(*e, w) ? "member" : "non-member") << "\n";
        describeMember(*e, w);
    } else {
        const auto& u = std::get<UnionCondition>(cond);
        const Valuation& v0 = u.members().front().valuation();
        const UPWord w(v0.parseWord(prefixText), v0.parseWord(periodText));
        std::cout << (upMember(u, w) ? "member" : "non-member") << "\n";
        for (const auto& m : u.members()) describeMember(m, w);
    }
    return 0;
}

int cmdSolve(const std::string& arenaPath, const std::string& condText)
{
    const Condition cond = parseCondition(condText);
    const auto* e = std::get_if<EtogCondition>(&cond);
    if (!e) {
        std::cerr << "solve handles a single energy condition only: unions are not positionally determined.\n"
                     "Use the `counterexample` command for the bounded union verifier.\n";
        return kExitUsage;
    }
    const Arena arena = loadArena(arenaPath, e->colors());
    const EtogSolution sol = solveEtog(arena, *e);
    std::cout << "winners (" << sol.aliceStrategies << " Alice x " << sol.bobStrategies << " Bob positional strategies):\n";
    for (std::size_t v = 0; v < arena.nodeCount(); ++v) std::cout << "  " << arena.node(v).name << ": " << playerName(sol.winner[v]) << "\n";
    std::cout << "Alice witness:\n" << describe(arena, sol.alice) << "Bob witness:\n" << describe(arena, sol.bob);
    return 0;
}

int emit(const RunReport& report, bool machine, std::chrono::steady_clock::time_point start)
{
    std::cout << (machine ? report.renderMachine() : report.render());
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "duration: " << ms.count() << " ms\n";
    return report.pass() ? 0 : kExitFail;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Energy conditions over totally ordered groups: orders, membership, games and checks"};
    app.require_subcommand(1);

    bool machine = false;
    std::uint64_t seed = 1;
    app.add_flag("--machine", machine, "print only CHECK lines");
    auto* seedOpt = app.add_option("--seed", seed, "random seed (falls back to ETOG_SEED)");

    std::string spec, a, b;
    auto* compareCmd = app.add_subcommand("compare", "compare two elements of an ordered group");
    compareCmd->add_option("spec", spec, "group spec, e.g. free(a,b)")->required();
    compareCmd->add_option("a", a)->required();
    compareCmd->add_option("b", b)->required();

    std::string cond, prefix, period;
    auto* memberCmd = app.add_subcommand("membership", "membership of prefix.period^omega");
    memberCmd->add_option("--cond", cond, "etog(<file>), inv-etog(<file>) or union(...)")->required();
    memberCmd->add_option("--period", period, "space-separated colors")->required();
    memberCmd->add_option("--prefix", prefix, "space-separated colors");

    std::string arenaPath;
    auto* solveCmd = app.add_subcommand("solve", "solve a game with a single energy condition");
    solveCmd->add_option("--arena", arenaPath)->required()->check(CLI::ExistingFile);
    solveCmd->add_option("--cond", cond)->required();

    CheckBudgets budgets;
    bool injectFault = false;
    auto* checkCmd = app.add_subcommand("check", "run the property battery");
    checkCmd->add_option("--max-len", budgets.closureMaxLen, "closure word length bound")->check(CLI::Range(1, 8));
    checkCmd->add_option("--samples", budgets.orderSamples, "order-axiom samples");
    checkCmd->add_flag("--inject-fault", injectFault, "misorder the monomials a and ab in the free-group order");

    std::size_t bobMemory = 2;
    unsigned ramseyDepth = 3;
    auto* ceCmd = app.add_subcommand("counterexample", "reproduce the union counterexample");
    ceCmd->add_option("--bob-memory", bobMemory)->check(CLI::Range(2, 4));
    ceCmd->add_option("--ramsey-depth", ramseyDepth)->check(CLI::Range(2, 10));

    for (auto* sub : {compareCmd, memberCmd, solveCmd, checkCmd, ceCmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }
    if (seedOpt->count() == 0) {
        if (const char* env = std::getenv("ETOG_SEED")) {
            try {
                seed = std::stoull(env);
            } catch (const std::exception&) {
                std::cerr << "ETOG_SEED is not an unsigned integer\n";
                return kExitUsage;
            }
        }
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*compareCmd) return cmdCompare(spec, a, b);
        if (*memberCmd) return cmdMembership(cond, prefix, period);
        if (*solveCmd) return cmdSolve(arenaPath, cond);
        if (*checkCmd) return emit(runChecks(seed, budgets, injectFault), machine, start);
        if (*ceCmd) return emit(runCounterexample(bobMemory, ramseyDepth), machine, start);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
