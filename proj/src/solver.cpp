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

#include "etog/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "etog/error.hpp"

namespace etog {

ColorMap::ColorMap(const Arena& arena, const std::vector<std::string>& conditionColors)
{
    for (const auto& c : arena.colors()) {
        auto it = std::find(conditionColors.begin(), conditionColors.end(), c);
        if (it == conditionColors.end()) throw AlphabetMismatch("arena color '" + c + "' is not in the condition's alphabet");
        map_.push_back(static_cast<std::size_t>(it - conditionColors.begin()));
    }
}

ColorWord ColorMap::word(const Arena& arena, const std::vector<std::size_t>& edges) const
{
    ColorWord w;
    w.reserve(edges.size());
    for (std::size_t e : edges) w.push_back(map_[arena.edge(e).color]);
    return w;
}

namespace {

/**
 * For a positional pair the play from every node runs into a cycle of the
 * successor function. Returns, per start node, whether that cycle is won by
 * Alice.
 */
std::vector<char> evaluatePair(const Arena& arena, const PositionalStrategy& sigma, const PositionalStrategy& tau,
                               const ColorMap& colors, const EtogCondition& cond,
                               std::map<ColorWord, bool>& memo)
{
    const std::size_t n = arena.nodeCount();
    auto pick = [&](std::size_t v) { return arena.owner(v) == Player::Alice ? sigma.choice[v] : tau.choice[v]; };

    std::vector<char> result(n, 0);
    std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
    for (std::size_t s = 0; s < n; ++s) {
        if (state[s] == 2) continue;
        std::vector<std::size_t> trail;
        std::size_t v = s;
        while (state[v] == 0) {
            state[v] = 1;
            trail.push_back(v);
            v = arena.edge(pick(v)).target;
        }
        bool won;
        if (state[v] == 1) {
            // new cycle starting at v
            std::vector<std::size_t> cycle;
            std::size_t u = v;
            do {
                cycle.push_back(pick(u));
                u = arena.edge(pick(u)).target;
            } while (u != v);
            const ColorWord period = colors.word(arena, cycle);
            auto it = memo.find(period);
            if (it == memo.end()) it = memo.emplace(period, upMember(cond, UPWord({}, period))).first;
            won = it->second;
        } else {
            won = result[v] != 0;
        }
        for (std::size_t u : trail) {
            result[u] = won ? 1 : 0;
            state[u] = 2;
        }
    }
    return result;
}

}

EtogSolution solveEtog(const Arena& arena, const EtogCondition& cond)
{
    const ColorMap colors(arena, cond.colors());
    const auto sigmas = enumeratePositional(arena, Player::Alice);
    const auto taus = enumeratePositional(arena, Player::Bob);
    const std::size_t n = arena.nodeCount();

    std::map<ColorWord, bool> memo;
    // wins[i][j][s]: Alice wins from s under (sigma_i, tau_j)
    std::vector<std::vector<std::vector<char>>> wins(sigmas.size(), std::vector<std::vector<char>>(taus.size()));
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        for (std::size_t j = 0; j < taus.size(); ++j) wins[i][j] = evaluatePair(arena, sigmas[i], taus[j], colors, cond, memo);
    }

    std::vector<char> aliceWins(n, 0), bobWins(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < sigmas.size() && !aliceWins[s]; ++i) {
            aliceWins[s] = std::all_of(wins[i].begin(), wins[i].end(), [s](const auto& w) { return w[s] != 0; });
        }
        for (std::size_t j = 0; j < taus.size() && !bobWins[s]; ++j) {
            bool all = true;
            for (std::size_t i = 0; i < sigmas.size() && all; ++i) all = wins[i][j][s] == 0;
            bobWins[s] = all;
        }
        if (aliceWins[s] == bobWins[s])
            throw std::logic_error("positional enumeration is not determined at node '" + arena.node(s).name + "'");
    }

    EtogSolution sol;
    sol.aliceStrategies = sigmas.size();
    sol.bobStrategies = taus.size();
    for (std::size_t s = 0; s < n; ++s) sol.winner.push_back(aliceWins[s] ? Player::Alice : Player::Bob);

    bool haveAlice = false;
    for (std::size_t i = 0; i < sigmas.size() && !haveAlice; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < taus.size() && ok; ++j) {
            for (std::size_t s = 0; s < n && ok; ++s) ok = !aliceWins[s] || wins[i][j][s];
        }
        if (ok) {
            sol.alice = sigmas[i];
            haveAlice = true;
        }
    }
    bool haveBob = false;
    for (std::size_t j = 0; j < taus.size() && !haveBob; ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < sigmas.size() && ok; ++i) {
            for (std::size_t s = 0; s < n && ok; ++s) ok = !bobWins[s] || !wins[i][j][s];
        }
        if (ok) {
            sol.bob = taus[j];
            haveBob = true;
        }
    }
    if (!haveAlice || !haveBob) throw std::logic_error("no uniform positional witness strategy found");
    return sol;
}

}
