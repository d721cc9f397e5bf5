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

#include "etog/strategy.hpp"

#include <algorithm>
#include <stdexcept>

namespace etog {

void PositionalStrategy::validate(const Arena& arena) const
{
    if (choice.size() != arena.nodeCount()) throw std::invalid_argument("positional strategy has the wrong node count");
    for (std::size_t v = 0; v < arena.nodeCount(); ++v) {
        if (arena.owner(v) != owner) continue;
        if (choice[v] >= arena.edgeCount() || arena.edge(choice[v]).source != v)
            throw std::invalid_argument("positional strategy picks no valid edge at node '" + arena.node(v).name + "'");
    }
}

void MealyStrategy::validate(const Arena& arena) const
{
    if (states == 0 || initial >= states) throw std::invalid_argument("Mealy strategy needs a valid initial state");
    if (move.size() != states || update.size() != states) throw std::invalid_argument("Mealy tables have the wrong size");
    for (std::size_t q = 0; q < states; ++q) {
        if (move[q].size() != arena.nodeCount() || update[q].size() != arena.edgeCount())
            throw std::invalid_argument("Mealy tables have the wrong size");
        for (std::size_t v = 0; v < arena.nodeCount(); ++v) {
            if (arena.owner(v) != owner) continue;
            if (move[q][v] >= arena.edgeCount() || arena.edge(move[q][v]).source != v)
                throw std::invalid_argument("Mealy move picks no valid edge at node '" + arena.node(v).name + "'");
        }
        for (std::size_t e = 0; e < arena.edgeCount(); ++e) {
            if (update[q][e] >= states) throw std::invalid_argument("Mealy update leaves the state set");
        }
    }
}

MealyStrategy MealyStrategy::fromPositional(const Arena& arena, const PositionalStrategy& s)
{
    s.validate(arena);
    MealyStrategy m;
    m.owner = s.owner;
    m.states = 1;
    m.move = {s.choice};
    m.update = {std::vector<std::size_t>(arena.edgeCount(), 0)};
    return m;
}

namespace {

MealyStrategy asMealy(const Arena& arena, const Strategy& s)
{
    if (const auto* p = std::get_if<PositionalStrategy>(&s)) return MealyStrategy::fromPositional(arena, *p);
    const auto& m = std::get<MealyStrategy>(s);
    m.validate(arena);
    return m;
}

ColorWord colorsOf(const Arena& arena, const std::vector<std::size_t>& edges)
{
    ColorWord w;
    w.reserve(edges.size());
    for (std::size_t e : edges) w.push_back(arena.edge(e).color);
    return w;
}

}

ColorWord Lasso::stemColors(const Arena& arena) const { return colorsOf(arena, stem); }
ColorWord Lasso::cycleColors(const Arena& arena) const { return colorsOf(arena, cycle); }

Lasso playLasso(const Arena& arena, std::size_t start, const Strategy& alice, const Strategy& bob)
{
    if (start >= arena.nodeCount()) throw std::invalid_argument("start node out of range");
    const MealyStrategy a = asMealy(arena, alice);
    const MealyStrategy b = asMealy(arena, bob);
    if (a.owner != Player::Alice || b.owner != Player::Bob) throw std::invalid_argument("strategy owners swapped");

    const std::size_t n = arena.nodeCount();
    auto jointIndex = [&](std::size_t v, std::size_t qa, std::size_t qb) { return (qa * b.states + qb) * n + v; };
    std::vector<std::size_t> firstSeen(n * a.states * b.states, kNoEdge);

    std::vector<std::size_t> path;
    std::size_t v = start, qa = a.initial, qb = b.initial;
    while (firstSeen[jointIndex(v, qa, qb)] == kNoEdge) {
        firstSeen[jointIndex(v, qa, qb)] = path.size();
        const std::size_t e = arena.owner(v) == Player::Alice ? a.move[qa][v] : b.move[qb][v];
        path.push_back(e);
        qa = a.update[qa][e];
        qb = b.update[qb][e];
        v = arena.edge(e).target;
    }
    const std::size_t loopAt = firstSeen[jointIndex(v, qa, qb)];
    Lasso lasso;
    lasso.start = start;
    lasso.stem.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(loopAt));
    lasso.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(loopAt), path.end());
    return lasso;
}

std::vector<PositionalStrategy> enumeratePositional(const Arena& arena, Player p)
{
    const auto owned = arena.nodesOf(p);
    std::vector<std::size_t> digit(owned.size(), 0);
    std::vector<PositionalStrategy> out;
    while (true) {
        PositionalStrategy s;
        s.owner = p;
        s.choice.assign(arena.nodeCount(), kNoEdge);
        for (std::size_t i = 0; i < owned.size(); ++i) s.choice[owned[i]] = arena.outEdges(owned[i])[digit[i]];
        out.push_back(std::move(s));
        // odometer, last owned node fastest
        std::size_t i = owned.size();
        while (i > 0) {
            --i;
            if (++digit[i] < arena.outEdges(owned[i]).size()) break;
            digit[i] = 0;
            if (i == 0) return out;
        }
        if (owned.empty()) return out;
    }
}

namespace {

std::string edgeLabel(const Arena& arena, std::size_t e)
{
    const Edge& edge = arena.edge(e);
    const auto& outs = arena.outEdges(edge.source);
    const auto local = std::find(outs.begin(), outs.end(), e) - outs.begin();
    return std::to_string(local) + " (" + arena.colors()[edge.color] + " to " + arena.node(edge.target).name + ")";
}

}

std::string describe(const Arena& arena, const PositionalStrategy& s)
{
    std::string out;
    for (std::size_t v = 0; v < arena.nodeCount(); ++v) {
        if (arena.owner(v) != s.owner || s.choice[v] == kNoEdge) continue;
        out += arena.node(v).name + " -> " + edgeLabel(arena, s.choice[v]) + "\n";
    }
    return out;
}

std::string describe(const Arena& arena, const MealyStrategy& s)
{
    std::string out;
    for (std::size_t q = 0; q < s.states; ++q) {
        for (std::size_t v = 0; v < arena.nodeCount(); ++v) {
            if (arena.owner(v) != s.owner) continue;
            out += "state " + std::to_string(q) + ": " + arena.node(v).name + " -> " + edgeLabel(arena, s.move[q][v]) + "\n";
        }
        for (std::size_t e = 0; e < arena.edgeCount(); ++e) {
            if (s.update[q][e] == q) continue;
            const Edge& edge = arena.edge(e);
            out += "state " + std::to_string(q) + ": after " + arena.node(edge.source).name + " -" +
                   arena.colors()[edge.color] + "-> " + arena.node(edge.target).name + " go to state " +
                   std::to_string(s.update[q][e]) + "\n";
        }
    }
    return out;
}

std::string formatPath(const Arena& arena, const std::vector<std::size_t>& edges)
{
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? " " : "") + arena.colorName(edges[i]);
    return s;
}

}
