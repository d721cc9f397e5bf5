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

#include "etog/union_verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "etog/solver.hpp"

namespace etog {

namespace {

class Search
{
public:
    Search(const Arena& arena, const Condition& cond, std::size_t start, const MealyStrategy& alice, std::size_t bound)
        : arena_(arena), cond_(cond), colors_(arena, etog::colors(cond)), start_(start), alice_(alice), bound_(bound)
    {
        move_.assign(bound, std::vector<std::size_t>(arena.nodeCount(), kNoEdge));
        update_.assign(bound, std::vector<std::size_t>(arena.edgeCount(), kNoEdge));
    }

    /** True if some completion of the current tables beats Alice. */
    bool run(std::size_t used)
    {
        const std::size_t n = arena_.nodeCount();
        std::vector<std::size_t> firstSeen(n * alice_.states * bound_, kNoEdge);
        std::vector<std::size_t> path;
        std::size_t v = start_, qa = alice_.initial, qb = 0;
        while (true) {
            const std::size_t key = (qa * bound_ + qb) * n + v;
            if (firstSeen[key] != kNoEdge) {
                ++explored_;
                const std::vector<std::size_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(firstSeen[key]), path.end());
                return !member(colors_.word(arena_, cycle));
            }
            firstSeen[key] = path.size();

            std::size_t e;
            if (arena_.owner(v) == Player::Alice) {
                e = alice_.move[qa][v];
            } else {
                e = move_[qb][v];
                if (e == kNoEdge) {
                    for (std::size_t choice : arena_.outEdges(v)) {
                        move_[qb][v] = choice;
                        if (run(used)) return true;
                    }
                    move_[qb][v] = kNoEdge;
                    return false;
                }
            }
            std::size_t next = update_[qb][e];
            if (next == kNoEdge) {
                const std::size_t limit = std::min(used + 1, bound_);
                for (std::size_t q = 0; q < limit; ++q) {
                    update_[qb][e] = q;
                    if (run(std::max(used, q + 1))) return true;
                }
                update_[qb][e] = kNoEdge;
                return false;
            }
            path.push_back(e);
            qa = alice_.update[qa][e];
            qb = next;
            v = arena_.edge(e).target;
        }
    }

    std::size_t explored() const { return explored_; }

    /** Current partial tables completed with first out-edges and state 0. */
    MealyStrategy completed() const
    {
        MealyStrategy m;
        m.owner = Player::Bob;
        m.states = bound_;
        m.initial = 0;
        m.move.assign(bound_, std::vector<std::size_t>(arena_.nodeCount(), kNoEdge));
        m.update.assign(bound_, std::vector<std::size_t>(arena_.edgeCount(), 0));
        for (std::size_t q = 0; q < bound_; ++q) {
            for (std::size_t v = 0; v < arena_.nodeCount(); ++v) {
                if (arena_.owner(v) != Player::Bob) continue;
                m.move[q][v] = move_[q][v] != kNoEdge ? move_[q][v] : arena_.outEdges(v).front();
            }
            for (std::size_t e = 0; e < arena_.edgeCount(); ++e) {
                if (update_[q][e] != kNoEdge) m.update[q][e] = update_[q][e];
            }
        }
        return m;
    }

private:
    bool member(const ColorWord& period)
    {
        auto it = memo_.find(period);
        if (it == memo_.end()) it = memo_.emplace(period, upMember(cond_, UPWord({}, period))).first;
        return it->second;
    }

    const Arena& arena_;
    const Condition& cond_;
    ColorMap colors_;
    std::size_t start_;
    const MealyStrategy& alice_;
    std::size_t bound_;
    std::vector<std::vector<std::size_t>> move_;
    std::vector<std::vector<std::size_t>> update_;
    std::size_t explored_ = 0;
    std::map<ColorWord, bool> memo_;
};

}

UnionVerdict verifyUnionStrategy(const Arena& arena, const Condition& cond, std::size_t start,
                                 const Strategy& alice, std::size_t bobMemoryBound)
{
    if (bobMemoryBound == 0) throw std::invalid_argument("Bob memory bound must be at least 1");
    if (start >= arena.nodeCount()) throw std::invalid_argument("start node out of range");
    MealyStrategy a;
    if (const auto* p = std::get_if<PositionalStrategy>(&alice)) {
        a = MealyStrategy::fromPositional(arena, *p);
    } else {
        a = std::get<MealyStrategy>(alice);
        a.validate(arena);
    }
    if (a.owner != Player::Alice) throw std::invalid_argument("strategy is not Alice's");

    Search search(arena, cond, start, a, bobMemoryBound);
    UnionVerdict verdict;
    verdict.bobMemoryBound = bobMemoryBound;
    const bool beaten = search.run(1);
    verdict.strategiesExplored = search.explored();
    verdict.winsWithinBound = !beaten;
    if (beaten) {
        verdict.counterStrategy = search.completed();
        verdict.counterPlay = playLasso(arena, start, a, *verdict.counterStrategy);
    }
    return verdict;
}

}
