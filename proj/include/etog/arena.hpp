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

#ifndef ETOG_ARENA_HPP
#define ETOG_ARENA_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace etog {

enum class Player { Alice, Bob };

std::string_view playerName(Player p);

struct Edge
{
    std::size_t source;
    std::size_t color; // index into Arena::colors()
    std::size_t target;
};

/**
 * Finite two-player arena with colored edges. Node names are opaque; multi
 * edges and self loops are allowed; every node has an outgoing edge.
 * Immutable once built.
 */
class Arena
{
public:
    struct Node
    {
        std::string name;
        Player owner;
    };

    /** Validates; throws ArenaError. */
    Arena(std::vector<Node> nodes, std::vector<std::string> colors, std::vector<Edge> edges);

    std::size_t nodeCount() const { return nodes_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }
    const Node& node(std::size_t i) const { return nodes_.at(i); }
    Player owner(std::size_t i) const { return nodes_.at(i).owner; }
    std::size_t nodeIndex(std::string_view name) const;

    const std::vector<std::string>& colors() const { return colors_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::string& colorName(std::size_t edge) const { return colors_[edges_.at(edge).color]; }

    /** Outgoing edge indices of a node, in declaration order. */
    const std::vector<std::size_t>& outEdges(std::size_t node) const { return out_.at(node); }

    std::vector<std::size_t> nodesOf(Player p) const;

    /** Text in the arena file format. */
    std::string toString() const;

private:
    std::vector<Node> nodes_;
    std::vector<std::string> colors_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

/**
 * Line format:
 *
 *   node <name> <A|B>
 *   edge <src> <color> <dst>
 *
 * '#' starts a comment. If alphabet is non-empty, edge colors must come from
 * it (UnknownColor) and it becomes the arena's color list; otherwise colors
 * are collected in order of first use.
 */
Arena parseArena(std::string_view text, std::span<const std::string> alphabet = {});
Arena loadArena(const std::filesystem::path& path, std::span<const std::string> alphabet = {});

}

#endif
