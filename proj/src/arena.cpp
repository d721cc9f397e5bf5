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

#include "etog/arena.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "etog/error.hpp"

namespace etog {

std::string_view playerName(Player p)
{
    return p == Player::Alice ? "Alice" : "Bob";
}

Arena::Arena(std::vector<Node> nodes, std::vector<std::string> colors, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), colors_(std::move(colors)), edges_(std::move(edges))
{
    using K = ArenaError::Kind;
    if (nodes_.empty()) throw ArenaError(K::Syntax, "arena has no nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (nodes_[i].name == nodes_[j].name) throw ArenaError(K::DuplicateNode, "duplicate node '" + nodes_[i].name + "'");
        }
    }
    out_.resize(nodes_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.source >= nodes_.size() || edge.target >= nodes_.size())
            throw ArenaError(K::UnknownEndpoint, "edge " + std::to_string(e) + " has an unknown endpoint");
        if (edge.color >= colors_.size())
            throw ArenaError(K::UnknownColor, "edge " + std::to_string(e) + " has an unknown color");
        out_[edge.source].push_back(e);
    }
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (out_[v].empty())
            throw ArenaError(K::MissingOutgoingEdge, "node '" + nodes_[v].name + "' has no outgoing edge");
    }
}

std::size_t Arena::nodeIndex(std::string_view name) const
{
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].name == name) return i;
    }
    throw ArenaError(ArenaError::Kind::UnknownEndpoint, "unknown node '" + std::string(name) + "'");
}

std::vector<std::size_t> Arena::nodesOf(Player p) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].owner == p) out.push_back(i);
    }
    return out;
}

std::string Arena::toString() const
{
    std::string s;
    for (const auto& n : nodes_) s += "node " + n.name + (n.owner == Player::Alice ? " A\n" : " B\n");
    for (const auto& e : edges_) s += "edge " + nodes_[e.source].name + " " + colors_[e.color] + " " + nodes_[e.target].name + "\n";
    return s;
}

Arena parseArena(std::string_view text, std::span<const std::string> alphabet)
{
    using K = ArenaError::Kind;
    struct RawEdge
    {
        std::string src, color, dst;
        int line;
    };
    std::vector<Arena::Node> nodes;
    std::map<std::string, std::size_t> index;
    std::vector<RawEdge> raw;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(lineNo) + ": ";
        if (tok[0] == "node") {
            if (tok.size() != 3 || (tok[2] != "A" && tok[2] != "B"))
                throw ArenaError(K::Syntax, where + "expected 'node <name> <A|B>'");
            if (index.count(tok[1])) throw ArenaError(K::DuplicateNode, where + "duplicate node '" + tok[1] + "'");
            index.emplace(tok[1], nodes.size());
            nodes.push_back({tok[1], tok[2] == "A" ? Player::Alice : Player::Bob});
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ArenaError(K::Syntax, where + "expected 'edge <src> <color> <dst>'");
            raw.push_back({tok[1], tok[2], tok[3], lineNo});
        } else {
            throw ArenaError(K::Syntax, where + "unknown keyword '" + tok[0] + "'");
        }
    }

    std::vector<std::string> colors(alphabet.begin(), alphabet.end());
    std::vector<Edge> edges;
    for (const auto& r : raw) {
        const std::string where = "line " + std::to_string(r.line) + ": ";
        auto s = index.find(r.src), t = index.find(r.dst);
        if (s == index.end()) throw ArenaError(K::UnknownEndpoint, where + "unknown node '" + r.src + "'");
        if (t == index.end()) throw ArenaError(K::UnknownEndpoint, where + "unknown node '" + r.dst + "'");
        auto c = std::find(colors.begin(), colors.end(), r.color);
        if (c == colors.end()) {
            if (!alphabet.empty()) throw ArenaError(K::UnknownColor, where + "unknown color '" + r.color + "'");
            colors.push_back(r.color);
            c = colors.end() - 1;
        }
        edges.push_back({s->second, static_cast<std::size_t>(c - colors.begin()), t->second});
    }
    return Arena(std::move(nodes), std::move(colors), std::move(edges));
}

Arena loadArena(const std::filesystem::path& path, std::span<const std::string> alphabet)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open arena file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parseArena(buf.str(), alphabet);
}

}
