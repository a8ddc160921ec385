#include "sparselab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sparselab {

Graph::Graph(int n, bool directed, std::span<const Edge> edges, std::vector<Label> labels)
    : directed_(directed), adjacency_(static_cast<std::size_t>(n)), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (labels_.empty()) {
        labels_.resize(static_cast<std::size_t>(n));
        std::iota(labels_.begin(), labels_.end(), Label{0});
    } else if (labels_.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("label table has " + std::to_string(labels_.size()) + " entries for " +
                                    std::to_string(n) + " vertices");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        if (!directed_) adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("parallel edge");
        max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
    }
    edge_count_ = edges.size();
}

Graph Graph::undirected(int n, std::span<const Edge> edges, std::vector<Label> labels) {
    return Graph(n, false, edges, std::move(labels));
}

Graph Graph::directed(int n, std::span<const Edge> arcs, std::vector<Label> labels) {
    return Graph(n, true, arcs, std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (directed_ || u < v) out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    std::vector<Label> labels;
    labels.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex v = vertices[i];
        if (v < 0 || v >= g.order()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
        if (position[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
        labels.push_back(g.label(v));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            int j = position[static_cast<std::size_t>(w)];
            if (j < 0) continue;
            if (g.is_directed() || static_cast<int>(i) < j) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    auto n = static_cast<int>(vertices.size());
    return g.is_directed() ? Graph::directed(n, edges, std::move(labels))
                           : Graph::undirected(n, edges, std::move(labels));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.is_directed() != b.is_directed()) throw std::invalid_argument("mixing directed and undirected graphs");
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    int n = a.order() + b.order();
    return a.is_directed() ? Graph::directed(n, edges) : Graph::undirected(n, edges);
}

bool is_bipartite(const Graph& g, std::vector<int>* sides) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    if (sides) *sides = std::move(side);
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
        mask[static_cast<std::size_t>(v)] = 1;
    }
    return mask;
}

}  // namespace sparselab
