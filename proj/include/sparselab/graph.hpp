#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sparselab {

using Vertex = int;
using Label = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple graph on dense vertex ids 0..n-1.
///
/// Undirected graphs keep symmetric sorted adjacency lists; directed graphs
/// keep sorted out-neighbor lists. Each vertex carries an opaque label that
/// survives induced-subgraph operations, so solutions found on a subgraph or
/// gadget can be reported in the labels of the instance they came from.
/// Graphs are immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, parallel edges, ids out of
    /// range, or a label table of the wrong length. Empty labels means
    /// label(v) == v.
    static Graph undirected(int n, std::span<const Edge> edges, std::vector<Label> labels = {});
    static Graph directed(int n, std::span<const Edge> arcs, std::vector<Label> labels = {});

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const { return edge_count_; }
    bool is_directed() const { return directed_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const { return max_degree_; }
    bool adjacent(Vertex u, Vertex v) const;

    Label label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<Label>& labels() const { return labels_; }

    /// Edge list with u < v (undirected) or arcs (directed), lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int n, bool directed, std::span<const Edge> edges, std::vector<Label> labels);

    bool directed_ = false;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Label> labels_;
    std::size_t edge_count_ = 0;
    int max_degree_ = 0;
};

/// G[V']: vertex i of the result is vertices[i] of g; labels are carried over.
/// Throws std::out_of_range on unknown ids and std::invalid_argument on repeats.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_bipartite(const Graph& g, std::vector<int>* sides = nullptr);

/// Connected components (undirected), each sorted; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Membership mask of size g.order() for a vertex list; throws on out-of-range ids.
std::vector<char> membership(const Graph& g, std::span<const Vertex> vertices);

}  // namespace sparselab
