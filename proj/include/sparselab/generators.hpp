#pragma once

#include <string_view>

#include "sparselab/graph.hpp"
#include "sparselab/rng.hpp"

namespace sparselab::graphs {

Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{1,leaves}; the center is vertex 0.
Graph star(int leaves);
/// K_{a,b}; sides are 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
/// Outer cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();

/// Named families: "petersen", "k<n>", "c<n>", "p<n>", "star<k>", "empty<n>".
/// Throws std::invalid_argument on anything else.
Graph named(std::string_view name);

/// Erdos-Renyi G(n, p): pairs (u < v) visited in lexicographic order.
Graph gnp(int n, double p, Rng& rng);
/// G(n, p) restricted to maximum degree `cap`: candidate pairs are visited
/// in a shuffled order and skipped when an endpoint is saturated.
Graph gnp_capped(int n, double p, int cap, Rng& rng);
/// Uniform-ish d-regular graph by the pairing model with restarts. Throws
/// std::invalid_argument when n*d is odd or d >= n.
Graph random_regular(int n, int d, Rng& rng);
/// Random bipartite graph with sides 0..a-1 and a..a+b-1.
Graph random_bipartite(int a, int b, double p, Rng& rng);

}  // namespace sparselab::graphs
