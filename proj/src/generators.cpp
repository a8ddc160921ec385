#include "sparselab/generators.hpp"

#include <algorithm>
#include <optional>
#include <charconv>
#include <stdexcept>
#include <string>

namespace sparselab::graphs {

Graph empty(int n) { return Graph::undirected(n, {}); }

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::undirected(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::undirected(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::undirected(n, e);
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::undirected(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::undirected(a + b, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::undirected(10, e);
}

Graph named(std::string_view name) {
    if (name == "petersen") return petersen();
    auto number = [&](std::string_view prefix) -> std::optional<int> {
        if (!name.starts_with(prefix)) return std::nullopt;
        auto digits = name.substr(prefix.size());
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
        return value;
    };
    if (auto k = number("star")) return star(*k);
    if (auto k = number("empty")) return empty(*k);
    if (auto k = number("k")) return complete(*k);
    if (auto k = number("c")) return cycle(*k);
    if (auto k = number("p")) return path(*k);
    throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

Graph gnp(int n, double p, Rng& rng) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) e.emplace_back(u, v);
    return Graph::undirected(n, e);
}

Graph gnp_capped(int n, double p, int cap, Rng& rng) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    std::vector<int> degree(n, 0);
    std::vector<Edge> e;
    for (auto [u, v] : pairs) {
        if (!rng.bernoulli(p) || degree[u] >= cap || degree[v] >= cap) continue;
        ++degree[u];
        ++degree[v];
        e.emplace_back(u, v);
    }
    return Graph::undirected(n, e);
}

Graph random_regular(int n, int d, Rng& rng) {
    if (d < 0 || d >= n || (n * d) % 2 != 0) throw std::invalid_argument("no " + std::to_string(d) + "-regular graph on " +
                                                                      std::to_string(n) + " vertices");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) points.push_back(v);
        rng.shuffle(points);
        std::vector<Edge> e;
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
            if (u == v || std::find(e.begin(), e.end(), Edge{u, v}) != e.end()) ok = false;
            e.emplace_back(u, v);
        }
        if (ok) return Graph::undirected(n, e);
    }
    throw std::runtime_error("pairing model failed to produce a simple regular graph");
}

Graph random_bipartite(int a, int b, double p, Rng& rng) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng.bernoulli(p)) e.emplace_back(u, a + v);
    return Graph::undirected(a + b, e);
}

}  // namespace sparselab::graphs
