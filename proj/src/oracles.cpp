#include "sparselab/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <optional>

#include "bits.hpp"
#include "sparselab/validate.hpp"

namespace sparselab {

namespace {

constexpr int kFasDpLimit = 16;

using detail::Bits;
using Clock = std::chrono::steady_clock;

class Meter {
public:
    explicit Meter(const OracleBudget& budget) : budget_(budget), start_(Clock::now()) {}

    void tick() {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
        if (budget_.timeout_seconds > 0 && (nodes_ & 1023U) == 0) {
            std::chrono::duration<double> elapsed = Clock::now() - start_;
            if (elapsed.count() > budget_.timeout_seconds)
                throw BudgetExceeded("search exceeded " + std::to_string(budget_.timeout_seconds) + " s");
        }
    }

private:
    const OracleBudget& budget_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

std::vector<Bits> open_neighborhoods(const Graph& g) {
    std::vector<Bits> nb(g.order(), Bits(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) nb[v].set(w);
    return nb;
}

std::vector<Bits> closed_neighborhoods(const Graph& g) {
    auto nb = open_neighborhoods(g);
    for (Vertex v = 0; v < g.order(); ++v) nb[v].set(v);
    return nb;
}

void require_search_size(int n, const OracleBudget& budget) {
    if (n > budget.max_search_vertices)
        throw BudgetExceeded("instance of size " + std::to_string(n) + " exceeds the search cap of " +
                             std::to_string(budget.max_search_vertices));
}

void require_enumeration_size(int n, int cap, const char* what) {
    if (n > cap)
        throw BudgetExceeded(std::string(what) + " count " + std::to_string(n) + " exceeds the enumeration cap of " +
                             std::to_string(cap));
}

// Maximum independent set: reduce degree <= 1 vertices, solve all-degree-2
// remainders directly, otherwise branch on a maximum-degree vertex (take it
// and drop its neighborhood, or drop it).
class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter), nb_(open_neighborhoods(g)) {}

    std::vector<Vertex> run() {
        search(Bits::full(g_.order()));
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void record() {
        if (!have_best_ || current_.size() > best_.size()) {
            best_ = current_;
            have_best_ = true;
        }
    }

    void search(const Bits& alive) {
        meter_.tick();
        int remaining = alive.count();
        if (have_best_ && current_.size() + static_cast<std::size_t>(remaining) <= best_.size()) return;
        if (remaining == 0) {
            record();
            return;
        }
        int max_degree = -1;
        Vertex pivot = -1, low = -1;
        alive.for_each([&](Vertex v) {
            int d = nb_[v].intersect_count(alive);
            if (d <= 1 && low < 0) low = v;
            if (d > max_degree) {
                max_degree = d;
                pivot = v;
            }
        });
        if (low >= 0) {
            take(alive, low);
            return;
        }
        if (max_degree <= 2) {
            auto members = alive.to_vector();
            auto part = max_is_degree2(induced_subgraph(g_, members));
            for (int i : part.selection()) current_.push_back(members[i]);
            record();
            current_.resize(current_.size() - part.selection().size());
            return;
        }
        take(alive, pivot);
        Bits without = alive;
        without.reset(pivot);
        search(without);
    }

    void take(const Bits& alive, Vertex v) {
        Bits next = alive;
        next.reset(v);
        next.subtract(nb_[v]);
        current_.push_back(v);
        search(next);
        current_.pop_back();
    }

    const Graph& g_;
    Meter& meter_;
    std::vector<Bits> nb_;
    std::vector<Vertex> current_, best_;
    bool have_best_ = false;
};

// Minimum set cover: branch on the sets containing the uncovered element with
// fewest options; earlier siblings are excluded in later branches.
class SetCoverSearch {
public:
    SetCoverSearch(int universe, std::vector<Bits> sets, Meter& meter)
        : universe_(universe), sets_(std::move(sets)), meter_(meter), containing_(universe) {
        for (std::size_t s = 0; s < sets_.size(); ++s)
            sets_[s].for_each([&](int e) { containing_[e].push_back(static_cast<int>(s)); });
    }

    std::vector<int> run() {
        for (int e = 0; e < universe_; ++e)
            if (containing_[e].empty())
                throw std::invalid_argument("element " + std::to_string(e) + " lies in no set; no cover exists");
        greedy();
        std::vector<int> chosen;
        search(Bits::full(universe_), Bits(static_cast<int>(sets_.size())), chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void greedy() {
        Bits uncovered = Bits::full(universe_);
        best_.clear();
        while (!uncovered.none()) {
            int pick = -1, gain = 0;
            for (std::size_t s = 0; s < sets_.size(); ++s) {
                int c = sets_[s].intersect_count(uncovered);
                if (c > gain) {
                    gain = c;
                    pick = static_cast<int>(s);
                }
            }
            best_.push_back(pick);
            uncovered.subtract(sets_[pick]);
        }
    }

    void search(const Bits& uncovered, const Bits& excluded, std::vector<int>& chosen) {
        meter_.tick();
        if (uncovered.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return;
        int element = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        uncovered.for_each([&](int e) {
            std::size_t options = 0;
            for (int s : containing_[e]) options += excluded.test(s) ? 0 : 1;
            if (options < fewest) {
                fewest = options;
                element = e;
            }
        });
        if (fewest == 0) return;
        int widest = 0;
        for (std::size_t s = 0; s < sets_.size(); ++s)
            if (!excluded.test(static_cast<int>(s))) widest = std::max(widest, sets_[s].intersect_count(uncovered));
        int need = (uncovered.count() + widest - 1) / widest;
        if (chosen.size() + static_cast<std::size_t>(need) >= best_.size()) return;

        std::vector<std::pair<int, int>> options;  // (-coverage, set)
        for (int s : containing_[element])
            if (!excluded.test(s)) options.emplace_back(-sets_[s].intersect_count(uncovered), s);
        std::sort(options.begin(), options.end());
        Bits skip = excluded;
        for (auto [neg, s] : options) {
            Bits rest = uncovered;
            rest.subtract(sets_[s]);
            chosen.push_back(s);
            search(rest, skip, chosen);
            chosen.pop_back();
            skip.set(s);
        }
    }

    int universe_;
    std::vector<Bits> sets_;
    Meter& meter_;
    std::vector<std::vector<int>> containing_;
    std::vector<int> best_;
};

// Minimum independent dominating set: some vertex of N[u] is chosen for every
// undominated u.
class IndependentDominatingSearch {
public:
    IndependentDominatingSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter), closed_(closed_neighborhoods(g)) {}

    std::vector<Vertex> run() {
        best_ = maximal_is_greedy(g_);
        std::vector<Vertex> chosen;
        search(Bits::full(g_.order()), Bits::full(g_.order()), chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void search(const Bits& undominated, const Bits& available, std::vector<Vertex>& chosen) {
        meter_.tick();
        if (undominated.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return;
        Vertex target = -1;
        int fewest = std::numeric_limits<int>::max();
        undominated.for_each([&](Vertex u) {
            int options = closed_[u].intersect_count(available);
            if (options < fewest) {
                fewest = options;
                target = u;
            }
        });
        if (fewest == 0) return;
        int widest = 0;
        available.for_each([&](Vertex v) { widest = std::max(widest, closed_[v].intersect_count(undominated)); });
        int need = (undominated.count() + widest - 1) / widest;
        if (chosen.size() + static_cast<std::size_t>(need) >= best_.size()) return;

        std::vector<std::pair<int, Vertex>> options;
        Bits pool = closed_[target];
        pool &= available;
        pool.for_each([&](Vertex c) { options.emplace_back(-closed_[c].intersect_count(undominated), c); });
        std::sort(options.begin(), options.end());
        Bits open = available;
        for (auto [neg, c] : options) {
            Bits rest = undominated;
            rest.subtract(closed_[c]);
            Bits next = open;
            next.subtract(closed_[c]);
            chosen.push_back(c);
            search(rest, next, chosen);
            chosen.pop_back();
            open.reset(c);
        }
    }

    const Graph& g_;
    Meter& meter_;
    std::vector<Bits> closed_;
    std::vector<Vertex> best_;
};

// Minimum feedback vertex set: peel vertices of degree <= 1, then branch on
// the vertices of a short cycle; earlier siblings become undeletable.
class FeedbackVertexSearch {
public:
    FeedbackVertexSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter), nb_(open_neighborhoods(g)) {}

    std::vector<Vertex> run() {
        greedy();
        std::vector<Vertex> chosen;
        search(Bits::full(g_.order()), Bits(g_.order()), chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    Bits peel(Bits alive) const {
        bool changed = true;
        while (changed) {
            changed = false;
            alive.for_each([&](Vertex v) {
                if (nb_[v].intersect_count(alive) <= 1) {
                    alive.reset(v);
                    changed = true;
                }
            });
        }
        return alive;
    }

    void greedy() {
        Bits alive = peel(Bits::full(g_.order()));
        best_.clear();
        while (!alive.none()) {
            Vertex pick = -1;
            int degree = -1;
            alive.for_each([&](Vertex v) {
                int d = nb_[v].intersect_count(alive);
                if (d > degree) {
                    degree = d;
                    pick = v;
                }
            });
            best_.push_back(pick);
            alive.reset(pick);
            alive = peel(alive);
        }
    }

    // Vertex set of a shortest closed walk found by BFS; contains a cycle.
    std::vector<Vertex> short_cycle(const Bits& alive) const {
        std::vector<Vertex> best;
        std::vector<int> dist(g_.order()), parent(g_.order());
        alive.for_each([&](Vertex s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            parent[s] = -1;
            std::vector<Vertex> queue{s};
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex u = queue[head];
                if (!best.empty() && 2 * dist[u] + 1 >= static_cast<int>(best.size())) break;
                bool closed = false;
                for (Vertex w : g_.neighbors(u)) {
                    if (!alive.test(w) || w == parent[u]) continue;
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                        continue;
                    }
                    std::vector<Vertex> cyc;
                    for (Vertex x = u; x != -1; x = parent[x]) cyc.push_back(x);
                    for (Vertex x = w; x != -1; x = parent[x]) cyc.push_back(x);
                    std::sort(cyc.begin(), cyc.end());
                    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
                    if (best.empty() || cyc.size() < best.size()) best = std::move(cyc);
                    closed = true;
                    break;
                }
                if (closed) break;
            }
        });
        return best;
    }

    void search(const Bits& alive_in, const Bits& forbidden, std::vector<Vertex>& chosen) {
        meter_.tick();
        Bits alive = peel(alive_in);
        if (alive.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return;
        auto cycle = short_cycle(alive);
        std::stable_sort(cycle.begin(), cycle.end(), [&](Vertex a, Vertex b) {
            return nb_[a].intersect_count(alive) > nb_[b].intersect_count(alive);
        });
        Bits keep = forbidden;
        for (Vertex v : cycle) {
            if (keep.test(v)) continue;
            Bits next = alive;
            next.reset(v);
            chosen.push_back(v);
            search(next, keep, chosen);
            chosen.pop_back();
            keep.set(v);
        }
    }

    const Graph& g_;
    Meter& meter_;
    std::vector<Bits> nb_;
    std::vector<Vertex> best_;
};

ArcList feedback_arc_dp(const Graph& g, const OracleBudget& budget, Meter& meter) {
    int n = g.order();
    require_enumeration_size(n, budget.max_vertices, "vertex");
    std::vector<std::uint32_t> out(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) out[u] |= std::uint32_t{1} << v;
    std::size_t states = std::size_t{1} << n;
    // cost[mask]: fewest backward arcs when `mask` forms the prefix of the order.
    std::vector<std::uint16_t> cost(states, std::numeric_limits<std::uint16_t>::max());
    std::vector<std::uint8_t> last(states, 0);
    cost[0] = 0;
    for (std::size_t mask = 0; mask < states; ++mask) {
        if ((mask & 4095U) == 0) meter.tick();
        auto base = cost[mask];
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1U) continue;
            std::size_t next = mask | (std::size_t{1} << v);
            auto c = static_cast<std::uint16_t>(base + std::popcount(out[v] & static_cast<std::uint32_t>(mask)));
            if (c < cost[next]) {
                cost[next] = c;
                last[next] = static_cast<std::uint8_t>(v);
            }
        }
    }
    std::vector<int> position(n);
    std::size_t mask = states - 1;
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = last[mask];
        position[v] = pos;
        mask &= ~(std::size_t{1} << v);
    }
    ArcList arcs;
    for (auto [u, v] : g.edges())
        if (position[v] < position[u]) arcs.emplace_back(u, v);
    return arcs;
}

// Feedback arc set: branch on the removable arcs of a shortest cycle. Branch
// i removes arc i and keeps arcs 0..i-1, so the branches partition the
// search space. Lower bound: a greedy packing of arc-disjoint cycles.
class FeedbackArcSearch {
public:
    FeedbackArcSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter), arcs_(g.edges()) {
        int n = g.order();
        out_.assign(n, {});
        for (std::size_t i = 0; i < arcs_.size(); ++i) out_[arcs_[i].first].push_back(static_cast<int>(i));
        state_.assign(arcs_.size(), Free);
    }

    ArcList run() {
        best_size_ = arcs_.size() + 1;
        search(0);
        ArcList out;
        for (int i : best_) out.push_back(arcs_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    enum State : char { Free, Kept, Removed };

    // Arc ids of a shortest cycle avoiding `blocked` arcs, or empty.
    std::vector<int> shortest_cycle(const std::vector<char>& blocked) const {
        int n = g_.order();
        std::vector<int> best;
        std::vector<int> via(n);
        std::vector<int> dist(n);
        for (Vertex s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<Vertex> queue{s};
            dist[s] = 0;
            int closing = -1;
            for (std::size_t head = 0; head < queue.size() && closing < 0; ++head) {
                Vertex u = queue[head];
                if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) break;
                for (int a : out_[u]) {
                    if (blocked[a]) continue;
                    Vertex v = arcs_[a].second;
                    if (v == s) {
                        closing = a;
                        break;
                    }
                    if (dist[v] >= 0) continue;
                    dist[v] = dist[u] + 1;
                    via[v] = a;
                    queue.push_back(v);
                }
            }
            if (closing < 0) continue;
            std::vector<int> cycle{closing};
            for (Vertex v = arcs_[closing].first; v != s; v = arcs_[via[v]].first) cycle.push_back(via[v]);
            if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
        }
        return best;
    }

    std::size_t packing_bound() const {
        std::vector<char> blocked(arcs_.size());
        for (std::size_t i = 0; i < arcs_.size(); ++i) blocked[i] = state_[i] == Removed;
        std::size_t count = 0;
        for (;;) {
            auto cycle = shortest_cycle(blocked);
            if (cycle.empty()) return count;
            ++count;
            for (int a : cycle) blocked[a] = 1;
        }
    }

    void search(std::size_t removed) {
        meter_.tick();
        if (removed + packing_bound() >= best_size_) return;
        std::vector<char> blocked(arcs_.size());
        for (std::size_t i = 0; i < arcs_.size(); ++i) blocked[i] = state_[i] == Removed;
        auto cycle = shortest_cycle(blocked);
        if (cycle.empty()) {
            best_size_ = removed;
            best_.clear();
            for (std::size_t i = 0; i < arcs_.size(); ++i)
                if (state_[i] == Removed) best_.push_back(static_cast<int>(i));
            return;
        }
        std::vector<int> kept_here;
        for (int a : cycle) {
            if (state_[a] == Kept) continue;
            state_[a] = Removed;
            search(removed + 1);
            state_[a] = Kept;
            kept_here.push_back(a);
        }
        for (int a : kept_here) state_[a] = Free;
    }

    const Graph& g_;
    Meter& meter_;
    std::vector<Edge> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<State> state_;
    std::vector<int> best_;
    std::size_t best_size_ = 0;
};

Assignment best_assignment(const CnfInstance& f, const OracleBudget& budget, Meter& meter) {
    int n = f.num_vars();
    require_enumeration_size(n, budget.max_vertices, "variable");
    struct Masks {
        std::uint32_t positive = 0, negative = 0;
    };
    std::vector<Masks> clauses;
    for (const auto& c : f.clauses()) {
        Masks m;
        for (const auto& l : c) (l.negated ? m.negative : m.positive) |= std::uint32_t{1} << l.var;
        clauses.push_back(m);
    }
    std::uint32_t full = n == 32 ? ~0U : (std::uint32_t{1} << n) - 1;
    long best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint64_t a = 0; a <= full; ++a) {
        if ((a & 4095U) == 0) meter.tick();
        auto bits = static_cast<std::uint32_t>(a);
        long sat = 0;
        for (const auto& m : clauses) sat += ((bits & m.positive) | (~bits & m.negative)) ? 1 : 0;
        if (sat > best) {
            best = sat;
            best_mask = bits;
        }
    }
    Assignment out(n);
    for (int v = 0; v < n; ++v) out[v] = (best_mask >> v) & 1U;
    return out;
}

class ColorableSearch {
public:
    ColorableSearch(const Graph& g, int colors, Meter& meter) : g_(g), colors_(colors), meter_(meter), color_(g.order(), -1) {
        order_.resize(g.order());
        std::iota(order_.begin(), order_.end(), 0);
    }

    std::vector<Vertex> run() {
        search(0, 0);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void search(std::size_t at, int used) {
        meter_.tick();
        if (have_best_ && kept_.size() + (order_.size() - at) <= best_.size()) return;
        if (at == order_.size()) {
            best_ = kept_;
            have_best_ = true;
            return;
        }
        Vertex v = order_[at];
        int limit = std::min(colors_, used + 1);
        for (int c = 0; c < limit; ++c) {
            auto nb = g_.neighbors(v);
            if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return color_[w] == c; })) continue;
            color_[v] = c;
            kept_.push_back(v);
            search(at + 1, std::max(used, c + 1));
            kept_.pop_back();
            color_[v] = -1;
        }
        search(at + 1, used);
    }

    const Graph& g_;
    int colors_;
    Meter& meter_;
    std::vector<int> color_;
    std::vector<Vertex> order_, kept_, best_;
    bool have_best_ = false;
};

class PlanarSearch {
public:
    PlanarSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter) {}

    std::vector<Vertex> run() {
        search(0);
        return best_;
    }

private:
    bool still_planar() const {
        if (kept_.size() <= 4) return true;
        auto sub = induced_subgraph(g_, kept_);
        if (sub.size() > 3 * kept_.size() - 6) return false;
        return is_planar(sub);
    }

    void search(int at) {
        meter_.tick();
        if (have_best_ && kept_.size() + static_cast<std::size_t>(g_.order() - at) <= best_.size()) return;
        if (at == g_.order()) {
            best_ = kept_;
            have_best_ = true;
            return;
        }
        kept_.push_back(at);
        if (still_planar()) search(at + 1);
        kept_.pop_back();
        search(at + 1);
    }

    const Graph& g_;
    Meter& meter_;
    std::vector<Vertex> kept_, best_;
    bool have_best_ = false;
};

std::vector<Bits> set_bits(const SetSystem& s) {
    std::vector<Bits> out(s.count(), Bits(s.ground()));
    for (std::size_t i = 0; i < s.count(); ++i)
        for (int e : s.set(i)) out[i].set(e);
    return out;
}

const Graph& graph_of(const Instance& instance, Problem p, bool directed) {
    const auto* g = std::get_if<Graph>(&instance);
    if (!g || g->is_directed() != directed)
        throw std::invalid_argument(std::string(tag_name(p)) + " expects " + (directed ? "a directed" : "an undirected") +
                                    " graph instance");
    return *g;
}

const SetSystem& sets_of(const Instance& instance, Problem p) {
    const auto* s = std::get_if<SetSystem>(&instance);
    if (!s) throw std::invalid_argument(std::string(tag_name(p)) + " expects a set-system instance");
    return *s;
}

const CnfInstance& cnf_of(const Instance& instance, Problem p) {
    const auto* f = std::get_if<CnfInstance>(&instance);
    if (!f) throw std::invalid_argument(std::string(tag_name(p)) + " expects a CNF instance");
    return *f;
}

Candidate assignment_candidate(Problem p, const CnfInstance& f, Assignment a) {
    long value = f.satisfied_count(a);
    return Candidate{p, std::move(a), value};
}

}  // namespace

Candidate solve_exact(Problem problem, const Instance& instance, const OracleBudget& budget, const ProblemParams& params) {
    Meter meter(budget);
    Candidate result;
    switch (problem) {
    case Problem::IndependentSet:
    case Problem::VertexCover: {
        const auto& g = graph_of(instance, problem, false);
        require_search_size(g.order(), budget);
        auto is = IndependentSetSearch(g, meter).run();
        result = problem == Problem::IndependentSet ? make_selection(problem, is)
                                                    : make_selection(problem, complement(g.order(), is));
        break;
    }
    case Problem::DominatingSet: {
        const auto& g = graph_of(instance, problem, false);
        require_search_size(g.order(), budget);
        result = make_selection(problem, SetCoverSearch(g.order(), closed_neighborhoods(g), meter).run());
        break;
    }
    case Problem::IndependentDominatingSet:
    case Problem::MaxMinimalVertexCover: {
        const auto& g = graph_of(instance, problem, false);
        require_search_size(g.order(), budget);
        auto ids = IndependentDominatingSearch(g, meter).run();
        result = problem == Problem::IndependentDominatingSet ? make_selection(problem, ids)
                                                              : make_selection(problem, complement(g.order(), ids));
        break;
    }
    case Problem::FeedbackVertexSet: {
        const auto& g = graph_of(instance, problem, false);
        require_search_size(g.order(), budget);
        result = make_selection(problem, FeedbackVertexSearch(g, meter).run());
        break;
    }
    case Problem::SetCover: {
        const auto& s = sets_of(instance, problem);
        require_search_size(static_cast<int>(s.count()), budget);
        result = make_selection(problem, SetCoverSearch(s.ground(), set_bits(s), meter).run());
        break;
    }
    case Problem::HittingSet: {
        const auto& s = sets_of(instance, problem);
        require_search_size(s.ground(), budget);
        auto dual = s.dual();
        result = make_selection(problem, SetCoverSearch(dual.ground(), set_bits(dual), meter).run());
        break;
    }
    case Problem::SetPacking: {
        const auto& s = sets_of(instance, problem);
        require_search_size(static_cast<int>(s.count()), budget);
        auto bits = set_bits(s);
        std::vector<Edge> conflicts;
        for (std::size_t i = 0; i < bits.size(); ++i)
            for (std::size_t j = i + 1; j < bits.size(); ++j)
                if (bits[i].intersects(bits[j])) conflicts.emplace_back(static_cast<int>(i), static_cast<int>(j));
        auto conflict_graph = Graph::undirected(static_cast<int>(s.count()), conflicts);
        result = make_selection(problem, IndependentSetSearch(conflict_graph, meter).run());
        break;
    }
    case Problem::Max2Sat:
    case Problem::Max3Sat: {
        const auto& f = cnf_of(instance, problem);
        std::size_t width = problem == Problem::Max2Sat ? 2 : 3;
        if (f.max_width() > width)
            throw std::invalid_argument(std::string(tag_name(problem)) + " instance has a clause of width " +
                                        std::to_string(f.max_width()));
        result = assignment_candidate(problem, f, best_assignment(f, budget, meter));
        break;
    }
    case Problem::FeedbackArcSet: {
        const auto& g = graph_of(instance, problem, true);
        if (g.order() <= kFasDpLimit) {
            result = make_arcs(problem, feedback_arc_dp(g, budget, meter));
        } else {
            require_search_size(g.order(), budget);
            result = make_arcs(problem, FeedbackArcSearch(g, meter).run());
        }
        break;
    }
    case Problem::ColorableSubgraph: {
        if (!params.colors) throw std::invalid_argument("LCOL-SUBGRAPH needs the number of colors");
        if (*params.colors < 1) throw std::invalid_argument("number of colors must be positive");
        const auto& g = graph_of(instance, problem, false);
        require_enumeration_size(g.order(), budget.max_vertices, "vertex");
        result = make_selection(problem, ColorableSearch(g, *params.colors, meter).run());
        if (*params.colors > ColoringGuard{}.max_colors || result.value > ColoringGuard{}.max_vertices) return result;
        break;
    }
    case Problem::PlanarSubgraph: {
        const auto& g = graph_of(instance, problem, false);
        require_enumeration_size(g.order(), budget.max_vertices, "vertex");
        result = make_selection(problem, PlanarSearch(g, meter).run());
        break;
    }
    }
    auto verdict = validate(problem, instance, result, params);
    if (!verdict.feasible) throw std::logic_error("exact solver produced an infeasible candidate: " + verdict.reason);
    return result;
}

Candidate solve_fas_by_ordering(const Graph& g, const OracleBudget& budget) {
    if (!g.is_directed()) throw std::invalid_argument("FAS expects a directed graph");
    Meter meter(budget);
    return make_arcs(Problem::FeedbackArcSet, feedback_arc_dp(g, budget, meter));
}

Candidate solve_fas_by_cycles(const Graph& g, const OracleBudget& budget) {
    if (!g.is_directed()) throw std::invalid_argument("FAS expects a directed graph");
    require_search_size(g.order(), budget);
    Meter meter(budget);
    return make_arcs(Problem::FeedbackArcSet, FeedbackArcSearch(g, meter).run());
}

Candidate solve_by_enumeration(Problem problem, const Instance& instance, const ProblemParams& params,
                               int max_universe) {
    auto kind = payload_kind(problem);
    bool maximize = is_maximization(problem);
    std::optional<Candidate> best;
    auto consider = [&](Candidate c) {
        auto verdict = validate(problem, instance, c, params);
        if (!verdict.feasible) return;
        if (!best || (maximize ? c.value > best->value : c.value < best->value)) best = std::move(c);
    };

    if (kind == PayloadKind::Assignment) {
        const auto& f = cnf_of(instance, problem);
        require_enumeration_size(f.num_vars(), max_universe, "variable");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars()); ++mask) {
            Assignment a(f.num_vars());
            for (int v = 0; v < f.num_vars(); ++v) a[v] = (mask >> v) & 1U;
            consider(assignment_candidate(problem, f, std::move(a)));
        }
    } else if (kind == PayloadKind::Arcs) {
        const auto& g = graph_of(instance, problem, true);
        auto arcs = g.edges();
        require_enumeration_size(static_cast<int>(arcs.size()), max_universe, "arc");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
            ArcList pick;
            for (std::size_t i = 0; i < arcs.size(); ++i)
                if (mask >> i & 1U) pick.push_back(arcs[i]);
            consider(make_arcs(problem, std::move(pick)));
        }
    } else {
        int universe = 0;
        if (kind == PayloadKind::Vertices) universe = graph_of(instance, problem, false).order();
        else if (kind == PayloadKind::SetIndices) universe = static_cast<int>(sets_of(instance, problem).count());
        else universe = sets_of(instance, problem).ground();
        require_enumeration_size(universe, max_universe, "universe");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
            Selection pick;
            for (int i = 0; i < universe; ++i)
                if (mask >> i & 1U) pick.push_back(i);
            consider(make_selection(problem, std::move(pick)));
        }
    }
    if (!best) throw std::invalid_argument(std::string(tag_name(problem)) + " instance has no feasible solution");
    return *best;
}

std::vector<Vertex> maximum_bipartite_matching(const Graph& g) {
    std::vector<int> side;
    if (!is_bipartite(g, &side)) throw std::invalid_argument("graph is not bipartite");
    std::vector<Vertex> mate(g.order(), -1);
    std::vector<int> visited(g.order(), -1);
    // Kuhn's augmenting paths from the side-0 vertices.
    auto augment = [&](auto&& self, Vertex u, int stamp) -> bool {
        for (Vertex w : g.neighbors(u)) {
            if (visited[w] == stamp) continue;
            visited[w] = stamp;
            if (mate[w] == -1 || self(self, mate[w], stamp)) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        return false;
    };
    for (Vertex u = 0; u < g.order(); ++u)
        if (side[u] == 0 && mate[u] == -1) augment(augment, u, u);
    return mate;
}

Candidate max_is_bipartite(const Graph& g) {
    std::vector<int> side;
    if (!is_bipartite(g, &side)) throw std::invalid_argument("graph is not bipartite");
    auto mate = maximum_bipartite_matching(g);
    // Alternating reachability from unmatched left vertices: left via
    // non-matching edges to the right, right back via matching edges.
    std::vector<char> reached(g.order(), 0);
    std::vector<Vertex> queue;
    for (Vertex u = 0; u < g.order(); ++u)
        if (side[u] == 0 && mate[u] == -1) {
            reached[u] = 1;
            queue.push_back(u);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (reached[w]) continue;
            bool step = side[u] == 0 ? mate[u] != w : mate[u] == w;
            if (!step) continue;
            reached[w] = 1;
            queue.push_back(w);
        }
    }
    // Minimum vertex cover: unreached left plus reached right; its complement is independent.
    Selection independent;
    for (Vertex v = 0; v < g.order(); ++v) {
        bool in_cover = side[v] == 0 ? !reached[v] : reached[v] != 0;
        if (!in_cover) independent.push_back(v);
    }
    return make_selection(Problem::IndependentSet, std::move(independent));
}

Candidate max_is_degree2(const Graph& g) {
    if (g.max_degree() > 2) throw std::invalid_argument("max_is_degree2 needs maximum degree at most 2");
    Selection chosen;
    for (const auto& comp : connected_components(g)) {
        Vertex start = comp.front();
        bool is_path = false;
        for (Vertex v : comp)
            if (g.degree(v) <= 1) {
                start = v;
                is_path = true;
                break;
            }
        // Walk the component from `start` and take every other vertex.
        std::vector<Vertex> walk{start};
        Vertex prev = -1, cur = start;
        while (true) {
            Vertex next = -1;
            for (Vertex w : g.neighbors(cur))
                if (w != prev && w != start) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        std::size_t take = is_path ? (walk.size() + 1) / 2 : walk.size() / 2;
        for (std::size_t i = 0; i < take; ++i) chosen.push_back(walk[2 * i]);
    }
    return make_selection(Problem::IndependentSet, std::move(chosen));
}

std::vector<Vertex> maximal_is_greedy(const Graph& g, TieRule rule) {
    std::vector<char> blocked(g.order(), 0);
    std::vector<Vertex> chosen;
    auto visit = [&](Vertex v) {
        if (blocked[v]) return;
        chosen.push_back(v);
        blocked[v] = 1;
        for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    };
    if (rule == TieRule::LowestId)
        for (Vertex v = 0; v < g.order(); ++v) visit(v);
    else
        for (Vertex v = g.order() - 1; v >= 0; --v) visit(v);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace sparselab
