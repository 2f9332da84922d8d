#include "torelli/cyceq.hpp"

#include "torelli/c1.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace torelli {

SpanningForest spanning_forest(const DecGraph& g)
{
    const int n = g.num_vertices();
    SpanningForest f;
    f.parent.assign(n, -1);
    f.parent_edge.assign(n, -1);
    f.depth.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (f.depth[root] != -1) continue;
        f.depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int e : g.incident(v)) {
                const int w = g.edges()[e].other(v);
                if (f.depth[w] != -1) continue;
                f.depth[w] = f.depth[v] + 1;
                f.parent[w] = v;
                f.parent_edge[w] = e;
                f.tree_edges.insert(e);
                queue.push_back(w);
            }
        }
    }
    return f;
}

namespace {

EdgeSet tree_path(const SpanningForest& f, int a, int b)
{
    EdgeSet path;
    while (a != b) {
        if (f.depth[a] >= f.depth[b]) {
            path.insert(f.parent_edge[a]);
            a = f.parent[a];
        } else {
            path.insert(f.parent_edge[b]);
            b = f.parent[b];
        }
    }
    return path;
}

/// Row-reduced basis keyed by pivot bit, for span membership tests.
std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> rows)
{
    std::vector<std::uint64_t> basis;
    for (auto r : rows) {
        for (auto b : basis) r = std::min(r, r ^ b);
        if (r != 0) {
            basis.push_back(r);
            std::sort(basis.begin(), basis.end(), std::greater<>());
        }
    }
    return basis;
}

bool reduces_to_zero(const std::vector<std::uint64_t>& basis, std::uint64_t r)
{
    for (auto b : basis) r = std::min(r, r ^ b);
    return r == 0;
}

}  // namespace

CycleSpace cycle_space(const DecGraph& g)
{
    const auto f = spanning_forest(g);
    CycleSpace cs;
    cs.num_edges = g.num_edges();
    for (int e = 0; e < g.num_edges(); ++e) {
        if (f.tree_edges.contains(e)) continue;
        EdgeSet cyc = tree_path(f, g.edges()[e].u, g.edges()[e].v);
        cyc.insert(e);
        cs.basis.push_back(cyc);
    }
    return cs;
}

bool CycleSpace::contains(EdgeSet s) const
{
    std::vector<std::uint64_t> rows;
    for (auto b : basis) rows.push_back(b.bits());
    return reduces_to_zero(reduce(rows), s.bits());
}

namespace {

bool is_circuit(const DecGraph& g, EdgeSet s)
{
    if (s.empty()) return false;
    std::map<int, int> deg;
    for (int e : s.indices()) {
        const auto& ed = g.edges()[e];
        deg[ed.u] += 1;
        deg[ed.v] += 1;
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    // Connected on its vertices: count components of the edge set restricted.
    const auto label = component_labels(g, s);
    std::set<int> labels;
    for (const auto& [v, d] : deg) labels.insert(label[v]);
    return labels.size() == 1;
}

}  // namespace

std::vector<EdgeSet> circuits(const DecGraph& g)
{
    const auto cs = cycle_space(g);
    const int b = static_cast<int>(cs.basis.size());
    if (b > 20) throw CapExceeded("cycle space too large to enumerate circuits");
    std::vector<EdgeSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b); ++mask) {
        EdgeSet s;
        for (int i = 0; i < b; ++i)
            if ((mask >> i) & 1U) s = s ^ cs.basis[i];
        if (is_circuit(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

EdgeSet image(const EdgeBijection& eps, EdgeSet s)
{
    EdgeSet out;
    for (int e : s.indices()) out.insert(eps[e]);
    return out;
}

EdgeBijection inverse(const EdgeBijection& eps)
{
    EdgeBijection inv(eps.size());
    for (std::size_t e = 0; e < eps.size(); ++e) inv[eps[e]] = static_cast<int>(e);
    return inv;
}

namespace {

bool is_bijection(const EdgeBijection& eps, int n)
{
    if (static_cast<int>(eps.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : eps) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

}  // namespace

bool is_cyclic_bijection(const DecGraph& g, const DecGraph& h, const EdgeBijection& eps)
{
    if (g.num_edges() != h.num_edges() || !is_bijection(eps, g.num_edges())) return false;
    const auto cg = cycle_space(g);
    const auto ch = cycle_space(h);
    if (cg.basis.size() != ch.basis.size()) return false;
    for (auto c : cg.basis)
        if (!ch.contains(image(eps, c))) return false;
    const auto inv = inverse(eps);
    for (auto c : ch.basis)
        if (!cg.contains(image(inv, c))) return false;

    const auto circ_g = circuits(g);
    const auto circ_h = circuits(h);
    if (circ_g.size() != circ_h.size()) return false;
    std::set<std::uint64_t> target;
    for (auto c : circ_h) target.insert(c.bits());
    for (auto c : circ_g)
        if (!target.count(image(eps, c).bits())) return false;
    return true;
}

namespace {

/// Per-edge data invariant under cyclic bijections: sorted lengths of the
/// circuits through the edge.
std::vector<std::vector<int>> circuit_profiles(int m, const std::vector<EdgeSet>& circ)
{
    std::vector<std::vector<int>> prof(m);
    for (auto c : circ)
        for (int e : c.indices()) prof[e].push_back(c.size());
    for (auto& p : prof) std::sort(p.begin(), p.end());
    return prof;
}

std::vector<int> c1_block_sizes(const DecGraph& g)
{
    std::vector<int> size(g.num_edges(), 0);
    if (!is_connected(g) || has_separating_edge(g)) return size;
    for (auto block : c1_partition(g))
        for (int e : block.indices()) size[e] = block.size();
    return size;
}

}  // namespace

std::optional<EdgeBijection> cyclically_equivalent(const DecGraph& g, const DecGraph& h,
                                                   const Limits& limits)
{
    const int m = g.num_edges();
    if (m != h.num_edges()) return std::nullopt;
    if (m > limits.max_edges) throw CapExceeded("too many edges for cyclic equivalence search");
    if (first_betti(g) != first_betti(h)) return std::nullopt;

    const auto circ_g = circuits(g);
    const auto circ_h = circuits(h);
    if (circ_g.size() != circ_h.size()) return std::nullopt;
    const auto prof_g = circuit_profiles(m, circ_g);
    const auto prof_h = circuit_profiles(m, circ_h);
    const auto blocks_g = c1_block_sizes(g);
    const auto blocks_h = c1_block_sizes(h);
    {
        auto a = prof_g;
        auto b = prof_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
        auto x = blocks_g;
        auto y = blocks_h;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }

    // Circuits of g grouped by their largest edge: they become checkable once
    // that edge is assigned.
    std::vector<std::vector<EdgeSet>> closing(m);
    for (auto c : circ_g) closing[c.indices().back()].push_back(c);
    std::set<std::uint64_t> target;
    for (auto c : circ_h) target.insert(c.bits());

    EdgeBijection eps(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(int)> extend = [&](int e) -> bool {
        if (e == m) return true;
        for (int f = 0; f < m; ++f) {
            if (used[f] || prof_g[e] != prof_h[f] || blocks_g[e] != blocks_h[f]) continue;
            eps[e] = f;
            bool ok = true;
            for (auto c : closing[e])
                if (!target.count(image(eps, c).bits())) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[f] = true;
            if (extend(e + 1)) return true;
            used[f] = false;
        }
        eps[e] = -1;
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return eps;
}

std::vector<std::pair<int, int>> separating_pairs(const DecGraph& g)
{
    require_connected_bridge_free(g);
    std::vector<std::pair<int, int>> out;
    const EdgeSet all = g.all_edges();
    for (int a = 0; a < g.num_edges(); ++a)
        for (int b = a + 1; b < g.num_edges(); ++b)
            if (num_components(g, all.minus(EdgeSet::single(a) | EdgeSet::single(b))) > 1)
                out.emplace_back(a, b);
    return out;
}

DecGraph twist(const DecGraph& g, int e1, int e2)
{
    if (e1 == e2 || e1 < 0 || e2 < 0 || e1 >= g.num_edges() || e2 >= g.num_edges())
        throw PreconditionError("not a separating pair");
    const EdgeSet pair = EdgeSet::single(e1) | EdgeSet::single(e2);
    const auto label = component_labels(g, g.all_edges().minus(pair));
    const auto& a = g.edges()[e1];
    const auto& b = g.edges()[e2];
    if (num_components(g, g.all_edges().minus(pair)) != 2 || label[a.u] == label[a.v] ||
        label[b.u] == label[b.v])
        throw PreconditionError("not a separating pair");

    const int side_a = label[a.u] < label[a.v] ? label[a.u] : label[a.v];
    const int a1 = label[a.u] == side_a ? a.u : a.v;
    const int b1 = a.other(a1);
    const int a2 = label[b.u] == side_a ? b.u : b.v;
    const int b2 = b.other(a2);

    GraphSpec spec;
    for (const auto& v : g.vertices()) spec.vertices.push_back({v.id, v.genus});
    const auto vid = [&](int v) { return g.vertices()[v].id; };
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges()[e];
        if (e == e1)
            spec.edges.push_back({ed.id, vid(a1), vid(b2)});
        else if (e == e2)
            spec.edges.push_back({ed.id, vid(a2), vid(b1)});
        else
            spec.edges.push_back({ed.id, vid(ed.u), vid(ed.v)});
    }
    return build_graph(spec);
}

namespace {

class IsoClassSet {
public:
    /// Returns false when an isomorphic graph is already present.
    bool insert(const DecGraph& g)
    {
        auto& bucket = buckets_[graph_fingerprint(g)];
        for (const auto* other : bucket)
            if (graphs_isomorphic(*other, g)) return false;
        items_.push_back(g);
        bucket.push_back(&items_.back());
        return true;
    }
    bool contains(const DecGraph& g) const
    {
        auto it = buckets_.find(graph_fingerprint(g));
        if (it == buckets_.end()) return false;
        for (const auto* other : it->second)
            if (graphs_isomorphic(*other, g)) return true;
        return false;
    }
    std::size_t size() const { return items_.size(); }
    const std::deque<DecGraph>& items() const { return items_; }

private:
    std::deque<DecGraph> items_;
    std::unordered_map<std::uint64_t, std::vector<const DecGraph*>> buckets_;
};

/// Visits the twist orbit breadth-first; stops early when `found` returns true.
bool explore_orbit(const DecGraph& g, const Limits& limits, IsoClassSet& seen,
                   const std::function<bool(const DecGraph&)>& found)
{
    require_connected_bridge_free(g);
    std::deque<DecGraph> frontier{g};
    seen.insert(g);
    if (found(g)) return true;
    while (!frontier.empty()) {
        const DecGraph cur = frontier.front();
        frontier.pop_front();
        for (const auto& [e1, e2] : separating_pairs(cur)) {
            DecGraph next = twist(cur, e1, e2);
            if (!seen.insert(next)) continue;
            if (static_cast<long>(seen.size()) > limits.max_orbit)
                throw CapExceeded("twist orbit exceeds cap");
            if (found(next)) return true;
            frontier.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace

bool strongly_cyclically_equivalent(const DecGraph& g, const DecGraph& h, const Limits& limits)
{
    require_connected_bridge_free(h);
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    IsoClassSet seen;
    return explore_orbit(g, limits, seen,
                         [&h](const DecGraph& x) { return graphs_isomorphic(x, h); });
}

std::vector<DecGraph> twist_orbit(const DecGraph& g, const Limits& limits)
{
    IsoClassSet seen;
    explore_orbit(g, limits, seen, [](const DecGraph&) { return false; });
    return {seen.items().begin(), seen.items().end()};
}

}  // namespace torelli
