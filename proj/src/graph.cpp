#include "torelli/graph.hpp"

#include "torelli/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace torelli {

bool id_less(std::string_view a, std::string_view b)
{
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t i2 = i;
            std::size_t j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2])) != 0) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2])) != 0) ++j2;
            auto na = a.substr(i, i2 - i);
            auto nb = b.substr(j, j2 - j);
            while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
            while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

std::vector<int> EdgeSet::indices() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

bool shortlex_less(EdgeSet a, EdgeSet b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    const auto ia = a.indices();
    const auto ib = b.indices();
    return ia < ib;
}

int DecGraph::vertex_index(std::string_view id) const
{
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices_[i].id == id) return i;
    throw InputError("unknown vertex id: " + std::string(id));
}

int DecGraph::edge_index(std::string_view id) const
{
    for (int i = 0; i < num_edges(); ++i)
        if (edges_[i].id == id) return i;
    throw InputError("unknown edge id: " + std::string(id));
}

EdgeSet DecGraph::edge_set(const std::vector<std::string>& ids) const
{
    EdgeSet s;
    for (const auto& id : ids) s.insert(edge_index(id));
    return s;
}

std::vector<std::string> DecGraph::edge_ids(EdgeSet s) const
{
    std::vector<std::string> out;
    for (int e : s.indices()) out.push_back(edges_[e].id);
    return out;
}

int DecGraph::valence(int v) const
{
    int n = 0;
    for (int e : incidence_[v]) n += edges_[e].is_loop() ? 2 : 1;
    return n;
}

DecGraph build_graph(const GraphSpec& spec)
{
    DecGraph g;
    std::set<std::string> seen;
    for (const auto& v : spec.vertices) {
        if (!seen.insert(v.id).second) throw InputError("duplicate id: " + v.id);
        if (v.genus < 0) throw InputError("negative genus: " + v.id);
        g.vertices_.push_back({v.id, v.genus});
    }
    std::sort(g.vertices_.begin(), g.vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return id_less(a.id, b.id); });

    std::map<std::string, int> vindex;
    for (int i = 0; i < g.num_vertices(); ++i) vindex[g.vertices_[i].id] = i;

    std::set<std::string> eseen;
    for (const auto& e : spec.edges) {
        if (!eseen.insert(e.id).second) throw InputError("duplicate id: " + e.id);
        auto a = vindex.find(e.end0);
        auto b = vindex.find(e.end1);
        if (a == vindex.end() || b == vindex.end())
            throw InputError("dangling endpoint: " + e.id);
        g.edges_.push_back({e.id, std::min(a->second, b->second), std::max(a->second, b->second)});
    }
    if (g.edges_.size() > 64) throw InputError("more than 64 edges are not supported");
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return id_less(a.id, b.id); });

    g.incidence_.assign(g.vertices_.size(), {});
    for (int e = 0; e < g.num_edges(); ++e) {
        g.incidence_[g.edges_[e].u].push_back(e);
        if (!g.edges_[e].is_loop()) g.incidence_[g.edges_[e].v].push_back(e);
    }
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<int> component_labels(const DecGraph& g, EdgeSet edges)
{
    UnionFind uf(g.num_vertices());
    for (int e : edges.indices()) uf.unite(g.edges()[e].u, g.edges()[e].v);
    std::vector<int> label(g.num_vertices(), -1);
    std::map<int, int> root_label;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto [it, fresh] = root_label.try_emplace(uf.find(v), static_cast<int>(root_label.size()));
        label[v] = it->second;
    }
    return label;
}

int num_components(const DecGraph& g, EdgeSet edges)
{
    const auto label = component_labels(g, edges);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

std::vector<std::vector<int>> connected_components(const DecGraph& g)
{
    const auto label = component_labels(g, g.all_edges());
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (label[v] >= static_cast<int>(blocks.size())) blocks.resize(label[v] + 1);
        blocks[label[v]].push_back(v);
    }
    return blocks;
}

bool is_connected(const DecGraph& g)
{
    return num_components(g, g.all_edges()) <= 1;
}

int first_betti(const DecGraph& g)
{
    return g.num_edges() - g.num_vertices() + num_components(g, g.all_edges());
}

int curve_genus(const DecGraph& g)
{
    int total = first_betti(g);
    for (const auto& v : g.vertices()) total += v.genus;
    const int comps = num_components(g, g.all_edges());
    // Per-component genera add up to total; combine as sum - (h - 1).
    return total - (comps - 1);
}

EdgeSet separating_edges(const DecGraph& g)
{
    // Iterative lowpoint DFS; parallel edges are distinguished by edge index.
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    EdgeSet bridges;
    int timer = 0;
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const int e = inc[f.next++];
                if (e == f.parent_edge || g.edges()[e].is_loop()) continue;
                const int w = g.edges()[e].other(f.v);
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    if (low[done.v] > disc[p.v]) bridges.insert(done.parent_edge);
                }
            }
        }
    }
    return bridges;
}

bool has_separating_edge(const DecGraph& g)
{
    return !separating_edges(g).empty();
}

bool is_stable(const DecGraph& g)
{
    if (!is_connected(g)) throw PreconditionError("not connected");
    if (g.num_vertices() == 1) {
        // The whole curve: smooth of genus >= 2, or genus 1 (smooth or one node),
        // or P^1 itself.
        return true;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.vertices()[v].genus != 0) continue;
        bool has_loop = false;
        for (int e : g.incident(v)) has_loop = has_loop || g.edges()[e].is_loop();
        if (!has_loop && g.valence(v) < 3) return false;
    }
    return true;
}

DecGraph contract_to(const DecGraph& g, EdgeSet s)
{
    if (!s.subset_of(g.all_edges())) throw InputError("unknown edge id in edge set");
    const auto label = component_labels(g, g.all_edges().minus(s));
    const int classes = g.num_vertices() == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> members(classes);
    for (int v = 0; v < g.num_vertices(); ++v) members[label[v]].push_back(v);

    GraphSpec spec;
    std::vector<std::string> class_id(classes);
    for (int c = 0; c < classes; ++c) {
        class_id[c] = g.vertices()[members[c].front()].id;
        const int genus = members[c].size() == 1 ? g.vertices()[members[c].front()].genus : 0;
        spec.vertices.push_back({class_id[c], genus});
    }
    for (int e : s.indices()) {
        const auto& ed = g.edges()[e];
        spec.edges.push_back({ed.id, class_id[label[ed.u]], class_id[label[ed.v]]});
    }
    return build_graph(spec);
}

DecGraph delete_edges(const DecGraph& g, EdgeSet s)
{
    if (!s.subset_of(g.all_edges())) throw InputError("unknown edge id in edge set");
    GraphSpec spec;
    for (const auto& v : g.vertices()) spec.vertices.push_back({v.id, v.genus});
    for (int e = 0; e < g.num_edges(); ++e) {
        if (s.contains(e)) continue;
        const auto& ed = g.edges()[e];
        spec.edges.push_back({ed.id, g.vertices()[ed.u].id, g.vertices()[ed.v].id});
    }
    return build_graph(spec);
}

DecGraph induced_subgraph(const DecGraph& g, const std::vector<int>& keep)
{
    std::vector<bool> in(g.num_vertices(), false);
    GraphSpec spec;
    for (int v : keep) {
        in[v] = true;
        spec.vertices.push_back({g.vertices()[v].id, g.vertices()[v].genus});
    }
    for (const auto& ed : g.edges())
        if (in[ed.u] && in[ed.v])
            spec.edges.push_back({ed.id, g.vertices()[ed.u].id, g.vertices()[ed.v].id});
    return build_graph(spec);
}

bool is_three_edge_connected(const DecGraph& g)
{
    if (!is_connected(g)) throw PreconditionError("not connected");
    if (g.num_vertices() <= 1) return true;
    const int m = g.num_edges();
    const EdgeSet all = g.all_edges();
    for (int a = 0; a < m; ++a) {
        if (num_components(g, all.minus(EdgeSet::single(a))) > 1) return false;
        for (int b = a + 1; b < m; ++b) {
            const EdgeSet rest = all.minus(EdgeSet::single(a) | EdgeSet::single(b));
            if (num_components(g, rest) > 1) return false;
        }
    }
    return true;
}

namespace {

struct VertexSignature {
    int genus;
    int valence;
    int loops;
    auto operator<=>(const VertexSignature&) const = default;
};

std::vector<VertexSignature> signatures(const DecGraph& g)
{
    std::vector<VertexSignature> sig(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        int loops = 0;
        for (int e : g.incident(v)) loops += g.edges()[e].is_loop() ? 1 : 0;
        sig[v] = {g.vertices()[v].genus, g.valence(v), loops};
    }
    return sig;
}

std::vector<std::vector<int>> multiplicities(const DecGraph& g)
{
    std::vector<std::vector<int>> m(g.num_vertices(), std::vector<int>(g.num_vertices(), 0));
    for (const auto& e : g.edges()) {
        ++m[e.u][e.v];
        if (!e.is_loop()) ++m[e.v][e.u];
    }
    return m;
}

}  // namespace

std::uint64_t graph_fingerprint(const DecGraph& g)
{
    const auto sig = signatures(g);
    const auto mult = multiplicities(g);
    std::vector<std::vector<long>> local(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto& l = local[v];
        l = {sig[v].genus, sig[v].valence, sig[v].loops};
        std::vector<long> nb;
        for (int w = 0; w < g.num_vertices(); ++w)
            if (w != v && mult[v][w] > 0)
                nb.push_back(mult[v][w] * 1000003L + sig[w].genus * 1009L + sig[w].valence);
        std::sort(nb.begin(), nb.end());
        l.insert(l.end(), nb.begin(), nb.end());
    }
    std::sort(local.begin(), local.end());
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(g.num_vertices()));
    mix(static_cast<std::uint64_t>(g.num_edges()));
    for (const auto& l : local) {
        mix(l.size());
        for (long x : l) mix(static_cast<std::uint64_t>(x));
    }
    return h;
}

bool graphs_isomorphic(const DecGraph& a, const DecGraph& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    const auto sa = signatures(a);
    const auto sb = signatures(b);
    {
        auto x = sa;
        auto y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    const auto ma = multiplicities(a);
    const auto mb = multiplicities(b);
    const int n = a.num_vertices();
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);

    // Map vertices in BFS order so adjacency checks prune early.
    std::vector<int> order;
    {
        std::vector<bool> seen(n, false);
        for (int r = 0; r < n; ++r) {
            if (seen[r]) continue;
            std::vector<int> queue{r};
            seen[r] = true;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                const int v = queue[i];
                order.push_back(v);
                for (int w = 0; w < n; ++w)
                    if (!seen[w] && ma[v][w] > 0) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
            }
        }
    }

    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
        if (k == order.size()) return true;
        const int v = order[k];
        for (int w = 0; w < n; ++w) {
            if (used[w] || !(sa[v] == sb[w])) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int u = order[j];
                ok = ma[v][u] == mb[w][map[u]];
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(k + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return extend(0);
}

}  // namespace torelli
