#include "torelli/orientation.hpp"

#include "torelli/c1.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torelli {

std::string format_multidegree(const DecGraph& g, const Multidegree& d)
{
    std::string out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v > 0) out += ',';
        out += g.vertices()[v].id + ":" + std::to_string(d[v]);
    }
    return out;
}

std::string format_degree_tuple(const Multidegree& d)
{
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(d[i]);
    }
    return out + ")";
}

std::vector<int> outdegrees(const DecGraph& g, const Orientation& o)
{
    std::vector<int> out(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
        if (!o.deleted.contains(e)) ++out[o.tail(g, e)];
    return out;
}

namespace {

std::vector<bool> reach(const DecGraph& g, const Orientation& o, int start, bool forward)
{
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e : g.incident(v)) {
            if (o.deleted.contains(e) || g.edges()[e].is_loop()) continue;
            const int from = forward ? o.tail(g, e) : o.head(g, e);
            const int to = forward ? o.head(g, e) : o.tail(g, e);
            if (from == v && !seen[to]) {
                seen[to] = true;
                stack.push_back(to);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_totally_cyclic(const DecGraph& g, const Orientation& o)
{
    const auto label = component_labels(g, g.all_edges().minus(o.deleted));
    std::vector<bool> done(g.num_vertices(), false);
    for (int root = 0; root < g.num_vertices(); ++root) {
        if (done[root]) continue;
        const auto fwd = reach(g, o, root, true);
        const auto bwd = reach(g, o, root, false);
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (label[v] != label[root]) continue;
            if (!fwd[v] || !bwd[v]) return false;
            done[v] = true;
        }
    }
    return true;
}

std::vector<Orientation> totally_cyclic_orientations(const DecGraph& g, EdgeSet s,
                                                     const Limits& limits)
{
    if (g.num_edges() > limits.max_edges) throw CapExceeded("too many edges to enumerate orientations");
    if (has_separating_edge(delete_edges(g, s))) return {};
    std::vector<int> free_edges;
    for (int e = 0; e < g.num_edges(); ++e)
        if (!s.contains(e) && !g.edges()[e].is_loop()) free_edges.push_back(e);
    const int k = static_cast<int>(free_edges.size());
    std::vector<Orientation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Orientation o{s, 0};
        // The first free edge is the most significant position.
        for (int i = 0; i < k; ++i)
            if ((mask >> (k - 1 - i)) & 1U) o.reversed |= std::uint64_t{1} << free_edges[i];
        if (is_totally_cyclic(g, o)) out.push_back(o);
    }
    return out;
}

Multidegree multidegree_of(const DecGraph& g, const Orientation& o)
{
    auto d = outdegrees(g, o);
    for (int v = 0; v < g.num_vertices(); ++v) d[v] += g.vertices()[v].genus - 1;
    return d;
}

namespace {

enum class Balance { Unstable, SemistableOnly, Stable };

Balance classify(const DecGraph& y, const Multidegree& d)
{
    const int n = y.num_vertices();
    if (static_cast<int>(d.size()) != n) throw InputError("multidegree has wrong length");
    int sum = 0;
    for (int x : d) sum += x;
    if (sum != curve_genus(y) - 1) throw InputError("degree-sum mismatch: multidegree does not sum to g-1");
    if (n > 24) throw CapExceeded("too many vertices for subcurve enumeration");

    bool stable = true;
    for (std::uint32_t z = 1; z < (std::uint32_t{1} << n); ++z) {
        // g_Z - 1 = sum of genera + internal edges - |Z| for any vertex subset.
        int bound = 0;
        int degree = 0;
        for (int v = 0; v < n; ++v)
            if ((z >> v) & 1U) {
                bound += y.vertices()[v].genus - 1;
                degree += d[v];
            }
        bool crossing = false;
        for (const auto& e : y.edges()) {
            const bool iu = (z >> e.u) & 1U;
            const bool iv = (z >> e.v) & 1U;
            if (iu && iv) ++bound;
            if (iu != iv) crossing = true;
        }
        if (bound > degree) return Balance::Unstable;
        if ((bound == degree) == crossing) stable = false;
    }
    return stable ? Balance::Stable : Balance::SemistableOnly;
}

}  // namespace

bool is_semistable(const DecGraph& y, const Multidegree& d)
{
    return classify(y, d) != Balance::Unstable;
}

bool is_stable(const DecGraph& y, const Multidegree& d)
{
    return classify(y, d) == Balance::Stable;
}

std::vector<Multidegree> stable_multidegrees(const DecGraph& y, const Limits& limits)
{
    std::set<Multidegree> out;
    for (const auto& o : totally_cyclic_orientations(y, EdgeSet{}, limits)) out.insert(multidegree_of(y, o));
    return {out.begin(), out.end()};
}

OrientationClass orientation_class(const DecGraph& g, const Orientation& o)
{
    return {o.deleted, outdegrees(g, o)};
}

namespace {

bool restricts_to(const Orientation& upper, const Orientation& lower)
{
    if (!upper.deleted.subset_of(lower.deleted)) return false;
    const std::uint64_t kept = ~lower.deleted.bits();
    return ((upper.reversed ^ lower.reversed) & kept) == 0;
}

std::string orientation_id(const DecGraph& g, const Orientation& o)
{
    std::string dirs;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (o.deleted.contains(e)) continue;
        if (!dirs.empty()) dirs += ',';
        dirs += g.edges()[e].id + ":" + g.vertices()[o.tail(g, e)].id + ">" + g.vertices()[o.head(g, e)].id;
    }
    return "S:" + format_edge_set(g, o.deleted) + "|o:[" + dirs + "]";
}

}  // namespace

OrientationPoset op_poset(const DecGraph& g, const Limits& limits)
{
    OrientationPoset out;
    for (auto s : sp_elements(g, limits))
        for (const auto& o : totally_cyclic_orientations(g, s, limits)) out.elements.push_back(o);
    const int n = static_cast<int>(out.elements.size());
    std::vector<std::string> ids;
    for (const auto& o : out.elements) ids.push_back(orientation_id(g, o));
    std::vector<std::vector<char>> geq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) geq[i][j] = restricts_to(out.elements[i], out.elements[j]) ? 1 : 0;
    auto labels = ids;
    out.poset = Poset(std::move(ids), std::move(labels), std::move(geq));
    return out;
}

ClassPoset opbar_poset(const DecGraph& g, const Limits& limits)
{
    const auto op = op_poset(g, limits);
    ClassPoset out;
    std::vector<int> class_of(op.elements.size());
    for (std::size_t i = 0; i < op.elements.size(); ++i) {
        const auto c = orientation_class(g, op.elements[i]);
        auto it = std::find(out.classes.begin(), out.classes.end(), c);
        if (it == out.classes.end()) {
            out.classes.push_back(c);
            out.representatives.push_back(op.elements[i]);
            class_of[i] = static_cast<int>(out.classes.size()) - 1;
        } else {
            class_of[i] = static_cast<int>(it - out.classes.begin());
        }
    }
    const int n = static_cast<int>(out.classes.size());
    std::vector<std::vector<char>> geq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < op.elements.size(); ++i)
        for (std::size_t j = 0; j < op.elements.size(); ++j)
            if (op.poset.geq(static_cast<int>(i), static_cast<int>(j))) geq[class_of[i]][class_of[j]] = 1;
    std::vector<std::string> ids;
    std::vector<std::string> labels;
    for (const auto& c : out.classes) {
        ids.push_back("S:" + format_edge_set(g, c.support) + "|d+:" + format_degree_tuple(c.outdegree));
        labels.push_back(ids.back());
    }
    out.poset = Poset(std::move(ids), std::move(labels), std::move(geq));
    return out;
}

}  // namespace torelli
