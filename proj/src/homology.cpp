#include "torelli/homology.hpp"

#include "torelli/detail/match.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

namespace {

/// Signed fundamental cycles: row per non-tree edge, coefficient per edge.
std::vector<std::vector<int>> signed_cycles(const DecGraph& g, const Orientation& o)
{
    const auto f = spanning_forest(g);
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (f.tree_edges.contains(e)) continue;
        std::vector<int> z(g.num_edges(), 0);
        z[e] = 1;
        // Return from head(e) to tail(e) through the tree.
        int a = o.head(g, e);
        int b = o.tail(g, e);
        std::vector<std::pair<int, int>> down;  // (edge, lower vertex) on the b side
        while (a != b) {
            if (f.depth[a] >= f.depth[b]) {
                const int te = f.parent_edge[a];
                z[te] += o.tail(g, te) == a ? 1 : -1;
                a = f.parent[a];
            } else {
                down.push_back({f.parent_edge[b], b});
                b = f.parent[b];
            }
        }
        for (auto [te, w] : down) z[te] += o.tail(g, te) == w ? -1 : 1;
        out.push_back(std::move(z));
    }
    return out;
}

/// Points (tail, head) of node k under o. Node points are stored with the
/// u-end first, matching the dual graph's nominal direction.
std::pair<int, int> tail_head_points(const CombCurve& x, const Orientation& o, int k)
{
    const auto& nd = x.node(k);
    return ((o.reversed >> k) & 1U) ? std::pair{nd[1], nd[0]} : std::pair{nd[0], nd[1]};
}

}  // namespace

EtaMatrix eta_matrix(const CombCurve& x, const Orientation& o)
{
    if (!o.deleted.empty()) throw PreconditionError("orientation must cover every edge");
    const auto g = dual_graph(x);
    EtaMatrix m;
    m.orientation = o;
    m.cycles = signed_cycles(g, o);
    for (int p = 0; p < x.num_points(); ++p) m.columns.push_back(x.point_id(p));
    for (const auto& z : m.cycles) {
        std::vector<int> row(x.num_points(), 0);
        for (int k = 0; k < g.num_edges(); ++k) {
            if (z[k] == 0) continue;
            const auto [s, t] = tail_head_points(x, o, k);
            row[t] += z[k];
            row[s] -= z[k];
        }
        m.rows.push_back(std::move(row));
    }
    if (!rows_have_degree_zero(x, m)) throw std::logic_error("eta row of nonzero degree");
    return m;
}

bool rows_have_degree_zero(const CombCurve& x, const EtaMatrix& m)
{
    for (const auto& row : m.rows) {
        std::vector<int> sum(x.num_components(), 0);
        for (int p = 0; p < x.num_points(); ++p) sum[x.component_of(p)] += row[p];
        if (std::any_of(sum.begin(), sum.end(), [](int s) { return s != 0; })) return false;
    }
    return true;
}

namespace {

using Column = std::vector<int>;

Column negate(Column c)
{
    for (int& v : c) v = -v;
    return c;
}

/// Checks one point map: reads the chain in the target edge space and tries
/// to match it to source edges up to sign.
bool completes(const CombCurve& x, const CombCurve& y, const DecGraph& gx, const DecGraph& gy,
               const std::vector<Column>& xcol, const EtaMatrix& ey, const SignVector& alpha,
               const std::vector<int>& phi, int rows)
{
    // Column of phi_D alpha eta_X at each point of y.
    std::vector<Column> m(y.num_points(), Column(rows, 0));
    for (int p = 0; p < x.num_points(); ++p) {
        const int k = x.node_of(p);
        const int sign = x.node(k)[1] == p ? 1 : -1;  // head point under the default orientation
        for (int r = 0; r < rows; ++r) m[phi[p]][r] = alpha[x.component_of(p)] * sign * xcol[k][r];
    }
    std::vector<Column> d(gy.num_edges());
    for (int k = 0; k < gy.num_edges(); ++k) {
        const auto [s, t] = tail_head_points(y, ey.orientation, k);
        if (m[s] != negate(m[t])) return false;
        d[k] = m[t];
    }
    EdgeBijection eps(gx.num_edges(), -1);
    std::vector<bool> used(gx.num_edges(), false);
    for (int k = 0; k < gy.num_edges(); ++k) {
        const Column neg = negate(d[k]);
        int match = -1;
        for (int e = 0; e < gx.num_edges() && match == -1; ++e)
            if (!used[e] && (xcol[e] == d[k] || xcol[e] == neg)) match = e;
        if (match == -1) return false;
        used[match] = true;
        eps[match] = k;
    }
    return is_cyclic_bijection(gx, gy, eps);
}

}  // namespace

bool is_t_equivalent(const CombCurve& x, const CombCurve& y, const Limits& limits, const Orientation& y_orientation)
{
    const auto gx = dual_graph(x);
    const auto gy = dual_graph(y);
    require_connected_bridge_free(gx);
    require_connected_bridge_free(gy);
    if (!x.free_points().empty() || !y.free_points().empty())
        throw PreconditionError("curve has free points");
    if (x.num_components() > 21) throw CapExceeded("too many components for the sign search");
    if (!cyclically_equivalent(gx, gy, limits)) return false;

    const auto ex = eta_matrix(x);
    const auto ey = eta_matrix(y, y_orientation);
    const int rows = static_cast<int>(ex.rows.size());
    std::vector<Column> xcol(gx.num_edges(), Column(rows, 0));
    for (int r = 0; r < rows; ++r)
        for (int e = 0; e < gx.num_edges(); ++e) xcol[e][r] = ex.cycles[r][e];

    const int n = x.num_components();
    // A global sign change is absorbed by the edge signs, so fix the first sign.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << std::max(n - 1, 0)); ++mask) {
        SignVector alpha(n, 1);
        for (int c = 1; c < n; ++c)
            if ((mask >> (c - 1)) & 1U) alpha[c] = -1;
        auto column_at = [&](int p) {
            const int k = x.node_of(p);
            const int sign = (x.node(k)[1] == p ? 1 : -1) * alpha[x.component_of(p)];
            return sign > 0 ? xcol[k] : negate(xcol[k]);
        };
        detail::MatchProblem pr;
        pr.src = &x;
        pr.dst = &y;
        pr.src_block.assign(x.num_points(), -1);
        pr.dst_block = detail::node_blocks(y);
        pr.pair_ok = [&](int a, int b) { return column_at(a) == negate(column_at(b)); };
        const bool found = detail::for_each_match(pr, [&](const std::vector<int>& phi) {
            return completes(x, y, gx, gy, xcol, ey, alpha, phi, rows);
        });
        if (found) return true;
    }
    return false;
}

C1DecompositionReport c1_homology_decomposition(const DecGraph& g)
{
    C1DecompositionReport rep;
    rep.partition = c1_partition(g);
    rep.cycles = signed_cycles(g, Orientation{});
    for (const auto& z : rep.cycles) {
        std::vector<std::vector<int>> pieces;
        std::vector<int> total(g.num_edges(), 0);
        bool any = false;
        for (auto s : rep.partition) {
            std::vector<int> piece(g.num_edges(), 0);
            for (int e : s.indices()) piece[e] = z[e];
            // Boundary in the contraction to S: vertices merged along the other edges.
            const auto label = component_labels(g, g.all_edges().minus(s));
            std::vector<int> boundary(g.num_vertices(), 0);
            for (int e : s.indices()) {
                boundary[label[g.edges()[e].v]] += piece[e];
                boundary[label[g.edges()[e].u]] -= piece[e];
            }
            if (std::any_of(boundary.begin(), boundary.end(), [](int b) { return b != 0; }))
                rep.pieces_closed = false;
            for (int e = 0; e < g.num_edges(); ++e) {
                total[e] += piece[e];
                any = any || piece[e] != 0;
            }
            pieces.push_back(std::move(piece));
        }
        if (total != z) rep.sums_match = false;
        if (!any) rep.injective = false;
        rep.pieces.push_back(std::move(pieces));
    }
    return rep;
}

}  // namespace torelli
