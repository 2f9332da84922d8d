#include "torelli/curve.hpp"

#include "torelli/c1.hpp"
#include "torelli/detail/match.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace torelli {

// ---------------------------------------------------------------- groups

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

bool is_permutation_of(const std::vector<int>& p, int n)
{
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

}  // namespace

SymmetryGroup SymmetryGroup::full(int degree)
{
    SymmetryGroup g;
    g.degree_ = degree;
    g.full_ = true;
    return g;
}

SymmetryGroup SymmetryGroup::generated(int degree, const std::vector<std::vector<int>>& generators,
                                       std::size_t max_order)
{
    for (const auto& s : generators)
        if (!is_permutation_of(s, degree)) throw InputError("symmetry is not a permutation of the points");
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& s : generators) {
            std::vector<int> next(degree);
            for (int k = 0; k < degree; ++k) next[k] = s[queue[head][k]];
            if (seen.insert(next).second) {
                if (seen.size() > max_order) throw CapExceeded("symmetry group too large");
                queue.push_back(std::move(next));
            }
        }
    }
    if (seen.size() == factorial(degree)) return full(degree);
    SymmetryGroup g;
    g.degree_ = degree;
    g.elements_.assign(seen.begin(), seen.end());
    return g;
}

std::uint64_t SymmetryGroup::order() const
{
    return full_ ? factorial(degree_) : elements_.size();
}

bool SymmetryGroup::contains(const std::vector<int>& perm) const
{
    if (!is_permutation_of(perm, degree_)) return false;
    return full_ || std::binary_search(elements_.begin(), elements_.end(), perm);
}

SymmetryGroup SymmetryGroup::restrict_to(const std::vector<int>& keep) const
{
    const int n = static_cast<int>(keep.size());
    if (full_) return full(n);
    std::vector<int> slot(degree_, -1);
    for (int i = 0; i < n; ++i) slot[keep[i]] = i;
    std::set<std::vector<int>> out;
    for (const auto& g : elements_) {
        std::vector<int> r(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            r[i] = slot[g[keep[i]]];
            ok = r[i] >= 0;
        }
        if (ok) out.insert(std::move(r));
    }
    SymmetryGroup res;
    res.degree_ = n;
    if (out.size() == factorial(n)) return full(n);
    res.elements_.assign(out.begin(), out.end());
    return res;
}

bool operator==(const SymmetryGroup& a, const SymmetryGroup& b)
{
    return a.degree_ == b.degree_ && a.full_ == b.full_ && a.elements_ == b.elements_;
}

// ---------------------------------------------------------------- curves

CombCurve CombCurve::assemble(std::vector<MarkedComponent> components,
                              const std::vector<std::pair<std::string, std::string>>& nodes)
{
    std::sort(components.begin(), components.end(),
              [](const MarkedComponent& a, const MarkedComponent& b) { return id_less(a.id, b.id); });
    CombCurve x;
    std::map<std::string, int> index;
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (c > 0 && components[c].id == components[c - 1].id)
            throw InputError("duplicate id: " + components[c].id);
        if (!components[c].group)
            components[c].group = std::make_shared<const SymmetryGroup>(
                SymmetryGroup::full(static_cast<int>(components[c].points.size())));
        x.first_point_.push_back(static_cast<int>(x.points_.size()));
        for (std::size_t k = 0; k < components[c].points.size(); ++k) {
            if (!index.emplace(components[c].points[k], static_cast<int>(x.points_.size())).second)
                throw InputError("duplicate id: " + components[c].points[k]);
            x.points_.push_back({static_cast<int>(c), static_cast<int>(k)});
        }
    }
    x.components_ = std::move(components);
    x.partner_.assign(x.points_.size(), -1);
    x.node_of_.assign(x.points_.size(), -1);

    std::vector<std::pair<std::string, std::array<int, 2>>> named;
    for (const auto& [a, b] : nodes) {
        auto ia = index.find(a);
        if (ia == index.end()) throw InputError("unknown point: " + a);
        auto ib = index.find(b);
        if (ib == index.end()) throw InputError("unknown point: " + b);
        int p = ia->second;
        int q = ib->second;
        if (p == q) throw InputError("point glued to itself: " + a);
        if (x.partner_[p] != -1) throw InputError("point in two nodes: " + a);
        if (x.partner_[q] != -1) throw InputError("point in two nodes: " + b);
        if (q < p) std::swap(p, q);
        x.partner_[p] = q;
        x.partner_[q] = p;
        named.push_back({x.point_id(p) + "=" + x.point_id(q), {p, q}});
    }
    std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) { return id_less(a.first, b.first); });
    for (std::size_t k = 0; k < named.size(); ++k) {
        x.node_ids_.push_back(named[k].first);
        x.nodes_.push_back(named[k].second);
        x.node_of_[named[k].second[0]] = static_cast<int>(k);
        x.node_of_[named[k].second[1]] = static_cast<int>(k);
    }
    return x;
}

const std::string& CombCurve::point_id(int p) const
{
    return components_[points_[p].component].points[points_[p].position];
}

int CombCurve::point_index(const std::string& id) const
{
    for (int p = 0; p < num_points(); ++p)
        if (point_id(p) == id) return p;
    throw InputError("unknown point: " + id);
}

std::vector<int> CombCurve::free_points() const
{
    std::vector<int> out;
    for (int p = 0; p < num_points(); ++p)
        if (partner_[p] == -1) out.push_back(p);
    return out;
}

CombCurve build_curve(const CurveSpec& spec)
{
    std::vector<MarkedComponent> comps;
    for (const auto& cs : spec.components) {
        if (cs.genus < 0) throw InputError("negative genus: " + cs.id);
        const int n = static_cast<int>(cs.points.size());
        std::vector<std::vector<int>> gens;
        for (const auto& sym : cs.symmetries) {
            if (static_cast<int>(sym.size()) != n)
                throw InputError("symmetry of " + cs.id + " has wrong length");
            std::vector<int> perm;
            for (const auto& img : sym) {
                auto it = std::find(cs.points.begin(), cs.points.end(), img);
                if (it == cs.points.end()) throw InputError("symmetry of " + cs.id + " names unknown point: " + img);
                perm.push_back(static_cast<int>(it - cs.points.begin()));
            }
            gens.push_back(std::move(perm));
        }
        auto group = SymmetryGroup::generated(n, gens);
        // Curves of genus at most one have automorphisms realizing any
        // permutation of the marked points relevant here.
        if (cs.genus <= 1) group = SymmetryGroup::full(n);
        comps.push_back({cs.id, cs.genus, cs.iso_label.empty() ? cs.id : cs.iso_label, cs.points,
                         std::make_shared<const SymmetryGroup>(std::move(group))});
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const auto& a = comps[i];
            const auto& b = comps[j];
            if (a.iso_label != b.iso_label || (a.genus == 0 && b.genus == 0)) continue;
            if (a.genus != b.genus || a.points.size() != b.points.size() || !(*a.group == *b.group))
                throw InputError("inconsistent iso_label: " + a.iso_label);
        }
    auto x = CombCurve::assemble(std::move(comps), spec.nodes);
    const auto loose = x.free_points();
    if (!loose.empty()) throw InputError("point in no node: " + x.point_id(loose.front()));
    return x;
}

DecGraph dual_graph(const CombCurve& x)
{
    GraphSpec spec;
    for (const auto& c : x.components()) spec.vertices.push_back({c.id, c.genus});
    for (int k = 0; k < x.num_nodes(); ++k)
        spec.edges.push_back({x.node_id(k), x.components()[x.component_of(x.node(k)[0])].id,
                              x.components()[x.component_of(x.node(k)[1])].id});
    return build_graph(spec);
}

int curve_genus(const CombCurve& x)
{
    return curve_genus(dual_graph(x));
}

namespace {

std::vector<std::pair<std::string, std::string>> node_pairs(const CombCurve& x, EdgeSet drop = {})
{
    std::vector<std::pair<std::string, std::string>> out;
    for (int k = 0; k < x.num_nodes(); ++k)
        if (!drop.contains(k)) out.push_back({x.point_id(x.node(k)[0]), x.point_id(x.node(k)[1])});
    return out;
}

std::vector<int> component_label_of(const CombCurve& x, EdgeSet drop = {})
{
    const auto g = dual_graph(x);
    return component_labels(g, g.all_edges().minus(drop));
}

bool has_loop(const CombCurve& x, int c)
{
    for (int k = 0; k < x.num_nodes(); ++k)
        if (x.component_of(x.node(k)[0]) == c && x.component_of(x.node(k)[1]) == c) return true;
    return false;
}

}  // namespace

CombCurve normalize_at(const CombCurve& x, EdgeSet nodes)
{
    return CombCurve::assemble(x.components(), node_pairs(x, nodes));
}

CombCurve subcurve(const CombCurve& x, const std::vector<int>& components)
{
    std::vector<bool> in(x.num_components(), false);
    for (int c : components) in[c] = true;
    std::vector<MarkedComponent> comps;
    for (int c : components) comps.push_back(x.components()[c]);
    std::vector<std::pair<std::string, std::string>> nodes;
    for (int k = 0; k < x.num_nodes(); ++k) {
        const auto [p, q] = x.node(k);
        if (in[x.component_of(p)] && in[x.component_of(q)]) nodes.push_back({x.point_id(p), x.point_id(q)});
    }
    return CombCurve::assemble(std::move(comps), nodes);
}

std::vector<CombCurve> connected_parts(const CombCurve& x)
{
    const auto label = component_label_of(x);
    const int n = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> blocks(n);
    for (int c = 0; c < x.num_components(); ++c) blocks[label[c]].push_back(c);
    std::vector<CombCurve> out;
    for (const auto& b : blocks) out.push_back(subcurve(x, b));
    return out;
}

CombCurve forget_free_points(const CombCurve& x)
{
    std::vector<MarkedComponent> comps;
    for (int c = 0; c < x.num_components(); ++c) {
        auto mc = x.components()[c];
        std::vector<int> keep;
        std::vector<std::string> pts;
        for (int k = 0; k < static_cast<int>(mc.points.size()); ++k)
            if (x.partner(x.first_point(c) + k) != -1) {
                keep.push_back(k);
                pts.push_back(mc.points[k]);
            }
        if (keep.size() != mc.points.size()) {
            mc.group = std::make_shared<const SymmetryGroup>(mc.group->restrict_to(keep));
            mc.points = std::move(pts);
        }
        comps.push_back(std::move(mc));
    }
    return CombCurve::assemble(std::move(comps), node_pairs(x));
}

std::vector<std::pair<int, int>> c1_involution(const CombCurve& x, EdgeSet s)
{
    const auto g = dual_graph(x);
    const auto part = c1_partition(g);
    if (std::find(part.begin(), part.end(), s) == part.end())
        throw PreconditionError("not a C1-set: " + format_edge_set(g, s));
    const auto label = component_labels(g, g.all_edges().minus(s));
    std::map<int, std::vector<int>> by_label;
    for (int k : s.indices())
        for (int p : x.node(k)) by_label[label[x.component_of(p)]].push_back(p);
    std::vector<std::pair<int, int>> out;
    for (auto& [l, pts] : by_label) {
        std::sort(pts.begin(), pts.end());
        out.push_back({pts[0], pts[1]});
    }
    return out;
}

std::vector<int> exceptional_components(const CombCurve& x)
{
    std::vector<int> out;
    if (x.num_components() <= 1) return out;
    for (int c = 0; c < x.num_components(); ++c) {
        const auto& mc = x.components()[c];
        if (mc.genus == 0 && mc.points.size() <= 2 && !has_loop(x, c)) out.push_back(c);
    }
    return out;
}

CombCurve stabilize(const CombCurve& x)
{
    if (!is_connected(dual_graph(x))) throw PreconditionError("not connected");
    if (!x.free_points().empty()) throw PreconditionError("curve has free points");
    CombCurve cur = x;
    for (;;) {
        const auto exc = exceptional_components(cur);
        if (exc.empty()) return cur;
        const int c = exc.front();
        const int first = cur.first_point(c);
        const int n = static_cast<int>(cur.components()[c].points.size());

        std::vector<MarkedComponent> comps;
        std::vector<std::pair<std::string, std::string>> nodes;
        for (int k = 0; k < cur.num_nodes(); ++k) {
            const auto [p, q] = cur.node(k);
            if (cur.component_of(p) != c && cur.component_of(q) != c)
                nodes.push_back({cur.point_id(p), cur.point_id(q)});
        }
        int dropped = -1;
        if (n == 2) {
            nodes.push_back({cur.point_id(cur.partner(first)), cur.point_id(cur.partner(first + 1))});
        } else if (n == 1) {
            dropped = cur.partner(first);
        }
        for (int d = 0; d < cur.num_components(); ++d) {
            if (d == c) continue;
            auto mc = cur.components()[d];
            if (dropped != -1 && cur.component_of(dropped) == d) {
                const int pos = cur.point(dropped).position;
                std::vector<int> keep;
                for (int k = 0; k < static_cast<int>(mc.points.size()); ++k)
                    if (k != pos) keep.push_back(k);
                mc.group = std::make_shared<const SymmetryGroup>(mc.group->restrict_to(keep));
                mc.points.erase(mc.points.begin() + pos);
            }
            comps.push_back(std::move(mc));
        }
        cur = CombCurve::assemble(std::move(comps), nodes);
    }
}

EdgeSet separating_nodes(const CombCurve& x)
{
    return separating_edges(dual_graph(x));
}

TildeProfile tilde_profile(const CombCurve& x)
{
    TildeProfile t;
    const EdgeSet sep = separating_nodes(x);
    t.separating = sep.size();
    for (const auto& part : connected_parts(normalize_at(x, sep))) {
        const int gi = curve_genus(part);
        t.genera.push_back(gi);
        ++t.gamma;
        if (gi == 0) ++t.gamma0;
        if (gi == 1) ++t.gamma1;
        if (gi > 0) {
            ++t.gamma_plus;
            t.exceptional += static_cast<int>(exceptional_components(forget_free_points(part)).size());
        }
    }
    return t;
}

namespace {

void require_stable_genus2(const CombCurve& x)
{
    const auto g = dual_graph(x);
    if (!is_connected(g)) throw PreconditionError("not connected");
    if (curve_genus(g) < 2) throw PreconditionError("genus below 2");
    if (!is_stable(g)) throw PreconditionError("not stable");
}

void require_fiber_input(const CombCurve& x)
{
    const auto g = dual_graph(x);
    require_connected_bridge_free(g);
    if (!is_stable(g)) throw PreconditionError("not stable");
    if (!x.free_points().empty()) throw PreconditionError("curve has free points");
}

}  // namespace

int fiber_dimension(const CombCurve& x)
{
    require_stable_genus2(x);
    const auto t = tilde_profile(x);
    return 2 * t.gamma_plus - t.gamma1 - 2;
}

int topotype_dimension(const CombCurve& x)
{
    require_stable_genus2(x);
    const auto t = tilde_profile(x);
    return 2 * t.separating - 3 * t.gamma0 - t.gamma1 - t.exceptional;
}

// ---------------------------------------------------------------- isomorphism

namespace {

std::string curve_invariant(const CombCurve& x)
{
    auto key = [&](int p) {
        const auto& c = x.components()[x.component_of(p)];
        return std::to_string(c.genus) + "/" + (c.genus > 0 ? c.iso_label : std::string()) + "/" +
               std::to_string(c.points.size());
    };
    std::vector<std::string> items;
    for (int k = 0; k < x.num_nodes(); ++k) {
        auto a = key(x.node(k)[0]);
        auto b = key(x.node(k)[1]);
        if (b < a) std::swap(a, b);
        items.push_back(a + "~" + b);
    }
    for (int p : x.free_points()) items.push_back("*" + key(p));
    for (const auto& c : x.components()) items.push_back("#" + std::to_string(c.genus) + "/" + c.iso_label);
    std::sort(items.begin(), items.end());
    std::string out = std::to_string(graph_fingerprint(dual_graph(x)));
    for (const auto& s : items) out += "|" + s;
    return out;
}

}  // namespace

bool curve_isomorphic(const CombCurve& x, const CombCurve& y)
{
    detail::MatchProblem pr;
    pr.src = &x;
    pr.dst = &y;
    pr.src_block = detail::node_blocks(x);
    pr.dst_block = detail::node_blocks(y);
    return detail::for_each_match(pr, [](const std::vector<int>&) { return true; });
}

namespace {

std::vector<int> c1_blocks(const CombCurve& x, std::vector<int>* sizes)
{
    const auto g = dual_graph(x);
    const auto part = c1_partition(g);
    std::vector<int> block(x.num_points(), -1);
    for (std::size_t b = 0; b < part.size(); ++b) {
        for (int k : part[b].indices())
            for (int p : x.node(k)) block[p] = static_cast<int>(b);
        if (sizes) sizes->push_back(part[b].size());
    }
    return block;
}

std::optional<std::vector<int>> c1_witness_connected(const CombCurve& x, const CombCurve& y)
{
    std::vector<int> sx;
    std::vector<int> sy;
    detail::MatchProblem pr;
    pr.src = &x;
    pr.dst = &y;
    pr.src_block = c1_blocks(x, &sx);
    pr.dst_block = c1_blocks(y, &sy);
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
    std::optional<std::vector<int>> found;
    detail::for_each_match(pr, [&](const std::vector<int>& m) {
        found = m;
        return true;
    });
    return found;
}

std::vector<int> lift_points(const CombCurve& part, const CombCurve& whole)
{
    std::vector<int> out;
    for (int p = 0; p < part.num_points(); ++p) out.push_back(whole.point_index(part.point_id(p)));
    return out;
}

}  // namespace

std::optional<std::vector<int>> c1_equivalence_witness(const CombCurve& x, const CombCurve& y,
                                                       const Limits&)
{
    const auto px = connected_parts(x);
    const auto py = connected_parts(y);
    if (px.size() != py.size()) return std::nullopt;
    const int n = static_cast<int>(px.size());
    for (const auto& part : px) require_connected_bridge_free(dual_graph(part));
    for (const auto& part : py) require_connected_bridge_free(dual_graph(part));
    if (n == 1) return c1_witness_connected(x, y);

    std::vector<std::vector<std::optional<std::optional<std::vector<int>>>>> memo(
        n, std::vector<std::optional<std::optional<std::vector<int>>>>(n));
    auto pair_witness = [&](int i, int j) -> const std::optional<std::vector<int>>& {
        if (!memo[i][j]) memo[i][j] = c1_witness_connected(px[i], py[j]);
        return *memo[i][j];
    };
    std::vector<int> assign(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || !pair_witness(i, j)) continue;
            used[j] = true;
            assign[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<int> map(x.num_points(), -1);
    for (int i = 0; i < n; ++i) {
        const auto& local = *pair_witness(i, assign[i]);
        const auto from = lift_points(px[i], x);
        const auto to = lift_points(py[assign[i]], y);
        for (std::size_t p = 0; p < local.size(); ++p) map[from[p]] = to[local[p]];
    }
    return map;
}

bool is_c1_equivalent(const CombCurve& x, const CombCurve& y, const Limits& limits)
{
    return c1_equivalence_witness(x, y, limits).has_value();
}

// ---------------------------------------------------------------- fibers

std::uint64_t fiber_bound(const CombCurve& x)
{
    std::uint64_t b = 1;
    for (auto s : c1_partition(dual_graph(x))) {
        const int h = s.size();
        b = sat_mul(b, sat_mul(std::uint64_t{1} << std::min(h - 1, 63), factorial(h - 1)));
    }
    return b;
}

std::uint64_t fiber_bound_global(const CombCurve& x)
{
    const int g = curve_genus(x);
    if (g < 2) throw PreconditionError("genus below 2");
    const int e = static_cast<int>(exceptional_components(x).size());
    const std::uint64_t f = factorial(g - 2 + e);
    return f == std::numeric_limits<std::uint64_t>::max() ? f : f / 2 + f % 2;
}

namespace {

/// Gluing points of a C1-set S, one pair per component of the normalization at S.
std::vector<std::pair<int, int>> gluing_pairs(const CombCurve& x, EdgeSet s)
{
    const auto label = component_label_of(x, s);
    std::map<int, std::vector<int>> by_label;
    for (int k : s.indices())
        for (int p : x.node(k)) by_label[label[x.component_of(p)]].push_back(p);
    std::vector<std::pair<int, int>> out;
    for (auto& [l, pts] : by_label) {
        std::sort(pts.begin(), pts.end());
        out.push_back({pts[0], pts[1]});
    }
    return out;
}

using NodeList = std::vector<std::pair<int, int>>;

/// Distinct cyclic regluings of the pairs: the first piece is fixed, the rest
/// are ordered and each piece is entered through one of its two points.
std::vector<NodeList> regluings(const std::vector<std::pair<int, int>>& pairs)
{
    const int h = static_cast<int>(pairs.size());
    std::set<NodeList> seen;
    std::vector<int> order(h);
    std::iota(order.begin(), order.end(), 0);
    do {
        for (std::uint32_t flips = 0; flips < (std::uint32_t{1} << h); ++flips) {
            NodeList nodes;
            for (int k = 0; k < h; ++k) {
                const int a = order[k];
                const int b = order[(k + 1) % h];
                const int out_pt = ((flips >> a) & 1U) ? pairs[a].first : pairs[a].second;
                const int in_pt = ((flips >> b) & 1U) ? pairs[b].second : pairs[b].first;
                nodes.push_back({std::min(out_pt, in_pt), std::max(out_pt, in_pt)});
            }
            std::sort(nodes.begin(), nodes.end());
            seen.insert(std::move(nodes));
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<CombCurve> enumerate_fiber(const CombCurve& x, const Limits& limits)
{
    require_fiber_input(x);
    if (fiber_bound(x) > static_cast<std::uint64_t>(limits.max_fiber))
        throw CapExceeded("fiber bound exceeds max_fiber");

    NodeList kept;
    std::vector<std::vector<NodeList>> options;
    for (auto s : c1_partition(dual_graph(x))) {
        if (s.size() < 2) {
            const auto [p, q] = x.node(s.indices().front());
            kept.push_back({p, q});
            continue;
        }
        options.push_back(regluings(gluing_pairs(x, s)));
    }

    std::vector<CombCurve> reps{x};
    std::map<std::string, std::vector<int>> buckets;
    buckets[curve_invariant(x)].push_back(0);
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
        std::vector<std::pair<std::string, std::string>> nodes;
        for (auto [p, q] : kept) nodes.push_back({x.point_id(p), x.point_id(q)});
        for (std::size_t i = 0; i < options.size(); ++i)
            for (auto [p, q] : options[i][pick[i]]) nodes.push_back({x.point_id(p), x.point_id(q)});
        auto y = CombCurve::assemble(x.components(), nodes);
        auto& bucket = buckets[curve_invariant(y)];
        const bool dup = std::any_of(bucket.begin(), bucket.end(),
                                     [&](int r) { return curve_isomorphic(reps[r], y); });
        if (!dup) {
            bucket.push_back(static_cast<int>(reps.size()));
            reps.push_back(std::move(y));
        }
        std::size_t i = 0;
        while (i < options.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == options.size()) break;
    }
    return reps;
}

namespace {

bool has_swap(const CombCurve& y, int p, int q)
{
    detail::MatchProblem pr;
    pr.src = &y;
    pr.dst = &y;
    pr.src_block = detail::node_blocks(y);
    pr.dst_block = pr.src_block;
    pr.fixed = {{p, q}, {q, p}};
    return detail::for_each_match(pr, [](const std::vector<int>&) { return true; });
}

bool marked_isomorphic(const CombCurve& a, std::pair<int, int> pa, const CombCurve& b, std::pair<int, int> pb)
{
    for (int flip = 0; flip < 2; ++flip) {
        detail::MatchProblem pr;
        pr.src = &a;
        pr.dst = &b;
        pr.src_block = detail::node_blocks(a);
        pr.dst_block = detail::node_blocks(b);
        pr.fixed = flip == 0 ? std::vector<std::pair<int, int>>{{pa.first, pb.first}, {pa.second, pb.second}}
                             : std::vector<std::pair<int, int>>{{pa.first, pb.second}, {pa.second, pb.first}};
        if (detail::for_each_match(pr, [](const std::vector<int>&) { return true; })) return true;
    }
    return false;
}

}  // namespace

bool is_torelli_curve(const CombCurve& x, const Limits&)
{
    require_fiber_input(x);
    for (auto s : c1_partition(dual_graph(x))) {
        const int h = s.size();
        if (h < 2) continue;
        const auto pairs = gluing_pairs(x, s);
        const auto label = component_label_of(x, s);
        std::vector<CombCurve> pieces;
        std::vector<std::pair<int, int>> marks;
        for (const auto& [p, q] : pairs) {
            std::vector<int> comps;
            for (int c = 0; c < x.num_components(); ++c)
                if (label[c] == label[x.component_of(p)]) comps.push_back(c);
            pieces.push_back(subcurve(x, comps));
            marks.push_back({pieces.back().point_index(x.point_id(p)), pieces.back().point_index(x.point_id(q))});
        }
        std::vector<bool> swap(h);
        for (int i = 0; i < h; ++i) swap[i] = has_swap(pieces[i], marks[i].first, marks[i].second);

        bool ok = false;
        for (int last = 0; last < h && !ok; ++last) {
            bool cond_a = true;
            for (int i = 0; i < h; ++i)
                if (i != last && !swap[i]) cond_a = false;
            if (!cond_a) continue;
            bool cond_b = true;
            const int ref = last == 0 ? 1 : 0;
            for (int i = 0; i < h && cond_b; ++i)
                if (i != last && i != ref && !marked_isomorphic(pieces[ref], marks[ref], pieces[i], marks[i]))
                    cond_b = false;
            ok = cond_b || (h == 3 && swap[last]);
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<CombCurve> stabilized_pieces(const CombCurve& x)
{
    std::vector<CombCurve> out;
    for (const auto& part : connected_parts(normalize_at(x, separating_nodes(x))))
        if (curve_genus(part) > 0) out.push_back(stabilize(forget_free_points(part)));
    return out;
}

bool torelli_image_equivalent(const CombCurve& x, const CombCurve& y, const Limits& limits)
{
    require_stable_genus2(x);
    require_stable_genus2(y);
    if (curve_genus(x) != curve_genus(y)) return false;
    const auto px = stabilized_pieces(x);
    const auto py = stabilized_pieces(y);
    if (px.size() != py.size()) return false;
    std::vector<MarkedComponent> cx;
    std::vector<std::pair<std::string, std::string>> nx;
    std::vector<MarkedComponent> cy;
    std::vector<std::pair<std::string, std::string>> ny;
    for (const auto& p : px) {
        cx.insert(cx.end(), p.components().begin(), p.components().end());
        const auto n = node_pairs(p);
        nx.insert(nx.end(), n.begin(), n.end());
    }
    for (const auto& p : py) {
        cy.insert(cy.end(), p.components().begin(), p.components().end());
        const auto n = node_pairs(p);
        ny.insert(ny.end(), n.begin(), n.end());
    }
    return is_c1_equivalent(CombCurve::assemble(cx, nx), CombCurve::assemble(cy, ny), limits);
}

}  // namespace torelli
