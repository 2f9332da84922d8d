#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "torelli/c1.hpp"
#include "torelli/curve.hpp"
#include "torelli/cyceq.hpp"

#include <doctest.h>

#include <random>

using namespace torelli;
using fixtures::make_graph;

namespace {

using Comp = CurveSpec::ComponentSpec;

CombCurve curve(std::vector<Comp> comps, std::vector<std::pair<std::string, std::string>> nodes)
{
    return build_curve(CurveSpec{std::move(comps), std::move(nodes)});
}

// Two genus-2 components with distinct labels glued at two nodes; `crossed`
// glues p1 to q2 instead of p2.
CombCurve c1ex(bool crossed, bool swap_on_c1 = false)
{
    Comp c1{"C1", 2, "A", {"p1", "q1"}, {}};
    if (swap_on_c1) c1.symmetries = {{"q1", "p1"}};
    Comp c2{"C2", 2, "B", {"p2", "q2"}, {}};
    if (crossed) return curve({c1, c2}, {{"p1", "q2"}, {"q1", "p2"}});
    return curve({c1, c2}, {{"p1", "p2"}, {"q1", "q2"}});
}

CombCurve cycle2_curve()
{
    return fixtures::cycle_curve(2);
}

// cycle_curve(2) with genus-0 beads inserted into node a1.
CombCurve beaded_cycle2(int beads)
{
    std::vector<Comp> comps{{"v1", 1, "E1", {"a1.0", "a2.0"}, {}}, {"v2", 1, "E2", {"a1.1", "a2.1"}, {}}};
    std::vector<std::pair<std::string, std::string>> nodes{{"a2.0", "a2.1"}};
    std::string prev = "a1.0";
    for (int b = 0; b < beads; ++b) {
        const std::string id = "b" + std::to_string(b);
        comps.push_back({id, 0, "", {id + ".in", id + ".out"}, {}});
        nodes.push_back({prev, id + ".in"});
        prev = id + ".out";
    }
    nodes.push_back({prev, "a1.1"});
    return curve(comps, nodes);
}

}  // namespace

TEST_CASE("SymmetryGroup")
{
    const auto full = SymmetryGroup::full(3);
    CHECK(full.order() == 6);
    CHECK(full.contains({2, 0, 1}));
    const auto swap = SymmetryGroup::generated(3, {{1, 0, 2}});
    CHECK(swap.order() == 2);
    CHECK_FALSE(swap.contains({2, 1, 0}));
    CHECK(SymmetryGroup::generated(3, {{1, 0, 2}, {1, 2, 0}}) == full);
    CHECK_THROWS_AS(SymmetryGroup::generated(3, {{0, 0, 1}}), InputError);

    const auto rot = SymmetryGroup::generated(4, {{1, 2, 3, 0}});
    CHECK(rot.order() == 4);
    // Setwise stabilizer of {0, 2}: identity and the half turn.
    const auto r = rot.restrict_to({0, 2});
    CHECK(r.order() == 2);
    CHECK(r.contains({1, 0}));
}

TEST_CASE("build_curve validation")
{
    CHECK_THROWS_WITH_AS(curve({{"A", 2, "", {"p", "q"}, {}}}, {{"p", "q"}, {"q", "p"}}), doctest::Contains("q"),
                         InputError);
    CHECK_THROWS_WITH_AS(curve({{"A", 2, "", {"p", "q", "r"}, {}}}, {{"p", "q"}}),
                         doctest::Contains("point in no node"), InputError);
    CHECK_THROWS_WITH_AS(curve({{"A", 2, "L", {"p"}, {}}, {"B", 3, "L", {"q"}, {}}}, {{"p", "q"}}),
                         doctest::Contains("inconsistent iso_label"), InputError);
    CHECK_THROWS_WITH_AS(curve({{"A", 2, "L", {"p", "q"}, {{"q", "p"}}}, {"B", 2, "L", {"r", "s"}, {}}},
                               {{"p", "r"}, {"q", "s"}}),
                         doctest::Contains("inconsistent iso_label"), InputError);
    // Genus-0 components never conflict.
    CHECK_NOTHROW(curve({{"A", 0, "L", {"p", "q", "r"}, {}}, {"B", 0, "L", {"s", "t", "u"}, {}}},
                        {{"p", "s"}, {"q", "t"}, {"r", "u"}}));
    CHECK_THROWS_AS(curve({{"A", 2, "", {"p", "q"}, {{"p", "p"}}}}, {{"p", "q"}}), InputError);
}

TEST_CASE("dual_graph")
{
    CHECK(graphs_isomorphic(dual_graph(cycle2_curve()), fixtures::cycle_graph(2)));
    const auto x = curve({{"R", 0, "", {"p", "q", "r", "s"}, {}}}, {{"p", "q"}, {"r", "s"}});
    const auto g = dual_graph(x);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 2);
    CHECK(g.edges()[0].is_loop());
    CHECK(g.edges()[1].is_loop());
    const auto c = dual_graph(c1ex(false));
    CHECK(c.num_vertices() == 2);
    CHECK(c.num_edges() == 2);
    CHECK(first_betti(c) == 1);
}

TEST_CASE("normalize_at")
{
    const auto c2 = cycle2_curve();
    const auto y = normalize_at(c2, EdgeSet::full(2));
    CHECK(y.num_nodes() == 0);
    CHECK(y.free_points().size() == 4);
    const auto parts = connected_parts(y);
    REQUIRE(parts.size() == 2);
    for (const auto& p : parts) CHECK(p.free_points().size() == 2);
    CHECK(curve_isomorphic(normalize_at(c2, EdgeSet{}), c2));

    const auto lg = fixtures::curve_from_graph(fixtures::loopgraph());
    const auto z = normalize_at(lg, EdgeSet::single(lg.node_of(lg.point_index("l.0"))));
    const auto zg = dual_graph(z);
    CHECK(zg.num_edges() == 2);
    CHECK(zg.num_vertices() == 2);
    CHECK(first_betti(zg) == 1);
}

TEST_CASE("c1_involution")
{
    const auto c2 = cycle2_curve();
    const auto pairs = c1_involution(c2, EdgeSet::full(2));
    REQUIRE(pairs.size() == 2);
    for (auto [p, q] : pairs) CHECK(c2.component_of(p) == c2.component_of(q));

    const auto c4 = fixtures::cycle_curve(4);
    CHECK(c1_involution(c4, EdgeSet::full(4)).size() == 4);

    const auto th = fixtures::curve_from_graph(fixtures::theta());
    const auto one = c1_involution(th, EdgeSet::single(0));
    REQUIRE(one.size() == 1);
    CHECK(th.partner(one[0].first) == one[0].second);
}

TEST_CASE("stabilize")
{
    const auto c2 = cycle2_curve();
    CHECK(exceptional_components(beaded_cycle2(1)).size() == 1);
    CHECK(curve_isomorphic(stabilize(beaded_cycle2(1)), c2));
    CHECK(curve_isomorphic(stabilize(beaded_cycle2(2)), c2));
    CHECK(curve_isomorphic(stabilize(c2), c2));
    CHECK(exceptional_components(c2).empty());
}

TEST_CASE("tilde_profile and dimensions")
{
    const auto c4 = fixtures::cycle_curve(4);
    auto t = tilde_profile(c4);
    CHECK(t.gamma == 1);
    CHECK(t.gamma_plus == 1);
    CHECK(t.gamma1 == 0);
    CHECK(fiber_dimension(c4) == 0);

    const auto two_genus2 = curve({{"A", 2, "", {"a"}, {}}, {"B", 2, "", {"b"}, {}}}, {{"a", "b"}});
    t = tilde_profile(two_genus2);
    CHECK(t.gamma == 2);
    CHECK(t.gamma_plus == 2);
    CHECK(t.gamma1 == 0);
    CHECK(t.gamma0 == 0);
    CHECK(fiber_dimension(two_genus2) == 2);
    CHECK(topotype_dimension(two_genus2) == 2);

    // Two rational components with a loop each, joined at one node.
    const auto two_loops =
        curve({{"A", 0, "", {"a1", "a2", "a3"}, {}}, {"B", 0, "", {"b1", "b2", "b3"}, {}}},
              {{"a1", "a2"}, {"b1", "b2"}, {"a3", "b3"}});
    t = tilde_profile(two_loops);
    CHECK(t.gamma == 2);
    CHECK(t.gamma1 == 2);
    CHECK(t.gamma_plus == 2);
    CHECK(fiber_dimension(two_loops) == 0);

    CHECK_THROWS_AS(fiber_dimension(beaded_cycle2(1)), PreconditionError);
}

TEST_CASE("C1-equivalence and isomorphism on the two-node example")
{
    const auto x = c1ex(false);
    const auto xp = c1ex(true);
    CHECK(is_c1_equivalent(x, xp));
    CHECK(is_c1_equivalent(x, x));
    CHECK_FALSE(curve_isomorphic(x, xp));
    CHECK(curve_isomorphic(c1ex(false, true), c1ex(true, true)));
    CHECK_FALSE(oracle::curves_isomorphic(x, xp));
    CHECK(oracle::curves_isomorphic(c1ex(false, true), c1ex(true, true)));

    const auto relabeled = curve({{"K", 2, "B", {"s", "t"}, {}}, {"J", 2, "A", {"m", "n"}, {}}}, {{"m", "s"}, {"n", "t"}});
    CHECK(curve_isomorphic(x, relabeled));

    const auto other = curve({{"C1", 2, "A", {"p1", "q1"}, {}}, {"C2", 3, "B", {"p2", "q2"}, {}}},
                             {{"p1", "p2"}, {"q1", "q2"}});
    CHECK_FALSE(is_c1_equivalent(x, other));

    const auto w = c1_equivalence_witness(x, xp);
    REQUIRE(w.has_value());
    CHECK(w->size() == static_cast<std::size_t>(x.num_points()));
}

TEST_CASE("enumerate_fiber")
{
    const auto c4 = fixtures::cycle_curve(4);
    const auto fiber = enumerate_fiber(c4);
    CHECK(fiber.size() == 3);
    CHECK(curve_isomorphic(fiber.front(), c4));
    CHECK(enumerate_fiber(c1ex(false, true)).size() == 1);
    CHECK(enumerate_fiber(c1ex(false)).size() == 2);
    CHECK(enumerate_fiber(fixtures::curve_from_graph(fixtures::theta())).size() == 1);

    Limits tight;
    tight.max_fiber = 10;
    CHECK_THROWS_AS(enumerate_fiber(c4, tight), CapExceeded);
}

TEST_CASE("fiber bounds")
{
    const auto c4 = fixtures::cycle_curve(4);
    CHECK(fiber_bound(c4) == 48);
    CHECK(fiber_bound_global(c4) == 3);
    CHECK(fiber_bound(fixtures::curve_from_graph(fixtures::theta())) == 1);
    CHECK(fiber_bound(c1ex(false)) == 2);
}

TEST_CASE("is_torelli_curve")
{
    CHECK(is_torelli_curve(fixtures::curve_from_graph(fixtures::theta())));
    CHECK(is_torelli_curve(c1ex(false, true)));
    CHECK_FALSE(is_torelli_curve(c1ex(false)));
    // Genus-1 components carry every permutation of their points.
    CHECK(is_torelli_curve(cycle2_curve()));
    CHECK_FALSE(is_torelli_curve(fixtures::cycle_curve(4)));
}

TEST_CASE("torelli_image_equivalent")
{
    Comp a{"A", 2, "A", {"a1", "a2", "a3"}, {}};
    Comp b{"B", 2, "B", {"b1", "b2", "b3"}, {}};
    const auto x = curve({a, b}, {{"a1", "a2"}, {"a3", "b1"}, {"b2", "b3"}});
    const auto y = curve({a, b}, {{"a2", "a3"}, {"a1", "b2"}, {"b1", "b3"}});
    CHECK_FALSE(curve_isomorphic(x, y));
    CHECK(torelli_image_equivalent(x, y));
    Comp b3{"B", 3, "B", {"b1", "b2", "b3"}, {}};
    const auto z = curve({a, b3}, {{"a1", "a2"}, {"a3", "b1"}, {"b2", "b3"}});
    CHECK_FALSE(torelli_image_equivalent(x, z));
    CHECK(stabilized_pieces(x).size() == 2);
}

TEST_CASE("forget_free_points")
{
    const auto x = curve({{"A", 2, "", {"p", "q", "r"}, {{"q", "p", "r"}}}, {"B", 2, "", {"s", "t", "u"}, {}}},
                         {{"p", "s"}, {"q", "t"}, {"r", "u"}});
    auto forget_node = [&](const std::string& pt) {
        return forget_free_points(normalize_at(x, EdgeSet::single(x.node_of(x.point_index(pt)))));
    };
    const auto keep_swap = forget_node("r");
    CHECK(keep_swap.free_points().empty());
    CHECK(keep_swap.num_points() == 4);
    CHECK(keep_swap.components()[0].group->order() == 2);
    // The swap moves p, so only the identity survives.
    CHECK(forget_node("p").components()[0].group->order() == 1);
}

TEST_CASE("fiber properties on random curves")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const auto x = corpus::random_fiber_curve(rng);
        const auto fiber = enumerate_fiber(x);
        REQUIRE(!fiber.empty());
        CHECK(fiber.size() <= fiber_bound(x));
        CHECK(fiber.size() <= fiber_bound_global(x));
        CHECK(is_torelli_curve(x) == (fiber.size() == 1));
        if (curve_genus(x) <= 4) CHECK(fiber.size() == 1);
        const auto gx = dual_graph(x);
        for (const auto& y : fiber) {
            CHECK(is_c1_equivalent(x, y));
            CHECK(strongly_cyclically_equivalent(gx, dual_graph(y)));
        }
        for (std::size_t a = 0; a < fiber.size(); ++a)
            for (std::size_t b = a + 1; b < fiber.size(); ++b) CHECK_FALSE(curve_isomorphic(fiber[a], fiber[b]));

        // A random regluing is C1-equivalent exactly when it is in the fiber.
        const auto r = corpus::random_regluing(x, rng);
        const auto gr = dual_graph(r);
        if (is_connected(gr) && !has_separating_edge(gr)) {
            bool member = false;
            for (const auto& y : fiber) member = member || curve_isomorphic(r, y);
            CHECK(is_c1_equivalent(x, r) == member);
        }

        // The involutions only depend on the normalization at each C1-set.
        for (auto s : c1_partition(gx)) {
            const auto y = normalize_at(x, s);
            const auto parts = component_labels(dual_graph(y), dual_graph(y).all_edges());
            for (auto [p, q] : c1_involution(x, s)) {
                CHECK(parts[x.component_of(p)] == parts[x.component_of(q)]);
                CHECK((x.node_of(p) == x.node_of(q)) == (s.size() == 1));
                CHECK(s.contains(x.node_of(p)));
                CHECK(s.contains(x.node_of(q)));
            }
        }
    }
}
