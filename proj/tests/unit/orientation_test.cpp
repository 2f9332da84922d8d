#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "torelli/c1.hpp"
#include "torelli/orientation.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace torelli;
using fixtures::make_graph;

TEST_CASE("is_totally_cyclic")
{
    // cycle_graph(4) edges a1..a3 run v_i -> v_{i+1}; a4 joins v1 and v4 and
    // runs v1 -> v4 unless reversed.
    const auto c4 = fixtures::cycle_graph(4);
    Orientation around{{}, std::uint64_t{1} << c4.edge_index("a4")};
    CHECK(is_totally_cyclic(c4, around));
    Orientation one_reversed{{}, 0};
    CHECK_FALSE(is_totally_cyclic(c4, one_reversed));
    CHECK_FALSE(is_totally_cyclic(fixtures::theta(), Orientation{}));
}

TEST_CASE("totally_cyclic_orientations")
{
    const auto theta = fixtures::theta();
    CHECK(totally_cyclic_orientations(theta, {}).size() == 6);
    CHECK(totally_cyclic_orientations(fixtures::cycle_graph(2), {}).size() == 2);
    CHECK(totally_cyclic_orientations(fixtures::dumbbell(), {}).empty());
    CHECK(totally_cyclic_orientations(theta, theta.all_edges()).size() == 1);
}

TEST_CASE("multidegree_of")
{
    const auto theta = fixtures::theta();
    for (const auto& o : totally_cyclic_orientations(theta, {})) {
        const auto out = outdegrees(theta, o);
        if (out[0] == 1) CHECK(multidegree_of(theta, o) == Multidegree{0, 1});
    }
    const auto c2 = fixtures::cycle_graph(2);
    for (const auto& o : totally_cyclic_orientations(c2, {})) CHECK(multidegree_of(c2, o) == Multidegree{1, 1});
    const auto loop = make_graph({{"v", 1}}, {{"l", "v", "v"}});
    CHECK(multidegree_of(loop, Orientation{}) == Multidegree{1});
}

TEST_CASE("is_stable and is_semistable for multidegrees")
{
    const auto theta = fixtures::theta();
    CHECK(is_stable(theta, {1, 0}));
    CHECK(is_semistable(theta, {2, -1}));
    CHECK_FALSE(is_stable(theta, {2, -1}));
    CHECK_FALSE(is_semistable(theta, {3, -2}));
    CHECK_THROWS_AS(is_stable(theta, {1, 1}), InputError);
    const auto two = make_graph({{"a", 1}, {"b", 1}}, {{"la", "a", "a"}, {"lb", "b", "b"}});
    CHECK(is_stable(delete_edges(two, two.all_edges()), {0, 0}));
}

TEST_CASE("stable_multidegrees")
{
    CHECK(stable_multidegrees(fixtures::theta()) == std::vector<Multidegree>{{0, 1}, {1, 0}});
    CHECK(stable_multidegrees(fixtures::cycle_graph(2)) == std::vector<Multidegree>{{1, 1}});
    CHECK(stable_multidegrees(fixtures::dumbbell()).empty());
}

TEST_CASE("orientation posets")
{
    const auto theta = fixtures::theta();
    const auto op = op_poset(theta);
    // 6 on the empty support, 2 on each single edge, 1 with everything deleted.
    CHECK(op.elements.size() == 13);
    CHECK(op.poset.is_partial_order());
    const auto bar = opbar_poset(theta);
    CHECK(bar.classes.size() == 6);
    CHECK(bar.poset.is_partial_order());
}

TEST_CASE("orientation properties on the corpus")
{
    const auto graphs = corpus::connected_graphs(6);
    for (const auto& g : graphs) {
        // Strong connectivity against the cut definition, every orientation.
        const int m = g.num_edges();
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << m); ++r) {
            Orientation o{{}, r};
            bool canonical = true;
            for (int e = 0; e < m; ++e)
                if (((r >> e) & 1U) && g.edges()[e].is_loop()) canonical = false;
            if (!canonical) continue;
            CHECK(is_totally_cyclic(g, o) == oracle::totally_cyclic_by_subsets(g, o));
        }
    }

    int checked = 0;
    for (const auto& g0 : corpus::connected_graphs(5, 4)) {
        for (const auto& genera : corpus::genus_assignments(g0.num_vertices(), {0, 1})) {
            const auto g = corpus::with_genera(g0, genera);
            if (curve_genus(g) < 1) continue;
            ++checked;
            const auto sd = stable_multidegrees(g);
            const std::set<Multidegree> mine(sd.begin(), sd.end());
            CHECK(mine == oracle::stable_multidegrees_by_inequalities(g));
            for (const auto& d : sd) CHECK(oracle::stable_by_inequalities(g, d));

            if (has_separating_edge(g)) continue;
            // Orientation classes over S match the stable multidegrees of G minus S.
            for (auto s : sp_elements(g)) {
                std::set<Multidegree> classes;
                for (const auto& o : totally_cyclic_orientations(g, s)) classes.insert(multidegree_of(g, o));
                const auto sub = delete_edges(g, s);
                std::set<Multidegree> expected;
                for (auto& d : oracle::stable_multidegrees_by_inequalities(sub)) expected.insert(d);
                CHECK(classes == expected);
            }
            const auto bar = opbar_poset(g);
            CHECK(bar.poset.is_partial_order());
        }
    }
    CHECK(checked > 100);
}
