#include "corpus.hpp"
#include "fixtures.hpp"
#include "torelli/c1.hpp"
#include "torelli/strata.hpp"

#include <doctest.h>

#include <algorithm>

using namespace torelli;
using fixtures::make_graph;

TEST_CASE("st_elements")
{
    const auto theta = fixtures::theta();
    std::vector<std::string> ids;
    for (const auto& s : st_elements(theta)) ids.push_back(stratum_id(theta, s));
    CHECK(ids == std::vector<std::string>{"S:{}|d:(0,1)", "S:{}|d:(1,0)", "S:{e1}|d:(0,0)", "S:{e2}|d:(0,0)",
                                          "S:{e3}|d:(0,0)", "S:{e1,e2,e3}|d:(-1,-1)"});
    const auto c2 = fixtures::cycle_graph(2);
    const auto s2 = st_elements(c2);
    REQUIRE(s2.size() == 2);
    CHECK(s2[0] == Stratum{{}, {1, 1}});
    CHECK(s2[1] == Stratum{c2.all_edges(), {0, 0}});
    const auto point = make_graph({{"v", 2}}, {});
    CHECK(st_elements(point) == std::vector<Stratum>{Stratum{{}, {1}}});
}

TEST_CASE("st_poset on the theta graph")
{
    const auto theta = fixtures::theta();
    const auto p = st_poset(theta);
    REQUIRE(p.strata.size() == 6);
    CHECK(p.poset.is_partial_order());
    // Both top strata lie above each codimension-one stratum.
    for (int top : {0, 1})
        for (int mid : {2, 3, 4}) CHECK(p.poset.covers(top, mid));
    CHECK(p.poset.minimum() == 5);
}

TEST_CASE("stratum dimensions")
{
    const auto theta = fixtures::theta();
    CHECK(stratum_dim(theta, {{}, {1, 0}}) == 2);
    CHECK(stratum_dim(theta, {theta.edge_set({"e1"}), {0, 0}}) == 1);
    CHECK(stratum_dim(theta, {theta.all_edges(), {-1, -1}}) == 0);
    CHECK(stratum_codim(theta, {theta.all_edges(), {-1, -1}}) == 2);
}

TEST_CASE("support_map")
{
    const auto theta = support_map(fixtures::theta());
    CHECK(theta.supports.size() == 5);
    CHECK(theta.surjective);
    CHECK(theta.quotient);
    const auto c2 = support_map(fixtures::cycle_graph(2));
    CHECK(c2.supports.size() == 2);
    CHECK(c2.surjective);
}

TEST_CASE("smallest_stratum")
{
    const auto theta = fixtures::theta();
    CHECK(smallest_stratum(theta) == Stratum{theta.all_edges(), {-1, -1}});
    const auto c4 = fixtures::cycle_graph(4);
    CHECK(smallest_stratum(c4) == Stratum{c4.all_edges(), {0, 0, 0, 0}});
    const auto c2 = fixtures::cycle_graph(2);
    CHECK(smallest_stratum(c2) == Stratum{c2.all_edges(), {0, 0}});
}

TEST_CASE("theta_components")
{
    const auto theta = fixtures::theta();
    CHECK(theta_components(theta, {theta.edge_set({"e1"}), {0, 0}}) == 1);
    const auto c2 = fixtures::cycle_graph(2);
    CHECK(theta_components(c2, {c2.all_edges(), {0, 0}}) == 2);
}

TEST_CASE("export_dot")
{
    const Poset one({"a"}, {"a"}, {{1}});
    const auto dot = export_dot(one, "p");
    CHECK(dot.find("->") == std::string::npos);
    CHECK(dot.find("\"a\"") != std::string::npos);

    const Poset chain({"x", "y", "z"}, {"x", "y", "z"}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    const auto cdot = export_dot(chain, "c");
    CHECK(std::count(cdot.begin(), cdot.end(), '>') == 2);
    CHECK(export_dot(chain, "c") == cdot);

    const auto st = st_poset(fixtures::theta());
    CHECK(st.poset.size() == 6);
}

TEST_CASE("strata properties on the corpus")
{
    int checked = 0;
    for (const auto& g0 : corpus::connected_graphs(5, 4)) {
        if (has_separating_edge(g0)) continue;
        for (const auto& genera : corpus::genus_assignments(g0.num_vertices(), {0, 1})) {
            const auto g = corpus::with_genera(g0, genera);
            if (curve_genus(g) < 1) continue;
            ++checked;
            const auto st = st_poset(g);
            const auto& P = st.poset;
            CHECK(P.is_partial_order());
            REQUIRE(P.minimum().has_value());
            CHECK(st.strata[*P.minimum()] == smallest_stratum(g));

            int max_dim = 0;
            for (const auto& s : st.strata) max_dim = std::max(max_dim, stratum_dim(g, s));
            int empty_support = 0;
            for (const auto& s : st.strata) {
                CHECK((stratum_dim(g, s) == max_dim) == s.support.empty());
                if (s.support.empty()) ++empty_support;
                CHECK(stratum_dim(g, s) == stratum_dim_from_components(g, s));
            }
            CHECK(empty_support == static_cast<int>(stable_multidegrees(g).size()));

            for (int i = 0; i < P.size(); ++i)
                for (int j = 0; j < P.size(); ++j) {
                    if (!P.geq(i, j)) continue;
                    CHECK(st.strata[i].support.subset_of(st.strata[j].support));
                    for (std::size_t v = 0; v < st.strata[i].degree.size(); ++v)
                        CHECK(st.strata[i].degree[v] >= st.strata[j].degree[v]);
                }
            const auto sm = support_map(g);
            CHECK(sm.surjective);
            CHECK(sm.quotient);
        }
    }
    CHECK(checked > 50);
}
