#include "fixtures.hpp"

namespace fixtures {

using namespace torelli;

DecGraph make_graph(const std::vector<std::pair<std::string, int>>& vertices,
                    const std::vector<std::tuple<std::string, std::string, std::string>>& edges)
{
    GraphSpec spec;
    for (const auto& [id, genus] : vertices) spec.vertices.push_back({id, genus});
    for (const auto& [id, a, b] : edges) spec.edges.push_back({id, a, b});
    return build_graph(spec);
}

DecGraph theta()
{
    return make_graph({{"u", 0}, {"v", 0}}, {{"e1", "u", "v"}, {"e2", "u", "v"}, {"e3", "u", "v"}});
}

DecGraph cycle_graph(int h)
{
    std::vector<std::pair<std::string, int>> vs;
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int i = 1; i <= h; ++i) {
        vs.push_back({"v" + std::to_string(i), 1});
        es.push_back({"a" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i % h + 1)});
    }
    return make_graph(vs, es);
}

DecGraph loopgraph()
{
    return make_graph({{"u", 1}, {"v", 0}}, {{"a", "u", "v"}, {"b", "u", "v"}, {"l", "v", "v"}});
}

DecGraph dumbbell()
{
    return make_graph({{"u", 1}, {"v", 1}}, {{"lu", "u", "u"}, {"lv", "v", "v"}, {"s", "u", "v"}});
}

CombCurve curve_from_graph(const DecGraph& g, const Decoration& deco)
{
    CurveSpec spec;
    for (int v = 0; v < g.num_vertices(); ++v) {
        CurveSpec::ComponentSpec cs;
        cs.id = g.vertices()[v].id;
        cs.genus = g.vertices()[v].genus;
        if (v < static_cast<int>(deco.labels.size())) cs.iso_label = deco.labels[v];
        spec.components.push_back(std::move(cs));
    }
    for (const auto& e : g.edges()) {
        spec.components[e.u].points.push_back(e.id + ".0");
        spec.components[e.v].points.push_back(e.id + ".1");
        spec.nodes.push_back({e.id + ".0", e.id + ".1"});
    }
    for (int v = 0; v < g.num_vertices() && v < static_cast<int>(deco.gens.size()); ++v) {
        auto& cs = spec.components[v];
        for (const auto& perm : deco.gens[v]) {
            std::vector<std::string> images;
            for (int k : perm) images.push_back(cs.points.at(k));
            cs.symmetries.push_back(std::move(images));
        }
    }
    return build_curve(spec);
}

CombCurve cycle_curve(int h)
{
    Decoration deco;
    for (int i = 1; i <= h; ++i) deco.labels.push_back("E" + std::to_string(i));
    return curve_from_graph(cycle_graph(h), deco);
}

}  // namespace fixtures
