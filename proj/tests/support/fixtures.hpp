#pragma once

#include "torelli/curve.hpp"
#include "torelli/graph.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

using torelli::CombCurve;
using torelli::DecGraph;

DecGraph make_graph(const std::vector<std::pair<std::string, int>>& vertices,
                    const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

/// u, v of genus 0 joined by e1, e2, e3.
DecGraph theta();
/// v1..vh of genus 1 in a cycle; a_i joins v_i and v_{i+1}.
DecGraph cycle_graph(int h);
/// u of genus 1, v of genus 0; a, b join u and v; loop l at v.
DecGraph loopgraph();
/// Two genus-1 vertices with a loop each, joined by a bridge.
DecGraph dumbbell();

/// Per-vertex decoration of the curve built from a graph.
struct Decoration {
    std::vector<std::string> labels;                  // empty entry: the vertex id
    std::vector<std::vector<std::vector<int>>> gens;  // generators on point positions
};

/// Component per vertex, node per edge. Edge e contributes point "e.0" at its
/// first end and "e.1" at its second; a component lists its points in edge order.
CombCurve curve_from_graph(const DecGraph& g, const Decoration& deco = {});

/// Cycle of h genus-1 components with pairwise distinct labels.
CombCurve cycle_curve(int h);

}  // namespace fixtures
