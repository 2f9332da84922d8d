#pragma once

#include "torelli/errors.hpp"
#include "torelli/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace torelli {

/// Spanning forest grown breadth-first from the least vertex of each
/// component, scanning incident edges in id order.
struct SpanningForest {
    EdgeSet tree_edges;
    std::vector<int> parent;       // -1 at roots
    std::vector<int> parent_edge;  // -1 at roots
    std::vector<int> depth;
};

SpanningForest spanning_forest(const DecGraph& g);

/// Cycle space over the two-element field, by supports.
struct CycleSpace {
    std::vector<EdgeSet> basis;  // one fundamental cycle per non-tree edge, in edge order
    int num_edges = 0;

    bool contains(EdgeSet s) const;
};

CycleSpace cycle_space(const DecGraph& g);

/// All circuits (supports of simple cycles; a loop is a circuit of length
/// one), in shortlex order. Throws CapExceeded when b1 > 20.
std::vector<EdgeSet> circuits(const DecGraph& g);

/// edge index of G -> edge index of G'.
using EdgeBijection = std::vector<int>;

EdgeSet image(const EdgeBijection& eps, EdgeSet s);
EdgeBijection inverse(const EdgeBijection& eps);

/// True iff eps maps the cycles of G onto the cycles of G'.
bool is_cyclic_bijection(const DecGraph& g, const DecGraph& h, const EdgeBijection& eps);

/// The lexicographically least cyclic bijection, if the graphs are cyclically
/// equivalent. Throws CapExceeded above limits.max_edges edges.
std::optional<EdgeBijection> cyclically_equivalent(const DecGraph& g, const DecGraph& h,
                                                   const Limits& limits = {});

/// Unordered pairs {e1 < e2} whose removal disconnects g. Requires g
/// connected and bridge-free.
std::vector<std::pair<int, int>> separating_pairs(const DecGraph& g);

/// Twisting at a separating pair: with g minus {e1,e2} = A + B and e_i joining
/// a_i in A to b_i in B, e1 is re-attached as a1-b2 and e2 as a2-b1.
DecGraph twist(const DecGraph& g, int e1, int e2);

/// Breadth-first search over the twist orbit of g up to genus-preserving
/// isomorphism. Throws CapExceeded when the orbit exceeds limits.max_orbit.
bool strongly_cyclically_equivalent(const DecGraph& g, const DecGraph& h,
                                    const Limits& limits = {});

/// Representatives of the twist orbit of g up to isomorphism (g first).
std::vector<DecGraph> twist_orbit(const DecGraph& g, const Limits& limits = {});

}  // namespace torelli
