#pragma once

#include "torelli/errors.hpp"
#include "torelli/graph.hpp"
#include "torelli/poset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torelli {

/// Orientation of G minus `deleted`. Edge e = (u, v) with u <= v (vertex
/// indices) runs u -> v unless bit e of `reversed` is set. Loops always carry
/// the nominal direction and deleted edges carry no bit.
struct Orientation {
    EdgeSet deleted;
    std::uint64_t reversed = 0;

    int tail(const DecGraph& g, int e) const
    {
        return ((reversed >> e) & 1U) ? g.edges()[e].v : g.edges()[e].u;
    }
    int head(const DecGraph& g, int e) const
    {
        return ((reversed >> e) & 1U) ? g.edges()[e].u : g.edges()[e].v;
    }

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Degrees per vertex, indexed like the graph's vertices.
using Multidegree = std::vector<int>;

struct OrientationClass {
    EdgeSet support;
    std::vector<int> outdegree;

    friend bool operator==(const OrientationClass&, const OrientationClass&) = default;
};

/// "u:0,v:1"
std::string format_multidegree(const DecGraph& g, const Multidegree& d);
/// "(0,1)"
std::string format_degree_tuple(const Multidegree& d);

/// Outdegree per vertex; a loop contributes 1 to its vertex.
std::vector<int> outdegrees(const DecGraph& g, const Orientation& o);

/// Every connected component of G minus S is strongly connected under o.
bool is_totally_cyclic(const DecGraph& g, const Orientation& o);

/// All totally cyclic orientations of G minus S in lexicographic direction
/// order (edge by edge, forward before reversed). Empty when G minus S has a
/// separating edge.
std::vector<Orientation> totally_cyclic_orientations(const DecGraph& g, EdgeSet s,
                                                     const Limits& limits = {});

/// d_v = genus(v) - 1 + outdegree(v).
Multidegree multidegree_of(const DecGraph& g, const Orientation& o);

/// Requires sum(d) = curve_genus(y) - 1 (InputError otherwise).
bool is_semistable(const DecGraph& y, const Multidegree& d);
bool is_stable(const DecGraph& y, const Multidegree& d);

/// The stable multidegrees of y, sorted; computed from totally cyclic orientations.
std::vector<Multidegree> stable_multidegrees(const DecGraph& y, const Limits& limits = {});

OrientationClass orientation_class(const DecGraph& g, const Orientation& o);

struct OrientationPoset {
    std::vector<Orientation> elements;
    Poset poset;
};

struct ClassPoset {
    std::vector<OrientationClass> classes;
    std::vector<Orientation> representatives;  // lexicographically least per class
    Poset poset;
};

/// All totally cyclic orientations on G minus S over the supports S, with
/// phi_S >= phi_T iff S is contained in T and phi_T is the restriction of phi_S.
OrientationPoset op_poset(const DecGraph& g, const Limits& limits = {});
/// Classes of equal support and outdegrees; [a] >= [b] iff some representatives compare.
ClassPoset opbar_poset(const DecGraph& g, const Limits& limits = {});

}  // namespace torelli
