#pragma once

#include "torelli/errors.hpp"
#include "torelli/graph.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli {

/// Permutation group acting on the positions 0..degree-1 of a component's
/// marked points. Either the full symmetric group or an explicit element list.
class SymmetryGroup {
public:
    static SymmetryGroup full(int degree);
    /// Closes the generators under composition. Throws InputError on a
    /// non-permutation and CapExceeded beyond `max_order` elements.
    static SymmetryGroup generated(int degree, const std::vector<std::vector<int>>& generators,
                                   std::size_t max_order = 200000);

    int degree() const { return degree_; }
    bool is_full() const { return full_; }
    /// Explicit elements (sorted); empty for the full group.
    const std::vector<std::vector<int>>& elements() const { return elements_; }
    std::uint64_t order() const;
    bool contains(const std::vector<int>& perm) const;

    /// Elements preserving the set `keep` (sorted positions), acting on it;
    /// keep[i] becomes position i.
    SymmetryGroup restrict_to(const std::vector<int>& keep) const;

    friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b);

private:
    int degree_ = 0;
    bool full_ = false;
    std::vector<std::vector<int>> elements_;
};

/// Irreducible component of the normalization with its marked points.
/// Components of genus <= 1 always act by the full symmetric group on their
/// points; components of genus 0 are all isomorphic regardless of label.
struct MarkedComponent {
    std::string id;
    int genus = 0;
    std::string iso_label;
    std::vector<std::string> points;
    std::shared_ptr<const SymmetryGroup> group;
};

struct CurveSpec {
    struct ComponentSpec {
        std::string id;
        int genus = 0;
        std::string iso_label;
        std::vector<std::string> points;
        std::vector<std::vector<std::string>> symmetries;  // images of `points`, in order
    };
    std::vector<ComponentSpec> components;
    std::vector<std::pair<std::string, std::string>> nodes;
};

struct PointRef {
    int component = 0;
    int position = 0;
};

/// Nodal curve up to the data the Torelli map sees: normalization components
/// plus a matching of marked points into nodes. Components are sorted by id
/// and nodes by node id ("p=q", point ids in global order), so component i
/// and node k are vertex i and edge k of dual_graph().
class CombCurve {
public:
    CombCurve() = default;

    /// Builds from components and nodes given by point ids. Points left out of
    /// every node are free marked points.
    static CombCurve assemble(std::vector<MarkedComponent> components,
                              const std::vector<std::pair<std::string, std::string>>& nodes);

    const std::vector<MarkedComponent>& components() const { return components_; }
    int num_components() const { return static_cast<int>(components_.size()); }
    int num_points() const { return static_cast<int>(points_.size()); }
    int num_nodes() const { return static_cast<int>(nodes_.size()); }

    PointRef point(int p) const { return points_[p]; }
    const std::string& point_id(int p) const;
    int point_index(const std::string& id) const;
    int first_point(int component) const { return first_point_[component]; }
    int component_of(int p) const { return points_[p].component; }
    /// Partner across a node, or -1 for a free point.
    int partner(int p) const { return partner_[p]; }
    const std::array<int, 2>& node(int k) const { return nodes_[k]; }
    const std::string& node_id(int k) const { return node_ids_[k]; }
    /// Node index of point p, or -1.
    int node_of(int p) const { return node_of_[p]; }
    std::vector<int> free_points() const;

private:
    std::vector<MarkedComponent> components_;
    std::vector<PointRef> points_;
    std::vector<int> first_point_;
    std::vector<int> partner_;
    std::vector<int> node_of_;
    std::vector<std::array<int, 2>> nodes_;
    std::vector<std::string> node_ids_;
};

/// Validates a curve description: unique ids, symmetries are permutations,
/// components sharing an iso_label agree in genus, point count and symmetry
/// group, and every point lies in exactly one node.
CombCurve build_curve(const CurveSpec& spec);

/// Vertex per component (genus copied), edge per node.
DecGraph dual_graph(const CombCurve& x);

/// Removes the nodes in `nodes` (node indices); their points become free.
CombCurve normalize_at(const CombCurve& x, EdgeSet nodes);

/// The curve formed by the given components and the nodes among them; points
/// glued outside become free.
CombCurve subcurve(const CombCurve& x, const std::vector<int>& components);

/// Connected pieces of x, ordered by least component.
std::vector<CombCurve> connected_parts(const CombCurve& x);

/// Drops free points; symmetry groups shrink to the stabilizer of what is dropped.
CombCurve forget_free_points(const CombCurve& x);

/// Pairs of gluing points of the C1-set S lying on the same connected
/// component of the normalization at S. Requires S to be a block of the
/// C1-partition of the dual graph.
std::vector<std::pair<int, int>> c1_involution(const CombCurve& x, EdgeSet s);

/// Genus-0 loop-free components with at most two marked points, other than
/// the whole curve.
std::vector<int> exceptional_components(const CombCurve& x);

/// Contracts exceptional components until none remain. Requires x connected
/// and free of free points.
CombCurve stabilize(const CombCurve& x);

/// Bridges of the dual graph, as node indices.
EdgeSet separating_nodes(const CombCurve& x);

struct TildeProfile {
    int gamma = 0;       // components after normalizing the separating nodes
    int gamma0 = 0;      // ... of arithmetic genus 0
    int gamma1 = 0;      // ... of arithmetic genus 1
    int gamma_plus = 0;  // ... of positive genus
    int exceptional = 0; // exceptional components inside the positive-genus parts
    int separating = 0;  // number of separating nodes
    std::vector<int> genera;
};

TildeProfile tilde_profile(const CombCurve& x);

/// Dimension of the Torelli fiber through a stable curve of genus >= 2:
/// 2*gamma_plus - gamma1 - 2.
int fiber_dimension(const CombCurve& x);
/// Dimension of the fiber locus with the topological type of x:
/// 2*#separating - 3*gamma0 - gamma1 - e.
int topotype_dimension(const CombCurve& x);

/// Some label-, genus- and symmetry-respecting point bijection carrying nodes
/// onto nodes (and free points onto free points).
bool curve_isomorphic(const CombCurve& x, const CombCurve& y);

/// Point map (points of x -> points of y) witnessing C1-equivalence, if any.
/// Disconnected curves are compared piece by piece.
std::optional<std::vector<int>> c1_equivalence_witness(const CombCurve& x, const CombCurve& y,
                                                       const Limits& limits = {});
bool is_c1_equivalent(const CombCurve& x, const CombCurve& y, const Limits& limits = {});

/// All curves C1-equivalent to x up to isomorphism, x first. Requires x
/// connected, stable and free of separating nodes.
std::vector<CombCurve> enumerate_fiber(const CombCurve& x, const Limits& limits = {});

/// Product over C1-sets of 2^(h-1) (h-1)!. Saturates at UINT64_MAX.
std::uint64_t fiber_bound(const CombCurve& x);
/// ceil((g-2+e)!/2), e the number of exceptional components. Requires g >= 2.
std::uint64_t fiber_bound_global(const CombCurve& x);

/// Swap and marked-isomorphism conditions on the pieces cut out by every
/// C1-set with at least two nodes.
bool is_torelli_curve(const CombCurve& x, const Limits& limits = {});

/// Positive-genus pieces after normalizing the separating nodes, with the
/// separating branches forgotten, each stabilized.
std::vector<CombCurve> stabilized_pieces(const CombCurve& x);

/// Same image under the compactified Torelli map: the stabilized pieces are
/// C1-equivalent piece by piece.
bool torelli_image_equivalent(const CombCurve& x, const CombCurve& y, const Limits& limits = {});

/// Arithmetic genus (of the dual graph).
int curve_genus(const CombCurve& x);

}  // namespace torelli
