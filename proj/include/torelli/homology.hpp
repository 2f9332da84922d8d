#pragma once

#include "torelli/c1.hpp"
#include "torelli/curve.hpp"
#include "torelli/cyceq.hpp"
#include "torelli/orientation.hpp"

#include <string>
#include <vector>

namespace torelli {

/// Integral map from the cycle space of the dual graph to divisors supported
/// on the gluing points of the normalization. Row r is the image of the r-th
/// fundamental cycle; column p is marked point p of the curve.
struct EtaMatrix {
    Orientation orientation;
    std::vector<std::vector<int>> cycles;  // signed edge coefficients per row
    std::vector<std::vector<int>> rows;    // point coefficients per row
    std::vector<std::string> columns;      // point ids
};

/// Sign per component of the normalization, +1 or -1.
using SignVector = std::vector<int>;

/// Fundamental cycles of the default spanning forest, each oriented along its
/// non-tree edge. Edge e adds +1 at its head point and -1 at its tail point.
/// The orientation must not delete edges (PreconditionError).
EtaMatrix eta_matrix(const CombCurve& x, const Orientation& o = {});

/// Row restricted to the points of each component sums to zero.
bool rows_have_degree_zero(const CombCurve& x, const EtaMatrix& m);

/// Searches normalization isomorphisms, sign vectors and cyclic bijections for
/// data making the eta maps agree. Requires both curves connected and
/// bridge-free; throws CapExceeded above limits.max_edges edges. The answer
/// does not depend on the orientation chosen for y's dual graph.
bool is_t_equivalent(const CombCurve& x, const CombCurve& y, const Limits& limits = {},
                     const Orientation& y_orientation = {});

struct C1DecompositionReport {
    C1Partition partition;
    std::vector<std::vector<int>> cycles;               // signed basis cycles, per edge
    std::vector<std::vector<std::vector<int>>> pieces;  // [cycle][C1-set] restriction
    bool pieces_closed = true;  // each restriction is a cycle of the contraction to its C1-set
    bool sums_match = true;     // the pieces add back up to the cycle
    bool injective = true;      // a nonzero cycle has some nonzero piece

    bool ok() const { return pieces_closed && sums_match && injective; }
};

/// Splits each basis cycle along the C1-partition. Requires g connected and bridge-free.
C1DecompositionReport c1_homology_decomposition(const DecGraph& g);

}  // namespace torelli
