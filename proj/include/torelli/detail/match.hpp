#pragma once

#include "torelli/curve.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace torelli::detail {

/// Search for point bijections src -> dst that respect components (genus,
/// label, point count, symmetry group) and carry blocks onto blocks.
struct MatchProblem {
    const CombCurve* src = nullptr;
    const CombCurve* dst = nullptr;
    /// Block per point (-1: unconstrained). Points sharing a src block must land
    /// in one dst block of the same size and vice versa.
    std::vector<int> src_block;
    std::vector<int> dst_block;
    /// Forced src -> dst point assignments.
    std::vector<std::pair<int, int>> fixed;
    /// When set, src blocks are ignored and every pair of src points landing in
    /// one dst block must satisfy it.
    std::function<bool(int, int)> pair_ok;
};

/// Calls `visit(point_map)` for each match until it returns true. Returns true
/// iff some call returned true.
bool for_each_match(const MatchProblem& problem,
                    const std::function<bool(const std::vector<int>&)>& visit);

/// Blocks given by nodes, with each free point alone in its block.
std::vector<int> node_blocks(const CombCurve& x);

bool components_compatible(const MarkedComponent& a, const MarkedComponent& b);

}  // namespace torelli::detail
