#pragma once

#include "torelli/errors.hpp"
#include "torelli/graph.hpp"
#include "torelli/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torelli {

/// Disjoint edge sets covering every edge, ordered by least edge index.
using C1Partition = std::vector<EdgeSet>;

/// "{e1,e2}" with ids in graph order.
std::string format_edge_set(const DecGraph& g, EdgeSet s);

/// b1 of the contraction Gamma(S).
int codim(const DecGraph& g, EdgeSet s);

/// True iff deleting S leaves no separating edge (S is a stratum support).
bool is_support(const DecGraph& g, EdgeSet s);

/// S is a support of codimension one, i.e. Gamma(S) is a cycle.
/// Requires g connected and bridge-free and S nonempty.
bool is_c1_set(const DecGraph& g, EdgeSet s);

/// Partition of the edges into C1-sets: two edges share a block iff they lie
/// on exactly the same cycles. Throws PreconditionError naming the separating
/// edges when g has any, or when g is disconnected.
C1Partition c1_partition(const DecGraph& g);

/// Lazy single-pass enumeration of the supports of g in shortlex order.
class SupportStream {
public:
    SupportStream(const DecGraph& g, const Limits& limits = {});
    std::optional<EdgeSet> next();

private:
    bool advance();

    const DecGraph* g_;
    int m_ = 0;
    int k_ = 0;
    std::vector<int> comb_;
    bool started_ = false;
    bool done_ = false;
};

/// Materialized support list (shortlex order).
std::vector<EdgeSet> sp_elements(const DecGraph& g, const Limits& limits = {});

/// Supports ordered by reverse inclusion.
Poset sp_poset(const DecGraph& g, const Limits& limits = {});

void require_connected_bridge_free(const DecGraph& g);

}  // namespace torelli
