#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli {

/// Finite poset given by an explicit "greater or equal" matrix. Each element
/// carries a stable node id (used in DOT output) and a display label.
class Poset {
public:
    Poset() = default;
    /// `geq[i][j]` is true iff element i >= element j. The diagonal is forced true.
    Poset(std::vector<std::string> ids, std::vector<std::string> labels,
          std::vector<std::vector<char>> geq);

    int size() const { return static_cast<int>(ids_.size()); }
    bool geq(int i, int j) const { return geq_[i][j] != 0; }
    bool greater(int i, int j) const { return i != j && geq(i, j); }
    const std::string& id(int i) const { return ids_[i]; }
    const std::string& label(int i) const { return labels_[i]; }

    /// Pairs (upper, lower) with upper covering lower, sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    bool covers(int upper, int lower) const;

    bool is_reflexive() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;
    bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

    /// The element below every other element, if any.
    std::optional<int> minimum() const;
    std::optional<int> maximum() const;

private:
    std::vector<std::string> ids_;
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> geq_;
    std::vector<std::pair<int, int>> covers_;
};

/// DOT digraph of the covering relation, arcs pointing from the larger element
/// to the one it covers. Output depends only on the poset contents.
std::string export_dot(const Poset& p, const std::string& graph_name = "poset");

}  // namespace torelli
