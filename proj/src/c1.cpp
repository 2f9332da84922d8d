#include "torelli/c1.hpp"

#include "torelli/cyceq.hpp"

#include <algorithm>
#include <map>

namespace torelli {

std::string format_edge_set(const DecGraph& g, EdgeSet s)
{
    std::string out = "{";
    bool first = true;
    for (int e : s.indices()) {
        if (!first) out += ',';
        out += g.edges()[e].id;
        first = false;
    }
    return out + "}";
}

void require_connected_bridge_free(const DecGraph& g)
{
    if (!is_connected(g)) throw PreconditionError("not connected");
    const EdgeSet bridges = separating_edges(g);
    if (!bridges.empty())
        throw PreconditionError("has separating edge: " + format_edge_set(g, bridges));
}

int codim(const DecGraph& g, EdgeSet s)
{
    return first_betti(contract_to(g, s));
}

bool is_support(const DecGraph& g, EdgeSet s)
{
    return !has_separating_edge(delete_edges(g, s));
}

bool is_c1_set(const DecGraph& g, EdgeSet s)
{
    require_connected_bridge_free(g);
    if (s.empty()) throw PreconditionError("empty edge set");
    return is_support(g, s) && codim(g, s) == 1;
}

C1Partition c1_partition(const DecGraph& g)
{
    require_connected_bridge_free(g);
    // Column of edge e in the fundamental-cycle matrix over GF(2): the cycles
    // of the basis through e. Equal columns <=> same cycles.
    const auto cs = cycle_space(g);
    std::map<std::vector<bool>, EdgeSet> by_column;
    std::vector<std::vector<bool>> column(g.num_edges(), std::vector<bool>(cs.basis.size(), false));
    for (std::size_t i = 0; i < cs.basis.size(); ++i)
        for (int e : cs.basis[i].indices()) column[e][i] = true;
    for (int e = 0; e < g.num_edges(); ++e) by_column[column[e]].insert(e);

    C1Partition blocks;
    for (const auto& [col, block] : by_column) blocks.push_back(block);
    std::sort(blocks.begin(), blocks.end(),
              [](EdgeSet a, EdgeSet b) { return a.indices().front() < b.indices().front(); });
    return blocks;
}

SupportStream::SupportStream(const DecGraph& g, const Limits& limits) : g_(&g), m_(g.num_edges())
{
    require_connected_bridge_free(g);
    if (m_ > limits.max_edges) throw CapExceeded("too many edges to enumerate supports");
}

bool SupportStream::advance()
{
    if (!started_) {
        started_ = true;
        k_ = 0;
        comb_.clear();
        return true;
    }
    // Next k-combination in lexicographic order, else move to size k+1.
    int i = k_ - 1;
    while (i >= 0 && comb_[i] == m_ - k_ + i) --i;
    if (i >= 0) {
        ++comb_[i];
        for (int j = i + 1; j < k_; ++j) comb_[j] = comb_[j - 1] + 1;
        return true;
    }
    if (k_ == m_) return false;
    ++k_;
    comb_.resize(k_);
    for (int j = 0; j < k_; ++j) comb_[j] = j;
    return true;
}

std::optional<EdgeSet> SupportStream::next()
{
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        EdgeSet s;
        for (int e : comb_) s.insert(e);
        if (is_support(*g_, s)) return s;
    }
    return std::nullopt;
}

std::vector<EdgeSet> sp_elements(const DecGraph& g, const Limits& limits)
{
    SupportStream stream(g, limits);
    std::vector<EdgeSet> out;
    while (auto s = stream.next()) out.push_back(*s);
    return out;
}

Poset sp_poset(const DecGraph& g, const Limits& limits)
{
    const auto elems = sp_elements(g, limits);
    const int n = static_cast<int>(elems.size());
    std::vector<std::string> ids;
    std::vector<std::string> labels;
    for (auto s : elems) {
        ids.push_back("S:" + format_edge_set(g, s));
        labels.push_back(format_edge_set(g, s) + " | codim " + std::to_string(codim(g, s)));
    }
    std::vector<std::vector<char>> geq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) geq[i][j] = elems[i].subset_of(elems[j]) ? 1 : 0;
    return Poset(std::move(ids), std::move(labels), std::move(geq));
}

}  // namespace torelli
