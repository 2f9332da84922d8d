#include "torelli/poset.hpp"

#include <algorithm>
#include <sstream>

namespace torelli {

Poset::Poset(std::vector<std::string> ids, std::vector<std::string> labels,
             std::vector<std::vector<char>> geq)
    : ids_(std::move(ids)), labels_(std::move(labels)), geq_(std::move(geq))
{
    const int n = size();
    for (int i = 0; i < n; ++i) geq_[i][i] = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!greater(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < n && direct; ++k)
                if (k != i && k != j && greater(i, k) && greater(k, j)) direct = false;
            if (direct) covers_.emplace_back(i, j);
        }
    }
}

bool Poset::covers(int upper, int lower) const
{
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(upper, lower));
}

bool Poset::is_reflexive() const
{
    for (int i = 0; i < size(); ++i)
        if (!geq(i, i)) return false;
    return true;
}

bool Poset::is_antisymmetric() const
{
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (geq(i, j) && geq(j, i)) return false;
    return true;
}

bool Poset::is_transitive() const
{
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!geq(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (geq(j, k) && !geq(i, k)) return false;
        }
    return true;
}

std::optional<int> Poset::minimum() const
{
    for (int i = 0; i < size(); ++i) {
        bool below_all = true;
        for (int j = 0; j < size() && below_all; ++j) below_all = geq(j, i);
        if (below_all) return i;
    }
    return std::nullopt;
}

std::optional<int> Poset::maximum() const
{
    for (int i = 0; i < size(); ++i) {
        bool above_all = true;
        for (int j = 0; j < size() && above_all; ++j) above_all = geq(i, j);
        if (above_all) return i;
    }
    return std::nullopt;
}

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string export_dot(const Poset& p, const std::string& graph_name)
{
    std::ostringstream os;
    os << "digraph " << quoted(graph_name) << " {\n";
    os << "  rankdir=TB;\n";
    for (int i = 0; i < p.size(); ++i)
        os << "  " << quoted(p.id(i)) << " [label=" << quoted(p.label(i)) << "];\n";
    for (const auto& [upper, lower] : p.covers())
        os << "  " << quoted(p.id(upper)) << " -> " << quoted(p.id(lower)) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace torelli
