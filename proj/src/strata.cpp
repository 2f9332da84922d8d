#include "torelli/strata.hpp"

#include "torelli/c1.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

std::string stratum_id(const DecGraph& g, const Stratum& s)
{
    return "S:" + format_edge_set(g, s.support) + "|d:" + format_degree_tuple(s.degree);
}

std::string stratum_label(const DecGraph& g, const Stratum& s)
{
    return "(" + format_edge_set(g, s.support) + " | " + format_degree_tuple(s.degree) + " | " +
           std::to_string(stratum_dim(g, s)) + ")";
}

std::vector<Stratum> st_elements(const DecGraph& g, const Limits& limits)
{
    std::vector<Stratum> out;
    for (auto s : sp_elements(g, limits))
        for (auto& d : stable_multidegrees(delete_edges(g, s), limits)) out.push_back({s, std::move(d)});
    return out;
}

StrataPoset st_poset(const DecGraph& g, const Limits& limits)
{
    StrataPoset out;
    out.strata = st_elements(g, limits);
    const auto classes = opbar_poset(g, limits);

    // Transport the class order along [phi_S] -> (S, d(phi_S)).
    const int n = static_cast<int>(out.strata.size());
    std::vector<int> stratum_of_class(classes.classes.size(), -1);
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        const Stratum st{classes.classes[c].support, multidegree_of(g, classes.representatives[c])};
        auto it = std::find(out.strata.begin(), out.strata.end(), st);
        if (it == out.strata.end()) throw std::logic_error("orientation class without stratum");
        stratum_of_class[c] = static_cast<int>(it - out.strata.begin());
    }
    if (static_cast<int>(classes.classes.size()) != n)
        throw std::logic_error("orientation classes and strata differ in number");

    std::vector<std::vector<char>> geq(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (classes.poset.geq(a, b)) geq[stratum_of_class[a]][stratum_of_class[b]] = 1;

    std::vector<std::string> ids;
    std::vector<std::string> labels;
    for (const auto& s : out.strata) {
        ids.push_back(stratum_id(g, s));
        labels.push_back(stratum_label(g, s));
    }
    out.poset = Poset(std::move(ids), std::move(labels), std::move(geq));
    return out;
}

int stratum_codim(const DecGraph& g, const Stratum& s)
{
    return codim(g, s.support);
}

int stratum_dim(const DecGraph& g, const Stratum& s)
{
    return curve_genus(g) - codim(g, s.support);
}

int stratum_dim_from_components(const DecGraph& g, const Stratum& s)
{
    const int gamma_s = num_components(g, g.all_edges().minus(s.support));
    return curve_genus(g) - s.support.size() + gamma_s - 1;
}

SupportMapReport support_map(const DecGraph& g, const Limits& limits)
{
    SupportMapReport rep;
    rep.supports = sp_elements(g, limits);
    const auto st = st_poset(g, limits);
    const int k = static_cast<int>(rep.supports.size());
    std::vector<bool> hit(k, false);
    for (const auto& s : st.strata) {
        const int idx = static_cast<int>(std::find(rep.supports.begin(), rep.supports.end(), s.support) -
                                         rep.supports.begin());
        rep.support_of_stratum.push_back(idx);
        if (idx < k) hit[idx] = true;
    }
    rep.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    std::vector<std::vector<char>> lifted(k, std::vector<char>(k, 0));
    const int n = st.poset.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (st.poset.geq(a, b)) lifted[rep.support_of_stratum[a]][rep.support_of_stratum[b]] = 1;
    rep.quotient = true;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (rep.supports[i].subset_of(rep.supports[j]) != (lifted[i][j] != 0)) rep.quotient = false;
    return rep;
}

Stratum smallest_stratum(const DecGraph& g, const Limits& limits)
{
    Stratum bottom{g.all_edges(), {}};
    for (const auto& v : g.vertices()) bottom.degree.push_back(v.genus - 1);
    const auto st = st_poset(g, limits);
    const auto it = std::find(st.strata.begin(), st.strata.end(), bottom);
    if (it == st.strata.end()) throw std::logic_error("smallest stratum missing from poset");
    const int idx = static_cast<int>(it - st.strata.begin());
    for (int i = 0; i < st.poset.size(); ++i)
        if (!st.poset.geq(i, idx)) throw std::logic_error("smallest stratum is not below every stratum");
    return bottom;
}

int theta_components(const DecGraph& g, const Stratum& s)
{
    const DecGraph y = delete_edges(g, s.support);
    int count = 0;
    for (const auto& block : connected_components(y))
        if (curve_genus(induced_subgraph(y, block)) > 0) ++count;
    return count;
}

}  // namespace torelli
