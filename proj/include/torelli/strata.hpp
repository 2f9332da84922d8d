#pragma once

#include "torelli/errors.hpp"
#include "torelli/graph.hpp"
#include "torelli/orientation.hpp"
#include "torelli/poset.hpp"

#include <string>
#include <vector>

namespace torelli {

/// Stratum of the compactified Picard variety in degree g-1: a support S and
/// a stable multidegree on G minus S.
struct Stratum {
    EdgeSet support;
    Multidegree degree;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct StrataPoset {
    std::vector<Stratum> strata;
    Poset poset;
};

/// Stable node id "S:{e1,e2}|d:(0,1)".
std::string stratum_id(const DecGraph& g, const Stratum& s);
/// Display label "({e1} | (0,0) | 1)": support, multidegree, dimension.
std::string stratum_label(const DecGraph& g, const Stratum& s);

/// All strata, ordered by support (shortlex) then multidegree (lexicographic).
/// Requires g connected and bridge-free.
std::vector<Stratum> st_elements(const DecGraph& g, const Limits& limits = {});

/// Strata ordered through the orientation-class poset: (S,d) >= (T,e) iff
/// totally cyclic orientations with those multidegrees restrict one to the other.
StrataPoset st_poset(const DecGraph& g, const Limits& limits = {});

int stratum_codim(const DecGraph& g, const Stratum& s);
/// g - b1(Gamma(S)).
int stratum_dim(const DecGraph& g, const Stratum& s);
/// g - #S + gamma_S - 1, gamma_S the number of components of G minus S.
int stratum_dim_from_components(const DecGraph& g, const Stratum& s);

struct SupportMapReport {
    std::vector<EdgeSet> supports;         // sp_elements order
    std::vector<int> support_of_stratum;   // index into `supports`
    bool surjective = false;
    bool quotient = false;                 // S >= T iff some (S,d) >= (T,e)
};

SupportMapReport support_map(const DecGraph& g, const Limits& limits = {});

/// (all edges, genus(v) - 1 per vertex). Throws std::logic_error if it fails
/// to lie below every stratum.
Stratum smallest_stratum(const DecGraph& g, const Limits& limits = {});

/// Connected components of G minus S with positive arithmetic genus.
int theta_components(const DecGraph& g, const Stratum& s);

}  // namespace torelli
