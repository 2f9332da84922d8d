#include "torelli/detail/match.hpp"

#include <algorithm>

namespace torelli::detail {

bool components_compatible(const MarkedComponent& a, const MarkedComponent& b)
{
    if (a.genus != b.genus || a.points.size() != b.points.size()) return false;
    if (a.genus > 0 && a.iso_label != b.iso_label) return false;
    return *a.group == *b.group;
}

std::vector<int> node_blocks(const CombCurve& x)
{
    std::vector<int> block(x.num_points(), -1);
    int next = x.num_nodes();
    for (int p = 0; p < x.num_points(); ++p) block[p] = x.node_of(p) >= 0 ? x.node_of(p) : next++;
    return block;
}

namespace {

struct State {
    std::vector<int> comp_map;
    std::vector<int> comp_inv;
    std::vector<int> point_map;
    std::vector<int> point_inv;
    std::vector<std::vector<int>> alive;  // surviving explicit group elements per src component
    std::vector<int> block_map;
    std::vector<int> block_inv;
};

class Search {
public:
    Search(const MatchProblem& pr, const std::function<bool(const std::vector<int>&)>& visit)
        : pr_(pr), src_(*pr.src), dst_(*pr.dst), visit_(visit)
    {
        int nb = 0;
        for (int b : pr.src_block) nb = std::max(nb, b + 1);
        src_block_size_.assign(nb, 0);
        for (int b : pr.src_block)
            if (b >= 0) ++src_block_size_[b];
        int mb = 0;
        for (int b : pr.dst_block) mb = std::max(mb, b + 1);
        dst_members_.assign(mb, {});
        for (int p = 0; p < dst_.num_points(); ++p)
            if (pr.dst_block[p] >= 0) dst_members_[pr.dst_block[p]].push_back(p);
    }

    bool run()
    {
        if (src_.num_points() != dst_.num_points() || src_.num_components() != dst_.num_components())
            return false;
        State st;
        st.comp_map.assign(src_.num_components(), -1);
        st.comp_inv.assign(dst_.num_components(), -1);
        st.point_map.assign(src_.num_points(), -1);
        st.point_inv.assign(dst_.num_points(), -1);
        st.alive.assign(src_.num_components(), {});
        st.block_map.assign(src_block_size_.size(), -1);
        st.block_inv.assign(dst_members_.size(), -1);
        for (auto [p, q] : pr_.fixed)
            if (!assign(st, p, q)) return false;
        return recurse(st);
    }

private:
    bool assign(State& st, int p, int q) const
    {
        if (st.point_map[p] != -1) return st.point_map[p] == q;
        if (st.point_inv[q] != -1) return false;
        const auto [c, kp] = src_.point(p);
        const auto [d, kq] = dst_.point(q);
        if (st.comp_map[c] == -1) {
            if (st.comp_inv[d] != -1) return false;
            if (!components_compatible(src_.components()[c], dst_.components()[d])) return false;
            st.comp_map[c] = d;
            st.comp_inv[d] = c;
            const auto& grp = *src_.components()[c].group;
            if (!grp.is_full()) {
                st.alive[c].resize(grp.elements().size());
                for (std::size_t i = 0; i < grp.elements().size(); ++i) st.alive[c][i] = static_cast<int>(i);
            }
        } else if (st.comp_map[c] != d) {
            return false;
        }
        const auto& grp = *src_.components()[c].group;
        if (!grp.is_full()) {
            auto& al = st.alive[c];
            std::erase_if(al, [&](int i) { return grp.elements()[i][kp] != kq; });
            if (al.empty()) return false;
        }

        const int bq = pr_.dst_block[q];
        if (pr_.pair_ok) {
            if (bq >= 0)
                for (int other : dst_members_[bq]) {
                    const int r = st.point_inv[other];
                    if (r != -1 && !pr_.pair_ok(r, p)) return false;
                }
        } else {
            const int bp = pr_.src_block[p];
            if ((bp < 0) != (bq < 0)) return false;
            if (bp >= 0) {
                if (st.block_map[bp] == -1 && st.block_inv[bq] == -1) {
                    if (src_block_size_[bp] != static_cast<int>(dst_members_[bq].size())) return false;
                    st.block_map[bp] = bq;
                    st.block_inv[bq] = bp;
                } else if (st.block_map[bp] != bq || st.block_inv[bq] != bp) {
                    return false;
                }
            }
        }
        st.point_map[p] = q;
        st.point_inv[q] = p;
        return true;
    }

    bool finish(State& st) const
    {
        // Components without points: match greedily, compatibility is an equivalence.
        for (int c = 0; c < src_.num_components(); ++c) {
            if (st.comp_map[c] != -1) continue;
            bool found = false;
            for (int d = 0; d < dst_.num_components() && !found; ++d)
                if (st.comp_inv[d] == -1 &&
                    components_compatible(src_.components()[c], dst_.components()[d])) {
                    st.comp_map[c] = d;
                    st.comp_inv[d] = c;
                    found = true;
                }
            if (!found) return false;
        }
        return visit_(st.point_map);
    }

    bool recurse(State& st) const
    {
        int best = -1;
        std::vector<int> best_cands;
        for (int p = 0; p < src_.num_points(); ++p) {
            if (st.point_map[p] != -1) continue;
            std::vector<int> cands;
            for (int q = 0; q < dst_.num_points(); ++q) {
                if (st.point_inv[q] != -1) continue;
                State trial = st;
                if (assign(trial, p, q)) cands.push_back(q);
            }
            if (cands.empty()) return false;
            if (best == -1 || cands.size() < best_cands.size()) {
                best = p;
                best_cands = std::move(cands);
                if (best_cands.size() == 1) break;
            }
        }
        if (best == -1) {
            State done = st;
            return finish(done);
        }
        for (int q : best_cands) {
            State next = st;
            if (assign(next, best, q) && recurse(next)) return true;
        }
        return false;
    }

    const MatchProblem& pr_;
    const CombCurve& src_;
    const CombCurve& dst_;
    const std::function<bool(const std::vector<int>&)>& visit_;
    std::vector<int> src_block_size_;
    std::vector<std::vector<int>> dst_members_;
};

}  // namespace

bool for_each_match(const MatchProblem& problem,
                    const std::function<bool(const std::vector<int>&)>& visit)
{
    return Search(problem, visit).run();
}

}  // namespace torelli::detail
