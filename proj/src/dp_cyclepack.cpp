#include <algorithm>

#include "dp_common.hpp"

namespace eptas {
namespace dpimpl {

namespace {

// Degree of each bag vertex in the chosen edge set (0, 1, or 2) plus the
// pairing of degree-1 vertices into open path fragments. Both endpoints of a
// fragment stay in the bag; a vertex may only be forgotten with degree 0
// or 2. The completed-cycle count lives in the entry value.
struct CpState {
    std::vector<uint8_t> deg;
    std::vector<int> partner;  // position index, -1 if none

    Key encode() const {
        Key k = deg;
        for (size_t p = 0; p < deg.size(); ++p)
            if (deg[p] == 1) k.push_back(static_cast<uint8_t>(partner[p]));
        return k;
    }

    static CpState decode(const Key& k, int nstat) {
        CpState st;
        st.deg.assign(k.begin(), k.begin() + nstat);
        st.partner.assign(nstat, -1);
        int at = nstat;
        for (int p = 0; p < nstat; ++p)
            if (st.deg[p] == 1) st.partner[p] = k[at++];
        return st;
    }

    void insert_position(int p) {
        deg.insert(deg.begin() + p, 0);
        partner.insert(partner.begin() + p, -1);
        for (auto& q : partner)
            if (q >= p) ++q;
        // the freshly inserted slot must not shift itself
        partner[p] = -1;
    }

    void erase_position(int p) {
        deg.erase(deg.begin() + p);
        partner.erase(partner.begin() + p);
        for (auto& q : partner)
            if (q > p) --q;
    }
};

struct CpCandidate {
    CpState st;
    long long value;
    std::vector<uint8_t> blob;
};

}  // namespace

RunResult run_cyclepack(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                        const DpBudget& budget) {
    (void)inst;
    for (const auto& nd : ntd.nodes)
        if (static_cast<int>(nd.bag.size()) > budget.max_bag_partition)
            throw WidthOverBudget("bag too large for cycle-packing dp", ntd.width(), 0);

    RunResult run;
    run.tables.resize(ntd.nodes.size());

    // branch over take/skip for each edge folded at this node
    auto apply_folds = [&](const NiceTreeDecomposition::Node& nd, CpCandidate start)
        -> std::vector<CpCandidate> {
        std::vector<CpCandidate> cur = {std::move(start)};
        for (auto [u, w] : nd.edges) {
            int pu = bag_position(nd.bag, u);
            int pw = bag_position(nd.bag, w);
            std::vector<CpCandidate> next;
            for (auto& cand : cur) {
                {
                    CpCandidate skip = cand;
                    skip.blob.push_back(0);
                    next.push_back(std::move(skip));
                }
                if (cand.st.deg[pu] <= 1 && cand.st.deg[pw] <= 1) {
                    CpCandidate take = cand;
                    take.blob.push_back(1);
                    auto& st = take.st;
                    uint8_t du = st.deg[pu], dw = st.deg[pw];
                    if (du == 0 && dw == 0) {
                        st.deg[pu] = st.deg[pw] = 1;
                        st.partner[pu] = pw;
                        st.partner[pw] = pu;
                    } else if (du == 0) {
                        int b = st.partner[pw];
                        st.deg[pu] = 1;
                        st.deg[pw] = 2;
                        st.partner[pu] = b;
                        st.partner[b] = pu;
                        st.partner[pw] = -1;
                    } else if (dw == 0) {
                        int a = st.partner[pu];
                        st.deg[pw] = 1;
                        st.deg[pu] = 2;
                        st.partner[pw] = a;
                        st.partner[a] = pw;
                        st.partner[pu] = -1;
                    } else if (st.partner[pu] == pw) {  // closes a cycle
                        st.deg[pu] = st.deg[pw] = 2;
                        st.partner[pu] = st.partner[pw] = -1;
                        ++take.value;
                    } else {  // concatenate two fragments
                        int a = st.partner[pu], b = st.partner[pw];
                        st.deg[pu] = st.deg[pw] = 2;
                        st.partner[a] = b;
                        st.partner[b] = a;
                        st.partner[pu] = st.partner[pw] = -1;
                    }
                    next.push_back(std::move(take));
                }
            }
            cur = std::move(next);
        }
        return cur;
    };

    for (int id : ntd.postorder()) {
        const auto& nd = ntd.nodes[id];
        TableBuilder builder(false, budget.state_cap);
        int nstat = static_cast<int>(nd.bag.size());
        switch (nd.kind) {
            case NiceTreeDecomposition::NodeKind::Leaf:
                builder.offer(Key{}, Entry{0, -1, -1, {}});
                break;
            case NiceTreeDecomposition::NodeKind::Introduce: {
                const Table& child = run.tables[nd.left];
                int p = bag_position(nd.bag, nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    CpState st = CpState::decode(child[ci].first, nstat - 1);
                    st.insert_position(p);
                    for (auto& cand :
                         apply_folds(nd, CpCandidate{std::move(st), child[ci].second.value, {}}))
                        builder.offer(cand.st.encode(),
                                      Entry{cand.value, ci, -1, std::move(cand.blob)});
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Forget: {
                const Table& child = run.tables[nd.left];
                const auto& cbag = ntd.nodes[nd.left].bag;
                int p = bag_position(cbag, nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    CpState st = CpState::decode(child[ci].first, nstat + 1);
                    if (st.deg[p] == 1) continue;  // open fragment would dangle
                    st.erase_position(p);
                    builder.offer(st.encode(), Entry{child[ci].second.value, ci, -1, {}});
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Join: {
                const Table& left = run.tables[nd.left];
                const Table& right = run.tables[nd.right];
                for (int li = 0; li < static_cast<int>(left.size()); ++li) {
                    CpState ls = CpState::decode(left[li].first, nstat);
                    for (int ri = 0; ri < static_cast<int>(right.size()); ++ri) {
                        CpState rs = CpState::decode(right[ri].first, nstat);
                        bool ok = true;
                        for (int p = 0; p < nstat && ok; ++p)
                            if (ls.deg[p] + rs.deg[p] > 2) ok = false;
                        if (!ok) continue;
                        // merge the two fragment matchings: paths become new
                        // fragments, closed loops become completed cycles
                        struct Link {
                            int to;
                            int lid;
                        };
                        std::vector<std::vector<Link>> links(nstat);
                        int lid = 0;
                        for (const CpState* side : {&ls, &rs})
                            for (int p = 0; p < nstat; ++p)
                                if (side->deg[p] == 1 && side->partner[p] > p) {
                                    links[p].push_back({side->partner[p], lid});
                                    links[side->partner[p]].push_back({p, lid});
                                    ++lid;
                                }
                        CpState st;
                        st.deg.assign(nstat, 0);
                        st.partner.assign(nstat, -1);
                        for (int p = 0; p < nstat; ++p)
                            st.deg[p] = static_cast<uint8_t>(ls.deg[p] + rs.deg[p]);
                        std::vector<char> used_link(lid, 0);
                        long long loops = 0;
                        // open paths first
                        for (int p = 0; p < nstat; ++p) {
                            if (links[p].size() != 1 || used_link[links[p][0].lid]) continue;
                            int cur = p, in_lid = -1;
                            for (;;) {
                                int nxt = -1, nxt_lid = -1;
                                for (const Link& l : links[cur])
                                    if (l.lid != in_lid && !used_link[l.lid]) {
                                        nxt = l.to;
                                        nxt_lid = l.lid;
                                        break;
                                    }
                                if (nxt < 0) break;
                                used_link[nxt_lid] = 1;
                                in_lid = nxt_lid;
                                cur = nxt;
                            }
                            st.partner[p] = cur;
                            st.partner[cur] = p;
                        }
                        // everything left with unused links sits on loops
                        for (int p = 0; p < nstat; ++p)
                            for (const Link& l : links[p])
                                if (!used_link[l.lid]) {
                                    int cur = p, in_lid = -1;
                                    for (;;) {
                                        int nxt = -1, nxt_lid = -1;
                                        for (const Link& ll : links[cur])
                                            if (ll.lid != in_lid && !used_link[ll.lid]) {
                                                nxt = ll.to;
                                                nxt_lid = ll.lid;
                                                break;
                                            }
                                        if (nxt < 0) break;
                                        used_link[nxt_lid] = 1;
                                        in_lid = nxt_lid;
                                        cur = nxt;
                                    }
                                    ++loops;
                                }
                        builder.offer(st.encode(),
                                      Entry{left[li].second.value + right[ri].second.value + loops,
                                            li, ri, {}});
                    }
                }
                break;
            }
        }
        run.tables[id] = builder.finalize();
        run.peak_states = std::max(run.peak_states, run.tables[id].size());
        run.total_states += run.tables[id].size();
    }

    const Table& root = run.tables[ntd.root];
    for (int i = 0; i < static_cast<int>(root.size()); ++i)
        if (!run.feasible || root[i].second.value > run.value) {
            run.feasible = true;
            run.value = root[i].second.value;
            run.root_entry = i;
        }
    return run;
}

}  // namespace dpimpl
}  // namespace eptas
