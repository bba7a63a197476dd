#include <algorithm>

#include "dp_common.hpp"

namespace eptas {
namespace dpimpl {

namespace {

// Shared state shape for the two connectivity DPs.
//
// cvc-annotated: status 0 = outside S', k >= 1 = selected, traced to block k.
// maxleaf-annotated: status 0 = selected and still owing an outside neighbor,
// 1 = selected and satisfied, k >= 2 = outside S' in complement block k-1.
//
// Both carry one anchor tag per block plus a closed-component counter used
// when the anchor set is empty (the unreduced problems demand a single
// component; anchored instances may close any number of tagged blocks).
struct ConnState {
    std::vector<uint8_t> status;
    std::vector<uint8_t> tags;  // per block, 1 = anchored
    uint8_t closed = 0;
};

struct Layout {
    bool maxleaf;
    uint8_t block_base;  // first status value that denotes a block

    int block_of(uint8_t s) const { return s >= block_base ? s - block_base + 1 : 0; }
    uint8_t status_of_block(int b) const { return static_cast<uint8_t>(b + block_base - 1); }
};

Key encode(const ConnState& st) {
    Key k = st.status;
    k.insert(k.end(), st.tags.begin(), st.tags.end());
    k.push_back(st.closed);
    return k;
}

ConnState decode(const Key& k, int nstat, const Layout& lay) {
    ConnState st;
    st.status.assign(k.begin(), k.begin() + nstat);
    int nblocks = 0;
    for (uint8_t s : st.status) nblocks = std::max(nblocks, lay.block_of(s));
    st.tags.assign(k.begin() + nstat, k.begin() + nstat + nblocks);
    st.closed = k[nstat + nblocks];
    return st;
}

// relabel blocks in first-occurrence order, permuting tags along
void canonicalize(ConnState& st, const Layout& lay) {
    std::vector<int> remap(st.tags.size() + 2, 0);
    std::vector<uint8_t> newtags;
    int next = 0;
    for (auto& s : st.status) {
        int b = lay.block_of(s);
        if (b == 0) continue;
        if (remap[b] == 0) {
            remap[b] = ++next;
            newtags.push_back(st.tags[b - 1]);
        }
        s = lay.status_of_block(remap[b]);
    }
    st.tags = std::move(newtags);
}

void merge_blocks(ConnState& st, const Layout& lay, int keep, int absorb) {
    if (keep == absorb) return;
    st.tags[keep - 1] |= st.tags[absorb - 1];
    for (auto& s : st.status)
        if (lay.block_of(s) == absorb) s = lay.status_of_block(keep);
}

}  // namespace

RunResult run_connectivity(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                           const DpBudget& budget) {
    const bool maxleaf = inst.tag == AnnotatedTag::MaxleafAnnotated;
    const bool anchored_mode = !inst.anchors.empty();
    const Layout lay{maxleaf, static_cast<uint8_t>(maxleaf ? 2 : 1)};
    const bool minimize = !maxleaf;

    for (const auto& nd : ntd.nodes)
        if (static_cast<int>(nd.bag.size()) > budget.max_bag_connectivity)
            throw WidthOverBudget("bag too large for connectivity dp", ntd.width(), 0);

    RunResult run;
    run.tables.resize(ntd.nodes.size());

    auto selected = [&](uint8_t s) { return maxleaf ? s <= 1 : s >= 1; };

    auto apply_folds = [&](const NiceTreeDecomposition::Node& nd, ConnState& st) -> bool {
        for (auto [u, w] : nd.edges) {
            int pu = bag_position(nd.bag, u);
            int pw = bag_position(nd.bag, w);
            uint8_t su = st.status[pu], sw = st.status[pw];
            if (!maxleaf) {
                if (su == 0 && sw == 0) return false;  // uncovered edge
                if (su >= 1 && sw >= 1) {
                    int a = lay.block_of(su), b = lay.block_of(sw);
                    merge_blocks(st, lay, std::min(a, b), std::max(a, b));
                }
            } else {
                bool sel_u = selected(su), sel_w = selected(sw);
                if (sel_u && !sel_w && st.status[pu] == 0) st.status[pu] = 1;
                if (sel_w && !sel_u && st.status[pw] == 0) st.status[pw] = 1;
                if (!sel_u && !sel_w) {
                    int a = lay.block_of(st.status[pu]), b = lay.block_of(st.status[pw]);
                    merge_blocks(st, lay, std::min(a, b), std::max(a, b));
                }
            }
        }
        canonicalize(st, lay);
        return true;
    };

    // forgetting position p; false drops the state
    auto forget_pos = [&](ConnState& st, int p) -> bool {
        uint8_t s = st.status[p];
        if (maxleaf && s == 0) return false;  // owes an outside neighbor
        int b = lay.block_of(s);
        st.status.erase(st.status.begin() + p);
        if (b > 0) {
            bool survives = false;
            for (uint8_t o : st.status)
                if (lay.block_of(o) == b) {
                    survives = true;
                    break;
                }
            if (!survives) {  // component closes for good
                if (anchored_mode) {
                    if (!st.tags[b - 1]) return false;
                } else {
                    if (st.closed >= 1) return false;
                    ++st.closed;
                }
            }
        }
        canonicalize(st, lay);
        return true;
    };

    for (int id : ntd.postorder()) {
        const auto& nd = ntd.nodes[id];
        TableBuilder builder(minimize, budget.state_cap);
        int nstat = static_cast<int>(nd.bag.size());
        switch (nd.kind) {
            case NiceTreeDecomposition::NodeKind::Leaf:
                builder.offer(encode(ConnState{}), Entry{0, -1, -1, {}});
                break;
            case NiceTreeDecomposition::NodeKind::Introduce: {
                const Table& child = run.tables[nd.left];
                int p = bag_position(nd.bag, nd.vertex);
                bool in_r = inst.anchors.contains(nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    ConnState base = decode(child[ci].first, nstat - 1, lay);
                    long long val = child[ci].second.value;
                    if (!maxleaf) {
                        {  // outside S'
                            ConnState st = base;
                            st.status.insert(st.status.begin() + p, 0);
                            if (apply_folds(nd, st))
                                builder.offer(encode(st), Entry{val, ci, -1, {0}});
                        }
                        {  // selected, fresh block
                            ConnState st = base;
                            st.tags.push_back(in_r ? 1 : 0);
                            st.status.insert(st.status.begin() + p,
                                             lay.status_of_block(static_cast<int>(st.tags.size())));
                            canonicalize(st, lay);
                            if (apply_folds(nd, st))
                                builder.offer(encode(st), Entry{val + 1, ci, -1, {1}});
                        }
                    } else {
                        {  // selected
                            ConnState st = base;
                            st.status.insert(st.status.begin() + p, in_r ? 1 : 0);
                            if (apply_folds(nd, st))
                                builder.offer(encode(st), Entry{val + 1, ci, -1, {1}});
                        }
                        {  // outside S', fresh complement block
                            ConnState st = base;
                            st.tags.push_back(in_r ? 1 : 0);
                            st.status.insert(st.status.begin() + p,
                                             lay.status_of_block(static_cast<int>(st.tags.size())));
                            canonicalize(st, lay);
                            if (apply_folds(nd, st))
                                builder.offer(encode(st), Entry{val, ci, -1, {0}});
                        }
                    }
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Forget: {
                const Table& child = run.tables[nd.left];
                const auto& cbag = ntd.nodes[nd.left].bag;
                int p = bag_position(cbag, nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    ConnState st = decode(child[ci].first, nstat + 1, lay);
                    if (!forget_pos(st, p)) continue;
                    builder.offer(encode(st), Entry{child[ci].second.value, ci, -1, {}});
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Join: {
                const Table& left = run.tables[nd.left];
                const Table& right = run.tables[nd.right];
                auto hard = [&](const Key& k) {
                    Key h(k.begin(), k.begin() + nstat);
                    for (auto& b : h) b = selected(b) ? 1 : 0;
                    return h;
                };
                std::map<Key, std::vector<int>> groups;
                for (int i = 0; i < static_cast<int>(right.size()); ++i)
                    groups[hard(right[i].first)].push_back(i);
                for (int li = 0; li < static_cast<int>(left.size()); ++li) {
                    ConnState ls = decode(left[li].first, nstat, lay);
                    auto git = groups.find(hard(left[li].first));
                    if (git == groups.end()) continue;
                    long long sel_count = 0;
                    for (uint8_t s : ls.status)
                        if (selected(s)) ++sel_count;
                    for (int ri : git->second) {
                        ConnState rs = decode(right[ri].first, nstat, lay);
                        int closed = ls.closed + rs.closed;
                        if (!anchored_mode && closed > 1) continue;
                        // union of the two block structures
                        MiniUf uf(nstat);
                        for (const ConnState* side : {&ls, &rs}) {
                            for (int a = 0; a < nstat; ++a) {
                                int b = lay.block_of(side->status[a]);
                                if (b == 0) continue;
                                for (int c = a + 1; c < nstat; ++c)
                                    if (lay.block_of(side->status[c]) == b) {
                                        uf.unite(a, c);
                                        break;
                                    }
                            }
                        }
                        ConnState st;
                        st.closed = static_cast<uint8_t>(closed);
                        st.status.assign(nstat, 0);
                        std::vector<int> root_block(nstat, 0);
                        int next = 0;
                        for (int p = 0; p < nstat; ++p) {
                            if (lay.block_of(ls.status[p]) == 0) {
                                // position is selected on both sides
                                st.status[p] =
                                    maxleaf ? std::max(ls.status[p], rs.status[p]) : 0;
                                continue;
                            }
                            int r = uf.find(p);
                            if (root_block[r] == 0) {
                                root_block[r] = ++next;
                                st.tags.push_back(0);
                            }
                            st.status[p] = lay.status_of_block(root_block[r]);
                            uint8_t tag = 0;
                            if (int b = lay.block_of(ls.status[p])) tag |= ls.tags[b - 1];
                            if (int b = lay.block_of(rs.status[p])) tag |= rs.tags[b - 1];
                            st.tags[root_block[r] - 1] |= tag;
                        }
                        canonicalize(st, lay);
                        builder.offer(encode(st),
                                      Entry{left[li].second.value + right[ri].second.value -
                                                sel_count,
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
    for (int i = 0; i < static_cast<int>(root.size()); ++i) {
        const auto& [k, e] = root[i];
        if (maxleaf && !anchored_mode && inst.graph.num_vertices() > 0) {
            ConnState st = decode(k, 0, lay);
            if (st.closed != 1) continue;
        }
        if (!run.feasible || (minimize ? e.value < run.value : e.value > run.value)) {
            run.feasible = true;
            run.value = e.value;
            run.root_entry = i;
        }
    }
    return run;
}

}  // namespace dpimpl
}  // namespace eptas
