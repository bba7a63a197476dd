#include <algorithm>

#include "dp_common.hpp"

namespace eptas {
namespace dpimpl {

namespace {

// status bytes: vc/pvc 0 = out, 1 = in; ds 0 = in, 1 = out dominated,
// 2 = out not yet dominated. partial-vc keys carry a 4-byte clamped covered
// count after the statuses.

uint32_t read_count(const Key& k, int nstat) {
    return static_cast<uint32_t>(k[nstat]) | (static_cast<uint32_t>(k[nstat + 1]) << 8) |
           (static_cast<uint32_t>(k[nstat + 2]) << 16) | (static_cast<uint32_t>(k[nstat + 3]) << 24);
}

void write_count(Key& k, int nstat, uint32_t c) {
    k[nstat] = c & 0xff;
    k[nstat + 1] = (c >> 8) & 0xff;
    k[nstat + 2] = (c >> 16) & 0xff;
    k[nstat + 3] = (c >> 24) & 0xff;
}

}  // namespace

RunResult run_subset(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                     const DpBudget& budget) {
    const AnnotatedTag tag = inst.tag;
    const bool is_ds = tag == AnnotatedTag::DsAnnotated;
    const bool is_pvc = tag == AnnotatedTag::PartialVc;
    const uint32_t t = is_pvc ? static_cast<uint32_t>(*inst.budget) : 0;
    const int extra = is_pvc ? 4 : 0;

    for (const auto& nd : ntd.nodes)
        if (static_cast<int>(nd.bag.size()) > budget.max_bag_subset)
            throw WidthOverBudget("bag too large for subset dp", ntd.width(),
                                  static_cast<size_t>(1) << ntd.width());

    RunResult run;
    run.tables.resize(ntd.nodes.size());

    auto apply_folds = [&](const NiceTreeDecomposition::Node& nd, Key& key) -> bool {
        int nstat = static_cast<int>(nd.bag.size());
        for (auto [u, w] : nd.edges) {
            int pu = bag_position(nd.bag, u);
            int pw = bag_position(nd.bag, w);
            if (is_ds) {
                if (key[pu] == 0 && key[pw] == 2) key[pw] = 1;
                if (key[pw] == 0 && key[pu] == 2) key[pu] = 1;
            } else if (is_pvc) {
                if (key[pu] == 1 || key[pw] == 1)
                    write_count(key, nstat, std::min(read_count(key, nstat) + 1, t));
            } else {
                if (key[pu] == 0 && key[pw] == 0) return false;
            }
        }
        return true;
    };

    for (int id : ntd.postorder()) {
        const auto& nd = ntd.nodes[id];
        TableBuilder builder(true, budget.state_cap);
        switch (nd.kind) {
            case NiceTreeDecomposition::NodeKind::Leaf: {
                Key k;
                if (is_pvc) {
                    k.resize(4);
                    write_count(k, 0, 0);
                }
                builder.offer(std::move(k), Entry{0, -1, -1, {}});
                break;
            }
            case NiceTreeDecomposition::NodeKind::Introduce: {
                const Table& child = run.tables[nd.left];
                int p = bag_position(nd.bag, nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    const auto& [ckey, centry] = child[ci];
                    // out
                    {
                        Key k = ckey;
                        uint8_t status = is_ds ? (inst.anchors.contains(nd.vertex) ? 1 : 2) : 0;
                        k.insert(k.begin() + p, status);
                        if (apply_folds(nd, k))
                            builder.offer(std::move(k), Entry{centry.value, ci, -1, {0}});
                    }
                    // in
                    {
                        Key k = ckey;
                        k.insert(k.begin() + p, is_ds ? 0 : 1);
                        if (apply_folds(nd, k))
                            builder.offer(std::move(k), Entry{centry.value + 1, ci, -1, {1}});
                    }
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Forget: {
                const Table& child = run.tables[nd.left];
                const auto& cbag = ntd.nodes[nd.left].bag;
                int p = bag_position(cbag, nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    const auto& [ckey, centry] = child[ci];
                    if (is_ds && ckey[p] == 2) continue;  // left undominated
                    Key k = ckey;
                    k.erase(k.begin() + p);
                    builder.offer(std::move(k), Entry{centry.value, ci, -1, {}});
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Join: {
                const Table& left = run.tables[nd.left];
                const Table& right = run.tables[nd.right];
                int nstat = static_cast<int>(nd.bag.size());
                auto hard = [&](const Key& k) {
                    Key h(k.begin(), k.begin() + nstat);
                    if (is_ds)
                        for (auto& b : h) b = b == 0 ? 0 : 1;
                    return h;
                };
                std::map<Key, std::vector<int>> groups;
                for (int i = 0; i < static_cast<int>(right.size()); ++i)
                    groups[hard(right[i].first)].push_back(i);
                for (int li = 0; li < static_cast<int>(left.size()); ++li) {
                    const auto& [lkey, lentry] = left[li];
                    auto git = groups.find(hard(lkey));
                    if (git == groups.end()) continue;
                    long long in_count = 0;
                    for (int p = 0; p < nstat; ++p)
                        if (lkey[p] == (is_ds ? 0 : 1)) ++in_count;
                    for (int ri : git->second) {
                        const auto& [rkey, rentry] = right[ri];
                        Key k(nstat + extra, 0);
                        for (int p = 0; p < nstat; ++p)
                            k[p] = is_ds ? std::min(lkey[p], rkey[p]) : lkey[p];
                        if (is_pvc)
                            write_count(k, nstat,
                                        std::min(read_count(lkey, nstat) + read_count(rkey, nstat), t));
                        builder.offer(std::move(k),
                                      Entry{lentry.value + rentry.value - in_count, li, ri, {}});
                    }
                }
                break;
            }
        }
        run.tables[id] = builder.finalize();
        run.peak_states = std::max(run.peak_states, run.tables[id].size());
        run.total_states += run.tables[id].size();
    }

    // root bag is empty
    const Table& root = run.tables[ntd.root];
    for (int i = 0; i < static_cast<int>(root.size()); ++i) {
        const auto& [k, e] = root[i];
        if (is_pvc && read_count(k, 0) != t) continue;
        if (!run.feasible || e.value < run.value) {
            run.feasible = true;
            run.value = e.value;
            run.root_entry = i;
        }
    }
    return run;
}

}  // namespace dpimpl
}  // namespace eptas
