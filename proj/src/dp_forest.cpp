#include <algorithm>

#include "dp_common.hpp"

namespace eptas {
namespace dpimpl {

// Maximum induced forest. Status byte per bag position: 0 = outside the
// forest, otherwise the canonical block id of the forest component the
// vertex is traced to. States whose selected edges would close a cycle are
// dropped rather than stored.
RunResult run_forest(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                     const DpBudget& budget) {
    (void)inst;
    for (const auto& nd : ntd.nodes)
        if (static_cast<int>(nd.bag.size()) > budget.max_bag_partition)
            throw WidthOverBudget("bag too large for forest dp", ntd.width(), 0);

    RunResult run;
    run.tables.resize(ntd.nodes.size());

    auto apply_folds = [&](const NiceTreeDecomposition::Node& nd, Key& key) -> bool {
        for (auto [u, w] : nd.edges) {
            int pu = bag_position(nd.bag, u);
            int pw = bag_position(nd.bag, w);
            if (key[pu] == 0 || key[pw] == 0) continue;
            if (key[pu] == key[pw]) return false;  // cycle inside the forest
            uint8_t from = key[pw], to = key[pu];
            for (auto& b : key)
                if (b == from) b = to;
        }
        canonicalize_blocks(key);
        return true;
    };

    for (int id : ntd.postorder()) {
        const auto& nd = ntd.nodes[id];
        TableBuilder builder(false, budget.state_cap);
        switch (nd.kind) {
            case NiceTreeDecomposition::NodeKind::Leaf:
                builder.offer(Key{}, Entry{0, -1, -1, {}});
                break;
            case NiceTreeDecomposition::NodeKind::Introduce: {
                const Table& child = run.tables[nd.left];
                int p = bag_position(nd.bag, nd.vertex);
                for (int ci = 0; ci < static_cast<int>(child.size()); ++ci) {
                    const auto& [ckey, centry] = child[ci];
                    {
                        Key k = ckey;
                        k.insert(k.begin() + p, 0);
                        if (apply_folds(nd, k))
                            builder.offer(std::move(k), Entry{centry.value, ci, -1, {0}});
                    }
                    {
                        Key k = ckey;
                        k.insert(k.begin() + p, 255);  // fresh block, canonicalized below
                        canonicalize_blocks(k);
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
                    Key k = child[ci].first;
                    k.erase(k.begin() + p);
                    canonicalize_blocks(k);
                    builder.offer(std::move(k), Entry{child[ci].second.value, ci, -1, {}});
                }
                break;
            }
            case NiceTreeDecomposition::NodeKind::Join: {
                const Table& left = run.tables[nd.left];
                const Table& right = run.tables[nd.right];
                int nstat = static_cast<int>(nd.bag.size());
                auto hard = [&](const Key& k) {
                    Key h = k;
                    for (auto& b : h) b = b ? 1 : 0;
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
                        if (lkey[p]) ++in_count;
                    for (int ri : git->second) {
                        const auto& [rkey, rentry] = right[ri];
                        // merge two forests over the shared selected set; any
                        // union of already-connected vertices closes a cycle
                        MiniUf uf(nstat);
                        bool ok = true;
                        for (const Key* kptr : {&lkey, &rkey}) {
                            const Key& kk = *kptr;
                            for (int a = 0; a < nstat && ok; ++a) {
                                if (kk[a] == 0) continue;
                                for (int b = a + 1; b < nstat; ++b)
                                    if (kk[b] == kk[a]) {
                                        if (!uf.unite(a, b)) {
                                            ok = false;
                                        }
                                        break;  // chain consecutive members
                                    }
                            }
                            if (!ok) break;
                        }
                        if (!ok) continue;
                        Key k(nstat, 0);
                        for (int p = 0; p < nstat; ++p)
                            if (lkey[p]) k[p] = static_cast<uint8_t>(uf.find(p) + 1);
                        canonicalize_blocks(k);
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
