#ifndef EPTAS_DP_COMMON_HPP
#define EPTAS_DP_COMMON_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "eptas/dp.hpp"
#include "eptas/problems.hpp"
#include "eptas/treewidth.hpp"

namespace eptas {
namespace dpimpl {

using Key = std::vector<uint8_t>;

struct Entry {
    long long value = 0;
    int child1 = -1;  // entry index in the child table(s)
    int child2 = -1;
    std::vector<uint8_t> blob;  // local decisions, consumed by reconstruction
};

using Table = std::vector<std::pair<Key, Entry>>;

/// Keeps the best entry per key; ties keep the first offer, so results are
/// deterministic given a deterministic offer order.
class TableBuilder {
public:
    TableBuilder(bool minimize, size_t cap) : minimize_(minimize), cap_(cap) {}

    void offer(Key key, Entry entry) {
        auto it = map_.find(key);
        if (it == map_.end()) {
            if (map_.size() >= cap_) throw WidthOverBudget("dp state cap exceeded", -1, map_.size());
            map_.emplace(std::move(key), std::move(entry));
        } else if (minimize_ ? entry.value < it->second.value : entry.value > it->second.value) {
            it->second = std::move(entry);
        }
    }

    Table finalize() {
        Table t(map_.begin(), map_.end());
        map_.clear();
        return t;
    }

    size_t size() const { return map_.size(); }

private:
    bool minimize_;
    size_t cap_;
    std::map<Key, Entry> map_;
};

inline int bag_position(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

/// Relabels block ids (1-based, 0 = no block) in first-occurrence order.
inline void canonicalize_blocks(std::vector<uint8_t>& ids) {
    std::vector<uint8_t> remap(256, 0);
    uint8_t next = 1;
    for (auto& b : ids) {
        if (b == 0) continue;
        if (remap[b] == 0) remap[b] = next++;
        b = remap[b];
    }
}

struct MiniUf {
    std::vector<int> parent;
    explicit MiniUf(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    // false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

struct RunResult {
    bool feasible = false;
    long long value = 0;
    int root_entry = -1;
    std::vector<Table> tables;  // indexed by node id
    size_t peak_states = 0;
    size_t total_states = 0;
};

// per-family solvers (dp_*.cpp)
RunResult run_subset(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                     const DpBudget& budget);
RunResult run_forest(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                     const DpBudget& budget);
RunResult run_connectivity(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                           const DpBudget& budget);
RunResult run_cyclepack(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                        const DpBudget& budget);

}  // namespace dpimpl
}  // namespace eptas

#endif
