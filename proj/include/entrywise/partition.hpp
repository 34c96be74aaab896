#ifndef ENTRYWISE_PARTITION_HPP
#define ENTRYWISE_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace entrywise {

/// Disjoint-set forest with path compression, used to build partitions from
/// pairwise merge decisions.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::size_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Set partition of {0, ..., N-1} in canonical form: every block sorted
/// ascending, blocks ordered by smallest element.
class Partition {
public:
    Partition() = default;

    static Partition from_blocks(std::vector<std::vector<std::size_t>> blocks, std::size_t groundSize) {
        Partition p;
        p.ground_ = groundSize;
        p.blocks_ = std::move(blocks);
        p.canonicalize_and_validate();
        return p;
    }

    static Partition from_union_find(UnionFind& uf, std::size_t n) {
        std::vector<std::vector<std::size_t>> byRoot(n);
        for (std::size_t i = 0; i < n; ++i) byRoot[uf.find(i)].push_back(i);
        std::vector<std::vector<std::size_t>> blocks;
        for (auto& b : byRoot) {
            if (!b.empty()) blocks.push_back(std::move(b));
        }
        return from_blocks(std::move(blocks), n);
    }

    /// pi_vee, the partition into singletons (top of the refinement order).
    static Partition singletons(std::size_t n) {
        std::vector<std::vector<std::size_t>> blocks(n);
        for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
        return from_blocks(std::move(blocks), n);
    }

    /// pi_wedge, the one-block partition (bottom of the refinement order).
    static Partition one_block(std::size_t n) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        return from_blocks({std::move(all)}, n);
    }

    std::size_t size() const { return blocks_.size(); }
    std::size_t ground_size() const { return ground_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    const std::vector<std::size_t>& block(std::size_t k) const { return blocks_[k]; }

    std::size_t block_index_of(std::size_t element) const {
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), element)) return k;
        }
        throw std::out_of_range("Partition: element outside ground set");
    }

    bool operator==(const Partition& o) const { return ground_ == o.ground_ && blocks_ == o.blocks_; }

private:
    void canonicalize_and_validate() {
        std::vector<bool> seen(ground_, false);
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("Partition: empty block");
            std::sort(b.begin(), b.end());
            for (std::size_t e : b) {
                if (e >= ground_ || seen[e]) throw std::invalid_argument("Partition: blocks must partition the ground set");
                seen[e] = true;
            }
        }
        for (bool s : seen) {
            if (!s) throw std::invalid_argument("Partition: blocks must cover the ground set");
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    std::vector<std::vector<std::size_t>> blocks_;
    std::size_t ground_ = 0;
};

/// True iff every block of pi is contained in some block of piCoarse,
/// i.e. pi is a refinement of piCoarse (piCoarse <= pi in the poset).
inline bool refines(const Partition& pi, const Partition& piCoarse) {
    if (pi.ground_size() != piCoarse.ground_size()) {
        throw std::invalid_argument("refines: partitions of different ground sets");
    }
    for (const auto& b : pi.blocks()) {
        const std::size_t host = piCoarse.block_index_of(b.front());
        for (std::size_t e : b) {
            if (piCoarse.block_index_of(e) != host) return false;
        }
    }
    return true;
}

} // namespace entrywise

#endif // ENTRYWISE_PARTITION_HPP
