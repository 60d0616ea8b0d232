#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "parthom/ints.hpp"

namespace parthom {

/// Subset of [n] as a bit set: element i corresponds to bit i-1.
using Mask = std::uint32_t;

/// A nonempty subset of the ground set; the vertex type of the complex.
class Block {
public:
    explicit Block(Mask bits);
    static Block of(std::initializer_list<int> elements);

    Mask bits() const { return bits_; }
    int size() const;
    int min_element() const;
    bool is_singleton() const { return size() == 1; }
    bool contains(int element) const;
    std::vector<int> elements() const;

    /// Global block order: by minimum element, then by bit-set value.
    bool operator<(const Block& other) const;
    bool operator==(const Block& other) const = default;

private:
    Mask bits_;
};

/// A set of pairwise-disjoint blocks, kept sorted in the global block order.
/// The face type: a face of dimension block_count() - 1 (the empty partial
/// partition is the unique face of dimension -1).
class PartialPartition {
public:
    PartialPartition() = default;
    /// Sorts the blocks and validates pairwise disjointness.
    explicit PartialPartition(std::vector<Block> blocks);

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int dimension() const { return block_count() - 1; }
    bool empty() const { return blocks_.empty(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

    /// Union of all blocks.
    Mask support() const;
    bool contains_block(const Block& b) const;
    /// True iff every block of this face is a block of `other`.
    bool subface_of(const PartialPartition& other) const;
    bool has_singleton_block() const;
    int non_singleton_count() const;
    /// True iff this is a partition of [n] for the given n.
    bool is_partition_of(int n) const;

    /// Face with the i-th block (in canonical order) removed.
    PartialPartition without(int i) const;
    /// Face extended by a block disjoint from the current support.
    PartialPartition with(const Block& b) const;

    /// Canonical face order: lexicographic on the sorted block sequence.
    bool operator<(const PartialPartition& other) const;
    bool operator==(const PartialPartition& other) const = default;

private:
    std::vector<Block> blocks_;
};

struct PartialPartitionHash {
    std::size_t operator()(const PartialPartition& p) const;
};

/// Paper-style rendering: blocks as digit strings, blocks joined by commas,
/// e.g. "12,34". Elements above 9 are joined with '.' inside a block.
std::string to_text(const Block& b);
std::string to_text(const PartialPartition& p);

/// All 2^k sub-partial-partitions of `f`, the empty face included.
std::vector<PartialPartition> closure(const PartialPartition& f);

} // namespace parthom
