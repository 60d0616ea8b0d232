#include "parthom/partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parthom {

Block::Block(Mask bits) : bits_(bits) {
    if (bits_ == 0) throw std::invalid_argument("block must be nonempty");
}

Block Block::of(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > 32) throw std::invalid_argument("block element out of range");
        m |= Mask{1} << (e - 1);
    }
    return Block(m);
}

int Block::size() const { return std::popcount(bits_); }

int Block::min_element() const { return std::countr_zero(bits_) + 1; }

bool Block::contains(int element) const {
    return element >= 1 && element <= 32 && (bits_ >> (element - 1)) & 1u;
}

std::vector<int> Block::elements() const {
    std::vector<int> out;
    for (Mask m = bits_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool Block::operator<(const Block& other) const {
    int a = min_element(), b = other.min_element();
    if (a != b) return a < b;
    return bits_ < other.bits_;
}

PartialPartition::PartialPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end());
    Mask seen = 0;
    for (const Block& b : blocks_) {
        if (seen & b.bits()) throw std::invalid_argument("blocks must be pairwise disjoint");
        seen |= b.bits();
    }
}

Mask PartialPartition::support() const {
    Mask m = 0;
    for (const Block& b : blocks_) m |= b.bits();
    return m;
}

bool PartialPartition::contains_block(const Block& b) const {
    return std::binary_search(blocks_.begin(), blocks_.end(), b,
                              [](const Block& x, const Block& y) { return x < y; });
}

bool PartialPartition::subface_of(const PartialPartition& other) const {
    for (const Block& b : blocks_)
        if (!other.contains_block(b)) return false;
    return true;
}

bool PartialPartition::has_singleton_block() const {
    return std::any_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.is_singleton(); });
}

int PartialPartition::non_singleton_count() const {
    return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(),
                                          [](const Block& b) { return !b.is_singleton(); }));
}

bool PartialPartition::is_partition_of(int n) const {
    if (n == 0) return blocks_.empty();
    return support() == (n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
}

PartialPartition PartialPartition::without(int i) const {
    std::vector<Block> rest;
    rest.reserve(blocks_.size() - 1);
    for (int k = 0; k < block_count(); ++k)
        if (k != i) rest.push_back(blocks_[static_cast<std::size_t>(k)]);
    PartialPartition out;
    out.blocks_ = std::move(rest); // already sorted and disjoint
    return out;
}

PartialPartition PartialPartition::with(const Block& b) const {
    if (support() & b.bits()) throw std::invalid_argument("block overlaps face support");
    PartialPartition out;
    out.blocks_ = blocks_;
    out.blocks_.insert(std::upper_bound(out.blocks_.begin(), out.blocks_.end(), b), b);
    return out;
}

bool PartialPartition::operator<(const PartialPartition& other) const {
    return std::lexicographical_compare(blocks_.begin(), blocks_.end(),
                                        other.blocks_.begin(), other.blocks_.end());
}

std::size_t PartialPartitionHash::operator()(const PartialPartition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (const Block& b : p.blocks()) {
        h ^= b.bits();
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_text(const Block& b) {
    std::string out;
    bool wide = false;
    for (int e : b.elements())
        if (e > 9) wide = true;
    bool first = true;
    for (int e : b.elements()) {
        if (!first && wide) out += '.';
        out += std::to_string(e);
        first = false;
    }
    return out;
}

std::string to_text(const PartialPartition& p) {
    if (p.empty()) return "∅";
    std::string out;
    for (int i = 0; i < p.block_count(); ++i) {
        if (i) out += ',';
        out += to_text(p.block(i));
    }
    return out;
}

std::vector<PartialPartition> closure(const PartialPartition& f) {
    const int k = f.block_count();
    std::vector<PartialPartition> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << k); ++sub) {
        std::vector<Block> blocks;
        for (int i = 0; i < k; ++i)
            if ((sub >> i) & 1u) blocks.push_back(f.block(i));
        out.emplace_back(std::move(blocks));
    }
    return out;
}

} // namespace parthom
