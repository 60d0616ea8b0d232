#include "parthom/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace parthom {

namespace {

// Pascal triangle rows, grown on demand under a lock.
class PascalTable {
public:
    Count get(int n, int k) {
        std::scoped_lock lock(mu_);
        while (static_cast<int>(rows_.size()) <= n) {
            const int m = static_cast<int>(rows_.size());
            std::vector<Count> row(static_cast<std::size_t>(m) + 1, 1);
            for (int i = 1; i < m; ++i)
                row[static_cast<std::size_t>(i)] =
                    rows_.back()[static_cast<std::size_t>(i) - 1] + rows_.back()[static_cast<std::size_t>(i)];
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<Count>> rows_;
};

class StirlingTable {
public:
    Count get(int n, int k) {
        std::scoped_lock lock(mu_);
        while (static_cast<int>(rows_.size()) <= n) {
            const int m = static_cast<int>(rows_.size());
            std::vector<Count> row(static_cast<std::size_t>(m) + 1, 0);
            if (m == 0) {
                row[0] = 1;
            } else {
                for (int i = 1; i <= m; ++i) {
                    Count v = (i < m) ? Count(i) * rows_.back()[static_cast<std::size_t>(i)] : Count(0);
                    row[static_cast<std::size_t>(i)] = v + rows_.back()[static_cast<std::size_t>(i) - 1];
                }
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<Count>> rows_;
};

PascalTable& pascal() {
    static PascalTable t;
    return t;
}

StirlingTable& stirling() {
    static StirlingTable t;
    return t;
}

} // namespace

Count binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    return pascal().get(n, k);
}

Count stirling2(int n, int k) {
    if (n < 0) throw std::invalid_argument("stirling2: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    return stirling().get(n, k);
}

Count bell(int n) {
    if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
    Count total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

Count d_count(int n, int j, int k) {
    if (n < 0) throw std::invalid_argument("d_count: n must be nonnegative");
    if (j < 0 || k < 0 || k > j || j > n) return 0;
    const int singletons = j - k;
    // Sum bound: the unstated lower limit is where the Stirling factor
    // vanishes, i.e. i >= n - j.
    const int lo = std::max(0, n - j);
    const int hi = n - singletons;
    Count sum = 0;
    for (int i = lo; i <= hi; ++i) {
        Count term = binomial(n - singletons, i) * stirling2(i, j + i - n);
        if ((hi - i) % 2)
            sum -= term;
        else
            sum += term;
    }
    return binomial(n, singletons) * sum;
}

void for_each_set_partition(const std::vector<int>& ground,
                            const std::function<void(const PartialPartition&)>& fn) {
    const int m = static_cast<int>(ground.size());
    if (m > max_ground_size())
        throw resource_error("set partition enumeration over " + std::to_string(m) +
                             " elements exceeds configured maximum " +
                             std::to_string(max_ground_size()));
    auto emit = [&](const std::vector<int>& rgs) {
        int nblocks = m == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Mask> masks(static_cast<std::size_t>(nblocks), 0);
        for (int i = 0; i < m; ++i)
            masks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |=
                Mask{1} << (ground[static_cast<std::size_t>(i)] - 1);
        std::vector<Block> blocks;
        blocks.reserve(masks.size());
        for (Mask bm : masks) blocks.emplace_back(bm);
        fn(PartialPartition(std::move(blocks)));
    };

    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    if (m == 0) {
        fn(PartialPartition{});
        return;
    }
    emit(rgs);
    while (true) {
        // Advance to the next restricted growth string in lexicographic order.
        int i = m - 1;
        for (; i >= 1; --i) {
            int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[static_cast<std::size_t>(i)] <= prefix_max) break;
        }
        if (i < 1) return;
        ++rgs[static_cast<std::size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        emit(rgs);
    }
}

std::vector<PartialPartition> enumerate_set_partitions(const std::vector<int>& ground) {
    std::vector<PartialPartition> out;
    for_each_set_partition(ground, [&](const PartialPartition& p) { out.push_back(p); });
    return out;
}

std::vector<PartialPartition> enumerate_partial_partitions(GroundSet ground,
                                                           std::optional<int> size_filter) {
    const int n = ground.n;
    std::vector<PartialPartition> out;
    for (Mask subset = 0; subset < (Mask{1} << n); ++subset) {
        std::vector<int> elems;
        for (Mask m = subset; m != 0; m &= m - 1)
            elems.push_back(std::countr_zero(m) + 1);
        for_each_set_partition(elems, [&](const PartialPartition& p) {
            if (!size_filter || p.block_count() == *size_filter) out.push_back(p);
        });
    }
    return out;
}

std::vector<PartialPartition> enumerate_d_njk(GroundSet ground, int j, int k) {
    std::vector<int> elems;
    for (int e = 1; e <= ground.n; ++e) elems.push_back(e);
    std::vector<PartialPartition> out;
    for_each_set_partition(elems, [&](const PartialPartition& p) {
        if (p.block_count() == j && p.non_singleton_count() == k) out.push_back(p);
    });
    return out;
}

} // namespace parthom
