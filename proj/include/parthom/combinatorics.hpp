#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "parthom/ints.hpp"
#include "parthom/partition.hpp"

namespace parthom {

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
Count binomial(int n, int k);

/// Stirling number of the second kind S(n, k): partitions of an n-set into
/// exactly k nonempty blocks. 0 when k < 0 or k > n; S(0, 0) = 1.
Count stirling2(int n, int k);

/// Bell number B(n) = sum over k of S(n, k).
Count bell(int n);

/// Number of partitions of [n] with exactly j blocks of which exactly k are
/// non-singleton:
///
///   D(n,j,k) = C(n, j-k) * sum_{i=max(0,n-j)}^{n-(j-k)}
///                (-1)^{n-(j-k)-i} C(n-(j-k), i) S(i, j+i-n)
///
/// Returns 0 for out-of-range (j, k).
Count d_count(int n, int j, int k);

/// Visit every partition of `ground` exactly once in restricted-growth-string
/// order. `ground` must be sorted and duplicate-free.
void for_each_set_partition(const std::vector<int>& ground,
                            const std::function<void(const PartialPartition&)>& fn);

/// All partitions of `ground` in restricted-growth-string order.
std::vector<PartialPartition> enumerate_set_partitions(const std::vector<int>& ground);

/// Every partition of every subset of [n] (the empty partial partition
/// included), ordered by (subset bitmask ascending, then RGS order of the
/// partition). With `size_filter` = j, only faces with exactly j blocks.
std::vector<PartialPartition> enumerate_partial_partitions(
    GroundSet ground, std::optional<int> size_filter = std::nullopt);

/// The partitions of [n] with j blocks, exactly k of them non-singleton.
std::vector<PartialPartition> enumerate_d_njk(GroundSet ground, int j, int k);

} // namespace parthom
