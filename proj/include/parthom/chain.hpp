#pragma once

#include <map>

#include "parthom/ints.hpp"
#include "parthom/partition.hpp"

namespace parthom {

/// Formal integer combination of canonically oriented simplices of one
/// dimension. The orientation of a simplex is implicitly the canonical block
/// order of its face. Zero coefficients are never stored.
class Chain {
public:
    explicit Chain(int degree) : degree_(degree) {}
    static Chain simplex(const PartialPartition& f, Int coeff = 1);

    int degree() const { return degree_; }
    bool zero() const { return terms_.empty(); }
    const std::map<PartialPartition, Int>& terms() const { return terms_; }
    Int coeff(const PartialPartition& f) const;
    int support_size() const { return static_cast<int>(terms_.size()); }

    /// Adds c * [f]; erases the term when the sum cancels.
    void add(const PartialPartition& f, const Int& c);

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    Chain operator-() const;
    bool operator==(const Chain& other) const = default;

private:
    int degree_;
    std::map<PartialPartition, Int> terms_;
};

/// Boundary of a chain: the alternating sum of block deletions, extended
/// linearly. At degree 0 this is the augmentation onto the empty face.
Chain boundary(const Chain& ch);

/// True iff boundary(ch) = 0 (augmented at degree 0).
bool is_cycle(const Chain& ch);

} // namespace parthom
