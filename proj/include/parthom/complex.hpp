#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "parthom/combinatorics.hpp"
#include "parthom/ints.hpp"
#include "parthom/partition.hpp"

namespace parthom {

/// Finite abstract simplicial complex on partial partitions of [n], given by
/// its facets. Faces are indexed per dimension in the canonical face order;
/// the index is precomputed at construction and the complex is immutable
/// afterwards, so all queries are safe under concurrent reads.
class SimplicialComplex {
public:
    /// The complex D_n: faces are all partial partitions of [n], facets the
    /// partitions of [n]. D_0 is the complex containing only the empty face.
    static SimplicialComplex delta_n(GroundSet ground);

    /// Union of the closures of the given faces; facets are recomputed as the
    /// maximal faces of that union.
    static SimplicialComplex generated_by(GroundSet ground,
                                          const std::vector<PartialPartition>& faces);

    int ground_size() const { return n_; }
    const std::vector<PartialPartition>& facets() const { return facets_; }
    /// Dimension of the complex; -1 when the only face is the empty face.
    int dimension() const;

    /// Faces of dimension d in canonical order; valid for -1 <= d.
    const std::vector<PartialPartition>& faces(int d) const;
    Int face_count(int d) const;
    /// Index of the face within its dimension's canonical ordering.
    std::optional<int> face_index(const PartialPartition& f) const;
    bool contains(const PartialPartition& f) const;
    /// Total number of faces, the empty face included.
    Int total_face_count() const;

    /// Face counts by dimension; index 0 counts the empty face, index d+1 the
    /// d-dimensional faces.
    std::vector<Count> f_vector() const;

    /// True iff every maximal face has dimension exactly d.
    bool is_pure_of_dim(int d) const;

    /// Connected components of the 1-skeleton (isolated vertices included).
    int component_count() const;

private:
    SimplicialComplex() = default;
    void build_index();

    int n_ = 0;
    bool full_dn_ = false;
    std::vector<PartialPartition> facets_;

    struct FaceIndex;
    std::shared_ptr<const FaceIndex> index_;
};

/// Union of the closures of `faces` as a plain deduplicated face list.
std::vector<PartialPartition> closure_union(const std::vector<PartialPartition>& faces);

} // namespace parthom
