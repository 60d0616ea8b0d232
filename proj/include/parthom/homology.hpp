#pragma once

#include <vector>

#include "parthom/chain.hpp"
#include "parthom/complex.hpp"
#include "parthom/snf.hpp"

namespace parthom {

/// Sparse boundary operator from d-faces to (d-1)-faces of a complex, in the
/// complex's canonical face indexing. d = 0 is the augmentation: every vertex
/// maps to the empty face with coefficient +1.
struct BoundaryMatrix {
    int d = 0;
    int nrows = 0;
    int ncols = 0;
    /// cols[j] lists (row, sign) with sign in {-1, +1}, sorted by row.
    std::vector<std::vector<std::pair<int, int>>> cols;

    SparseIntMatrix to_sparse() const;
    DenseIntMatrix to_dense() const;
};

/// Boundary matrix of the complex in dimension d. Out-of-range d gives an
/// empty matrix of the correct shape.
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// Rank of the d-th boundary operator.
int boundary_rank(const SimplicialComplex& c, int d, Exec exec = Exec::parallel);

/// Reduced Betti numbers: entry d is the rank of the d-th reduced homology
/// group, for d = 0 .. dim(c).
std::vector<Count> reduced_betti(const SimplicialComplex& c, Exec exec = Exec::parallel);

/// Invariant factors of the (d+1)-st boundary operator exceeding 1; the
/// torsion coefficients of the d-th homology group.
std::vector<Int> torsion_coefficients(const SimplicialComplex& c, int d,
                                      Exec exec = Exec::parallel);

/// Coefficient column of a chain over the canonical index of its dimension.
/// Every simplex of the chain must be a face of the complex.
std::vector<Int> chain_to_column(const SimplicialComplex& c, const Chain& ch);

/// True iff the cycle is an integral boundary in the complex.
/// Throws std::invalid_argument when ch is not a cycle.
bool is_boundary(const SimplicialComplex& c, const Chain& ch, Exec exec = Exec::parallel);

/// Batched is_boundary for cycles of one common degree against one complex.
std::vector<bool> are_boundaries(const SimplicialComplex& c, const std::vector<Chain>& cycles,
                                 int degree, Exec exec = Exec::parallel);

/// Rank over the rationals of the given degree-d cycles modulo the boundary
/// space: rank([cycles | d_{d+1}]) - rank(d_{d+1}).
Count quotient_rank(const SimplicialComplex& c, const std::vector<Chain>& cycles, int d,
                    Exec exec = Exec::parallel);

/// Reduced Euler characteristic from an f-vector with the empty face at
/// index 0 (it contributes -1).
Int reduced_euler_characteristic(const std::vector<Count>& f_vector);

} // namespace parthom
