#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "parthom/ints.hpp"

namespace parthom {

/// Kernel execution policy. Parallel uses OpenMP when compiled in and falls
/// back to the serial path otherwise; results are identical either way.
enum class Exec { serial, parallel };

class DenseIntMatrix {
public:
    DenseIntMatrix() = default;
    DenseIntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
    static DenseIntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Row-major sparse integer matrix; each row holds (column, value) pairs
/// sorted by column, with no explicit zeros.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, Int>>> row;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), row(static_cast<std::size_t>(r)) {}
    void add_entry(int r, int c, Int v); // entries must be added in column order per row
};

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
struct SnfResult {
    std::vector<Int> invariant_factors;
    int rank = 0;
};

/// Smith normal form by minimal-absolute-value pivoting with Euclidean
/// row/column clearing; the divisibility chain is restored at the end.
/// Deterministic for a fixed input.
SnfResult smith_normal_form(DenseIntMatrix m, Exec exec = Exec::parallel);

/// Rank over the rationals of a sparse integer matrix, computed by exact
/// integer elimination (fill-reducing pivot choice, gcd steps when no
/// unit pivot is available).
int sparse_rank(SparseIntMatrix m, Exec exec = Exec::parallel);

/// For each column b of `rhs`, decide whether a * x = b has an integer
/// solution. Row operations are mirrored onto `rhs`; column operations only
/// reindex the unknowns and do not affect solvability.
std::vector<bool> solve_in_integers(DenseIntMatrix a, DenseIntMatrix rhs,
                                    Exec exec = Exec::parallel);

namespace reference {

/// Textbook serial Smith normal form: first-nonzero pivoting and an in-loop
/// divisibility sweep. Kept as an independent check of the production path.
SnfResult smith_normal_form(DenseIntMatrix m);

/// Rank via Gaussian elimination over exact rationals.
int rank(const DenseIntMatrix& m);

} // namespace reference

} // namespace parthom
