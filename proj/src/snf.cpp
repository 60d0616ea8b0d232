#include "parthom/snf.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <stdexcept>
#include <tuple>

namespace parthom {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

constexpr int kParallelGrain = 16;

bool parallel_on(Exec exec, std::size_t work) {
#ifdef _OPENMP
    return exec == Exec::parallel && work >= kParallelGrain;
#else
    (void)exec;
    (void)work;
    return false;
#endif
}

// Extended Euclid: returns g = gcd(a, b) >= 0 and (u, w) with u*a + w*b = g.
std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
    Int u0 = 1, w0 = 0, u1 = 0, w1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int u2 = u0 - q * u1, w2 = w0 - q * w1;
        u0 = u1;
        w0 = w1;
        u1 = u2;
        w1 = w2;
    }
    if (a < 0) {
        a = -a;
        u0 = -u0;
        w0 = -w0;
    }
    return {a, u0, w0};
}

} // namespace

DenseIntMatrix DenseIntMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    DenseIntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("ragged initializer");
        int j = 0;
        for (std::int64_t v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

void DenseIntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void DenseIntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void SparseIntMatrix::add_entry(int r, int c, Int v) {
    if (v == 0) return;
    auto& rw = row[static_cast<std::size_t>(r)];
    assert(rw.empty() || rw.back().first < c);
    rw.emplace_back(static_cast<std::int32_t>(c), std::move(v));
}

namespace {

// ---------------------------------------------------------------------------
// Dense diagonalization engine (production path).
//
// Diagonalizes `a` in place by unimodular row and column operations. Row
// operations are mirrored onto `rhs` when present; column operations are
// restricted to `a`. Returns the nonzero diagonal entries in pivot order.
// ---------------------------------------------------------------------------

struct DenseOps {
    DenseIntMatrix& a;
    DenseIntMatrix* rhs;
    Exec exec;

    void swap_rows(int x, int y) {
        a.swap_rows(x, y);
        if (rhs) rhs->swap_rows(x, y);
    }

    // row x -= q * row y, from column `from` onward (earlier columns are
    // already clear on both rows), mirrored onto the full rhs row.
    void row_axpy(int x, int y, const Int& q, int from) {
        for (int j = from; j < a.cols(); ++j)
            if (a.at(y, j) != 0) a.at(x, j) -= q * a.at(y, j);
        if (rhs)
            for (int j = 0; j < rhs->cols(); ++j)
                if (rhs->at(y, j) != 0) rhs->at(x, j) -= q * rhs->at(y, j);
    }

    // col x -= q * col y, from row `from` onward.
    void col_axpy(int x, int y, const Int& q, int from) {
        for (int i = from; i < a.rows(); ++i)
            if (a.at(i, y) != 0) a.at(i, x) -= q * a.at(i, y);
    }
};

std::vector<Int> dense_diagonalize(DenseIntMatrix& a, DenseIntMatrix* rhs, Exec exec) {
    if (rhs && rhs->rows() != a.rows())
        throw std::invalid_argument("rhs row count mismatch");
    DenseOps ops{a, rhs, exec};
    const int R = a.rows(), C = a.cols();
    std::vector<Int> diag;

    for (int t = 0; t < std::min(R, C); ++t) {
        // Pivot: nonzero entry of minimal absolute value in the submatrix.
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                const Int& v = a.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    pi = i;
                    pj = j;
                    best = std::move(av);
                }
            }
        if (pi < 0) break;
        ops.swap_rows(t, pi);
        a.swap_cols(t, pj);

        // Alternate Euclidean clearing of column t and row t until both are
        // clean; each exchange strictly shrinks the pivot, so this ends.
        while (true) {
            // Column t: Euclidean exchanges until the pivot divides below.
            bool exchanged = true;
            while (exchanged) {
                exchanged = false;
                for (int i = t + 1; i < R; ++i) {
                    const Int& v = a.at(i, t);
                    if (v == 0 || v % a.at(t, t) == 0) continue;
                    Int q = v / a.at(t, t);
                    ops.row_axpy(i, t, q, t);
                    ops.swap_rows(t, i);
                    exchanged = true;
                    break;
                }
            }
            {
                // Bulk clear: every remaining entry below is divisible.
                std::vector<int> targets;
                for (int i = t + 1; i < R; ++i)
                    if (a.at(i, t) != 0) targets.push_back(i);
                const Int p = a.at(t, t);
                if (parallel_on(exec, targets.size())) {
#pragma omp parallel for schedule(dynamic)
                    for (std::size_t k = 0; k < targets.size(); ++k) {
                        int i = targets[k];
                        Int q = a.at(i, t) / p;
                        ops.row_axpy(i, t, q, t);
                    }
                } else {
                    for (int i : targets) {
                        Int q = a.at(i, t) / p;
                        ops.row_axpy(i, t, q, t);
                    }
                }
            }

            // Row t. With column t clear below the pivot, a column operation
            // touches only row t unless an exchange swaps columns.
            bool col_exchanged = false;
            bool row_dirty = true;
            while (row_dirty) {
                row_dirty = false;
                for (int j = t + 1; j < C; ++j) {
                    const Int& v = a.at(t, j);
                    if (v == 0 || v % a.at(t, t) == 0) continue;
                    Int q = v / a.at(t, t);
                    ops.col_axpy(j, t, q, t);
                    a.swap_cols(t, j);
                    col_exchanged = true;
                    row_dirty = true;
                    break;
                }
            }
            {
                std::vector<int> targets;
                for (int j = t + 1; j < C; ++j)
                    if (a.at(t, j) != 0) targets.push_back(j);
                const Int p = a.at(t, t);
                if (parallel_on(exec, targets.size())) {
#pragma omp parallel for schedule(dynamic)
                    for (std::size_t k = 0; k < targets.size(); ++k) {
                        int j = targets[k];
                        Int q = a.at(t, j) / p;
                        ops.col_axpy(j, t, q, t);
                    }
                } else {
                    for (int j : targets) {
                        Int q = a.at(t, j) / p;
                        ops.col_axpy(j, t, q, t);
                    }
                }
            }

            if (!col_exchanged) break;
            // Column exchanges may have re-populated column t; re-clear.
            bool col_clean = true;
            for (int i = t + 1; i < R && col_clean; ++i)
                if (a.at(i, t) != 0) col_clean = false;
            if (col_clean) break;
        }
        diag.push_back(a.at(t, t));
    }
    return diag;
}

// Restore the divisibility chain of a diagonal by pairwise gcd/lcm passes.
std::vector<Int> fix_divisibility(std::vector<Int> diag) {
    for (Int& d : diag)
        if (d < 0) d = -d;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                Int g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = std::move(g);
                changed = true;
            }
    }
    return diag;
}

} // namespace

SnfResult smith_normal_form(DenseIntMatrix m, Exec exec) {
    std::vector<Int> diag = dense_diagonalize(m, nullptr, exec);
    SnfResult out;
    out.invariant_factors = fix_divisibility(std::move(diag));
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

std::vector<bool> solve_in_integers(DenseIntMatrix a, DenseIntMatrix rhs, Exec exec) {
    if (rhs.rows() != a.rows()) throw std::invalid_argument("rhs row count mismatch");
    std::vector<Int> diag = dense_diagonalize(a, &rhs, exec);
    const int r = static_cast<int>(diag.size());
    std::vector<bool> solvable(static_cast<std::size_t>(rhs.cols()), true);
    for (int c = 0; c < rhs.cols(); ++c) {
        for (int i = 0; i < rhs.rows(); ++i) {
            const Int& b = rhs.at(i, c);
            bool ok = (i < r) ? (b % diag[static_cast<std::size_t>(i)] == 0) : (b == 0);
            if (!ok) {
                solvable[static_cast<std::size_t>(c)] = false;
                break;
            }
        }
    }
    return solvable;
}

// ---------------------------------------------------------------------------
// Sparse rank elimination.
// ---------------------------------------------------------------------------

namespace {

using SparseRow = std::vector<std::pair<std::int32_t, Int>>;

// alpha*x + beta*y over sorted sparse rows, zeros dropped.
SparseRow combine(const Int& alpha, const SparseRow& x, const Int& beta, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Int v = alpha * x[i].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            Int v = beta * y[j].second;
            if (v != 0) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Int v = alpha * x[i].second + beta * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const Int* find_col(const SparseRow& r, std::int32_t c) {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const auto& e, std::int32_t col) { return e.first < col; });
    if (it == r.end() || it->first != c) return nullptr;
    return &it->second;
}

struct PivotChoice {
    Int absval;
    std::int64_t cost;
    int row;
    std::int32_t col;

    bool better_than(const PivotChoice& o) const {
        if (absval != o.absval) return absval < o.absval;
        if (cost != o.cost) return cost < o.cost;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

} // namespace

int sparse_rank(SparseIntMatrix m, Exec exec) {
    const int R = m.rows;
    std::vector<char> active(static_cast<std::size_t>(R), 1);
    std::vector<std::int64_t> colcount(static_cast<std::size_t>(m.cols), 0);
    int rank = 0;

    std::vector<int> live;
    live.reserve(static_cast<std::size_t>(R));
    for (int i = 0; i < R; ++i)
        if (!m.row[static_cast<std::size_t>(i)].empty())
            live.push_back(i);
        else
            active[static_cast<std::size_t>(i)] = 0;

    while (true) {
        live.erase(std::remove_if(live.begin(), live.end(),
                                  [&](int i) {
                                      if (m.row[static_cast<std::size_t>(i)].empty()) {
                                          active[static_cast<std::size_t>(i)] = 0;
                                          return true;
                                      }
                                      return false;
                                  }),
                   live.end());
        if (live.empty()) break;

        std::fill(colcount.begin(), colcount.end(), 0);
        for (int i : live)
            for (const auto& [c, v] : m.row[static_cast<std::size_t>(i)])
                ++colcount[static_cast<std::size_t>(c)];

        // Pivot of minimal |value|, then minimal Markowitz cost.
        bool have = false;
        PivotChoice best{};
        const std::size_t L = live.size();
        if (parallel_on(exec, L)) {
#ifdef _OPENMP
#pragma omp parallel
            {
                bool lhave = false;
                PivotChoice lbest{};
#pragma omp for nowait
                for (std::size_t k = 0; k < L; ++k) {
                    int i = live[k];
                    const auto& row = m.row[static_cast<std::size_t>(i)];
                    const std::int64_t rn = static_cast<std::int64_t>(row.size()) - 1;
                    for (const auto& [c, v] : row) {
                        PivotChoice cand{abs(v), rn * (colcount[static_cast<std::size_t>(c)] - 1),
                                         i, c};
                        if (!lhave || cand.better_than(lbest)) {
                            lbest = std::move(cand);
                            lhave = true;
                        }
                    }
                }
#pragma omp critical
                {
                    if (lhave && (!have || lbest.better_than(best))) {
                        best = std::move(lbest);
                        have = true;
                    }
                }
            }
#endif
        } else {
            for (int i : live) {
                const auto& row = m.row[static_cast<std::size_t>(i)];
                const std::int64_t rn = static_cast<std::int64_t>(row.size()) - 1;
                for (const auto& [c, v] : row) {
                    PivotChoice cand{abs(v), rn * (colcount[static_cast<std::size_t>(c)] - 1), i,
                                     c};
                    if (!have || cand.better_than(best)) {
                        best = std::move(cand);
                        have = true;
                    }
                }
            }
        }
        if (!have) break;

        const int pr = best.row;
        const std::int32_t pc = best.col;

        // Make the pivot divide every other entry in its column (two-row
        // unimodular gcd steps; rare once unit pivots dominate).
        while (true) {
            int bad = -1;
            for (int i : live) {
                if (i == pr) continue;
                const Int* v = find_col(m.row[static_cast<std::size_t>(i)], pc);
                if (v && *v % *find_col(m.row[static_cast<std::size_t>(pr)], pc) != 0) {
                    bad = i;
                    break;
                }
            }
            if (bad < 0) break;
            const Int p = *find_col(m.row[static_cast<std::size_t>(pr)], pc);
            const Int v = *find_col(m.row[static_cast<std::size_t>(bad)], pc);
            auto [g, u, w] = xgcd(p, v);
            SparseRow nr = combine(u, m.row[static_cast<std::size_t>(pr)], w,
                                   m.row[static_cast<std::size_t>(bad)]);
            SparseRow ni = combine(p / g, m.row[static_cast<std::size_t>(bad)], -(v / g),
                                   m.row[static_cast<std::size_t>(pr)]);
            m.row[static_cast<std::size_t>(pr)] = std::move(nr);
            m.row[static_cast<std::size_t>(bad)] = std::move(ni);
        }

        const Int p = *find_col(m.row[static_cast<std::size_t>(pr)], pc);
        std::vector<int> targets;
        for (int i : live) {
            if (i == pr) continue;
            if (find_col(m.row[static_cast<std::size_t>(i)], pc)) targets.push_back(i);
        }
        const SparseRow& prow = m.row[static_cast<std::size_t>(pr)];
        if (parallel_on(exec, targets.size())) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t k = 0; k < targets.size(); ++k) {
                int i = targets[k];
                Int q = *find_col(m.row[static_cast<std::size_t>(i)], pc) / p;
                m.row[static_cast<std::size_t>(i)] =
                    combine(1, m.row[static_cast<std::size_t>(i)], -q, prow);
            }
        } else {
            for (int i : targets) {
                Int q = *find_col(m.row[static_cast<std::size_t>(i)], pc) / p;
                m.row[static_cast<std::size_t>(i)] =
                    combine(1, m.row[static_cast<std::size_t>(i)], -q, prow);
            }
        }

        active[static_cast<std::size_t>(pr)] = 0;
        m.row[static_cast<std::size_t>(pr)].clear();
        live.erase(std::find(live.begin(), live.end(), pr));
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Reference implementations (serial, structurally independent).
// ---------------------------------------------------------------------------

namespace reference {

SnfResult smith_normal_form(DenseIntMatrix m) {
    const int R = m.rows(), C = m.cols();
    std::vector<Int> diag;
    for (int t = 0; t < std::min(R, C); ++t) {
        // First nonzero entry, row-major scan.
        int pi = -1, pj = -1;
        for (int i = t; i < R && pi < 0; ++i)
            for (int j = t; j < C; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < R; ++i)
                while (m.at(i, t) != 0) {
                    Int q = m.at(i, t) / m.at(t, t);
                    for (int j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
                    if (m.at(i, t) != 0) m.swap_rows(t, i);
                }
            for (int j = t + 1; j < C; ++j)
                while (m.at(t, j) != 0) {
                    Int q = m.at(t, j) / m.at(t, t);
                    for (int i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
                    if (m.at(t, j) != 0) m.swap_cols(t, j);
                }
            for (int i = t + 1; i < R && !again; ++i)
                if (m.at(i, t) != 0) again = true;
            if (again) continue;

            // In-loop divisibility sweep: fold an offending row into row t.
            for (int i = t + 1; i < R && !again; ++i)
                for (int j = t + 1; j < C && !again; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (int jj = t; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
                        again = true;
                    }
        }
        diag.push_back(m.at(t, t) < 0 ? Int(-m.at(t, t)) : m.at(t, t));
    }
    SnfResult out;
    out.invariant_factors = std::move(diag);
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

int rank(const DenseIntMatrix& m) {
    using Rat = boost::multiprecision::cpp_rational;
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(R),
                                    std::vector<Rat>(static_cast<std::size_t>(C)));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int pivot = -1;
        for (int i = r; i < R; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        const Rat p = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < R; ++i) {
            Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / p;
            if (f == 0) continue;
            for (int j = c; j < C; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

} // namespace reference

} // namespace parthom
