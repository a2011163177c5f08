#pragma once

#include "ahg/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ahg {

/// Dense arbitrary-precision integer matrix, row-major. Degenerate shapes
/// (0 rows or 0 columns) are valid and show up constantly as trivial groups.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);
    static IntMatrix from_columns(int rows, const std::vector<std::vector<Int>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transpose() const;
    std::vector<Int> apply(const std::vector<Int>& x) const; // M * x

    std::vector<Int> column(int j) const;
    IntMatrix select_columns(const std::vector<int>& idx) const;
    IntMatrix select_rows(const std::vector<int>& idx) const;
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

    // elementary operations (used by the normal form routines)
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void add_row_multiple(int dst, int src, const Int& q); // row_dst += q * row_src
    void add_col_multiple(int dst, int src, const Int& q); // col_dst += q * col_src

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank > 0.
struct SmithResult {
    IntMatrix U, U_inv, D, V, V_inv;
    int rank = 0;
    std::vector<Int> diagonal() const; // min(rows, cols) entries
};

SmithResult smith_normal_form(const IntMatrix& M);

/// M * V == H with V unimodular and H in column echelon form: pivot rows
/// strictly increase column by column, pivots positive, non-pivot columns zero.
struct HermiteResult {
    IntMatrix H, V;
    std::vector<std::pair<int, int>> pivots; // (row, col), col == index in order
};

HermiteResult hermite_columns(const IntMatrix& M);

/// Basis (as columns) of {x : M x = 0} over the integers.
IntMatrix kernel_basis(const IntMatrix& M);

/// Some x with M x = b over the integers, or nullopt.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& M, const std::vector<Int>& b);

/// Basis (as columns) of {x : M x ≡ 0 (mod moduli)}, one modulus per row;
/// modulus 0 demands exact vanishing of that row.
IntMatrix lattice_kernel(const IntMatrix& M, const std::vector<Int>& moduli);

/// Some x with M x ≡ b (mod moduli), or nullopt.
std::optional<std::vector<Int>> solve_mod(const IntMatrix& M, const std::vector<Int>& moduli,
                                          const std::vector<Int>& b);

} // namespace ahg
