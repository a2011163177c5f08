#include "ahg/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ahg {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != rows) throw std::invalid_argument("from_columns: ragged input");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& idx) const {
    IntMatrix r(rows_, int(idx.size()));
    for (int j = 0; j < int(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
    IntMatrix r(int(idx.size()), cols_);
    for (int i = 0; i < int(idx.size()); ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < cols_; ++k) at(dst, k) += q * at(src, k);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < rows_; ++k) at(k, dst) += q * at(k, src);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

std::vector<Int> SmithResult::diagonal() const {
    int n = std::min(D.rows(), D.cols());
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
    return d;
}

namespace {

// Bookkeeping wrapper: every elementary operation on A is mirrored on the
// transforms so that U * M * V == A and U_inv, V_inv stay exact inverses.
struct SmithWork {
    IntMatrix A, U, U_inv, V, V_inv;

    explicit SmithWork(const IntMatrix& M)
        : A(M),
          U(IntMatrix::identity(M.rows())),
          U_inv(IntMatrix::identity(M.rows())),
          V(IntMatrix::identity(M.cols())),
          V_inv(IntMatrix::identity(M.cols())) {}

    void swap_rows(int i, int j) {
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        U_inv.swap_cols(i, j);
    }
    void swap_cols(int i, int j) {
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        V_inv.swap_rows(i, j);
    }
    void negate_row(int i) {
        A.negate_row(i);
        U.negate_row(i);
        U_inv.negate_col(i);
    }
    void row_plus(int dst, int src, const Int& q) { // row_dst += q * row_src
        A.add_row_multiple(dst, src, q);
        U.add_row_multiple(dst, src, q);
        U_inv.add_col_multiple(src, dst, -q);
    }
    void col_plus(int dst, int src, const Int& q) { // col_dst += q * col_src
        A.add_col_multiple(dst, src, q);
        V.add_col_multiple(dst, src, q);
        V_inv.add_row_multiple(src, dst, -q);
    }
};

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithWork w(M);
    const int m = M.rows(), n = M.cols();
    int t = 0;
    while (t < std::min(m, n)) {
        // smallest nonzero entry of the active submatrix becomes the pivot
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (w.A.at(i, j) == 0) continue;
                Int v = abs_int(w.A.at(i, j));
                if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        const Int p = w.A.at(t, t);
        bool changed = false;
        for (int i = t + 1; i < m; ++i) {
            if (w.A.at(i, t) == 0) continue;
            Int q = w.A.at(i, t) / p; // truncated: leaves |remainder| < |p|
            w.row_plus(i, t, -q);
            if (w.A.at(i, t) != 0) changed = true;
        }
        for (int j = t + 1; j < n; ++j) {
            if (w.A.at(t, j) == 0) continue;
            Int q = w.A.at(t, j) / p;
            w.col_plus(j, t, -q);
            if (w.A.at(t, j) != 0) changed = true;
        }
        if (changed) continue; // smaller entries appeared; re-pick pivot

        // pivot now alone in its row and column; enforce divisibility of the rest
        bool fixed = false;
        for (int i = t + 1; i < m && !fixed; ++i)
            for (int j = t + 1; j < n && !fixed; ++j)
                if (w.A.at(i, j) % p != 0) {
                    w.col_plus(t, j, 1); // drags the offending column into play
                    fixed = true;
                }
        if (fixed) continue;

        if (w.A.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SmithResult r{std::move(w.U), std::move(w.U_inv), std::move(w.A),
                  std::move(w.V), std::move(w.V_inv), 0};
    for (int i = 0; i < std::min(m, n); ++i)
        if (r.D.at(i, i) != 0) ++r.rank;
    return r;
}

HermiteResult hermite_columns(const IntMatrix& M) {
    IntMatrix H = M;
    IntMatrix V = IntMatrix::identity(M.cols());
    std::vector<std::pair<int, int>> pivots;
    const int m = M.rows(), n = M.cols();
    int c = 0;
    for (int r = 0; r < m && c < n; ++r) {
        for (;;) {
            int pj = -1;
            Int best;
            for (int j = c; j < n; ++j) {
                if (H.at(r, j) == 0) continue;
                Int v = abs_int(H.at(r, j));
                if (pj < 0 || v < best) { best = v; pj = j; }
            }
            if (pj < 0) break; // row has no pivot among active columns
            H.swap_cols(c, pj);
            V.swap_cols(c, pj);
            bool clean = true;
            for (int j = c + 1; j < n; ++j) {
                if (H.at(r, j) == 0) continue;
                Int q = H.at(r, j) / H.at(r, c);
                H.add_col_multiple(j, c, -q);
                V.add_col_multiple(j, c, -q);
                if (H.at(r, j) != 0) clean = false;
            }
            if (clean) {
                if (H.at(r, c) < 0) { H.negate_col(c); V.negate_col(c); }
                pivots.emplace_back(r, c);
                ++c;
                break;
            }
        }
    }
    return {std::move(H), std::move(V), std::move(pivots)};
}

IntMatrix kernel_basis(const IntMatrix& M) {
    HermiteResult h = hermite_columns(M);
    std::vector<int> zero_cols;
    for (int j = int(h.pivots.size()); j < M.cols(); ++j) zero_cols.push_back(j);
    return h.V.select_columns(zero_cols);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& M, const std::vector<Int>& b) {
    if (int(b.size()) != M.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    HermiteResult h = hermite_columns(M);
    std::vector<Int> y(M.cols());
    for (const auto& [r, c] : h.pivots) {
        Int cur = b[r];
        for (int j = 0; j < c; ++j)
            if (h.H.at(r, j) != 0) cur -= h.H.at(r, j) * y[j];
        if (cur % h.H.at(r, c) != 0) return std::nullopt;
        y[c] = cur / h.H.at(r, c);
    }
    std::vector<Int> x = h.V.apply(y);
    if (M.apply(x) != b) return std::nullopt; // catches residuals in non-pivot rows
    return x;
}

namespace {

// Columns that absorb "mod modulus" per row: one scaled unit column per
// nonzero modulus. Returns the augmented matrix [M | diag-part].
IntMatrix augment_with_moduli(const IntMatrix& M, const std::vector<Int>& moduli) {
    if (int(moduli.size()) != M.rows())
        throw std::invalid_argument("moduli size must match row count");
    std::vector<std::vector<Int>> extra;
    for (int i = 0; i < M.rows(); ++i) {
        if (moduli[i] == 0) continue;
        std::vector<Int> col(M.rows());
        col[i] = moduli[i];
        extra.push_back(std::move(col));
    }
    return IntMatrix::hstack(M, IntMatrix::from_columns(M.rows(), extra));
}

} // namespace

IntMatrix lattice_kernel(const IntMatrix& M, const std::vector<Int>& moduli) {
    IntMatrix aug = augment_with_moduli(M, moduli);
    IntMatrix ker = kernel_basis(aug);
    // keep the x-part and re-reduce to an independent basis
    std::vector<int> head(M.cols());
    for (int i = 0; i < M.cols(); ++i) head[i] = i;
    IntMatrix part = ker.select_rows(head);
    HermiteResult h = hermite_columns(part);
    std::vector<int> keep;
    for (int j = 0; j < int(h.pivots.size()); ++j) keep.push_back(j);
    return h.H.select_columns(keep);
}

std::optional<std::vector<Int>> solve_mod(const IntMatrix& M, const std::vector<Int>& moduli,
                                          const std::vector<Int>& b) {
    IntMatrix aug = augment_with_moduli(M, moduli);
    auto full = solve_integer(aug, b);
    if (!full) return std::nullopt;
    full->resize(M.cols());
    return full;
}

} // namespace ahg
