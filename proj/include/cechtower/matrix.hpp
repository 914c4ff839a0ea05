// Dense integer matrices, Smith normal form with transform tracking,
// exact linear solving and lattice (subgroup of Z^n) primitives.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cechtower/integers.hpp"

namespace cechtower {

class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMat from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
        IntMat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged column");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> column(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void append_column(const std::vector<Int>& c) {
        if (rows_ == 0 && cols_ == 0) rows_ = c.size();
        if (c.size() != rows_) throw std::invalid_argument("append_column: size mismatch");
        std::vector<Int> b((cols_ + 1) * rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) b[i * (cols_ + 1) + j] = (*this)(i, j);
            b[i * (cols_ + 1) + cols_] = c[i];
        }
        a_ = std::move(b);
        ++cols_;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& y = o(k, j);
                    if (y != 0) r(i, j) += x * y;
                }
            }
        return r;
    }

    std::vector<Int> operator*(const std::vector<Int>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

inline IntMat hcat(const IntMat& a, const IntMat& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    IntMat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

// U * a * V = D with U, V unimodular and D diagonal, entries forming a
// divisibility chain d1 | d2 | ... (nonzero entries first, all positive).
struct SmithForm {
    IntMat u, u_inv, d, v, v_inv;
    std::size_t rank = 0;
    std::vector<Int> diag;  // the nonzero diagonal entries, length == rank

    Int diag_at(std::size_t i) const { return i < rank ? diag[i] : Int(0); }
};

// Pivot choice: minimal nonzero absolute value in the trailing submatrix,
// ties broken by lowest row then lowest column, so results are reproducible.
inline SmithForm smith_normal_form(IntMat a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm s;
    s.u = IntMat::identity(m);
    s.u_inv = IntMat::identity(m);
    s.v = IntMat::identity(n);
    s.v_inv = IntMat::identity(n);

    auto row_swap = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(s.u(i, j), s.u(k, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(s.u_inv(j, i), s.u_inv(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < m; ++j) std::swap(a(j, i), a(j, k));
        for (std::size_t j = 0; j < n; ++j) std::swap(s.v(j, i), s.v(j, k));
        for (std::size_t j = 0; j < n; ++j) std::swap(s.v_inv(i, j), s.v_inv(k, j));
    };
    auto row_add = [&](std::size_t i, std::size_t k, const Int& f) {  // row i += f * row k
        if (f == 0) return;
        for (std::size_t j = 0; j < n; ++j)
            if (a(k, j) != 0) a(i, j) += f * a(k, j);
        for (std::size_t j = 0; j < m; ++j)
            if (s.u(k, j) != 0) s.u(i, j) += f * s.u(k, j);
        for (std::size_t j = 0; j < m; ++j)
            if (s.u_inv(j, i) != 0) s.u_inv(j, k) -= f * s.u_inv(j, i);
    };
    auto col_add = [&](std::size_t i, std::size_t k, const Int& f) {  // col i += f * col k
        if (f == 0) return;
        for (std::size_t j = 0; j < m; ++j)
            if (a(j, k) != 0) a(j, i) += f * a(j, k);
        for (std::size_t j = 0; j < n; ++j)
            if (s.v(j, k) != 0) s.v(j, i) += f * s.v(j, k);
        for (std::size_t j = 0; j < n; ++j)
            if (s.v_inv(i, j) != 0) s.v_inv(k, j) -= f * s.v_inv(i, j);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = -a(i, j);
        for (std::size_t j = 0; j < m; ++j) s.u(i, j) = -s.u(i, j);
        for (std::size_t j = 0; j < m; ++j) s.u_inv(j, i) = -s.u_inv(j, i);
    };

    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        // locate minimal nonzero |a(i,j)| in the trailing submatrix
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                Int v = abs_int(a(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                row_add(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                col_add(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // remainders are strictly smaller; re-pick the pivot
                std::size_t qi = t, qj = t;
                Int qbest = abs_int(a(t, t));
                for (std::size_t i = t; i < m; ++i)
                    for (std::size_t j = t; j < n; ++j) {
                        if (a(i, j) == 0) continue;
                        Int v = abs_int(a(i, j));
                        if (v < qbest) {
                            qbest = v;
                            qi = i;
                            qj = j;
                        }
                    }
                row_swap(t, qi);
                col_swap(t, qj);
                continue;
            }
            // row/col cleared; enforce divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        row_add(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) row_negate(t);
    }

    s.rank = t;
    s.diag.resize(t);
    for (std::size_t i = 0; i < t; ++i) s.diag[i] = a(i, i);
    s.d = std::move(a);
    return s;
}

// Particular integer solution of a*x = b, where snf was computed from a.
inline std::optional<std::vector<Int>> smith_solve(const SmithForm& s, const std::vector<Int>& b) {
    const std::size_t m = s.u.rows(), n = s.v.rows();
    if (b.size() != m) throw std::invalid_argument("smith_solve: rhs size mismatch");
    std::vector<Int> c = s.u * b;
    std::vector<Int> y(n);
    for (std::size_t i = 0; i < m; ++i) {
        Int di = s.diag_at(i);
        if (di != 0) {
            if (c[i] % di != 0) return std::nullopt;
            if (i < n) y[i] = c[i] / di;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

inline std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    return smith_solve(smith_normal_form(a), b);
}

// Basis of {x : a*x = 0}: the trailing columns of V.
inline IntMat kernel_basis(const SmithForm& s) {
    const std::size_t n = s.v.rows();
    IntMat k(n, n - s.rank);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - s.rank) = s.v(i, j);
    return k;
}

inline IntMat kernel_basis(const IntMat& a) { return kernel_basis(smith_normal_form(a)); }

inline bool in_span(const SmithForm& s, const std::vector<Int>& x) {
    return smith_solve(s, x).has_value();
}

// Every column of b lies in the column span of a.
inline bool lattice_subset(const IntMat& b, const IntMat& a) {
    if (b.cols() == 0) return true;
    SmithForm s = smith_normal_form(a);
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!in_span(s, b.column(j))) return false;
    return true;
}

inline bool lattice_equal(const IntMat& a, const IntMat& b) {
    return lattice_subset(a, b) && lattice_subset(b, a);
}

// Independent basis for the column span of a: nonzero columns of U^{-1} D.
inline IntMat lattice_basis(const IntMat& a) {
    SmithForm s = smith_normal_form(a);
    IntMat b(a.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = s.diag[j] * s.u_inv(i, j);
    return b;
}

// Generators of span(a) ∩ span(b): a-parts of the kernel of [a | -b].
inline IntMat lattice_intersection(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("lattice_intersection: row mismatch");
    IntMat stacked(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) stacked(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) stacked(i, a.cols() + j) = -b(i, j);
    }
    IntMat ker = kernel_basis(stacked);
    IntMat out(a.rows(), ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        std::vector<Int> coeff(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) coeff[i] = ker(i, j);
        std::vector<Int> x = a * coeff;
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = x[i];
    }
    return out;
}

}  // namespace cechtower
