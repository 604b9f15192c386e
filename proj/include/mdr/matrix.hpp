#pragma once

#include <vector>

#include "mdr/error.hpp"
#include "mdr/unipoly.hpp"

namespace mdr {

// Dense matrix over a field F with exact Gaussian elimination.
template <typename F>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                fail(ErrKind::Precondition, "ragged matrix rows");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrKind::Precondition, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail(ErrKind::Precondition, "matrix sum shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail(ErrKind::Precondition, "matrix difference shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }
    Matrix scaled(const F& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) fail(ErrKind::Precondition, "matrix-vector shape mismatch");
        std::vector<F> out(rows_, F(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    // Row echelon reduction in place; returns pivot column indices.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t sel = row;
            while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
            if (sel == rows_) continue;
            for (size_t j = 0; j < cols_; ++j) std::swap((*this)(row, j), (*this)(sel, j));
            F inv = F(1) / (*this)(row, col);
            for (size_t j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                F f = (*this)(i, col);
                for (size_t j = col; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    F det() const {
        if (rows_ != cols_) fail(ErrKind::Precondition, "determinant of nonsquare matrix");
        Matrix m = *this;
        F d(1);
        for (size_t col = 0; col < cols_; ++col) {
            size_t sel = col;
            while (sel < rows_ && m(sel, col).is_zero()) ++sel;
            if (sel == rows_) return F(0);
            if (sel != col) {
                for (size_t j = 0; j < cols_; ++j) std::swap(m(col, j), m(sel, j));
                d = F(0) - d;
            }
            d = d * m(col, col);
            F inv = F(1) / m(col, col);
            for (size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col).is_zero()) continue;
                F f = m(i, col) * inv;
                for (size_t j = col; j < cols_; ++j) m(i, j) = m(i, j) - f * m(col, j);
            }
        }
        return d;
    }

    F trace() const {
        F t(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t = t + (*this)(i, i);
        return t;
    }

    // Basis of the null space (as column vectors), plus rank-nullity check.
    std::vector<std::vector<F>> kernel_basis() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::vector<F>> basis;
        for (size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<F> v(cols_, F(0));
            v[free] = F(1);
            for (size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = F(0) - m(r, free);
            basis.push_back(std::move(v));
        }
        require_invariant(basis.size() + pivots.size() == cols_,
                          "rank-nullity violated in kernel computation");
        return basis;
    }

    // Basis of the column space: the original columns at pivot positions.
    std::vector<std::vector<F>> image_basis() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<std::vector<F>> basis;
        for (size_t p : pivots) {
            std::vector<F> col(rows_, F(0));
            for (size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, p);
            basis.push_back(std::move(col));
        }
        return basis;
    }

    // Representatives of target / image: standard basis vectors completing
    // the column space to the full target.
    std::vector<std::vector<F>> cokernel_representatives() const {
        std::vector<std::vector<F>> gens;
        for (size_t j = 0; j < cols_; ++j) {
            std::vector<F> col(rows_, F(0));
            for (size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
            gens.push_back(std::move(col));
        }
        std::vector<std::vector<F>> reps;
        size_t base_rank = span_rank(gens);
        for (size_t i = 0; i < rows_; ++i) {
            std::vector<F> e(rows_, F(0));
            e[i] = F(1);
            gens.push_back(e);
            if (span_rank(gens) > base_rank) {
                ++base_rank;
                reps.push_back(std::move(e));
            } else {
                gens.pop_back();
            }
        }
        return reps;
    }

    // Solves A x = b; nullopt when inconsistent.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        if (b.size() != rows_) fail(ErrKind::Precondition, "solve shape mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<F> x(cols_, F(0));
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
        return x;
    }

    static size_t span_rank(const std::vector<std::vector<F>>& vecs) {
        if (vecs.empty()) return 0;
        Matrix m(vecs.size(), vecs[0].size());
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = 0; j < vecs[0].size(); ++j) m(i, j) = vecs[i][j];
        return m.rank();
    }

    // Characteristic polynomial det(T*I - A) by Faddeev-LeVerrier.
    UniPoly<F> char_poly() const {
        if (rows_ != cols_) fail(ErrKind::Precondition, "char poly of nonsquare matrix");
        size_t n = rows_;
        std::vector<F> c(n + 1, F(0));
        c[n] = F(1);
        Matrix m(n, n);
        for (size_t k = 1; k <= n; ++k) {
            m = (*this) * m;
            for (size_t i = 0; i < n; ++i) m(i, i) = m(i, i) + c[n - k + 1];
            F t = ((*this) * m).trace();
            c[n - k] = (F(0) - t) / F(static_cast<long>(k));
        }
        return UniPoly<F>(std::move(c));
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

// Precomputed elimination of a fixed matrix for repeated solves: T m = R
// with R in reduced row echelon form.
template <typename F>
class SolvedSystem {
  public:
    explicit SolvedSystem(const Matrix<F>& m) : cols_(m.cols()) {
        size_t rows = m.rows();
        Matrix<F> aug(rows, m.cols() + rows);
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
            aug(i, m.cols() + i) = F(1);
        }
        // eliminate only on the first cols_ columns
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows; ++col) {
            size_t sel = row;
            while (sel < rows && aug(sel, col).is_zero()) ++sel;
            if (sel == rows) continue;
            for (size_t j = 0; j < aug.cols(); ++j) std::swap(aug(row, j), aug(sel, j));
            F inv = F(1) / aug(row, col);
            for (size_t j = 0; j < aug.cols(); ++j) aug(row, j) = aug(row, j) * inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == row || aug(i, col).is_zero()) continue;
                F f = aug(i, col);
                for (size_t j = 0; j < aug.cols(); ++j)
                    aug(i, j) = aug(i, j) - f * aug(row, j);
            }
            pivots_.push_back(col);
            ++row;
        }
        rank_ = row;
        r_ = Matrix<F>(rows, cols_);
        t_ = Matrix<F>(rows, rows);
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < cols_; ++j) r_(i, j) = aug(i, j);
            for (size_t j = 0; j < rows; ++j) t_(i, j) = aug(i, cols_ + j);
        }
    }

    // Solves m x = b; nullopt when inconsistent. Free variables are zero.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        std::vector<F> c = t_.apply(b);
        for (size_t i = rank_; i < c.size(); ++i)
            if (!c[i].is_zero()) return std::nullopt;
        std::vector<F> x(cols_, F(0));
        for (size_t i = 0; i < rank_; ++i) x[pivots_[i]] = c[i];
        return x;
    }

    size_t rank() const { return rank_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

  private:
    size_t cols_ = 0, rank_ = 0;
    Matrix<F> r_, t_;
    std::vector<size_t> pivots_;
};

// Intersection of two subspaces spanned by the given row vectors.
template <typename F>
std::vector<std::vector<F>> span_intersection(const std::vector<std::vector<F>>& a,
                                              const std::vector<std::vector<F>>& b, size_t dim) {
    // Kernel trick: solutions of  sum x_i a_i - sum y_j b_j = 0.
    if (a.empty() || b.empty()) return {};
    Matrix<F> m(dim, a.size() + b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t d = 0; d < dim; ++d) m(d, i) = a[i][d];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t d = 0; d < dim; ++d) m(d, a.size() + j) = F(0) - b[j][d];
    std::vector<std::vector<F>> out;
    for (const auto& k : m.kernel_basis()) {
        std::vector<F> v(dim, F(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t d = 0; d < dim; ++d) v[d] = v[d] + k[i] * a[i][d];
        out.push_back(std::move(v));
    }
    // Prune to an independent spanning set.
    std::vector<std::vector<F>> basis;
    for (auto& v : out) {
        basis.push_back(v);
        if (Matrix<F>::span_rank(basis) < basis.size()) basis.pop_back();
    }
    return basis;
}

}  // namespace mdr
