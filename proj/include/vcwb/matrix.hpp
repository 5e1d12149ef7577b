#pragma once

/**
 * @file matrix.hpp
 * @brief Sparse exact matrices over a cyclotomic field.
 *
 * Column-major sparse storage; the structural morphisms of the workbench are
 * monomial (one entry per column), so sparse composition keeps the law sweeps
 * near-linear. Rank, inverse and solve run dense Gaussian elimination, which
 * is fine at hom-object scale.
 */

#include "vcwb/cyclotomic.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace vcwb {

class Mat {
public:
    Mat() : rows_(0), cols_(0), order_(1) {}
    Mat(long order, size_t rows, size_t cols) : rows_(rows), cols_(cols), order_(order), col_(cols) {}

    static Mat identity(long order, size_t n) {
        Mat m(order, n, n);
        for (size_t i = 0; i < n; ++i) m.col_[i].push_back({i, Cyclotomic::one(order)});
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long order() const { return order_; }

    void add_entry(size_t r, size_t c, const Cyclotomic& v) {
        if (v.is_zero()) return;
        auto& col = col_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& p, size_t row) { return p.first < row; });
        if (it != col.end() && it->first == r) {
            it->second += v;
            if (it->second.is_zero()) col.erase(it);
        } else {
            col.insert(it, {r, v});
        }
    }

    void set_entry(size_t r, size_t c, const Cyclotomic& v) {
        auto& col = col_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& p, size_t row) { return p.first < row; });
        if (it != col.end() && it->first == r) {
            if (v.is_zero()) col.erase(it);
            else it->second = v;
        } else if (!v.is_zero()) {
            col.insert(it, {r, v});
        }
    }

    Cyclotomic at(size_t r, size_t c) const {
        const auto& col = col_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& p, size_t row) { return p.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return Cyclotomic::zero(order_);
    }

    const std::vector<std::pair<size_t, Cyclotomic>>& column(size_t c) const { return col_[c]; }

    size_t nnz() const {
        size_t n = 0;
        for (auto& c : col_) n += c.size();
        return n;
    }

    bool is_zero() const { return nnz() == 0; }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (size_t c = 0; c < cols_; ++c) {
            if (col_[c].size() != 1) return false;
            if (col_[c][0].first != c || !col_[c][0].second.is_one()) return false;
        }
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (size_t c = 0; c < cols_; ++c)
            for (auto& [row, v] : o.col_[c]) r.add_entry(row, c, v);
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (size_t c = 0; c < cols_; ++c)
            for (auto& [row, v] : o.col_[c]) r.add_entry(row, c, -v);
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& col : r.col_)
            for (auto& [row, v] : col) v = -v;
        return r;
    }
    Mat scaled(const Cyclotomic& s) const {
        if (s.is_zero()) return Mat(order_, rows_, cols_);
        Mat r = *this;
        for (auto& col : r.col_)
            for (auto& [row, v] : col) v = v * s;
        return r;
    }

    /// Standard matrix product: (*this) has shape m x k, o has k x n.
    Mat operator*(const Mat& o) const {
        Mat r(order_, rows_, o.cols_);
        for (size_t c = 0; c < o.cols_; ++c) {
            std::map<size_t, Cyclotomic> acc;
            for (auto& [j, bv] : o.col_[c])
                for (auto& [i, av] : col_[j]) {
                    auto it = acc.find(i);
                    if (it == acc.end()) acc.emplace(i, av * bv);
                    else it->second += av * bv;
                }
            auto& col = r.col_[c];
            for (auto& [i, v] : acc)
                if (!v.is_zero()) col.push_back({i, v});
        }
        return r;
    }

    Mat transpose() const {
        Mat r(order_, cols_, rows_);
        for (size_t c = 0; c < cols_; ++c)
            for (auto& [row, v] : col_[c]) r.col_[row].push_back({c, v});
        for (auto& col : r.col_)
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }

    std::vector<std::vector<Cyclotomic>> to_dense() const {
        std::vector<std::vector<Cyclotomic>> d(rows_,
                                               std::vector<Cyclotomic>(cols_, Cyclotomic::zero(order_)));
        for (size_t c = 0; c < cols_; ++c)
            for (auto& [row, v] : col_[c]) d[row][c] = v;
        return d;
    }

    static Mat from_dense(long order, const std::vector<std::vector<Cyclotomic>>& d) {
        size_t rows = d.size(), cols = rows ? d[0].size() : 0;
        Mat m(order, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                if (!d[r][c].is_zero()) m.add_entry(r, c, d[r][c]);
        return m;
    }

    size_t rank() const {
        auto d = to_dense();
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t pivot = r;
            while (pivot < rows_ && d[pivot][c].is_zero()) ++pivot;
            if (pivot == rows_) continue;
            std::swap(d[pivot], d[r]);
            Cyclotomic inv = d[r][c].inverse();
            for (size_t cc = c; cc < cols_; ++cc) d[r][cc] *= inv;
            for (size_t rr = 0; rr < rows_; ++rr) {
                if (rr == r || d[rr][c].is_zero()) continue;
                Cyclotomic f = d[rr][c];
                for (size_t cc = c; cc < cols_; ++cc) d[rr][cc] -= f * d[r][cc];
            }
            ++r;
        }
        return r;
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Solve (*this) * X = B; returns nullopt when no solution exists.
    /// When the system is underdetermined the minimal echelon solution is
    /// returned (free variables set to zero), deterministically.
    std::optional<Mat> solve(const Mat& B) const {
        if (B.rows() != rows_) return std::nullopt;
        auto a = to_dense();
        auto b = B.to_dense();
        size_t n = cols_, k = B.cols();
        std::vector<size_t> pivot_col;
        size_t r = 0;
        for (size_t c = 0; c < n && r < rows_; ++c) {
            size_t pivot = r;
            while (pivot < rows_ && a[pivot][c].is_zero()) ++pivot;
            if (pivot == rows_) continue;
            std::swap(a[pivot], a[r]);
            std::swap(b[pivot], b[r]);
            Cyclotomic inv = a[r][c].inverse();
            for (size_t cc = 0; cc < n; ++cc) a[r][cc] *= inv;
            for (size_t cc = 0; cc < k; ++cc) b[r][cc] *= inv;
            for (size_t rr = 0; rr < rows_; ++rr) {
                if (rr == r || a[rr][c].is_zero()) continue;
                Cyclotomic f = a[rr][c];
                for (size_t cc = 0; cc < n; ++cc) a[rr][cc] -= f * a[r][cc];
                for (size_t cc = 0; cc < k; ++cc) b[rr][cc] -= f * b[r][cc];
            }
            pivot_col.push_back(c);
            ++r;
        }
        // consistency: rows below rank must have zero rhs
        for (size_t rr = r; rr < rows_; ++rr)
            for (size_t cc = 0; cc < k; ++cc)
                if (!b[rr][cc].is_zero()) return std::nullopt;
        Mat X(order_, n, k);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            for (size_t cc = 0; cc < k; ++cc)
                if (!b[i][cc].is_zero()) X.add_entry(pivot_col[i], cc, b[i][cc]);
        return X;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        auto X = solve(identity(order_, rows_));
        if (!X) return std::nullopt;
        // solve() can return a least-echelon answer for singular systems;
        // confirm it is a two-sided inverse
        if (!((*X) * (*this)).is_identity() || !((*this) * (*X)).is_identity())
            return std::nullopt;
        return X;
    }

private:
    size_t rows_, cols_;
    long order_;
    std::vector<std::vector<std::pair<size_t, Cyclotomic>>> col_;
};

} // namespace vcwb
