#pragma once
// Dense matrices over an exact field and deterministic Gauss-Jordan elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klrtor/exact/field.hpp"
#include "klrtor/util/deadline.hpp"

namespace klrtor {

template <class Field>
class ExactMatrix {
public:
    using Element = typename Field::Element;

    explicit ExactMatrix(Field field, std::size_t rows = 0, std::size_t cols = 0)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    /// Builds a matrix from integer rows; all rows must have the same length.
    static ExactMatrix from_rows(Field field, const std::vector<std::vector<long>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        ExactMatrix m(std::move(field), rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("ExactMatrix: ragged rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.from_int(rows[r][c]);
        }
        return m;
    }

    static ExactMatrix identity(Field field, std::size_t n) {
        ExactMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Appends a row; the first row appended to an empty 0-column matrix fixes the width.
    void append_row(std::span<const Element> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_) throw std::invalid_argument("ExactMatrix: row width mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    ExactMatrix operator*(const ExactMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
        ExactMatrix out(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element& a = (*this)(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Element& b = o(k, j);
                    if (!field_.is_zero(b)) out(i, j) = field_.add(out(i, j), field_.mul(a, b));
                }
            }
        return out;
    }

    ExactMatrix transpose() const {
        ExactMatrix out(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

template <class Field>
struct RowReduction {
    ExactMatrix<Field> reduced; // reduced row echelon form
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. Pivots are the first nonzero entry found scanning rows
/// top to bottom, so the result depends only on the input.
template <class Field>
RowReduction<Field> row_reduce(ExactMatrix<Field> m, const Deadline* deadline = nullptr) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        if ((c & 31) == 0) check_deadline(deadline);
        std::size_t p = rank;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, rank);
        auto prow = m.row(rank);
        auto inv = f.inv(prow[c]);
        support.clear();
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (f.is_zero(prow[j])) continue;
            prow[j] = f.mul(prow[j], inv);
            support.push_back(j);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            auto row = m.row(r);
            if (f.is_zero(row[c])) continue;
            auto factor = row[c];
            for (std::size_t j : support) f.sub_mul(row[j], factor, prow[j]);
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(m), std::move(pivots)};
}

template <class Field>
std::size_t rank(const ExactMatrix<Field>& m, const Deadline* deadline = nullptr) {
    return row_reduce(m, deadline).rank();
}

template <class Field>
struct RankAndKernel {
    std::size_t rank = 0;
    std::vector<std::vector<typename Field::Element>> kernel; // basis, one vector per free column
};

/// Rank and a kernel basis (right null space). rank + kernel.size() == m.cols().
template <class Field>
RankAndKernel<Field> rank_and_kernel(const ExactMatrix<Field>& m, const Deadline* deadline = nullptr) {
    const Field& f = m.field();
    auto rr = row_reduce(m, deadline);
    RankAndKernel<Field> out;
    out.rank = rr.rank();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivot_columns) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Field::Element> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r) {
            const auto& entry = rr.reduced(r, free);
            if (!f.is_zero(entry)) v[rr.pivot_columns[r]] = f.neg(entry);
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

/// Solves m x = rhs when m is square and invertible; nullopt when singular.
template <class Field>
std::optional<std::vector<typename Field::Element>> solve_unique(const ExactMatrix<Field>& m,
                                                                 std::span<const typename Field::Element> rhs) {
    if (m.rows() != m.cols() || rhs.size() != m.rows())
        throw std::invalid_argument("solve_unique: shape mismatch");
    const std::size_t n = m.rows();
    ExactMatrix<Field> aug(m.field(), n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n) = rhs[r];
    }
    auto rr = row_reduce(std::move(aug));
    if (rr.rank() != n || (n > 0 && rr.pivot_columns.back() != n - 1)) return std::nullopt;
    std::vector<typename Field::Element> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = rr.reduced(r, n);
    return x;
}

/// A growing set of linearly independent vectors kept in reduced echelon form.
template <class Field>
class IncrementalBasis {
public:
    using Element = typename Field::Element;
    using Vector = std::vector<Element>;

    IncrementalBasis(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// v minus its projection onto the span, in the echelon coordinates.
    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto c = pivots_[r];
            if (field_.is_zero(v[c])) continue;
            const Element factor = v[c];
            for (std::size_t j : support_[r]) field_.sub_mul(v[j], factor, rows_[r][j]);
        }
        return v;
    }

    bool contains(const Vector& v) const {
        auto rem = reduce(v);
        for (const auto& e : rem)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    /// Adds v if independent; returns whether the rank grew.
    bool insert(const Vector& v) {
        if (v.size() != dim_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
        Vector rem = reduce(v);
        std::size_t c = 0;
        while (c < dim_ && field_.is_zero(rem[c])) ++c;
        if (c == dim_) return false;
        const Element inv = field_.inv(rem[c]);
        std::vector<std::size_t> supp;
        for (std::size_t j = c; j < dim_; ++j)
            if (!field_.is_zero(rem[j])) {
                rem[j] = field_.mul(rem[j], inv);
                supp.push_back(j);
            }
        // keep earlier rows reduced with respect to the new pivot
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (field_.is_zero(rows_[r][c])) continue;
            const Element factor = rows_[r][c];
            for (std::size_t j : supp) field_.sub_mul(rows_[r][j], factor, rem[j]);
            support_[r].clear();
            for (std::size_t j = 0; j < dim_; ++j)
                if (!field_.is_zero(rows_[r][j])) support_[r].push_back(j);
        }
        rows_.push_back(std::move(rem));
        pivots_.push_back(c);
        support_.push_back(std::move(supp));
        return true;
    }

    const std::vector<Vector>& rows() const { return rows_; }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_;
};

} // namespace klrtor
