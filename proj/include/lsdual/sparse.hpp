#pragma once

#include "lsdual/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace lsdual {

/// Vector in Q^n with only the nonzero entries stored, sorted by column.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVector() = default;
    explicit SparseVector(std::size_t dim) : dim_(dim) {}

    static SparseVector from_dense(const std::vector<Rational>& values);
    static SparseVector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return dim_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Rational at(std::size_t col) const;
    void set(std::size_t col, const Rational& value);
    /// Appends an entry; `col` must exceed every stored column.
    void push_back(std::size_t col, const Rational& value);

    std::vector<Rational> to_dense() const;

    /// this += scale * other
    SparseVector& axpy(const Rational& scale, const SparseVector& other);
    SparseVector& operator*=(const Rational& scale);
    SparseVector& operator+=(const SparseVector& other) { return axpy(1, other); }
    SparseVector& operator-=(const SparseVector& other) { return axpy(-1, other); }

    Rational dot(const SparseVector& other) const;

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const SparseVector& a, const SparseVector& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        return a.entries_ < b.entries_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// rows x cols rational matrix stored as a map of nonzero entries.
class SparseMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_rows(const std::vector<SparseVector>& rows, std::size_t cols);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::map<Key, Rational>& entries() const { return entries_; }

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    void add(std::size_t r, std::size_t c, const Rational& value);

    std::vector<SparseVector> row_vectors() const;
    SparseMatrix transpose() const;
    SparseVector apply(const SparseVector& v) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void check_bounds(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<Key, Rational> entries_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

/// Rank of a matrix over Q.
std::size_t rank(const SparseMatrix& m);

/// Inverse of a square invertible matrix. Throws std::domain_error if singular.
SparseMatrix inverse(const SparseMatrix& m);

}  // namespace lsdual
