#pragma once

#include "lsdual/sparse.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace lsdual {

class Subspace;

/// Incremental Gaussian elimination over Q. Rows are reduced against the
/// pivots seen so far; `finish()` back-substitutes to reduced row-echelon form.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient_dim);

    /// Returns true if `row` was independent of the rows added before it.
    bool add(const SparseVector& row);
    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    bool full() const { return rank() == dim_; }

    Subspace finish() &&;

private:
    std::size_t dim_;
    std::map<std::size_t, SparseVector> pivot_rows_;  // pivot column -> row with leading 1
    std::vector<Rational> scratch_;
};

/// A linear subspace of Q^n held as its reduced row-echelon basis, pivots at
/// the lowest available column. The representation is unique, so equality of
/// subspaces is equality of the stored matrices.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(const std::vector<SparseVector>& vectors, std::size_t ambient_dim);
    static Subspace span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim);
    static Subspace kernel(const SparseMatrix& m);
    static Subspace kernel(const std::vector<SparseVector>& equations, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseVector>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Columns that carry no pivot, in increasing order; they index a basis of
    /// the quotient Q^n / this.
    std::vector<std::size_t> free_columns() const;
    SparseMatrix matrix() const { return SparseMatrix::from_rows(rows_, dim_); }

    /// v minus its projection along the pivot columns; zero iff v lies in the space.
    SparseVector normal_form(const SparseVector& v) const;
    bool contains(const SparseVector& v) const;
    /// Coordinates of the class of v in Q^n / this, indexed like free_columns().
    SparseVector quotient_coords(const SparseVector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    friend class EchelonBuilder;
    std::size_t dim_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool is_subspace(const Subspace& a, const Subspace& b);
/// { v : v^T G a = 0 for every a in A }.
Subspace orthogonal_complement(const Subspace& a, const SparseMatrix& gram);
/// Complement with respect to the standard dot product.
Subspace orthogonal_complement(const Subspace& a);
/// dim B - dim A; throws std::invalid_argument unless A is contained in B.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

}  // namespace lsdual
