#include "lsdual/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsdual {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
    }
}

}  // namespace

EchelonBuilder::EchelonBuilder(std::size_t ambient_dim) : dim_(ambient_dim), scratch_(ambient_dim) {}

bool EchelonBuilder::add(const SparseVector& row) {
    if (row.dim() != dim_) throw std::invalid_argument("EchelonBuilder::add: dimension mismatch");
    if (row.is_zero()) return false;
    const std::size_t start = row.entries().front().first;
    for (const auto& [c, v] : row.entries()) scratch_[c] = v;

    std::size_t lead = dim_;
    for (std::size_t c = start; c < dim_; ++c) {
        if (scratch_[c] == 0) continue;
        auto it = pivot_rows_.find(c);
        if (it == pivot_rows_.end()) {
            lead = c;
            break;
        }
        const Rational f = scratch_[c];
        for (const auto& [cc, v] : it->second.entries()) scratch_[cc] -= f * v;
    }

    bool independent = false;
    if (lead < dim_) {
        const Rational inv = 1 / scratch_[lead];
        SparseVector fresh(dim_);
        for (std::size_t c = lead; c < dim_; ++c) {
            if (scratch_[c] != 0) fresh.push_back(c, scratch_[c] * inv);
        }
        pivot_rows_.emplace(lead, std::move(fresh));
        independent = true;
    }
    for (std::size_t c = start; c < dim_; ++c) scratch_[c] = 0;
    return independent;
}

Subspace EchelonBuilder::finish() && {
    Subspace out;
    out.dim_ = dim_;
    std::vector<std::size_t> pivots;
    std::vector<SparseVector> rows;
    pivots.reserve(pivot_rows_.size());
    rows.reserve(pivot_rows_.size());
    for (auto& [p, row] : pivot_rows_) {
        pivots.push_back(p);
        rows.push_back(std::move(row));
    }
    // Back-substitution: clear every pivot column above its pivot row.
    for (std::size_t i = rows.size(); i-- > 0;) {
        bool touched = false;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[i].at(pivots[j]) != 0) {
                touched = true;
                break;
            }
        }
        if (!touched) continue;
        for (const auto& [c, v] : rows[i].entries()) scratch_[c] = v;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Rational f = scratch_[pivots[j]];
            if (f == 0) continue;
            for (const auto& [cc, v] : rows[j].entries()) scratch_[cc] -= f * v;
        }
        SparseVector reduced(dim_);
        for (std::size_t c = pivots[i]; c < dim_; ++c) {
            if (scratch_[c] != 0) reduced.push_back(c, scratch_[c]);
            scratch_[c] = 0;
        }
        rows[i] = std::move(reduced);
    }
    out.pivots_ = std::move(pivots);
    out.rows_ = std::move(rows);
    pivot_rows_.clear();
    return out;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.dim_ = ambient_dim;
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.dim_ = ambient_dim;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.rows_.push_back(SparseVector::unit(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(const std::vector<SparseVector>& vectors, std::size_t ambient_dim) {
    EchelonBuilder eb(ambient_dim);
    for (const auto& v : vectors) {
        if (v.dim() != ambient_dim) throw std::invalid_argument("Subspace::span: vector length mismatch");
        if (eb.full()) break;
        eb.add(v);
    }
    return std::move(eb).finish();
}

Subspace Subspace::span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim) {
    std::vector<SparseVector> sparse;
    sparse.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: vector length mismatch");
        sparse.push_back(SparseVector::from_dense(v));
    }
    return span(sparse, ambient_dim);
}

Subspace Subspace::kernel(const std::vector<SparseVector>& equations, std::size_t ambient_dim) {
    const Subspace rowspace = span(equations, ambient_dim);
    std::vector<SparseVector> generators;
    const auto free = rowspace.free_columns();
    generators.reserve(free.size());
    for (std::size_t f : free) {
        SparseVector v(ambient_dim);
        v.set(f, 1);
        for (std::size_t i = 0; i < rowspace.dim(); ++i) {
            const Rational a = rowspace.rows_[i].at(f);
            if (a != 0) v.set(rowspace.pivots_[i], -a);
        }
        generators.push_back(std::move(v));
    }
    return span(generators, ambient_dim);
}

Subspace Subspace::kernel(const SparseMatrix& m) { return kernel(m.row_vectors(), m.cols()); }

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    out.reserve(dim_ - pivots_.size());
    std::size_t next = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

SparseVector Subspace::normal_form(const SparseVector& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("Subspace::normal_form: dimension mismatch");
    SparseVector out = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = v.at(pivots_[i]);
        if (f != 0) out.axpy(-f, rows_[i]);
    }
    return out;
}

bool Subspace::contains(const SparseVector& v) const { return normal_form(v).is_zero(); }

SparseVector Subspace::quotient_coords(const SparseVector& v) const {
    const SparseVector nf = normal_form(v);
    SparseVector out(dim_ - pivots_.size());
    // Entries of the normal form sit on free columns only.
    std::size_t piv = 0;
    std::size_t free_index = 0;
    std::size_t col = 0;
    for (const auto& [c, value] : nf.entries()) {
        while (col < c) {
            if (piv < pivots_.size() && pivots_[piv] == col) {
                ++piv;
            } else {
                ++free_index;
            }
            ++col;
        }
        out.push_back(free_index, value);
    }
    return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    EchelonBuilder eb(a.ambient_dim());
    for (const auto& v : a.basis()) eb.add(v);
    for (const auto& v : b.basis()) {
        if (eb.full()) break;
        eb.add(v);
    }
    return std::move(eb).finish();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    return orthogonal_complement(sum(orthogonal_complement(a), orthogonal_complement(b)));
}

bool is_subspace(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "is_subspace");
    if (a.dim() > b.dim()) return false;
    return std::all_of(a.basis().begin(), a.basis().end(), [&](const SparseVector& v) { return b.contains(v); });
}

Subspace orthogonal_complement(const Subspace& a) { return Subspace::kernel(a.basis(), a.ambient_dim()); }

Subspace orthogonal_complement(const Subspace& a, const SparseMatrix& gram) {
    if (gram.rows() != a.ambient_dim() || gram.cols() != a.ambient_dim()) {
        throw std::invalid_argument("orthogonal_complement: Gram matrix does not match ambient dimension");
    }
    std::vector<SparseVector> equations;
    equations.reserve(a.dim());
    for (const auto& v : a.basis()) equations.push_back(gram.apply(v));
    return Subspace::kernel(equations, a.ambient_dim());
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
    if (!is_subspace(a, b)) throw std::invalid_argument("quotient_dim: first space is not contained in the second");
    return b.dim() - a.dim();
}

}  // namespace lsdual
