#include "lsdual/sparse.hpp"
#include "lsdual/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lsdual {

SparseVector SparseVector::from_dense(const std::vector<Rational>& values) {
    SparseVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) v.entries_.emplace_back(i, values[i]);
    }
    return v;
}

SparseVector SparseVector::unit(std::size_t dim, std::size_t index) {
    SparseVector v(dim);
    v.push_back(index, 1);
    return v;
}

Rational SparseVector::at(std::size_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) return it->second;
    return 0;
}

void SparseVector::set(std::size_t col, const Rational& value) {
    if (col >= dim_) throw std::out_of_range("SparseVector::set: column out of range");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) {
        if (value == 0) {
            entries_.erase(it);
        } else {
            it->second = value;
        }
    } else if (value != 0) {
        entries_.emplace(it, col, value);
    }
}

void SparseVector::push_back(std::size_t col, const Rational& value) {
    if (col >= dim_) throw std::out_of_range("SparseVector::push_back: column out of range");
    if (!entries_.empty() && entries_.back().first >= col) {
        throw std::invalid_argument("SparseVector::push_back: columns must increase");
    }
    if (value != 0) entries_.emplace_back(col, value);
}

std::vector<Rational> SparseVector::to_dense() const {
    std::vector<Rational> out(dim_);
    for (const auto& [c, v] : entries_) out[c] = v;
    return out;
}

SparseVector& SparseVector::axpy(const Rational& scale, const SparseVector& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("SparseVector::axpy: dimension mismatch");
    if (scale == 0 || other.entries_.empty()) return *this;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, scale * b->second);
            ++b;
        } else {
            Rational s = a->second + scale * b->second;
            if (s != 0) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

SparseVector& SparseVector::operator*=(const Rational& scale) {
    if (scale == 0) {
        entries_.clear();
    } else {
        for (auto& e : entries_) e.second *= scale;
    }
    return *this;
}

Rational SparseVector::dot(const SparseVector& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("SparseVector::dot: dimension mismatch");
    Rational acc = 0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            acc += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return acc;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, 1);
    return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<SparseVector>& rows, std::size_t cols) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols) throw std::invalid_argument("SparseMatrix::from_rows: row length mismatch");
        for (const auto& [c, v] : rows[r].entries()) m.entries_.emplace(Key{r, c}, v);
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("SparseMatrix::from_dense: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] != 0) m.entries_.emplace(Key{r, c}, rows[r][c]);
        }
    }
    return m;
}

void SparseMatrix::check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("SparseMatrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    check_bounds(r, c);
    auto it = entries_.find(Key{r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
    check_bounds(r, c);
    if (value == 0) {
        entries_.erase(Key{r, c});
    } else {
        entries_[Key{r, c}] = value;
    }
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
    check_bounds(r, c);
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(Key{r, c}, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
    std::vector<SparseVector> out(rows_, SparseVector(cols_));
    for (const auto& [key, v] : entries_) out[key.first].push_back(key.second, v);
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [key, v] : entries_) t.entries_.emplace(Key{key.second, key.first}, v);
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
    std::vector<Rational> acc(rows_);
    for (const auto& [key, a] : entries_) {
        const Rational x = v.at(key.second);
        if (x != 0) acc[key.first] += a * x;
    }
    return SparseVector::from_dense(acc);
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    const auto brows = b.row_vectors();
    SparseMatrix out(a.rows(), b.cols());
    for (const auto& [key, x] : a.entries()) {
        for (const auto& [c, y] : brows[key.second].entries()) out.add(key.first, c, x * y);
    }
    return out;
}

std::size_t rank(const SparseMatrix& m) {
    EchelonBuilder eb(m.cols());
    for (const auto& row : m.row_vectors()) {
        eb.add(row);
        if (eb.full()) break;
    }
    return eb.rank();
}

SparseMatrix inverse(const SparseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (const auto& [key, v] : m.entries()) a[key.first][key.second] = v;
    for (std::size_t i = 0; i < n; ++i) a[i][n + i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: matrix is singular");
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < 2 * n; ++c) {
                if (a[col][c] != 0) a[r][c] -= f * a[col][c];
            }
        }
    }
    SparseMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (a[r][n + c] != 0) out.set(r, c, a[r][n + c]);
        }
    }
    return out;
}

}  // namespace lsdual
