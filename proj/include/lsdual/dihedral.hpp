#pragma once

#include "lsdual/commring.hpp"
#include "lsdual/lincomb.hpp"
#include "lsdual/ncalg.hpp"
#include "lsdual/subspace.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsdual {

/// Basis symbol of V = W + U.
///   I(n_1,...,n_m), all n_i >= 1, spans W (depth m >= 1).
///   I'(n_0,...,n_m), all n_i >= 1, spans U; I'(0) is the unit of bidegree (0,0).
struct VIndex {
    enum class Kind { I, Iprime };

    Kind kind = Kind::I;
    std::vector<int> parts;

    /// Throws std::invalid_argument on an empty list or a part < 1.
    static VIndex I(std::vector<int> parts);
    /// I'(0) is written Iprime({0}); otherwise all parts must be >= 1.
    static VIndex Iprime(std::vector<int> parts);

    bool is_w() const { return kind == Kind::I; }
    std::size_t depth() const;
    std::size_t weight() const;
    std::string str() const;

    friend bool operator==(const VIndex&, const VIndex&) = default;
    friend std::strong_ordering operator<=>(const VIndex& a, const VIndex& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.parts <=> b.parts;
    }
};

using VVector = LinComb<VIndex>;
using VPair = std::pair<VIndex, VIndex>;
using VTensor2 = LinComb<VPair>;

VTensor2 tensor(const VVector& a, const VVector& b);
/// a (x) b - b (x) a
VTensor2 wedge(const VVector& a, const VVector& b);

/// Ordered basis of V_{m,k}: the W part (compositions in lex order) followed by
/// the U part. dim W_{m,k} = C(k-1,m-1), dim U_{m,k} = C(k-1,m).
class VBasis {
public:
    VBasis(std::size_t m, std::size_t k);

    std::size_t depth() const { return m_; }
    std::size_t weight() const { return k_; }
    std::size_t size() const { return indices_.size(); }
    std::size_t w_size() const { return w_size_; }
    std::size_t u_size() const { return size() - w_size_; }
    const std::vector<VIndex>& indices() const { return indices_; }
    /// Throws std::invalid_argument for symbols of another bidegree.
    std::size_t index(const VIndex& v) const;
    SparseVector coords(const VVector& v) const;
    VVector vector(const SparseVector& c) const;

private:
    std::size_t m_;
    std::size_t k_;
    std::size_t w_size_ = 0;
    std::vector<VIndex> indices_;
    std::map<VIndex, std::size_t> position_;
};

/// Power series in commuting variables s_1..s_n with coefficients in a
/// LinComb-like space, truncated at total degree max_degree.
template <class C>
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t num_vars, std::size_t max_degree) : n_(num_vars), max_(max_degree) {}

    std::size_t num_vars() const { return n_; }
    std::size_t max_degree() const { return max_; }
    const std::map<Exponents, C>& terms() const { return terms_; }

    /// Terms above the truncation degree are dropped.
    void add(const Exponents& e, const C& c) {
        if (e.size() != n_) throw std::invalid_argument("TruncatedSeries::add: exponent length mismatch");
        if (total_degree(e) > max_ || c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add(e, Rational(-1) * c);
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.n_ == b.n_ && a.max_ == b.max_ && a.terms_ == b.terms_;
    }

    /// s_i -> forms[i-1]; every form must be linear homogeneous (or zero) in
    /// `new_vars` variables.
    TruncatedSeries substitute(const std::vector<CommPoly>& forms, std::size_t new_vars) const {
        if (forms.size() != n_) throw std::invalid_argument("TruncatedSeries::substitute: wrong number of forms");
        for (const auto& f : forms) {
            if (f.num_vars() != new_vars) throw std::invalid_argument("TruncatedSeries::substitute: form ring mismatch");
            for (const auto& [e, c] : f.terms()) {
                if (total_degree(e) != 1) throw std::invalid_argument("TruncatedSeries::substitute: form is not linear");
            }
        }
        TruncatedSeries out(new_vars, max_);
        for (const auto& [e, c] : terms_) {
            CommPoly image = CommPoly::constant(new_vars, 1);
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] != 0) image = image * forms[i].pow(e[i]);
            }
            for (const auto& [f, a] : image.terms()) out.add(f, a * c);
        }
        return out;
    }

private:
    void require_same(const TruncatedSeries& o) const {
        if (o.n_ != n_ || o.max_ != max_) throw std::invalid_argument("TruncatedSeries: shape mismatch");
    }

    std::size_t n_;
    std::size_t max_;
    std::map<Exponents, C> terms_;
};

/// Cauchy product with the coefficient product `op`, truncated at total
/// degree `max_degree`.
template <class A, class B, class Op>
auto series_product(const TruncatedSeries<A>& a, const TruncatedSeries<B>& b, Op op, std::size_t max_degree) {
    using Out = decltype(op(std::declval<const A&>(), std::declval<const B&>()));
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("series_product: variable count mismatch");
    TruncatedSeries<Out> out(a.num_vars(), max_degree);
    for (const auto& [ea, ca] : a.terms()) {
        const std::size_t da = total_degree(ea);
        if (da > max_degree) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > max_degree) continue;
            Exponents e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add(e, op(ca, cb));
        }
    }
    return out;
}

/// For two truncations of full series the product is exact only up to the
/// smaller bound, so that is where it is cut.
template <class A, class B, class Op>
auto series_product(const TruncatedSeries<A>& a, const TruncatedSeries<B>& b, Op op) {
    return series_product(a, b, op, std::min(a.max_degree(), b.max_degree()));
}

/// Applies a linear map to every coefficient.
template <class C, class Fn>
auto series_map(const TruncatedSeries<C>& s, Fn fn) {
    using Out = decltype(fn(std::declval<const C&>()));
    TruncatedSeries<Out> out(s.num_vars(), s.max_degree());
    for (const auto& [e, c] : s.terms()) out.add(e, fn(c));
    return out;
}

// --- Colon series, W_R, F --------------------------------------------------

/// Weight-k slice of {t_1:...:t_m:t_{m+1}} in s_i = t_i - t_{m+1}: the
/// coefficient of s_1^{n_1-1}...s_m^{n_m-1} is I(n_1,...,n_m). Requires k >= m >= 1.
TruncatedSeries<VVector> series_colon(std::size_t m, std::size_t k);

/// (W_R)_{m,k} as a subspace of the W part of VBasis(m, k) (ambient C(k-1,m-1)).
Subspace compute_WR(std::size_t m, std::size_t k);

/// F_{m,k} = (W_R)_{m,k} + U_{m,k} inside V_{m,k}, coordinates of VBasis(m, k).
/// Defined for k >= m >= 0; W_R is empty in depth 0.
Subspace compute_F(std::size_t m, std::size_t k, const Subspace& wr);
Subspace compute_F(std::size_t m, std::size_t k);

/// Every coefficient of {t_1:...:t_{m+1}} - {t_{m+1}:t_1:...:t_m} lies in W_R.
bool cycle_check(std::size_t m, std::size_t k);

// --- The cobracket delta~ ----------------------------------------------------

/// delta~ on a bidegree-homogeneous element of W. Throws std::invalid_argument
/// on mixed bidegrees or on U symbols.
VTensor2 cobracket_delta(const VVector& v);

// --- phi ---------------------------------------------------------------------

/// phi(I(n_1..n_m)) = x^{n_m-1}z...x^{n_1-1}z,
/// phi(I'(n_0..n_m)) = (x^{n_m-1}z...x^{n_1-1}z x^{n_0-1}) sh x, phi(I'(0)) = 1.
NcPoly phi(const VIndex& v);
NcPoly phi(const VVector& v);
/// Matrix of phi on bidegree (m,k): rows WordBasis(m,k), columns VBasis(m,k).
SparseMatrix phi_matrix(std::size_t m, std::size_t k);
/// Inverse of phi, bidegree by bidegree. The zero polynomial maps to zero.
VVector phi_inverse(const NcPoly& p);
/// (phi^{-1} (x) phi^{-1}) applied to a tensor.
VTensor2 phi_inverse(const Tensor2& t);
/// The pullback (phi^{-1} (x) phi^{-1}) o co_ihara o phi.
VTensor2 pullback_coihara(const VVector& v);

// --- Q and P series ----------------------------------------------------------

/// sum_{j <= N} x^j form^j as a series in `num_vars` variables.
TruncatedSeries<NcPoly> geometric_x(const CommPoly& form, std::size_t num_vars, std::size_t N);

/// Q_n(w_1..w_n) = 1/(1-x(w_1+..+w_n)) z ... 1/(1-x w_1) z for linear forms w_i.
TruncatedSeries<NcPoly> q_series_at(const std::vector<CommPoly>& forms, std::size_t num_vars, std::size_t N);
/// Q_n(t_1..t_n) in n variables.
TruncatedSeries<NcPoly> q_series(std::size_t n, std::size_t N);

/// P(w_0..w_m) = 1/(1-x w_m) z ... 1/(1-x w_1) z 1/(1-x w_0).
TruncatedSeries<NcPoly> p_series_at(const std::vector<CommPoly>& forms, std::size_t num_vars, std::size_t N);
/// P(v_0..v_m) in m+1 variables; v_i is variable i+1.
TruncatedSeries<NcPoly> p_series(std::size_t m, std::size_t N);

// --- f_m and h_m ---------------------------------------------------------------

/// f_m(x^{n_1}z...x^{n_m}z x^{n_{m+1}}) = [n_{m+1} = 0] x_1^{n_1}...x_m^{n_m}.
/// Requires m >= 2 and p of depth m; throws std::invalid_argument otherwise.
CommPoly f_map(std::size_t m, const NcPoly& p);

/// h_m(phi) = sum phi(x_1^{n_m-1}...x_m^{n_1-1}) I(n_1..n_m), for a form given
/// by its values on monomial_basis(m, d), d = k - m. Requires m >= 2.
VVector h_map(std::size_t m, std::size_t d, const SparseVector& form);

}  // namespace lsdual
