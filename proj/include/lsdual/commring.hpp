#pragma once

#include "lsdual/rational.hpp"
#include "lsdual/sparse.hpp"
#include "lsdual/subspace.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lsdual {

using Exponents = std::vector<int>;

/// Element of Q[x_1,...,x_m]. Zero coefficients are never stored.
class CommPoly {
public:
    explicit CommPoly(std::size_t num_vars = 0) : m_(num_vars) {}

    static CommPoly constant(std::size_t num_vars, const Rational& c);
    /// x_i, 1-based.
    static CommPoly variable(std::size_t num_vars, std::size_t i);
    static CommPoly monomial(const Exponents& e, const Rational& c = 1);

    std::size_t num_vars() const { return m_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponents& e) const;
    void add(const Exponents& e, const Rational& c);

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const Rational& s);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const Rational& s, CommPoly a) { return a *= s; }
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

    CommPoly pow(int e) const;

private:
    void require_same(const CommPoly& o) const;

    std::size_t m_;
    std::map<Exponents, Rational> terms_;
};

std::size_t total_degree(const Exponents& e);

/// Algebra endomorphism x_i -> images[i-1], applied to p.
CommPoly substitute(const CommPoly& p, const std::vector<CommPoly>& images);

/// A permutation of [1,m] in one-line notation: sigma[i-1] = sigma(i).
using Permutation = std::vector<int>;

/// The (l, m-l)-shuffles: sigma increasing on [1,l] and on [l+1,m].
std::vector<Permutation> shuffles(std::size_t l, std::size_t m);

CommPoly apply_S(const CommPoly& p);
CommPoly apply_Tsigma(const CommPoly& p, const Permutation& sigma);
CommPoly apply_R(const CommPoly& p);
CommPoly apply_L(const CommPoly& p);
CommPoly apply_Tstar(const CommPoly& p, std::size_t l);
/// T_star^{(l)} o S_m
CommPoly apply_Tsh(const CommPoly& p, std::size_t l);

/// Degree-d monomials in m variables, graded lex with x_1 > x_2 > ... > x_m.
std::vector<Exponents> monomial_basis(std::size_t m, std::size_t d);

/// Matrix of a degree-preserving linear map on the degree-d component;
/// column j holds the image of the j-th basis monomial.
SparseMatrix operator_matrix(std::size_t m, std::size_t d, const std::function<CommPoly(const CommPoly&)>& op);

CommPoly poly_from_coords(std::size_t m, std::size_t d, const SparseVector& v);
SparseVector coords_of(const CommPoly& p, std::size_t d);

struct DshBasis {
    std::size_t m = 0;
    std::size_t d = 0;
    Subspace space;

    std::size_t weight() const { return d + m; }
    std::vector<CommPoly> polys() const;
};

/// Intersection of the kernels of T_star^{(l)} and T_sh^{(l)}, 1 <= l <= m-1,
/// on the degree-d component. Throws std::invalid_argument when m < 2.
DshBasis compute_dsh(std::size_t m, std::size_t d);

struct IdentityResult {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Checks R T_star^{(l)} R = T_star^{(m-l)}, R R = id, and the second identity
/// R T_star^{(l)} L R = T_{m-l,sh}^{(l)} with its alternative readings, on all
/// degrees up to max_degree.
std::vector<IdentityResult> operator_identities_check(std::size_t m, std::size_t max_degree);

}  // namespace lsdual
