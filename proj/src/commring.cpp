#include "lsdual/commring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lsdual {

void CommPoly::require_same(const CommPoly& o) const {
    if (o.m_ != m_) throw std::invalid_argument("CommPoly: variable count mismatch");
}

CommPoly CommPoly::constant(std::size_t num_vars, const Rational& c) {
    CommPoly p(num_vars);
    p.add(Exponents(num_vars, 0), c);
    return p;
}

CommPoly CommPoly::variable(std::size_t num_vars, std::size_t i) {
    if (i == 0 || i > num_vars) throw std::invalid_argument("CommPoly::variable: index out of range");
    Exponents e(num_vars, 0);
    e[i - 1] = 1;
    return monomial(e);
}

CommPoly CommPoly::monomial(const Exponents& e, const Rational& c) {
    CommPoly p(e.size());
    p.add(e, c);
    return p;
}

Rational CommPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add(const Exponents& e, const Rational& c) {
    if (e.size() != m_) throw std::invalid_argument("CommPoly::add: exponent length mismatch");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
        throw std::invalid_argument("CommPoly::add: negative exponent");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
    } else {
        for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    a.require_same(b);
    CommPoly out(a.m_);
    Exponents e(a.m_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.m_; ++i) e[i] = ea[i] + eb[i];
            out.add(e, ca * cb);
        }
    }
    return out;
}

CommPoly CommPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("CommPoly::pow: negative exponent");
    CommPoly out = constant(m_, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::size_t total_degree(const Exponents& e) {
    return static_cast<std::size_t>(std::accumulate(e.begin(), e.end(), 0));
}

CommPoly substitute(const CommPoly& p, const std::vector<CommPoly>& images) {
    if (images.size() != p.num_vars()) throw std::invalid_argument("substitute: variable count mismatch");
    const std::size_t target = images.empty() ? 0 : images.front().num_vars();
    CommPoly out(target);
    // Powers of each image are reused across terms.
    std::vector<std::vector<CommPoly>> powers(images.size());
    for (const auto& [e, c] : p.terms()) {
        CommPoly term = CommPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(CommPoly::constant(target, 1));
            while (pw.size() <= static_cast<std::size_t>(e[i])) pw.push_back(pw.back() * images[i]);
            if (e[i] > 0) term = term * pw[static_cast<std::size_t>(e[i])];
        }
        out += term;
    }
    return out;
}

std::vector<Permutation> shuffles(std::size_t l, std::size_t m) {
    if (l > m) throw std::invalid_argument("shuffles: l > m");
    // Choose the image set of [1,l]; the rest fills the complement in order.
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(l), true);
    std::vector<Permutation> out;
    do {
        Permutation sigma(m);
        std::size_t a = 0;
        std::size_t b = l;
        for (std::size_t pos = 0; pos < m; ++pos) {
            if (pick[pos]) {
                sigma[a++] = static_cast<int>(pos + 1);
            } else {
                sigma[b++] = static_cast<int>(pos + 1);
            }
        }
        out.push_back(std::move(sigma));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

namespace {

std::vector<CommPoly> identity_images(std::size_t m) {
    std::vector<CommPoly> out;
    for (std::size_t i = 1; i <= m; ++i) out.push_back(CommPoly::variable(m, i));
    return out;
}

// S acting on the first n variables, fixing the rest.
CommPoly apply_S_first(const CommPoly& p, std::size_t n) {
    const std::size_t m = p.num_vars();
    auto images = identity_images(m);
    for (std::size_t i = 1; i <= n; ++i) {
        CommPoly s(m);
        for (std::size_t j = i; j <= n; ++j) s += CommPoly::variable(m, j);
        images[i - 1] = s;
    }
    return substitute(p, images);
}

// T_sigma for sigma a permutation of [1,n], acting on the first n variables.
CommPoly apply_T_first(const CommPoly& p, const Permutation& sigma) {
    const std::size_t m = p.num_vars();
    auto images = identity_images(m);
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        // x_i -> x_{sigma^{-1}(i)}: x_{sigma(j)} -> x_j.
        images[static_cast<std::size_t>(sigma[j]) - 1] = CommPoly::variable(m, j + 1);
    }
    return substitute(p, images);
}

CommPoly apply_Tstar_first(const CommPoly& p, std::size_t l, std::size_t n) {
    if (l < 1 || l + 1 > n) throw std::invalid_argument("apply_Tstar: l out of range");
    CommPoly out(p.num_vars());
    for (const auto& sigma : shuffles(l, n)) out += apply_T_first(p, sigma);
    return out;
}

void check_permutation(const Permutation& sigma, std::size_t m) {
    if (sigma.size() != m) throw std::invalid_argument("apply_Tsigma: permutation size mismatch");
    std::vector<bool> seen(m, false);
    for (int v : sigma) {
        if (v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v) - 1]) {
            throw std::invalid_argument("apply_Tsigma: not a permutation");
        }
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

}  // namespace

CommPoly apply_S(const CommPoly& p) { return apply_S_first(p, p.num_vars()); }

CommPoly apply_Tsigma(const CommPoly& p, const Permutation& sigma) {
    check_permutation(sigma, p.num_vars());
    return apply_T_first(p, sigma);
}

CommPoly apply_R(const CommPoly& p) {
    const std::size_t m = p.num_vars();
    std::vector<CommPoly> images;
    for (std::size_t i = 1; i <= m; ++i) images.push_back(CommPoly::variable(m, m + 1 - i));
    return substitute(p, images);
}

CommPoly apply_L(const CommPoly& p) {
    const std::size_t m = p.num_vars();
    std::vector<CommPoly> images;
    CommPoly acc(m);
    for (std::size_t i = 1; i <= m; ++i) {
        acc += CommPoly::variable(m, i);
        images.push_back(acc);
    }
    return substitute(p, images);
}

CommPoly apply_Tstar(const CommPoly& p, std::size_t l) { return apply_Tstar_first(p, l, p.num_vars()); }

CommPoly apply_Tsh(const CommPoly& p, std::size_t l) {
    if (l < 1 || l + 1 > p.num_vars()) throw std::invalid_argument("apply_Tsh: l out of range");
    return apply_Tstar(apply_S(p), l);
}

std::vector<Exponents> monomial_basis(std::size_t m, std::size_t d) {
    std::vector<Exponents> out;
    if (m == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponents e(m, 0);
    // Exponent of x_1 descending, then recursively the rest: lex with x_1 largest.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == m) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, static_cast<int>(d));
    return out;
}

namespace {

std::size_t monomial_index(const std::vector<Exponents>& basis, const Exponents& e) {
    // The basis is sorted in descending lex order.
    auto it = std::lower_bound(basis.begin(), basis.end(), e, std::greater<>());
    if (it == basis.end() || *it != e) throw std::invalid_argument("monomial not in basis: wrong degree");
    return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

SparseVector coords_of(const CommPoly& p, std::size_t d) {
    const auto basis = monomial_basis(p.num_vars(), d);
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [e, c] : p.terms()) entries.emplace_back(monomial_index(basis, e), c);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector v(basis.size());
    for (auto& [i, c] : entries) v.push_back(i, c);
    return v;
}

CommPoly poly_from_coords(std::size_t m, std::size_t d, const SparseVector& v) {
    const auto basis = monomial_basis(m, d);
    if (v.dim() != basis.size()) throw std::invalid_argument("poly_from_coords: dimension mismatch");
    CommPoly p(m);
    for (const auto& [i, c] : v.entries()) p.add(basis[i], c);
    return p;
}

SparseMatrix operator_matrix(std::size_t m, std::size_t d, const std::function<CommPoly(const CommPoly&)>& op) {
    const auto basis = monomial_basis(m, d);
    SparseMatrix out(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const CommPoly image = op(CommPoly::monomial(basis[j]));
        for (const auto& [e, c] : image.terms()) {
            if (total_degree(e) != d) throw std::logic_error("operator_matrix: operator is not degree-preserving");
            out.set(monomial_index(basis, e), j, c);
        }
    }
    return out;
}

std::vector<CommPoly> DshBasis::polys() const {
    std::vector<CommPoly> out;
    for (const auto& v : space.basis()) out.push_back(poly_from_coords(m, d, v));
    return out;
}

DshBasis compute_dsh(std::size_t m, std::size_t d) {
    if (m < 2) throw std::invalid_argument("compute_dsh: depth must be at least 2");
    const std::size_t n = monomial_basis(m, d).size();
    std::vector<SparseVector> equations;
    for (std::size_t l = 1; l < m; ++l) {
        for (const auto& mat : {operator_matrix(m, d, [l](const CommPoly& p) { return apply_Tstar(p, l); }),
                                operator_matrix(m, d, [l](const CommPoly& p) { return apply_Tsh(p, l); })}) {
            for (auto& row : mat.row_vectors()) {
                if (!row.is_zero()) equations.push_back(std::move(row));
            }
        }
    }
    return DshBasis{m, d, Subspace::kernel(equations, n)};
}

namespace {

using Op = std::function<CommPoly(const CommPoly&)>;

// First degree where the two operators differ, or -1.
int first_mismatch(std::size_t m, std::size_t max_degree, const Op& a, const Op& b) {
    for (std::size_t d = 0; d <= max_degree; ++d) {
        if (!(operator_matrix(m, d, a) == operator_matrix(m, d, b))) return static_cast<int>(d);
    }
    return -1;
}

IdentityResult compare(std::string name, std::size_t m, std::size_t max_degree, const Op& a, const Op& b) {
    const int bad = first_mismatch(m, max_degree, a, b);
    IdentityResult r{std::move(name), bad < 0, ""};
    r.detail = bad < 0 ? "holds for degrees 0.." + std::to_string(max_degree)
                       : "fails in degree " + std::to_string(bad);
    return r;
}

}  // namespace

std::vector<IdentityResult> operator_identities_check(std::size_t m, std::size_t max_degree) {
    if (m < 2) throw std::invalid_argument("operator_identities_check: m must be at least 2");
    std::vector<IdentityResult> out;
    const Op id = [](const CommPoly& p) { return p; };
    out.push_back(compare("R R = id", m, max_degree, [](const CommPoly& p) { return apply_R(apply_R(p)); }, id));
    const std::string ms = std::to_string(m);
    for (std::size_t l = 1; l < m; ++l) {
        const std::string ls = std::to_string(l);
        const std::string mls = std::to_string(m - l);
        // Composites act right to left: apply R first.
        const Op rtr = [l](const CommPoly& p) { return apply_R(apply_Tstar(apply_R(p), l)); };
        const Op rtlr = [l](const CommPoly& p) { return apply_R(apply_Tstar(apply_L(apply_R(p)), l)); };
        out.push_back(compare("R T*(" + ls + ") R = T*(" + mls + "), m=" + ms, m, max_degree, rtr,
                              [l, m](const CommPoly& p) { return apply_Tstar(p, m - l); }));

        // As written: T_{m-l,sh}^{(l)} acts on x_1..x_{m-l}; needs 1 <= l <= m-l-1.
        const std::string stated = "R T*(" + ls + ") L R = T_{" + mls + ",sh}(" + ls + "), m=" + ms;
        if (l + 1 > m - l) {
            out.push_back({stated, false, "undefined: l=" + ls + " is outside [1, " + std::to_string(m - l - 1) + "]"});
        } else {
            out.push_back(compare(stated + " [acting on x_1..x_" + mls + "]", m, max_degree, rtlr,
                                  [l, m](const CommPoly& p) { return apply_Tstar_first(apply_S_first(p, m - l), l, m - l); }));
        }
        out.push_back(compare("R T*(" + ls + ") L R = T_{" + ms + ",sh}(" + mls + "), m=" + ms, m, max_degree, rtlr,
                              [l, m](const CommPoly& p) { return apply_Tsh(p, m - l); }));
        out.push_back(compare("R T*(" + ls + ") L R = T_{" + ms + ",sh}(" + ls + "), m=" + ms, m, max_degree, rtlr,
                              [l](const CommPoly& p) { return apply_Tsh(p, l); }));
    }
    return out;
}

}  // namespace lsdual
