#include "lsdual/dihedral.hpp"

#include "lsdual/memo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lsdual {

namespace {

using Bidegree = std::pair<std::size_t, std::size_t>;

void require_w_bidegree(std::size_t m, std::size_t k, const char* what) {
    if (m < 1 || k < m) {
        throw std::invalid_argument(std::string(what) + ": invalid bidegree (" + std::to_string(m) + "," +
                                    std::to_string(k) + "), need k >= m >= 1");
    }
}

Word x_z_word(const std::vector<int>& exps_left_to_right, int tail) {
    std::string s;
    for (int e : exps_left_to_right) {
        s.append(static_cast<std::size_t>(e), 'x');
        s.push_back('z');
    }
    s.append(static_cast<std::size_t>(tail), 'x');
    return Word(std::move(s));
}

SparseVector w_part(const VBasis& basis, const VVector& v) {
    SparseVector full = basis.coords(v);
    SparseVector out(basis.w_size());
    for (const auto& [i, c] : full.entries()) {
        if (i >= basis.w_size()) throw std::invalid_argument("w_part: element has a U component");
        out.push_back(i, c);
    }
    return out;
}

CommPoly zero_form(std::size_t n) { return CommPoly(n); }

// Reduced variables: t_j for j <= n is variable j, t_{n+1} is 0.
CommPoly t_var(std::size_t n, std::size_t j) { return j == n + 1 ? zero_form(n) : CommPoly::variable(n, j); }

// Positions of t_1..t_m after a (p, m-p)-shuffle: the sequence t_{sigma^{-1}(1)}, ...
std::vector<std::size_t> shuffled_sequence(const Permutation& sigma) {
    std::vector<std::size_t> seq(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) seq[static_cast<std::size_t>(sigma[i]) - 1] = i + 1;
    return seq;
}

Memo<Bidegree, TruncatedSeries<VVector>>& colon_memo() {
    static Memo<Bidegree, TruncatedSeries<VVector>> memo;
    return memo;
}

const TruncatedSeries<VVector>& colon_cached(std::size_t m, std::size_t k, std::shared_ptr<const TruncatedSeries<VVector>>& hold) {
    hold = colon_memo().get({m, k}, [&] { return series_colon(m, k); });
    return *hold;
}

std::vector<VTensor2> compute_delta_table(std::size_t m, std::size_t k) {
    const auto comps = compositions(m, k);
    std::vector<VTensor2> table(comps.size());
    if (m < 2) return table;
    const std::size_t n = m;
    auto cyc = [m](std::size_t i, std::size_t j) { return (i + j - 1) % (m + 1) + 1; };
    TruncatedSeries<VTensor2> total(n, k - m);
    for (std::size_t kp = 2; kp <= m; ++kp) {
        const std::size_t r1 = kp - 1;
        const std::size_t r2 = m - kp + 1;
        for (std::size_t j = 0; j <= m; ++j) {
            const CommPoly last = t_var(n, cyc(m + 1, j));
            std::vector<CommPoly> f1;
            std::vector<CommPoly> f2;
            for (std::size_t i = 1; i <= r1; ++i) f1.push_back(t_var(n, cyc(i, j)) - last);
            for (std::size_t i = kp; i <= m; ++i) f2.push_back(t_var(n, cyc(i, j)) - last);
            for (std::size_t w1 = r1; w1 + r2 <= k; ++w1) {
                std::shared_ptr<const TruncatedSeries<VVector>> h1;
                std::shared_ptr<const TruncatedSeries<VVector>> h2;
                const auto a = colon_cached(r1, w1, h1).substitute(f1, n);
                const auto b = colon_cached(r2, k - w1, h2).substitute(f2, n);
                total += series_product(a, b, [](const VVector& u, const VVector& v) { return wedge(u, v); }, k - m);
            }
        }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = comps[c][i] - 1;
        table[c] = total.coeff(e);
    }
    return table;
}

std::shared_ptr<const std::vector<VTensor2>> delta_table(std::size_t m, std::size_t k) {
    static Memo<Bidegree, std::vector<VTensor2>> memo;
    return memo.get({m, k}, [&] { return compute_delta_table(m, k); });
}

std::shared_ptr<const SparseMatrix> phi_inverse_matrix(std::size_t m, std::size_t k) {
    static Memo<Bidegree, SparseMatrix> memo;
    return memo.get({m, k}, [&] { return inverse(phi_matrix(m, k)); });
}

TruncatedSeries<NcPoly> unit_series(std::size_t num_vars, std::size_t N) {
    TruncatedSeries<NcPoly> s(num_vars, N);
    s.add(Exponents(num_vars, 0), unit_poly());
    return s;
}

TruncatedSeries<NcPoly> times_z(const TruncatedSeries<NcPoly>& s) {
    const NcPoly z = word_poly("z");
    return series_map(s, [&](const NcPoly& p) { return concat(p, z); });
}

TruncatedSeries<NcPoly> concat_series(const TruncatedSeries<NcPoly>& a, const TruncatedSeries<NcPoly>& b) {
    return series_product(a, b, [](const NcPoly& u, const NcPoly& v) { return concat(u, v); });
}

}  // namespace

// --- VIndex ------------------------------------------------------------------

VIndex VIndex::I(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("VIndex::I: empty composition");
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("VIndex::I: parts must be >= 1");
    }
    return VIndex{Kind::I, std::move(parts)};
}

VIndex VIndex::Iprime(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("VIndex::Iprime: empty index");
    if (!(parts.size() == 1 && parts[0] == 0)) {
        for (int p : parts) {
            if (p < 1) throw std::invalid_argument("VIndex::Iprime: parts must be >= 1");
        }
    }
    return VIndex{Kind::Iprime, std::move(parts)};
}

std::size_t VIndex::depth() const { return kind == Kind::I ? parts.size() : parts.size() - 1; }

std::size_t VIndex::weight() const {
    return static_cast<std::size_t>(std::accumulate(parts.begin(), parts.end(), 0));
}

std::string VIndex::str() const {
    std::string s = kind == Kind::I ? "I(" : "I'(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

VTensor2 tensor(const VVector& a, const VVector& b) {
    VTensor2 out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) out.add({u, v}, cu * cv);
    }
    return out;
}

VTensor2 wedge(const VVector& a, const VVector& b) {
    VTensor2 out = tensor(a, b);
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) out.add({v, u}, -(cu * cv));
    }
    return out;
}

// --- VBasis --------------------------------------------------------------------

VBasis::VBasis(std::size_t m, std::size_t k) : m_(m), k_(k) {
    if (k < m) throw std::invalid_argument("VBasis: need k >= m");
    if (m >= 1) {
        for (auto& c : compositions(m, k)) indices_.push_back(VIndex::I(std::move(c)));
    }
    w_size_ = indices_.size();
    if (m == 0 && k == 0) {
        indices_.push_back(VIndex::Iprime({0}));
    } else {
        for (auto& c : compositions(m + 1, k)) indices_.push_back(VIndex::Iprime(std::move(c)));
    }
    for (std::size_t i = 0; i < indices_.size(); ++i) position_.emplace(indices_[i], i);
}

std::size_t VBasis::index(const VIndex& v) const {
    auto it = position_.find(v);
    if (it == position_.end()) {
        throw std::invalid_argument("VBasis::index: " + v.str() + " is not of bidegree (" + std::to_string(m_) + "," +
                                    std::to_string(k_) + ")");
    }
    return it->second;
}

SparseVector VBasis::coords(const VVector& v) const {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [idx, c] : v) entries.emplace_back(index(idx), c);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out(size());
    for (const auto& [i, c] : entries) out.push_back(i, c);
    return out;
}

VVector VBasis::vector(const SparseVector& c) const {
    if (c.dim() != size()) throw std::invalid_argument("VBasis::vector: dimension mismatch");
    VVector out;
    for (const auto& [i, a] : c.entries()) out.add(indices_[i], a);
    return out;
}

// --- Colon series, W_R, F --------------------------------------------------------

TruncatedSeries<VVector> series_colon(std::size_t m, std::size_t k) {
    require_w_bidegree(m, k, "series_colon");
    TruncatedSeries<VVector> s(m, k - m);
    for (auto& c : compositions(m, k)) {
        Exponents e(m);
        for (std::size_t i = 0; i < m; ++i) e[i] = c[i] - 1;
        s.add(e, VVector(VIndex::I(std::move(c))));
    }
    return s;
}

Subspace compute_WR(std::size_t m, std::size_t k) {
    require_w_bidegree(m, k, "compute_WR");
    const VBasis basis(m, k);
    std::vector<SparseVector> gens;
    if (m == 1) {
        if (k % 2 == 0) gens.push_back(w_part(basis, VVector(VIndex::I({static_cast<int>(k)}))));
        return Subspace::span(gens, basis.w_size());
    }
    std::shared_ptr<const TruncatedSeries<VVector>> hold;
    const auto& colon = colon_cached(m, k, hold);
    for (std::size_t p = 1; p < m; ++p) {
        TruncatedSeries<VVector> star(m, k - m);
        TruncatedSeries<VVector> sh(m, k - m);
        for (const auto& sigma : shuffles(p, m)) {
            const auto seq = shuffled_sequence(sigma);
            std::vector<CommPoly> star_forms;
            std::vector<CommPoly> sh_forms;
            CommPoly prefix(m);
            for (std::size_t pos = 0; pos < m; ++pos) {
                star_forms.push_back(CommPoly::variable(m, seq[pos]));
                prefix += CommPoly::variable(m, seq[pos]);
                sh_forms.push_back(prefix);
            }
            star += colon.substitute(star_forms, m);
            sh += colon.substitute(sh_forms, m);
        }
        for (const auto& [e, c] : star.terms()) gens.push_back(w_part(basis, c));
        for (const auto& [e, c] : sh.terms()) gens.push_back(w_part(basis, c));
    }
    return Subspace::span(gens, basis.w_size());
}

Subspace compute_F(std::size_t m, std::size_t k, const Subspace& wr) {
    const VBasis basis(m, k);
    if (wr.ambient_dim() != basis.w_size()) throw std::invalid_argument("compute_F: W_R has the wrong ambient dimension");
    std::vector<SparseVector> gens;
    for (const auto& b : wr.basis()) {
        SparseVector v(basis.size());
        for (const auto& [i, c] : b.entries()) v.push_back(i, c);
        gens.push_back(std::move(v));
    }
    for (std::size_t i = basis.w_size(); i < basis.size(); ++i) gens.push_back(SparseVector::unit(basis.size(), i));
    return Subspace::span(gens, basis.size());
}

Subspace compute_F(std::size_t m, std::size_t k) {
    if (m == 0) return compute_F(0, k, Subspace::zero(0));
    return compute_F(m, k, compute_WR(m, k));
}

bool cycle_check(std::size_t m, std::size_t k) {
    require_w_bidegree(m, k, "cycle_check");
    const VBasis basis(m, k);
    const Subspace wr = compute_WR(m, k);
    const auto colon = series_colon(m, k);
    // {t_{m+1}:t_1:...:t_{m-1}:t_m} with t_{m+1} = 0.
    std::vector<CommPoly> forms;
    const CommPoly tm = CommPoly::variable(m, m);
    forms.push_back(zero_form(m) - tm);
    for (std::size_t i = 1; i < m; ++i) forms.push_back(CommPoly::variable(m, i) - tm);
    const auto diff = colon - colon.substitute(forms, m);
    for (const auto& [e, c] : diff.terms()) {
        if (!wr.contains(w_part(basis, c))) return false;
    }
    return true;
}

// --- delta~ ----------------------------------------------------------------------

VTensor2 cobracket_delta(const VVector& v) {
    if (v.is_zero()) return {};
    const VIndex& first = v.begin()->first;
    const std::size_t m = first.depth();
    const std::size_t k = first.weight();
    for (const auto& [idx, c] : v) {
        if (!idx.is_w()) throw std::invalid_argument("cobracket_delta: " + idx.str() + " is not in W");
        if (idx.depth() != m || idx.weight() != k) throw std::invalid_argument("cobracket_delta: input is not homogeneous");
    }
    const VBasis basis(m, k);
    const auto table = delta_table(m, k);
    VTensor2 out;
    for (const auto& [idx, c] : v) out.axpy(c, (*table)[basis.index(idx)]);
    return out;
}

// --- phi ---------------------------------------------------------------------------

NcPoly phi(const VIndex& v) {
    if (v.kind == VIndex::Kind::Iprime && v.parts.size() == 1 && v.parts[0] == 0) return unit_poly();
    std::vector<int> exps;
    if (v.is_w()) {
        for (auto it = v.parts.rbegin(); it != v.parts.rend(); ++it) exps.push_back(*it - 1);
        return NcPoly(x_z_word(exps, 0));
    }
    for (auto it = v.parts.rbegin(); it + 1 != v.parts.rend(); ++it) exps.push_back(*it - 1);
    return shuffle(x_z_word(exps, v.parts[0] - 1), Word("x"));
}

NcPoly phi(const VVector& v) {
    NcPoly out;
    for (const auto& [idx, c] : v) out.axpy(c, phi(idx));
    return out;
}

SparseMatrix phi_matrix(std::size_t m, std::size_t k) {
    const VBasis vb(m, k);
    const WordBasis wb(m, k);
    SparseMatrix out(wb.size(), vb.size());
    for (std::size_t j = 0; j < vb.size(); ++j) {
        const SparseVector col = wb.coords(phi(vb.indices()[j]));
        for (const auto& [i, c] : col.entries()) out.set(i, j, c);
    }
    return out;
}

VVector phi_inverse(const NcPoly& p) {
    std::map<Bidegree, NcPoly> parts;
    for (const auto& [w, c] : p) parts[{w.depth(), w.weight()}].add(w, c);
    VVector out;
    for (const auto& [bd, q] : parts) {
        const WordBasis wb(bd.first, bd.second);
        const VBasis vb(bd.first, bd.second);
        out += vb.vector(phi_inverse_matrix(bd.first, bd.second)->apply(wb.coords(q)));
    }
    return out;
}

VTensor2 phi_inverse(const Tensor2& t) {
    std::map<Word, VVector> seen;
    auto inv = [&](const Word& w) -> const VVector& {
        auto it = seen.find(w);
        if (it == seen.end()) it = seen.emplace(w, phi_inverse(NcPoly(w))).first;
        return it->second;
    };
    VTensor2 out;
    for (const auto& [pair, c] : t) out.axpy(c, tensor(inv(pair.first), inv(pair.second)));
    return out;
}

VTensor2 pullback_coihara(const VVector& v) { return phi_inverse(co_ihara(phi(v))); }

// --- Q and P series ------------------------------------------------------------------

TruncatedSeries<NcPoly> geometric_x(const CommPoly& form, std::size_t num_vars, std::size_t N) {
    TruncatedSeries<NcPoly> s(num_vars, N);
    s.add(Exponents(num_vars, 0), unit_poly());
    CommPoly power = CommPoly::constant(num_vars, 1);
    for (std::size_t j = 1; j <= N; ++j) {
        power = power * form;
        const NcPoly xj(Word::x_power(j));
        for (const auto& [e, c] : power.terms()) s.add(e, c * xj);
    }
    return s;
}

TruncatedSeries<NcPoly> q_series_at(const std::vector<CommPoly>& forms, std::size_t num_vars, std::size_t N) {
    std::vector<CommPoly> u;
    CommPoly acc(num_vars);
    for (const auto& f : forms) {
        acc += f;
        u.push_back(acc);
    }
    TruncatedSeries<NcPoly> s = unit_series(num_vars, N);
    for (auto it = u.rbegin(); it != u.rend(); ++it) s = times_z(concat_series(s, geometric_x(*it, num_vars, N)));
    return s;
}

TruncatedSeries<NcPoly> q_series(std::size_t n, std::size_t N) {
    std::vector<CommPoly> forms;
    for (std::size_t i = 1; i <= n; ++i) forms.push_back(CommPoly::variable(n, i));
    return q_series_at(forms, n, N);
}

TruncatedSeries<NcPoly> p_series_at(const std::vector<CommPoly>& forms, std::size_t num_vars, std::size_t N) {
    if (forms.empty()) throw std::invalid_argument("p_series_at: need at least one form");
    TruncatedSeries<NcPoly> s = unit_series(num_vars, N);
    for (std::size_t i = forms.size(); i-- > 1;) s = times_z(concat_series(s, geometric_x(forms[i], num_vars, N)));
    return concat_series(s, geometric_x(forms[0], num_vars, N));
}

TruncatedSeries<NcPoly> p_series(std::size_t m, std::size_t N) {
    std::vector<CommPoly> forms;
    for (std::size_t i = 1; i <= m + 1; ++i) forms.push_back(CommPoly::variable(m + 1, i));
    return p_series_at(forms, m + 1, N);
}

// --- f_m and h_m -----------------------------------------------------------------

CommPoly f_map(std::size_t m, const NcPoly& p) {
    if (m < 2) throw std::invalid_argument("f_map: requires m >= 2");
    CommPoly out(m);
    for (const auto& [w, c] : p) {
        if (w.depth() != m) throw std::invalid_argument("f_map: word " + w.str() + " has the wrong depth");
        const auto blocks = x_blocks(w);
        if (blocks[m] != 0) continue;
        Exponents e(m);
        for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<int>(blocks[i]);
        out.add(e, c);
    }
    return out;
}

VVector h_map(std::size_t m, std::size_t d, const SparseVector& form) {
    if (m < 2) throw std::invalid_argument("h_map: requires m >= 2");
    const auto mons = monomial_basis(m, d);
    if (form.dim() != mons.size()) throw std::invalid_argument("h_map: form has the wrong dimension");
    VVector out;
    for (const auto& [j, c] : form.entries()) {
        std::vector<int> parts(mons[j].rbegin(), mons[j].rend());
        for (int& p : parts) ++p;
        out.add(VIndex::I(std::move(parts)), c);
    }
    return out;
}

}  // namespace lsdual
