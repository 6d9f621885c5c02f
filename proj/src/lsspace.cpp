#include "lsdual/lsspace.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lsdual {

namespace {

void require_bidegree(std::size_t m, std::size_t k, const char* what) {
    if (m < 1 || k < m) {
        throw std::invalid_argument(std::string(what) + ": invalid bidegree (" + std::to_string(m) + "," +
                                    std::to_string(k) + "), need k >= m >= 1");
    }
}

int moebius(std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

mpz_class binomial(std::size_t n, std::size_t r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

// Calls emit(u, v) for unordered pairs of nonempty words with bidegrees adding to
// (m, k), taking |u| <= |v| and u <= v when the lengths agree.
template <class Emit>
void for_each_split(std::size_t m, std::size_t k, Emit emit) {
    for (std::size_t a = 1; 2 * a <= k; ++a) {
        const std::size_t lo = m > k - a ? m - (k - a) : 0;
        for (std::size_t m1 = lo; m1 <= std::min(m, a); ++m1) {
            const auto left = words_of_bidegree(m1, a);
            const auto right = words_of_bidegree(m - m1, k - a);
            for (const auto& u : left) {
                for (const auto& v : right) {
                    if (2 * a == k && v < u) continue;
                    if (!emit(u, v)) return;
                }
            }
        }
    }
}

}  // namespace

std::vector<NcPoly> LsBasis::polys() const {
    const WordBasis basis(m, k);
    std::vector<NcPoly> out;
    for (const auto& v : space.basis()) out.push_back(basis.poly(v));
    return out;
}

std::size_t lie_dimension(std::size_t depth, std::size_t weight) {
    if (weight == 0 || depth > weight) return 0;
    const std::size_t g = std::gcd(depth, weight - depth);
    mpz_class total = 0;
    for (std::size_t d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        total += moebius(d) * binomial(weight / d, depth / d);
    }
    return static_cast<std::size_t>(mpz_class(total / weight).get_ui());
}

Subspace shuffle_primitives(std::size_t depth, std::size_t weight) {
    if (weight == 0) throw std::invalid_argument("shuffle_primitives: weight must be positive");
    const WordBasis basis(depth, weight);
    // Every primitive satisfies all equations, so once the rank reaches
    // size - dim(Lie) the remaining equations are dependent.
    const std::size_t target = basis.size() - lie_dimension(depth, weight);
    EchelonBuilder eb(basis.size());
    if (eb.rank() < target) {
        for_each_split(depth, weight, [&](const Word& u, const Word& v) {
            eb.add(basis.coords(shuffle(u, v)));
            return eb.rank() < target;
        });
    }
    const Subspace rowspace = std::move(eb).finish();
    return Subspace::kernel(rowspace.basis(), basis.size());
}

LsBasis compute_ls(std::size_t m, std::size_t k) {
    require_bidegree(m, k, "compute_ls");
    const std::size_t n = WordBasis(m, k).size();
    if (m == 1 && k % 2 == 0) return LsBasis{m, k, Subspace::zero(n)};

    const Subspace lie = shuffle_primitives(m, k);
    const WordBasis basis(m, k);
    // Delta_Y-primitivity of pi(psi), in coordinates on the Lie basis.
    std::map<YPair, SparseVector> equations;
    for (std::size_t j = 0; j < lie.dim(); ++j) {
        const YTensor2 d = coproduct_y(project_pi(basis.poly(lie.basis()[j])));
        for (const auto& [pair, c] : d) {
            if (pair.first.empty() || pair.second.empty()) continue;
            auto [it, fresh] = equations.try_emplace(pair, SparseVector(lie.dim()));
            it->second.push_back(j, c);
        }
    }
    std::vector<SparseVector> rows;
    rows.reserve(equations.size());
    for (auto& [pair, row] : equations) rows.push_back(std::move(row));
    const Subspace coeffs = Subspace::kernel(rows, lie.dim());

    std::vector<SparseVector> gens;
    for (const auto& c : coeffs.basis()) {
        SparseVector v(n);
        for (const auto& [j, a] : c.entries()) v.axpy(a, lie.basis()[j]);
        gens.push_back(std::move(v));
    }
    return LsBasis{m, k, Subspace::span(gens, n)};
}

std::vector<SparseVector> ls_perp_generators(std::size_t m, std::size_t k) {
    const WordBasis basis(m, k);
    std::vector<SparseVector> out;
    if (k == 0) {
        out.push_back(basis.coords(unit_poly()));
        return out;
    }
    if (m == 0 && k == 1) out.push_back(basis.coords(word_poly("x")));
    if (m == 1 && k % 2 == 0) {
        for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(SparseVector::unit(basis.size(), i));
    }
    for_each_split(m, k, [&](const Word& u, const Word& v) {
        out.push_back(basis.coords(shuffle(u, v)));
        return true;
    });
    // i(a sh_Y b) for nonempty Y-words a, b.
    for (std::size_t m1 = 1; m1 < m; ++m1) {
        for (std::size_t k1 = m1; k1 + (m - m1) <= k; ++k1) {
            for (const auto& a : compositions(m1, k1)) {
                for (const auto& b : compositions(m - m1, k - k1)) {
                    out.push_back(basis.coords(section_i(shuffle_y(YWord(a), YWord(b)))));
                }
            }
        }
    }
    return out;
}

LsBasis compute_ls_via_complement(std::size_t m, std::size_t k) {
    require_bidegree(m, k, "compute_ls_via_complement");
    const std::size_t n = WordBasis(m, k).size();
    return LsBasis{m, k, orthogonal_complement(Subspace::span(ls_perp_generators(m, k), n))};
}

ClosureReport check_closure(const LsBasis& p1, const LsBasis& p2, const LsBasis& target) {
    if (target.m != p1.m + p2.m || target.k != p1.k + p2.k) {
        throw std::invalid_argument("check_closure: target bidegree does not match");
    }
    ClosureReport report{target.m, target.k, 0, {}};
    const WordBasis basis(target.m, target.k);
    const auto a = p1.polys();
    const auto b = p2.polys();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            ++report.pairs_checked;
            NcPoly br = ihara_bracket(a[i], b[j]);
            if (!target.space.contains(basis.coords(br))) report.failures.push_back({i, j, std::move(br)});
        }
    }
    return report;
}

ClosureReport check_closure(const LsBasis& p1, const LsBasis& p2) {
    return check_closure(p1, p2, compute_ls(p1.m + p2.m, p1.k + p2.k));
}

}  // namespace lsdual
