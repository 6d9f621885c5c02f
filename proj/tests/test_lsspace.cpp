#include "doctest.h"

#include "lsdual/lsspace.hpp"
#include "test_support.hpp"

using namespace lsdual;
using lsdual::testing::dense_rank;

namespace {

NcPoly P(std::string_view s, long c = 1) { return word_poly(s, c); }

bool is_primitive(const NcPoly& psi) {
    Tensor2 d = coproduct_sh(psi);
    d -= tensor(unit_poly(), psi);
    d -= tensor(psi, unit_poly());
    return d.is_zero();
}

bool is_y_primitive(const YPoly& y) {
    YTensor2 d = coproduct_y(y);
    for (const auto& [w, c] : y) {
        d.add(YPair{YWord{}, w}, -c);
        d.add(YPair{w, YWord{}}, -c);
    }
    return d.is_zero();
}

}  // namespace

TEST_CASE("word basis coordinates") {
    const WordBasis b(1, 3);
    CHECK(b.size() == 3);
    CHECK(b.index(Word("xzx")) == 1);
    CHECK_THROWS_AS(b.index(Word("zz")), std::invalid_argument);
    const NcPoly p = P("xxz") - P("zxx", 2);
    CHECK(b.poly(b.coords(p)) == p);
    CHECK_THROWS_AS(b.coords(P("xz")), std::invalid_argument);
}

TEST_CASE("compositions") {
    CHECK(compositions(2, 4) == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(compositions(0, 0).size() == 1);
    CHECK(compositions(3, 2).empty());
    CHECK(compositions(3, 7).size() == 15);
}

TEST_CASE("Lyndon word counts") {
    CHECK(lie_dimension(1, 3) == 1);
    CHECK(lie_dimension(2, 4) == 1);
    CHECK(lie_dimension(0, 1) == 1);
    CHECK(lie_dimension(0, 2) == 0);
    CHECK(lie_dimension(3, 6) == 3);
    // Brute force: count words strictly smaller than all their proper rotations.
    for (std::size_t k = 1; k <= 10; ++k) {
        for (std::size_t m = 0; m <= k; ++m) {
            std::size_t count = 0;
            for (const auto& w : words_of_bidegree(m, k)) {
                bool lyndon = true;
                for (std::size_t r = 1; r < k && lyndon; ++r) {
                    if (!(w.str() < w.str().substr(r) + w.str().substr(0, r))) lyndon = false;
                }
                count += lyndon;
            }
            CHECK(lie_dimension(m, k) == count);
        }
    }
}

TEST_CASE("primitives match the full primitivity system without early exit") {
    for (std::size_t k = 1; k <= 7; ++k) {
        for (std::size_t m = 0; m <= k; ++m) {
            const WordBasis basis(m, k);
            std::vector<SparseVector> eqs;
            for (std::size_t a = 1; a < k; ++a) {
                for (std::size_t m1 = 0; m1 <= m; ++m1) {
                    for (const auto& u : words_of_bidegree(m1, a)) {
                        for (const auto& v : words_of_bidegree(m - m1, k - a)) eqs.push_back(basis.coords(shuffle(u, v)));
                    }
                }
            }
            const Subspace full = Subspace::kernel(eqs, basis.size());
            CHECK(shuffle_primitives(m, k) == full);
            CHECK(full.dim() + (eqs.empty() ? 0 : dense_rank(eqs)) == basis.size());
        }
    }
}

TEST_CASE("ls examples") {
    CHECK(compute_ls(1, 2).dim() == 0);
    const LsBasis l13 = compute_ls(1, 3);
    REQUIRE(l13.dim() == 1);
    CHECK(l13.polys()[0] == P("xxz") - P("xzx", 2) + P("zxx"));
    const LsBasis l11 = compute_ls(1, 1);
    REQUIRE(l11.dim() == 1);
    CHECK(l11.polys()[0] == P("z"));
    CHECK_THROWS_AS(compute_ls(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(compute_ls(3, 2), std::invalid_argument);
    for (std::size_t k = 1; k <= 9; ++k) CHECK(compute_ls(1, k).dim() == k % 2);
}

TEST_CASE("ls basis elements satisfy both primitivity conditions") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t k = m; k <= 8; ++k) {
            for (const auto& psi : compute_ls(m, k).polys()) {
                CHECK(is_primitive(psi));
                CHECK(is_y_primitive(project_pi(psi)));
                // Orthogonal to every shuffle product of nonconstant words.
                for (std::size_t a = 1; a < k; ++a) {
                    for (std::size_t m1 = 0; m1 <= m; ++m1) {
                        for (const auto& u : words_of_bidegree(m1, a)) {
                            for (const auto& v : words_of_bidegree(m - m1, k - a)) {
                                CHECK(pairing(psi, shuffle(NcPoly(u), NcPoly(v))) == 0);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("kernel route and complement route give identical subspaces") {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t k = m; k <= 9; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(compute_ls(m, k).space == compute_ls_via_complement(m, k).space);
        }
    }
}

TEST_CASE("parity vanishing in small bidegrees") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t k = m; k <= 9; ++k) {
            if ((k + m) % 2 == 1) CHECK(compute_ls(m, k).dim() == 0);
        }
    }
}

TEST_CASE("closure examples") {
    const LsBasis l11 = compute_ls(1, 1);
    const LsBasis l13 = compute_ls(1, 3);
    const LsBasis l15 = compute_ls(1, 5);
    CHECK(check_closure(l13, l13).pass());
    CHECK(check_closure(l11, l13).pass());
    CHECK(check_closure(l13, l15).pass());
    CHECK(check_closure(l11, l11).pass());
    for (const auto& psi : l13.polys()) CHECK(ihara_bracket(psi, psi).is_zero());
    CHECK_THROWS_AS(check_closure(l11, l13, l13), std::invalid_argument);
}

TEST_CASE("a non-member bracket is reported with a witness") {
    // A target space that is too small must fail with the offending pair.
    const LsBasis l13 = compute_ls(1, 3);
    const LsBasis l15 = compute_ls(1, 5);
    const LsBasis zero{2, 8, Subspace::zero(WordBasis(2, 8).size())};
    const ClosureReport r = check_closure(l13, l15, zero);
    CHECK(r.pairs_checked == 1);
    if (!ihara_bracket(l13.polys()[0], l15.polys()[0]).is_zero()) {
        REQUIRE_FALSE(r.pass());
        CHECK(r.failures[0].bracket == ihara_bracket(l13.polys()[0], l15.polys()[0]));
    }
}
