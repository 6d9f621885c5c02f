#include "doctest.h"

#include "lsdual/commring.hpp"
#include "test_support.hpp"

using namespace lsdual;
using lsdual::testing::dense_rank;

namespace {

CommPoly x(std::size_t m, std::size_t i) { return CommPoly::variable(m, i); }

bool holds(const std::vector<IdentityResult>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.name.rfind(name, 0) == 0) return r.holds;
    }
    FAIL("identity not reported: " << name);
    return false;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const CommPoly a = x(2, 1) + x(2, 2);
    CHECK((a * a).coeff({1, 1}) == 2);
    CHECK(a.pow(3).terms().size() == 4);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(x(2, 3), std::invalid_argument);
}

TEST_CASE("substitution operator examples") {
    CHECK(apply_S(x(2, 1)) == x(2, 1) + x(2, 2));
    CHECK(apply_S(x(2, 2)) == x(2, 2));
    CHECK(apply_Tsigma(x(2, 1) * x(2, 2), {2, 1}) == x(2, 1) * x(2, 2));
    CHECK(apply_L(x(2, 2)) == x(2, 1) + x(2, 2));
    CHECK(apply_R(x(3, 1)) == x(3, 3));
    // sigma = (3,1,2): x_1 -> x_{sigma^-1(1)} = x_2.
    CHECK(apply_Tsigma(x(3, 1), {3, 1, 2}) == x(3, 2));
    CHECK_THROWS_AS(apply_Tsigma(x(3, 1), {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(apply_Tsigma(x(3, 1), {1, 2}), std::invalid_argument);
}

TEST_CASE("T_sigma composes contravariantly under substitution") {
    const CommPoly p = x(3, 1) * x(3, 1) * x(3, 2) + x(3, 3);
    const Permutation s{2, 3, 1};
    const Permutation t{2, 1, 3};
    Permutation ts(3);
    for (std::size_t i = 0; i < 3; ++i) ts[i] = t[static_cast<std::size_t>(s[i]) - 1];
    CHECK(apply_Tsigma(apply_Tsigma(p, t), s) == apply_Tsigma(p, ts));
}

TEST_CASE("shuffle permutations") {
    CHECK(shuffles(1, 2).size() == 2);
    CHECK(shuffles(2, 4).size() == 6);
    CHECK(shuffles(1, 3) == std::vector<Permutation>{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}});
    for (const auto& s : shuffles(2, 5)) {
        CHECK(s[0] < s[1]);
        CHECK(s[2] < s[3]);
        CHECK(s[3] < s[4]);
    }
}

TEST_CASE("symmetrisation operator examples") {
    CHECK(apply_Tstar(x(2, 1) - x(2, 2), 1).is_zero());
    CHECK(apply_Tstar(x(2, 1) * x(2, 2), 1) == CommPoly::monomial({1, 1}, 2));
    CHECK(apply_Tsh(x(2, 1) - x(2, 2), 1) == x(2, 1) + x(2, 2));
    CHECK_THROWS_AS(apply_Tstar(x(2, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(apply_Tsh(x(2, 1), 0), std::invalid_argument);
    // f = x_1 x_2^2: f(x1,x2,x3) + f(x2,x1,x3) + f(x2,x3,x1).
    const CommPoly p = CommPoly::monomial({1, 2, 0});
    CHECK(apply_Tstar(p, 1) == CommPoly::monomial({1, 2, 0}) + CommPoly::monomial({2, 1, 0}) +
                                   CommPoly::monomial({0, 1, 2}));
}

TEST_CASE("monomial basis order and size") {
    CHECK(monomial_basis(2, 2) == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomial_basis(3, 1) == std::vector<Exponents>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(monomial_basis(4, 6).size() == 84);
    CHECK(monomial_basis(3, 0).size() == 1);
}

TEST_CASE("operator matrices are integral and degree preserving") {
    for (std::size_t d = 0; d <= 4; ++d) {
        const SparseMatrix m = operator_matrix(3, d, [](const CommPoly& p) { return apply_Tsh(p, 1); });
        for (const auto& [key, c] : m.entries()) CHECK(c.get_den() == 1);
    }
}

TEST_CASE("Dsh examples") {
    CHECK(compute_dsh(2, 0).space.dim() == 0);
    CHECK(compute_dsh(2, 1).space.dim() == 0);
    // a(x1^2 - x2^2) survives antisymmetry but not the second condition.
    CHECK(compute_dsh(2, 2).space.dim() == 0);
    CHECK_THROWS_AS(compute_dsh(1, 3), std::invalid_argument);
    CHECK(compute_dsh(3, 2).weight() == 5);
}

TEST_CASE("Dsh basis is annihilated by every defining operator and matches a dense oracle") {
    for (std::size_t m = 2; m <= 3; ++m) {
        for (std::size_t d = 0; d <= (m == 2 ? 10u : 6u); ++d) {
            const DshBasis b = compute_dsh(m, d);
            std::vector<SparseVector> eqs;
            for (std::size_t l = 1; l < m; ++l) {
                for (const auto& p : b.polys()) {
                    CHECK(apply_Tstar(p, l).is_zero());
                    CHECK(apply_Tsh(p, l).is_zero());
                }
                for (auto& r : operator_matrix(m, d, [l](const CommPoly& p) { return apply_Tstar(p, l); }).row_vectors()) eqs.push_back(r);
                for (auto& r : operator_matrix(m, d, [l](const CommPoly& p) { return apply_Tsh(p, l); }).row_vectors()) eqs.push_back(r);
            }
            CHECK(b.space.dim() + dense_rank(eqs) == monomial_basis(m, d).size());
            if ((d + 2 * m) % 2 == 1) CHECK(b.space.dim() == 0);
        }
    }
}

TEST_CASE("operator identities") {
    const auto r2 = operator_identities_check(2, 4);
    CHECK(holds(r2, "R R = id"));
    CHECK(holds(r2, "R T*(1) R = T*(1)"));
    const auto r3 = operator_identities_check(3, 3);
    CHECK(holds(r3, "R T*(1) R = T*(2)"));
    CHECK(holds(r3, "R T*(2) R = T*(1)"));
    // The reading with m variables and index m-l is the one that holds.
    CHECK(holds(r3, "R T*(1) L R = T_{3,sh}(2)"));
    CHECK(holds(r3, "R T*(2) L R = T_{3,sh}(1)"));
    CHECK_FALSE(holds(r3, "R T*(2) L R = T_{1,sh}(2)"));
}
