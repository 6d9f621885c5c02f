#include "doctest.h"

#include "lsdual/rational.hpp"
#include "lsdual/sparse.hpp"
#include "lsdual/subspace.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace lsdual;
using lsdual::testing::dense_rank;
using lsdual::testing::random_vectors;

namespace {

SparseVector vec(std::initializer_list<int> xs) {
    std::vector<Rational> v;
    for (int x : xs) v.emplace_back(x);
    return SparseVector::from_dense(v);
}

}  // namespace

TEST_CASE("rational serialization is canonical p/q and lossless") {
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(make_rational(-6, 4) == make_rational(3, -2));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        r *= Rational(mpz_class("123456789012345678901234567890"));
        CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("kernel examples") {
    SUBCASE("one equation") {
        SparseMatrix m = SparseMatrix::from_dense({{1, 1}});
        Subspace k = Subspace::kernel(m);
        REQUIRE(k.dim() == 1);
        CHECK(k.basis()[0] == vec({1, -1}));
    }
    SUBCASE("identity has trivial kernel") {
        Subspace k = Subspace::kernel(SparseMatrix::identity(3));
        CHECK(k.dim() == 0);
        CHECK(k.ambient_dim() == 3);
    }
    SUBCASE("empty matrix gives the full space") {
        Subspace k = Subspace::kernel(SparseMatrix(0, 4));
        CHECK(k == Subspace::full(4));
    }
}

TEST_CASE("span examples") {
    CHECK(Subspace::span({vec({1, 0}), vec({2, 0})}, 2).basis() == std::vector<SparseVector>{vec({1, 0})});
    CHECK(Subspace::span(std::vector<SparseVector>{}, 2) == Subspace::zero(2));
    CHECK(Subspace::span({vec({1, 1}), vec({1, -1})}, 2) == Subspace::full(2));
    CHECK_THROWS_AS(Subspace::span({vec({1, 1, 1})}, 2), std::invalid_argument);
}

TEST_CASE("sum, intersection, complement, quotient") {
    const Subspace a = Subspace::span({vec({1, 0})}, 2);
    const Subspace b = Subspace::span({vec({0, 1})}, 2);
    CHECK(intersect(a, b) == Subspace::zero(2));
    CHECK(sum(a, b) == Subspace::full(2));
    CHECK(orthogonal_complement(a, SparseMatrix::identity(2)) == b);
    CHECK(a.contains(vec({5, 0})));
    CHECK_FALSE(a.contains(vec({5, 1})));
    CHECK(is_subspace(a, Subspace::full(2)));
    CHECK_FALSE(is_subspace(a, b));
    CHECK(quotient_dim(a, Subspace::full(2)) == 1);
    CHECK_THROWS_AS(quotient_dim(a, b), std::invalid_argument);
    CHECK_THROWS_AS(sum(a, Subspace::zero(3)), std::invalid_argument);
}

TEST_CASE("quotient coordinates live on the free columns") {
    const Subspace s = Subspace::span({vec({1, 2, 0, 1}), vec({0, 0, 1, 3})}, 4);
    CHECK(s.pivots() == std::vector<std::size_t>{0, 2});
    CHECK(s.free_columns() == std::vector<std::size_t>{1, 3});
    // (1,2,0,1) reduces to zero; e_3 = (0,0,0,1) is its own class.
    CHECK(s.quotient_coords(vec({1, 2, 0, 1})).is_zero());
    CHECK(s.quotient_coords(vec({0, 0, 0, 1})) == vec({0, 1}));
    // e_0 = (1,2,0,1) - 2 e_1 - e_3
    CHECK(s.quotient_coords(vec({1, 0, 0, 0})) == vec({-2, -1}));
}

TEST_CASE("canonical form does not depend on the generating set") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 6;
        auto gens = random_vectors(rng, 3, n, 3);
        // A second generating set: invertible recombination plus redundant vectors.
        std::vector<SparseVector> other;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            SparseVector v = gens[i];
            v *= make_rational(static_cast<long>(i) + 2, 3);
            for (std::size_t j = 0; j < i; ++j) v.axpy(Rational(static_cast<long>(j) - 1), gens[j]);
            other.push_back(v);
        }
        SparseVector redundant = gens[0];
        redundant.axpy(make_rational(-5, 7), gens[2]);
        other.push_back(redundant);
        std::reverse(other.begin(), other.end());
        CHECK(Subspace::span(gens, n) == Subspace::span(other, n));
    }
}

TEST_CASE("rank-nullity and sum/intersection dimension formula against a dense oracle") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 7;
        const auto ga = random_vectors(rng, 1 + trial % 5, n, 2);
        const auto gb = random_vectors(rng, 1 + (trial / 5) % 5, n, 2);
        const Subspace a = Subspace::span(ga, n);
        const Subspace b = Subspace::span(gb, n);
        CHECK(a.dim() == dense_rank(ga));
        CHECK(b.dim() == dense_rank(gb));
        std::vector<SparseVector> all = ga;
        all.insert(all.end(), gb.begin(), gb.end());
        const std::size_t sum_dim = dense_rank(all);
        CHECK(sum(a, b).dim() == sum_dim);
        CHECK(intersect(a, b).dim() + sum_dim == a.dim() + b.dim());
        CHECK(is_subspace(intersect(a, b), a));
        CHECK(is_subspace(intersect(a, b), b));

        const SparseMatrix m = SparseMatrix::from_rows(ga, n);
        const Subspace k = Subspace::kernel(m);
        CHECK(k.dim() + dense_rank(ga) == n);
        for (const auto& v : k.basis()) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("orthogonal complement is an involution for invertible Gram forms") {
    std::mt19937 rng(5);
    const std::size_t n = 5;
    for (int trial = 0; trial < 30; ++trial) {
        SparseMatrix g = SparseMatrix::identity(n);
        // Unipotent upper triangular perturbation keeps g invertible.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) g.set(i, j, Rational(static_cast<long>((i * 7 + j * 3 + trial) % 5) - 2));
        }
        const Subspace a = Subspace::span(random_vectors(rng, 2, n, 3), n);
        const Subspace perp = orthogonal_complement(a, g);
        CHECK(perp.dim() + a.dim() == n);
        for (const auto& v : perp.basis()) {
            for (const auto& w : a.basis()) CHECK(v.dot(g.apply(w)) == 0);
        }
        // v^T G a = 0 is the condition; the reverse pairing uses G^T.
        CHECK(orthogonal_complement(perp, g.transpose()) == a);
    }
}

TEST_CASE("inverse and products") {
    SparseMatrix m = SparseMatrix::from_dense({{2, 1}, {1, 1}});
    SparseMatrix inv = inverse(m);
    CHECK(m * inv == SparseMatrix::identity(2));
    CHECK_THROWS_AS(inverse(SparseMatrix::from_dense({{1, 2}, {2, 4}})), std::domain_error);
    CHECK(rank(SparseMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
}
