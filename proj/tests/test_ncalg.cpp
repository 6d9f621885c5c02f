#include "doctest.h"

#include "lsdual/ncalg.hpp"

#include <map>
#include <random>
#include <tuple>

using namespace lsdual;

namespace {

NcPoly P(std::string_view s, long c = 1) { return word_poly(s, c); }

Tensor2 T(std::string_view a, std::string_view b, long c = 1) {
    return Tensor2(WordPair{Word(std::string(a)), Word(std::string(b))}, c);
}

std::vector<Word> words_up_to(std::size_t max_weight) {
    std::vector<Word> out;
    for (std::size_t n = 0; n <= max_weight; ++n) {
        for (std::size_t d = 0; d <= n; ++d) {
            for (auto& w : words_of_bidegree(d, n)) out.push_back(w);
        }
    }
    return out;
}

std::vector<Word> words_of_weight(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t d = 0; d <= n; ++d) {
        for (auto& w : words_of_bidegree(d, n)) out.push_back(w);
    }
    return out;
}

Word random_word(std::mt19937& rng, std::size_t len) {
    std::string s;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < len; ++i) s.push_back(coin(rng) ? 'z' : 'x');
    return Word(s);
}

NcPoly random_poly(std::mt19937& rng, std::size_t max_len, int terms) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> coeff(-3, 3);
    NcPoly p;
    for (int i = 0; i < terms; ++i) p.add(random_word(rng, len(rng)), coeff(rng));
    return p;
}

using Triple = std::tuple<Word, Word, Word>;
using Tensor3 = std::map<Triple, Rational>;

// (Delta (x) id) Delta and (id (x) Delta) Delta, computed by brute force.
Tensor3 coassoc_left(const Tensor2& t, Tensor2 (*cop)(const NcPoly&)) {
    Tensor3 out;
    for (const auto& [k, c] : t) {
        for (const auto& [k2, c2] : cop(NcPoly(k.first))) out[{k2.first, k2.second, k.second}] += c * c2;
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

Tensor3 coassoc_right(const Tensor2& t, Tensor2 (*cop)(const NcPoly&)) {
    Tensor3 out;
    for (const auto& [k, c] : t) {
        for (const auto& [k2, c2] : cop(NcPoly(k.second))) out[{k.first, k2.first, k2.second}] += c * c2;
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

}  // namespace

TEST_CASE("words") {
    const Word w("xzzx");
    CHECK(w.weight() == 4);
    CHECK(w.depth() == 2);
    CHECK(x_blocks(w) == std::vector<std::size_t>{1, 0, 1});
    CHECK_THROWS_AS(Word("xy"), std::invalid_argument);
    CHECK(words_of_bidegree(1, 3) == std::vector<Word>{Word("xxz"), Word("xzx"), Word("zxx")});
    CHECK(Word("z") < Word("xx"));
    CHECK(Word("xx") < Word("xz"));
    CHECK(YWord({2, 1}).weight() == 3);
    CHECK_THROWS_AS(YWord({0}), std::invalid_argument);
}

TEST_CASE("concatenation") {
    CHECK(concat(P("x"), P("z")) == P("xz"));
    CHECK(concat(unit_poly(), P("xzx")) == P("xzx"));
    CHECK(concat(P("xz"), P("zx")) == P("xzzx"));
}

TEST_CASE("shuffle product examples") {
    CHECK(shuffle(P("x"), P("z")) == P("xz") + P("zx"));
    CHECK(shuffle(P("z"), P("z")) == P("zz", 2));
    // z inserted at each of the three slots of xz: zxz, xzz, xzz.
    CHECK(shuffle(P("xz"), P("z")) == P("xzz", 2) + P("zxz"));
    CHECK(shuffle(unit_poly(), P("xz")) == P("xz"));
}

TEST_CASE("shuffle is commutative and associative, concat associative (random, weight <= 8)") {
    std::mt19937 rng(1);
    for (int i = 0; i < 60; ++i) {
        const NcPoly a = random_poly(rng, 3, 2);
        const NcPoly b = random_poly(rng, 3, 2);
        const NcPoly c = random_poly(rng, 2, 2);
        CHECK(shuffle(a, b) == shuffle(b, a));
        CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
        CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
        CHECK(shuffle(a, unit_poly()) == a);
    }
}

TEST_CASE("coproduct examples") {
    CHECK(coproduct_sh(P("x")) == T("", "x") + T("x", ""));
    CHECK(coproduct_sh(unit_poly()) == T("", ""));
    CHECK(coproduct_sh(P("xz")) == T("", "xz") + T("x", "z") + T("z", "x") + T("xz", ""));
    CHECK(coproduct_dec(P("xz")) == T("", "xz") + T("x", "z") + T("xz", ""));
    CHECK(coproduct_dec(unit_poly()) == T("", ""));
    CHECK(coproduct_dec(P("zz")) == T("", "zz") + T("z", "z") + T("zz", ""));
}

TEST_CASE("coproducts are adjoint to the products for all words up to weight 7") {
    for (std::size_t n = 0; n <= 7; ++n) {
        const auto ws = words_of_weight(n);
        std::map<WordPair, NcPoly> from_sh;
        std::map<WordPair, NcPoly> from_dec;
        for (const auto& w : ws) {
            for (const auto& [k, c] : coproduct_sh(NcPoly(w))) from_sh[k].add(w, c);
            for (const auto& [k, c] : coproduct_dec(NcPoly(w))) from_dec[k].add(w, c);
        }
        for (std::size_t a = 0; a <= n; ++a) {
            for (const auto& u : words_of_weight(a)) {
                for (const auto& v : words_of_weight(n - a)) {
                    const WordPair key{u, v};
                    CHECK(from_sh[key] == shuffle(NcPoly(u), NcPoly(v)));
                    CHECK(from_dec[key] == concat(NcPoly(u), NcPoly(v)));
                }
            }
        }
    }
}

TEST_CASE("coassociativity and cocommutativity") {
    for (const auto& w : words_up_to(5)) {
        const Tensor2 d = coproduct_sh(NcPoly(w));
        CHECK(swap_factors(d) == d);
        CHECK(coassoc_left(d, &coproduct_sh) == coassoc_right(d, &coproduct_sh));
        const Tensor2 dd = coproduct_dec(NcPoly(w));
        CHECK(coassoc_left(dd, &coproduct_dec) == coassoc_right(dd, &coproduct_dec));
    }
}

TEST_CASE("pairings") {
    CHECK(pairing(P("xz"), P("xz")) == 1);
    CHECK(pairing(P("xz"), P("zx")) == 0);
    CHECK(pairing(P("xz", 2) + P("zx"), P("zx")) == 1);
    CHECK(pairing2(T("x", "z", 3) + T("z", "x"), T("x", "z", 2)) == 6);
}

TEST_CASE("derivation d_w") {
    CHECK(derivation_dw(P("z"), P("z")).is_zero());
    CHECK(derivation_dw(P("x"), P("z")) == P("zx") - P("xz"));
    CHECK(derivation_dw(P("x"), P("zz")) == P("zzx") - P("xzz"));
    CHECK(derivation_dw(P("z"), P("xxx")).is_zero());
    CHECK(derivation_dw(P("x"), unit_poly()).is_zero());
}

TEST_CASE("Ihara bracket examples") {
    CHECK(ihara_bracket(P("z"), P("z")).is_zero());
    CHECK(ihara_bracket(P("x"), P("z")).is_zero());
    const NcPoly psi3 = P("xxz") - P("xzx", 2) + P("zxx");
    CHECK(ihara_bracket(psi3, psi3).is_zero());
    // z is central for the Ihara bracket.
    CHECK(ihara_bracket(P("z"), psi3).is_zero());
    CHECK_FALSE(ihara_bracket(P("xz"), psi3).is_zero());
}

TEST_CASE("Ihara bracket: antisymmetry and Jacobi (random, weight <= 8)") {
    std::mt19937 rng(2);
    for (int i = 0; i < 40; ++i) {
        const NcPoly a = random_poly(rng, 3, 2);
        const NcPoly b = random_poly(rng, 3, 2);
        const NcPoly c = random_poly(rng, 2, 2);
        CHECK(ihara_bracket(a, b) == -ihara_bracket(b, a));
        const NcPoly jac = ihara_bracket(a, ihara_bracket(b, c)) + ihara_bracket(b, ihara_bracket(c, a)) +
                           ihara_bracket(c, ihara_bracket(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("Ihara bracket is bidegree additive") {
    const NcPoly b = ihara_bracket(P("xzz"), P("xz"));
    for (const auto& [w, c] : b) {
        CHECK(w.weight() == 5);
        CHECK(w.depth() == 3);
    }
}

TEST_CASE("projection pi and section i") {
    CHECK(project_pi(P("xzx")).is_zero());
    CHECK(project_pi(P("xxz")) == YPoly(YWord({3})));
    CHECK(section_i(YPoly(YWord({2, 1}))) == P("xzz"));
    CHECK(project_pi(unit_poly()) == YPoly(YWord{}));
    for (const auto& w : words_up_to(6)) {
        if (w.ends_with_z()) CHECK(section_i(project_pi(NcPoly(w))) == NcPoly(w));
        const YPoly y = project_pi(NcPoly(w));
        for (const auto& [yw, c] : y) {
            CHECK(yw.depth() == w.depth());
            CHECK(yw.weight() == w.weight());
        }
    }
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            const YWord y({a, b});
            CHECK(project_pi(section_i(YPoly(y))) == YPoly(y));
        }
    }
}

TEST_CASE("Y-shuffle and its coproduct") {
    CHECK(shuffle_y(YPoly(YWord({1})), YPoly(YWord({2}))) == YPoly(YWord({1, 2})) + YPoly(YWord({2, 1})));
    const YTensor2 d = coproduct_y(YPoly(YWord({3})));
    CHECK(d == YTensor2(YPair{YWord{}, YWord({3})}) + YTensor2(YPair{YWord({3}), YWord{}}));
}

TEST_CASE("split_word") {
    const Word w("xzzx");
    CHECK(split_word(w, 1, Sign::Plus) == WordPair{Word("xz"), Word("zx")});
    CHECK(split_word(w, 1, Sign::Minus) == WordPair{Word("xz"), Word("zx")});
    CHECK(split_word(w, 2, Sign::Plus) == WordPair{Word("xzz"), Word("x")});
    CHECK(split_word(w, 2, Sign::Minus) == WordPair{Word("x"), Word("zzx")});
    CHECK_FALSE(split_word(Word("zx"), 2, Sign::Plus).has_value());
    CHECK_FALSE(split_word(Word("zx"), 2, Sign::Minus).has_value());
    CHECK_FALSE(split_word(Word("xx"), 1, Sign::Plus).has_value());
}

TEST_CASE("co_d examples") {
    CHECK(co_d(P("z"), 1, Sign::Plus) == T("", "z"));
    CHECK(co_d(P("z"), 2, Sign::Plus).is_zero());
    CHECK(co_d(P("z"), 1, Sign::Minus) == T("", "z"));
}

TEST_CASE("co_d is adjoint to d_op on every block of weight <= 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto targets = words_of_weight(n);
        for (std::size_t i = 1; i <= n; ++i) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                // Forward table: (u,v) -> d(u (x) v); adjoint table built from co_d(w).
                std::map<WordPair, NcPoly> adjoint;
                for (const auto& w : targets) {
                    for (const auto& [k, c] : co_d(NcPoly(w), i, s)) adjoint[k].add(w, c);
                }
                for (std::size_t a = 0; a <= n; ++a) {
                    for (const auto& u : words_of_weight(a)) {
                        for (const auto& v : words_of_weight(n - a)) {
                            const WordPair key{u, v};
                            const NcPoly forward = d_op(Tensor2(key), i, s);
                            const auto it = adjoint.find(key);
                            CHECK(forward == (it == adjoint.end() ? NcPoly{} : it->second));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("the sum of the d operators recovers d_w") {
    for (const auto& w : words_up_to(4)) {
        for (const auto& u : words_up_to(3)) {
            NcPoly sum;
            for (std::size_t i = 1; i <= w.depth(); ++i) {
                sum += d_op(Tensor2(WordPair{u, w}), i, Sign::Plus);
                sum -= d_op(Tensor2(WordPair{u, w}), i, Sign::Minus);
            }
            CHECK(sum == derivation_dw(NcPoly(u), NcPoly(w)));
        }
    }
}

TEST_CASE("co_ihara examples") {
    CHECK(co_ihara(unit_poly()).is_zero());
    for (std::size_t k = 1; k <= 6; ++k) {
        for (const auto& w : words_of_bidegree(1, k)) CHECK(co_ihara(NcPoly(w)).is_zero());
    }
}

TEST_CASE("co_ihara is the transpose of the Ihara bracket on every block m <= 4, k <= 8") {
    for (std::size_t k = 1; k <= 8; ++k) {
        for (std::size_t m = 0; m <= std::min<std::size_t>(4, k); ++m) {
            // Bracket matrix: rows (a,b), columns w; co_ihara matrix: rows w, columns (a,b).
            std::map<WordPair, NcPoly> transposed;
            for (const auto& w : words_of_bidegree(m, k)) {
                for (const auto& [key, c] : co_ihara(NcPoly(w))) transposed[key].add(w, c);
            }
            for (std::size_t k1 = 0; k1 <= k; ++k1) {
                for (std::size_t m1 = 0; m1 <= std::min(m, k1); ++m1) {
                    if (m - m1 > k - k1) continue;
                    for (const auto& a : words_of_bidegree(m1, k1)) {
                        for (const auto& b : words_of_bidegree(m - m1, k - k1)) {
                            const auto it = transposed.find(WordPair{a, b});
                            const NcPoly expected = it == transposed.end() ? NcPoly{} : it->second;
                            CHECK(ihara_bracket(NcPoly(a), NcPoly(b)) == expected);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("co operators intertwine the shuffle by x") {
    // L(w sh x) = L(w) sh (1 (x) x + x (x) 1) for L in {Delta_dec, co_d(i,+), co_d(i,-)}.
    const Tensor2 prim = T("", "x") + T("x", "");
    for (const auto& w : words_up_to(5)) {
        const NcPoly wx = shuffle(NcPoly(w), P("x"));
        CHECK(coproduct_dec(wx) == shuffle(coproduct_dec(NcPoly(w)), prim));
        for (std::size_t i = 1; i <= 3; ++i) {
            CHECK(co_d(wx, i, Sign::Plus) == shuffle(co_d(NcPoly(w), i, Sign::Plus), prim));
            CHECK(co_d(wx, i, Sign::Minus) == shuffle(co_d(NcPoly(w), i, Sign::Minus), prim));
        }
    }
}
