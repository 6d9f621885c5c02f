#pragma once

#include "lsdual/lincomb.hpp"
#include "lsdual/sparse.hpp"
#include "lsdual/word.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace lsdual {

using NcPoly = LinComb<Word>;
using YPoly = LinComb<YWord>;
using WordPair = std::pair<Word, Word>;
/// Element of Q<x,z> (x) Q<x,z>.
using Tensor2 = LinComb<WordPair>;
using YPair = std::pair<YWord, YWord>;
using YTensor2 = LinComb<YPair>;

NcPoly word_poly(std::string_view letters, const Rational& coeff = 1);
inline NcPoly unit_poly() { return NcPoly(Word{}); }

/// Component of bidegree (depth, weight).
NcPoly homogeneous_part(const NcPoly& p, std::size_t depth, std::size_t weight);

// Products.
NcPoly concat(const NcPoly& a, const NcPoly& b);
NcPoly shuffle(const Word& a, const Word& b);
NcPoly shuffle(const NcPoly& a, const NcPoly& b);
YPoly shuffle_y(const YWord& a, const YWord& b);
YPoly shuffle_y(const YPoly& a, const YPoly& b);
/// ab - ba
NcPoly commutator(const NcPoly& a, const NcPoly& b);

// Coproducts.
/// Shuffle coproduct: concatenation-multiplicative, each letter primitive.
Tensor2 coproduct_sh(const NcPoly& a);
/// Deconcatenation: every two-part splitting of each word.
Tensor2 coproduct_dec(const NcPoly& a);
/// Shuffle coproduct of Q<Y>, each y_n primitive.
YTensor2 coproduct_y(const YPoly& a);

// Pairings: monomials are orthonormal.
Rational pairing(const NcPoly& a, const NcPoly& b);
Rational pairing2(const Tensor2& s, const Tensor2& t);

// Tensor utilities.
Tensor2 tensor(const NcPoly& a, const NcPoly& b);
/// tau(u (x) v) = v (x) u
Tensor2 swap_factors(const Tensor2& t);
/// (id - tau)
Tensor2 antisymmetrize(const Tensor2& t);
/// a (x) b - b (x) a
inline Tensor2 wedge(const NcPoly& a, const NcPoly& b) { return antisymmetrize(tensor(a, b)); }
/// Componentwise shuffle in Q<x,z>^{(x)2}.
Tensor2 shuffle(const Tensor2& s, const Tensor2& t);

// Derivations and the Ihara bracket.
/// d_w: the derivation with d_w(x) = 0 and d_w(z) = [z, w], applied to `target`;
/// linear in w as well.
NcPoly derivation_dw(const NcPoly& w, const NcPoly& target);
/// {a, b} = d_a(b) - d_b(a) + [a, b]
NcPoly ihara_bracket(const NcPoly& a, const NcPoly& b);

// Q<x,z> <-> Q<Y>.
/// Kills words ending in x; x^{n_1-1}z...x^{n_m-1}z -> y_{n_1}...y_{n_m}.
YPoly project_pi(const NcPoly& a);
/// y_{n_1}...y_{n_m} -> x^{n_1-1}z...x^{n_m-1}z
NcPoly section_i(const YPoly& a);
Word section_i(const YWord& w);

enum class Sign { Plus, Minus };

/// For w = x^{n_m}z...x^{n_1}zx^{n_0}, the factorisation w = L R:
///   Plus:  L ends with the i-th z counted from the left.
///   Minus: R starts with the i-th z counted from the right.
/// Returns nullopt when depth(w) < i.
std::optional<WordPair> split_word(const Word& w, std::size_t i, Sign sign);

/// d_{i,+}(u (x) w) = w^L u w^R using the Plus split of w; likewise d_{i,-}.
NcPoly d_op(const Tensor2& t, std::size_t i, Sign sign);
/// Adjoint of d_op with respect to the canonical pairings.
Tensor2 co_d(const NcPoly& w, std::size_t i, Sign sign);

/// Adjoint of the Ihara bracket:
/// (id - tau)(Delta_dec + sum_{1<=i<=depth} co_d(.,i,+) - co_d(.,i,-)).
Tensor2 co_ihara(const NcPoly& a);
Tensor2 co_ihara(const Word& w);

/// The ordered word basis of one bidegree, with coordinate conversion.
class WordBasis {
public:
    WordBasis(std::size_t depth, std::size_t weight);

    std::size_t depth() const { return depth_; }
    std::size_t weight() const { return weight_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    /// Throws std::invalid_argument if w has another bidegree.
    std::size_t index(const Word& w) const;
    /// Throws std::invalid_argument on terms of another bidegree.
    SparseVector coords(const NcPoly& p) const;
    NcPoly poly(const SparseVector& v) const;

private:
    std::size_t depth_;
    std::size_t weight_;
    std::vector<Word> words_;
};

}  // namespace lsdual
