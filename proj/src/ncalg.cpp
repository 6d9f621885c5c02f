#include "lsdual/ncalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace lsdual {

namespace {

// Enumerates every interleaving of a and b, writing each into `buf`.
template <class Seq, class Emit>
void interleave(const Seq& a, const Seq& b, std::size_t i, std::size_t j, Seq& buf, Emit& emit) {
    if (i == a.size() && j == b.size()) {
        emit(buf);
        return;
    }
    if (i < a.size()) {
        buf.push_back(a[i]);
        interleave(a, b, i + 1, j, buf, emit);
        buf.pop_back();
    }
    if (j < b.size()) {
        buf.push_back(b[j]);
        interleave(a, b, i, j + 1, buf, emit);
        buf.pop_back();
    }
}

template <class Seq>
std::map<Seq, long> shuffle_counts(const Seq& a, const Seq& b) {
    std::map<Seq, long> counts;
    Seq buf;
    buf.reserve(a.size() + b.size());
    auto emit = [&](const Seq& s) { ++counts[s]; };
    interleave(a, b, 0, 0, buf, emit);
    return counts;
}

// All ways of splitting the letters of `s` into a subsequence and its complement.
template <class Seq, class Emit>
void subsequence_splits(const Seq& s, Emit emit) {
    const std::size_t n = s.size();
    const unsigned long total = 1UL << n;
    Seq left;
    Seq right;
    for (unsigned long mask = 0; mask < total; ++mask) {
        left.clear();
        right.clear();
        for (std::size_t p = 0; p < n; ++p) {
            if (mask & (1UL << p)) {
                left.push_back(s[p]);
            } else {
                right.push_back(s[p]);
            }
        }
        emit(left, right);
    }
}

}  // namespace

NcPoly word_poly(std::string_view letters, const Rational& coeff) { return NcPoly(Word(std::string(letters)), coeff); }

NcPoly homogeneous_part(const NcPoly& p, std::size_t depth, std::size_t weight) {
    return p.filtered([&](const Word& w) { return w.depth() == depth && w.weight() == weight; });
}

NcPoly concat(const NcPoly& a, const NcPoly& b) {
    return bilinear<NcPoly>(a, b, [](const Word& u, const Word& v) { return NcPoly(u + v); });
}

NcPoly shuffle(const Word& a, const Word& b) {
    NcPoly out;
    for (const auto& [s, n] : shuffle_counts(a.str(), b.str())) out.add(Word(s), n);
    return out;
}

NcPoly shuffle(const NcPoly& a, const NcPoly& b) {
    return bilinear<NcPoly>(a, b, [](const Word& u, const Word& v) { return shuffle(u, v); });
}

YPoly shuffle_y(const YWord& a, const YWord& b) {
    YPoly out;
    for (const auto& [s, n] : shuffle_counts(a.indices(), b.indices())) out.add(YWord(s), n);
    return out;
}

YPoly shuffle_y(const YPoly& a, const YPoly& b) {
    return bilinear<YPoly>(a, b, [](const YWord& u, const YWord& v) { return shuffle_y(u, v); });
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return concat(a, b) - concat(b, a); }

Tensor2 coproduct_sh(const NcPoly& a) {
    Tensor2 out;
    for (const auto& [w, c] : a) {
        subsequence_splits(w.str(), [&](const std::string& l, const std::string& r) {
            out.add(WordPair{Word(l), Word(r)}, c);
        });
    }
    return out;
}

Tensor2 coproduct_dec(const NcPoly& a) {
    Tensor2 out;
    for (const auto& [w, c] : a) {
        for (std::size_t cut = 0; cut <= w.weight(); ++cut) out.add(WordPair{w.substr(0, cut), w.substr(cut)}, c);
    }
    return out;
}

YTensor2 coproduct_y(const YPoly& a) {
    YTensor2 out;
    for (const auto& [w, c] : a) {
        subsequence_splits(w.indices(), [&](const std::vector<int>& l, const std::vector<int>& r) {
            out.add(YPair{YWord(l), YWord(r)}, c);
        });
    }
    return out;
}

Rational pairing(const NcPoly& a, const NcPoly& b) {
    Rational acc = 0;
    for (const auto& [w, c] : a) acc += c * b.coeff(w);
    return acc;
}

Rational pairing2(const Tensor2& s, const Tensor2& t) {
    Rational acc = 0;
    for (const auto& [k, c] : s) acc += c * t.coeff(k);
    return acc;
}

Tensor2 tensor(const NcPoly& a, const NcPoly& b) {
    Tensor2 out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) out.add(WordPair{u, v}, cu * cv);
    }
    return out;
}

Tensor2 swap_factors(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t) out.add(WordPair{k.second, k.first}, c);
    return out;
}

Tensor2 antisymmetrize(const Tensor2& t) { return t - swap_factors(t); }

Tensor2 shuffle(const Tensor2& s, const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k1, c1] : s) {
        for (const auto& [k2, c2] : t) {
            const NcPoly left = shuffle(k1.first, k2.first);
            const NcPoly right = shuffle(k1.second, k2.second);
            out.axpy(c1 * c2, tensor(left, right));
        }
    }
    return out;
}

NcPoly derivation_dw(const NcPoly& w, const NcPoly& target) {
    NcPoly out;
    for (const auto& [t, ct] : target) {
        for (std::size_t j = 0; j < t.weight(); ++j) {
            if (t[j] != 'z') continue;
            const Word prefix = t.substr(0, j);
            const Word suffix = t.substr(j + 1);
            for (const auto& [u, cu] : w) {
                const Rational c = ct * cu;
                out.add(prefix + Word("z") + u + suffix, c);
                out.add(prefix + u + Word("z") + suffix, -c);
            }
        }
    }
    return out;
}

NcPoly ihara_bracket(const NcPoly& a, const NcPoly& b) {
    return derivation_dw(a, b) - derivation_dw(b, a) + commutator(a, b);
}

YPoly project_pi(const NcPoly& a) {
    YPoly out;
    for (const auto& [w, c] : a) {
        if (w.empty()) {
            out.add(YWord{}, c);
            continue;
        }
        if (!w.ends_with_z()) continue;
        std::vector<int> idx;
        int run = 0;
        for (char letter : w.str()) {
            if (letter == 'x') {
                ++run;
            } else {
                idx.push_back(run + 1);
                run = 0;
            }
        }
        out.add(YWord(std::move(idx)), c);
    }
    return out;
}

Word section_i(const YWord& w) {
    std::string s;
    for (int n : w.indices()) {
        s.append(static_cast<std::size_t>(n - 1), 'x');
        s.push_back('z');
    }
    return Word(std::move(s));
}

NcPoly section_i(const YPoly& a) {
    NcPoly out;
    for (const auto& [w, c] : a) out.add(section_i(w), c);
    return out;
}

std::optional<WordPair> split_word(const Word& w, std::size_t i, Sign sign) {
    if (i == 0 || w.depth() < i) return std::nullopt;
    // Position of the i-th z from the left (Plus) or from the right (Minus).
    const std::size_t target = sign == Sign::Plus ? i : w.depth() + 1 - i;
    std::size_t seen = 0;
    std::size_t pos = 0;
    for (; pos < w.weight(); ++pos) {
        if (w[pos] == 'z' && ++seen == target) break;
    }
    const std::size_t cut = sign == Sign::Plus ? pos + 1 : pos;
    return WordPair{w.substr(0, cut), w.substr(cut)};
}

NcPoly d_op(const Tensor2& t, std::size_t i, Sign sign) {
    NcPoly out;
    for (const auto& [k, c] : t) {
        const auto parts = split_word(k.second, i, sign);
        if (!parts) continue;
        out.add(parts->first + k.first + parts->second, c);
    }
    return out;
}

Tensor2 co_d(const NcPoly& w, std::size_t i, Sign sign) {
    Tensor2 out;
    for (const auto& [word, c] : w) {
        const auto parts = split_word(word, i, sign);
        if (!parts) continue;
        const auto& [left, right] = *parts;
        if (sign == Sign::Plus) {
            // (1 (x) L) Delta_dec(R)
            for (std::size_t cut = 0; cut <= right.weight(); ++cut) {
                out.add(WordPair{right.substr(0, cut), left + right.substr(cut)}, c);
            }
        } else {
            // Delta_dec^op(L) (1 (x) R)
            for (std::size_t cut = 0; cut <= left.weight(); ++cut) {
                out.add(WordPair{left.substr(cut), left.substr(0, cut) + right}, c);
            }
        }
    }
    return out;
}

Tensor2 co_ihara(const Word& w) {
    const NcPoly p(w);
    Tensor2 t = coproduct_dec(p);
    for (std::size_t i = 1; i <= w.depth(); ++i) {
        t += co_d(p, i, Sign::Plus);
        t -= co_d(p, i, Sign::Minus);
    }
    return antisymmetrize(t);
}

Tensor2 co_ihara(const NcPoly& a) {
    return linear<Tensor2>(a, [](const Word& w) { return co_ihara(w); });
}

WordBasis::WordBasis(std::size_t depth, std::size_t weight)
    : depth_(depth), weight_(weight), words_(words_of_bidegree(depth, weight)) {}

std::size_t WordBasis::index(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || !(*it == w)) {
        throw std::invalid_argument("WordBasis::index: word " + w.str() + " is not of bidegree (" +
                                    std::to_string(depth_) + "," + std::to_string(weight_) + ")");
    }
    return static_cast<std::size_t>(it - words_.begin());
}

SparseVector WordBasis::coords(const NcPoly& p) const {
    SparseVector v(words_.size());
    // NcPoly iterates in Word order, which is the basis order within a bidegree.
    for (const auto& [w, c] : p) v.push_back(index(w), c);
    return v;
}

NcPoly WordBasis::poly(const SparseVector& v) const {
    if (v.dim() != words_.size()) throw std::invalid_argument("WordBasis::poly: dimension mismatch");
    NcPoly p;
    for (const auto& [i, c] : v.entries()) p.add(words_[i], c);
    return p;
}

}  // namespace lsdual
