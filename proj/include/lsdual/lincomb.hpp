#pragma once

#include "lsdual/rational.hpp"

#include <functional>
#include <map>
#include <utility>

namespace lsdual {

/// Finitely supported formal Q-linear combination of keys. Zero coefficients
/// are never stored, so two combinations are equal iff their maps are equal.
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, Rational>;
    using const_iterator = typename Map::const_iterator;

    LinComb() = default;
    explicit LinComb(const Key& key, const Rational& coeff = 1) { add(key, coeff); }

    void add(const Key& key, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }
    /// this += s * other
    LinComb& axpy(const Rational& s, const LinComb& other) {
        if (s == 0) return *this;
        for (const auto& [k, c] : other.terms_) add(k, s * c);
        return *this;
    }

    template <class Pred>
    LinComb filtered(Pred keep) const {
        LinComb out;
        for (const auto& [k, c] : terms_) {
            if (keep(k)) out.terms_.emplace(k, c);
        }
        return out;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

/// Bilinear extension of a key-level operation returning a LinComb.
template <class Out, class A, class B, class Op>
Out bilinear(const LinComb<A>& a, const LinComb<B>& b, Op op) {
    Out out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) out.axpy(ca * cb, op(ka, kb));
    }
    return out;
}

/// Linear extension of a key-level operation returning a LinComb.
template <class Out, class A, class Op>
Out linear(const LinComb<A>& a, Op op) {
    Out out;
    for (const auto& [ka, ca] : a) out.axpy(ca, op(ka));
    return out;
}

}  // namespace lsdual
