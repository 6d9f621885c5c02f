#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lsdual {

/// Monomial of Q<x,z>. Weight is the length, depth the number of z letters.
/// Words are ordered by (weight, depth) and then lexicographically with x < z.
class Word {
public:
    Word() = default;
    /// Throws std::invalid_argument on letters other than 'x' and 'z'.
    explicit Word(std::string letters);
    static Word x_power(std::size_t n) { return Word(std::string(n, 'x')); }

    const std::string& str() const { return letters_; }
    std::size_t weight() const { return letters_.size(); }
    std::size_t depth() const { return depth_; }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    bool ends_with_z() const { return !letters_.empty() && letters_.back() == 'z'; }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    struct Unchecked {};
    Word(std::string letters, std::size_t depth, Unchecked) : letters_(std::move(letters)), depth_(depth) {}

    std::string letters_;
    std::size_t depth_ = 0;
};

/// Monomial y_{n_1}...y_{n_m} of Q<Y>: depth m, weight n_1 + ... + n_m.
class YWord {
public:
    YWord() = default;
    /// Throws std::invalid_argument if an index is < 1.
    explicit YWord(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    std::size_t depth() const { return indices_.size(); }
    std::size_t weight() const { return weight_; }
    bool empty() const { return indices_.empty(); }
    std::string str() const;

    friend YWord operator+(const YWord& a, const YWord& b);
    friend bool operator==(const YWord& a, const YWord& b) { return a.indices_ == b.indices_; }
    friend std::strong_ordering operator<=>(const YWord& a, const YWord& b);

private:
    std::vector<int> indices_;
    std::size_t weight_ = 0;
};

/// All words with `depth` z's and total length `weight`, in Word order.
std::vector<Word> words_of_bidegree(std::size_t depth, std::size_t weight);

/// Compositions of `total` into `parts` positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(std::size_t parts, std::size_t total);

/// The exponents (n_m, ..., n_1, n_0) of w = x^{n_m} z ... x^{n_1} z x^{n_0},
/// returned left to right, so the vector has depth(w) + 1 entries.
std::vector<std::size_t> x_blocks(const Word& w);

}  // namespace lsdual
