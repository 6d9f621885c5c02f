#include "lsdual/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsdual {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
        if (c == 'z') {
            ++depth_;
        } else if (c != 'x') {
            throw std::invalid_argument("word letters must be 'x' or 'z', got '" + letters_ + "'");
        }
    }
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    std::string s = letters_.substr(pos, len);
    const auto d = static_cast<std::size_t>(std::count(s.begin(), s.end(), 'z'));
    return Word(std::move(s), d, Unchecked{});
}

Word operator+(const Word& a, const Word& b) {
    return Word(a.letters_ + b.letters_, a.depth_ + b.depth_, Word::Unchecked{});
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.depth_ <=> b.depth_; c != 0) return c;
    return a.letters_.compare(b.letters_) <=> 0;
}

YWord::YWord(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int n : indices_) {
        if (n < 1) throw std::invalid_argument("Y-word indices must be positive");
        weight_ += static_cast<std::size_t>(n);
    }
}

std::string YWord::str() const {
    if (indices_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ' ';
        out += "y" + std::to_string(indices_[i]);
    }
    return out;
}

YWord operator+(const YWord& a, const YWord& b) {
    std::vector<int> v = a.indices_;
    v.insert(v.end(), b.indices_.begin(), b.indices_.end());
    return YWord(std::move(v));
}

std::strong_ordering operator<=>(const YWord& a, const YWord& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    if (auto c = a.depth() <=> b.depth(); c != 0) return c;
    return a.indices_ <=> b.indices_;
}

std::vector<Word> words_of_bidegree(std::size_t depth, std::size_t weight) {
    std::vector<Word> out;
    if (depth > weight) return out;
    // Lexicographic order with x < z is the order of the sorted letter multiset's permutations.
    std::string s = std::string(weight - depth, 'x') + std::string(depth, 'z');
    do {
        out.emplace_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::vector<std::vector<int>> compositions(std::size_t parts, std::size_t total) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    if (total < parts) return out;
    std::vector<int> cur(parts);
    auto rec = [&](auto& self, std::size_t i, int left) -> void {
        if (i + 1 == parts) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        const int reserve = static_cast<int>(parts - i - 1);
        for (int a = 1; a <= left - reserve; ++a) {
            cur[i] = a;
            self(self, i + 1, left - a);
        }
    };
    rec(rec, 0, static_cast<int>(total));
    return out;
}

std::vector<std::size_t> x_blocks(const Word& w) {
    std::vector<std::size_t> blocks{0};
    for (char c : w.str()) {
        if (c == 'x') {
            ++blocks.back();
        } else {
            blocks.push_back(0);
        }
    }
    return blocks;
}

}  // namespace lsdual
