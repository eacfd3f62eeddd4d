#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "sturmkit/errors.hpp"

namespace sturmkit {

/// Finite word over the alphabet {0, 1}, stored as '0'/'1' text.
class Word {
public:
    Word() = default;

    static Word from_text(std::string_view text) {
        for (char c : text)
            if (c != '0' && c != '1') throw ParseError("word symbol outside {0,1}");
        Word w;
        w.bits_.assign(text.begin(), text.end());
        return w;
    }

    static Word letter(int bit) {
        Word w;
        w.push_back(bit);
        return w;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int at(std::size_t i) const { return bits_[i] - '0'; }
    int first() const { return bits_.front() - '0'; }
    int last() const { return bits_.back() - '0'; }

    void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
    void append(const Word& w) { bits_ += w.bits_; }

    Word prefix(std::size_t n) const {
        Word w;
        w.bits_ = bits_.substr(0, n);
        return w;
    }

    Word drop_first(std::size_t n) const {
        Word w;
        w.bits_ = n >= bits_.size() ? std::string() : bits_.substr(n);
        return w;
    }

    Word drop_last(std::size_t n) const { return prefix(n >= size() ? 0 : size() - n); }

    bool starts_with(const Word& p) const {
        return bits_.compare(0, p.bits_.size(), p.bits_) == 0;
    }

    Word reversed() const {
        Word w;
        w.bits_.assign(bits_.rbegin(), bits_.rend());
        return w;
    }

    /// Image under the exchange morphism (0 <-> 1).
    Word exchanged() const {
        Word w;
        w.bits_.reserve(bits_.size());
        for (char c : bits_) w.bits_.push_back(c == '0' ? '1' : '0');
        return w;
    }

    bool is_palindrome() const {
        return std::equal(bits_.begin(), bits_.begin() + bits_.size() / 2, bits_.rbegin());
    }

    const std::string& str() const { return bits_; }

    friend Word operator+(const Word& a, const Word& b) {
        Word w = a;
        w.append(b);
        return w;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string bits_;
};

/// Number of distinct length-n factors of w; requires 1 <= n <= |w|.
int factor_complexity(const Word& w, int n);

} // namespace sturmkit
