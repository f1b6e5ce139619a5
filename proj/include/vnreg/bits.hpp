#ifndef VNREG_BITS_HPP
#define VNREG_BITS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vnreg {

using Bit = std::uint8_t;

// Finite word over {0,1}. Ordering is plain lexicographic.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Bit> bits) : bits_(bits) {}
    explicit Word(std::vector<Bit> bits) : bits_(std::move(bits)) {}

    static Word parse(std::string_view text) {
        Word w;
        w.bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("word must consist of 0 and 1: '" + std::string(text) + "'");
            w.bits_.push_back(static_cast<Bit>(c - '0'));
        }
        return w;
    }

    static Word from_index(std::uint64_t index, std::size_t length) {
        Word w;
        w.bits_.resize(length);
        for (std::size_t i = 0; i < length; ++i)
            w.bits_[i] = static_cast<Bit>((index >> (length - 1 - i)) & 1U);
        return w;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    Bit operator[](std::size_t i) const { return bits_[i]; }
    Bit& operator[](std::size_t i) { return bits_[i]; }
    void push_back(Bit b) { bits_.push_back(b); }
    void pop_back() { bits_.pop_back(); }

    auto begin() const noexcept { return bits_.begin(); }
    auto end() const noexcept { return bits_.end(); }
    const std::vector<Bit>& bits() const noexcept { return bits_; }

    // Base-2 value, leftmost bit most significant.
    std::uint64_t index() const {
        if (bits_.size() > 63)
            throw std::out_of_range("word too long to index");
        std::uint64_t v = 0;
        for (Bit b : bits_)
            v = (v << 1) | b;
        return v;
    }

    Word substr(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Bit>(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                     bits_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
    }

    Word rotated(std::size_t k) const {
        Word w;
        const std::size_t n = size();
        w.bits_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            w.bits_[i] = bits_[(i + k) % n];
        return w;
    }

    Word repeated(std::size_t times) const {
        Word w;
        w.bits_.reserve(size() * times);
        for (std::size_t t = 0; t < times; ++t)
            w.bits_.insert(w.bits_.end(), bits_.begin(), bits_.end());
        return w;
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word w = a;
        w.bits_.insert(w.bits_.end(), b.bits_.begin(), b.bits_.end());
        return w;
    }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (Bit b : bits_)
            s.push_back(static_cast<char>('0' + b));
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.bits_ <=> b.bits_; }

private:
    std::vector<Bit> bits_;
};

// Orders words by length first, then lexicographically.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

inline std::uint64_t low_mask(unsigned bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

// Packed bit array; local rule tables reach 2^27 entries.
class BitTable {
public:
    BitTable() = default;
    explicit BitTable(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool get(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set(std::uint64_t i, bool v) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    friend bool operator==(const BitTable&, const BitTable&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace vnreg

#endif
