#ifndef VNREG_PERIODIC_HPP
#define VNREG_PERIODIC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bits.hpp"
#include "local_rule.hpp"

namespace vnreg {

// Shortest p dividing |u| with u = (u[0..p))^(|u|/p).
inline std::size_t primitive_period(const Word& u) {
    const std::size_t n = u.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0)
            continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i)
            ok = u[i] == u[i - p];
        if (ok)
            return p;
    }
    return n;
}

inline Word least_rotation(const Word& u) {
    Word best = u;
    for (std::size_t k = 1; k < u.size(); ++k) {
        Word r = u.rotated(k);
        if (r < best)
            best = std::move(r);
    }
    return best;
}

inline bool is_lyndon(const Word& u) {
    return !u.empty() && primitive_period(u) == u.size() && least_rotation(u) == u;
}

/// Binary Lyndon words of length 1..max_length, ordered by length then
/// lexicographically (Duval's generation, bucketed by length).
inline std::vector<Word> lyndon_words(std::size_t max_length) {
    std::vector<std::vector<Word>> by_length(max_length + 1);
    if (max_length == 0)
        return {};
    std::vector<Bit> w{0};
    while (!w.empty()) {
        by_length[w.size()].push_back(Word(w));
        const std::size_t m = w.size();
        while (w.size() < max_length)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 1)
            w.pop_back();
        if (!w.empty())
            w.back() = 1;
    }
    std::vector<Word> out;
    for (auto& bucket : by_length)
        for (auto& u : bucket)
            out.push_back(std::move(u));
    return out;
}

/// The periodic configuration ^inf u ^inf.
class PeriodicPoint {
public:
    explicit PeriodicPoint(Word period_word) : word_(std::move(period_word)) {
        if (word_.empty())
            throw std::invalid_argument("periodic point needs a nonempty word");
        canonical_ = least_rotation(word_.substr(0, primitive_period(word_)));
    }

    const Word& period_word() const noexcept { return word_; }
    // Least rotation of the primitive root; equal iff same orbit.
    const Word& canonical_form() const noexcept { return canonical_; }

    bool same_orbit(const PeriodicPoint& other) const { return canonical_ == other.canonical_; }

private:
    Word word_;
    Word canonical_;
};

/// ^inf u . w v ^inf: w occupies [0,|w|), u repeats leftwards ending at -1,
/// v repeats rightwards starting at |w|.
struct EventuallyPeriodicPoint {
    Word left;
    Word middle;
    Word right;

    EventuallyPeriodicPoint(Word u, Word w, Word v)
        : left(std::move(u)), middle(std::move(w)), right(std::move(v)) {
        if (left.empty() || right.empty())
            throw std::invalid_argument("periodic tails must be nonempty");
    }

    Bit at(std::int64_t i) const {
        const auto lu = static_cast<std::int64_t>(left.size());
        const auto lw = static_cast<std::int64_t>(middle.size());
        const auto lv = static_cast<std::int64_t>(right.size());
        if (i < 0)
            return left[static_cast<std::size_t>(((i % lu) + lu) % lu)];
        if (i < lw)
            return middle[static_cast<std::size_t>(i)];
        return right[static_cast<std::size_t>((i - lw) % lv)];
    }

    // Cells [lo, hi).
    Word sample(std::int64_t lo, std::int64_t hi) const {
        Word w;
        for (std::int64_t i = lo; i < hi; ++i)
            w.push_back(at(i));
        return w;
    }

    std::string str() const { return "^" + left.str() + "." + middle.str() + right.str() + "^"; }

    friend bool operator==(const EventuallyPeriodicPoint&, const EventuallyPeriodicPoint&) = default;
};

// Range [lo, hi) outside of which both points are periodic with the
// combined period fully sampled.
inline std::pair<std::int64_t, std::int64_t> comparison_range(const EventuallyPeriodicPoint& a,
                                                                const EventuallyPeriodicPoint& b,
                                                                std::int64_t margin) {
    const auto lcm_left = static_cast<std::int64_t>(std::lcm(a.left.size(), b.left.size()));
    const auto lcm_right = static_cast<std::int64_t>(std::lcm(a.right.size(), b.right.size()));
    const auto mid = static_cast<std::int64_t>(std::max(a.middle.size(), b.middle.size()));
    return {-lcm_left - margin, mid + lcm_right + margin};
}

/// Exact equality of two eventually periodic configurations.
inline bool same_configuration(const EventuallyPeriodicPoint& a, const EventuallyPeriodicPoint& b) {
    const auto [lo, hi] = comparison_range(a, b, 0);
    return a.sample(lo, hi) == b.sample(lo, hi);
}

/// f(x) == f(y) for eventually periodic x, y.
inline bool same_image(const LocalRule& f, const EventuallyPeriodicPoint& x, const EventuallyPeriodicPoint& y) {
    const auto r = static_cast<std::int64_t>(f.radius());
    const auto [lo, hi] = comparison_range(x, y, r);
    // images are periodic left of lo + r and right of hi - r with the same periods
    return apply_word(f, x.sample(lo - r, hi + r)) == apply_word(f, y.sample(lo - r, hi + r));
}

} // namespace vnreg

#endif
