#ifndef VNREG_TESTS_SUPPORT_HPP
#define VNREG_TESTS_SUPPORT_HPP

// Independent reference implementations used as oracles by the tests.
// They share only Word and LocalRule tables with the library.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vnreg/vnreg.hpp"

namespace oracle {

using vnreg::Bit;
using vnreg::LocalRule;
using vnreg::Word;

inline LocalRule random_rule(unsigned r, std::mt19937_64& rng) {
    LocalRule f(r);
    for (std::uint64_t w = 0; w < f.table_size(); ++w)
        f.set(w, (rng() & 1U) != 0);
    return f;
}

// Table entry read straight from the integer definition.
inline Bit rule_out(const LocalRule& f, const std::vector<Bit>& cells, std::size_t lo) {
    std::uint64_t k = 0;
    for (std::size_t t = 0; t < f.window_size(); ++t)
        k = 2 * k + cells[lo + t];
    return f.at(k);
}

inline std::vector<Word> all_words(std::size_t n) {
    std::vector<Word> out;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
        out.push_back(Word::from_index(i, n));
    return out;
}

inline std::vector<Word> all_words_up_to(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (auto& w : all_words(k))
            out.push_back(std::move(w));
    return out;
}

// f applied to every word of length n + 2r.
inline std::set<std::string> image_words(const LocalRule& f, std::size_t n) {
    std::set<std::string> out;
    const std::size_t m = n + 2 * f.radius();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
        const Word w = Word::from_index(i, m);
        std::vector<Bit> cells(w.begin(), w.end());
        std::string s;
        for (std::size_t j = 0; j < n; ++j)
            s.push_back(char('0' + rule_out(f, cells, j)));
        out.insert(s);
    }
    return out;
}

inline bool is_factor(const std::string& small, const std::string& big) {
    return big.find(small) != std::string::npos;
}

// Minimal forbidden words of length <= n given the language up to length n.
inline std::set<std::string> minimal_forbidden_brute(const std::vector<std::set<std::string>>& lang, std::size_t n) {
    std::set<std::string> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (const auto& w : all_words(k)) {
            const auto s = w.str();
            if (lang[k].count(s))
                continue;
            if (k == 1 || (lang[k - 1].count(s.substr(1)) && lang[k - 1].count(s.substr(0, k - 1))))
                out.insert(s);
        }
    return out;
}

// All y of length |u| with f(^inf y ^inf) = ^inf u ^inf exactly aligned.
inline std::vector<Word> periodic_preimages_brute(const LocalRule& f, const Word& u) {
    std::vector<Word> out;
    const std::size_t n = u.size();
    const std::size_t r = f.radius();
    for (const auto& y : all_words(n)) {
        std::vector<Bit> cells;
        for (std::size_t i = 0; i < n + 2 * r; ++i)
            cells.push_back(y[(i + n * (r + 1) - r) % n]);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = rule_out(f, cells, i) == u[i];
        if (ok)
            out.push_back(y);
    }
    return out;
}

inline Bit periodic_at(const Word& p, std::int64_t i) {
    const auto n = static_cast<std::int64_t>(p.size());
    return p[static_cast<std::size_t>(((i % n) + n) % n)];
}

// Bounded brute force for asymptotic preimages: y equals ^inf U (aligned with
// x's left tail) left of -k|u|, V ^inf (aligned with x's right tail) from
// |w| + k|v| on, and is free in between. Cells are chosen left to right and
// each output is checked as soon as its window is complete.
inline bool asymptotic_preimage_brute(const LocalRule& f, const vnreg::EventuallyPeriodicPoint& x, const Word& U,
                                      const Word& V, std::size_t k) {
    const auto r = static_cast<std::int64_t>(f.radius());
    const auto L = static_cast<std::int64_t>(k * x.left.size());
    const auto R = static_cast<std::int64_t>(k * x.right.size());
    const auto lw = static_cast<std::int64_t>(x.middle.size());
    const std::int64_t lo = -L - 2 * r;  // first materialized cell
    const std::int64_t hi = lw + R + 2 * r;
    const std::int64_t free_lo = -L;
    const std::int64_t free_hi = lw + R;
    std::vector<Bit> y(static_cast<std::size_t>(hi - lo));
    auto cell = [&](std::int64_t i) -> Bit& { return y[static_cast<std::size_t>(i - lo)]; };
    for (std::int64_t i = lo; i < free_lo; ++i)
        cell(i) = periodic_at(U, i);
    for (std::int64_t i = free_hi; i < hi; ++i)
        cell(i) = periodic_at(V, i - lw);
    auto check_output = [&](std::int64_t j) {
        return rule_out(f, y, static_cast<std::size_t>(j - r - lo)) == x.at(j);
    };
    auto dfs = [&](auto&& self, std::int64_t i) -> bool {
        if (i == free_hi) {
            for (std::int64_t j = free_hi - r; j < hi - r; ++j)
                if (j >= lo + r && !check_output(j))
                    return false;
            return true;
        }
        for (Bit b = 0; b < 2; ++b) {
            cell(i) = b;
            const std::int64_t j = i - r;  // output whose window just completed
            if (j >= lo + r && !check_output(j))
                continue;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    // outputs left of the free zone whose windows are already complete
    for (std::int64_t j = lo + r; j < free_lo - r; ++j)
        if (!check_output(j))
            return false;
    return dfs(dfs, free_lo);
}

inline bool asymptotic_preimage_brute_upto(const LocalRule& f, const vnreg::EventuallyPeriodicPoint& x, const Word& U,
                                           const Word& V, std::size_t kmax) {
    for (std::size_t k = 0; k <= kmax; ++k)
        if (asymptotic_preimage_brute(f, x, U, V, k))
            return true;
    return false;
}

inline std::string data_dir() { return VNREG_DATA_DIR; }

} // namespace oracle

#endif
