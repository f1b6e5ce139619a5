#ifndef VNREG_LOCAL_RULE_HPP
#define VNREG_LOCAL_RULE_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bits.hpp"

namespace vnreg {

// Largest radius whose table we are willing to materialize (2^27 entries).
inline constexpr unsigned kMaxTableRadius = 13;

/// A binary cellular automaton given by its local rule.
///
/// The table has 2^(2r+1) entries. Entry k is the output on the neighborhood
/// whose base-2 value is k, reading the leftmost cell as the most significant
/// bit. For radius 1 the table read as an integer is the Wolfram number.
class LocalRule {
public:
    LocalRule() : LocalRule(0) {}

    explicit LocalRule(unsigned radius) : radius_(radius) {
        if (radius > kMaxTableRadius)
            throw std::invalid_argument("radius " + std::to_string(radius) + " exceeds table limit");
        table_ = BitTable(std::size_t{1} << window_size());
    }

    LocalRule(unsigned radius, BitTable table) : radius_(radius), table_(std::move(table)) {
        if (table_.size() != (std::size_t{1} << window_size()))
            throw std::invalid_argument("table length must be 2^(2r+1)");
    }

    unsigned radius() const noexcept { return radius_; }
    unsigned window_size() const noexcept { return 2 * radius_ + 1; }
    std::uint64_t table_size() const noexcept { return std::uint64_t{1} << window_size(); }

    bool operator()(std::uint64_t window) const noexcept { return table_.get(window); }
    Bit at(std::uint64_t window) const noexcept { return static_cast<Bit>(table_.get(window)); }
    void set(std::uint64_t window, bool v) noexcept { table_.set(window, v); }

    const BitTable& table() const noexcept { return table_; }

    // Literal table equality (same radius, same bits). Use `equals` for CA equality.
    friend bool operator==(const LocalRule&, const LocalRule&) = default;

private:
    unsigned radius_;
    BitTable table_;
};

inline LocalRule from_eca_number(int n) {
    if (n < 0 || n > 255)
        throw std::out_of_range("ECA number must be in [0,255], got " + std::to_string(n));
    LocalRule f(1);
    for (unsigned k = 0; k < 8; ++k)
        f.set(k, (n >> k) & 1);
    return f;
}

inline LocalRule identity_rule(unsigned radius = 0) {
    LocalRule f(radius);
    for (std::uint64_t k = 0; k < f.table_size(); ++k)
        f.set(k, (k >> radius) & 1U);
    return f;
}

// Table as an integer; radius 1 only.
inline int eca_number(const LocalRule& f) {
    if (f.radius() != 1)
        throw std::invalid_argument("ECA number requires radius 1");
    int n = 0;
    for (unsigned k = 0; k < 8; ++k)
        n |= static_cast<int>(f.at(k)) << k;
    return n;
}

inline LocalRule from_hex(unsigned radius, std::string_view hex) {
    if (radius < 1)
        throw std::invalid_argument("hex form requires radius >= 1");
    if (radius > kMaxTableRadius)
        throw std::invalid_argument("radius too large");
    const std::size_t digits = (std::size_t{1} << (2 * radius + 1)) / 4;
    if (hex.size() != digits)
        throw std::invalid_argument("radius " + std::to_string(radius) + " needs " + std::to_string(digits) +
                                    " hex digits, got " + std::to_string(hex.size()));
    LocalRule f(radius);
    for (std::size_t i = 0; i < digits; ++i) {
        const char c = hex[i];
        unsigned v;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'A' && c <= 'F')
            v = static_cast<unsigned>(c - 'A' + 10);
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a' + 10);
        else
            throw std::invalid_argument(std::string("non-hex character '") + c + "'");
        // digit i (MSB first) holds bits 4*(digits-1-i) .. +3
        const std::uint64_t base = 4 * (digits - 1 - i);
        for (unsigned b = 0; b < 4; ++b)
            f.set(base + b, (v >> b) & 1U);
    }
    return f;
}

inline std::string to_hex(const LocalRule& f) {
    if (f.radius() < 1)
        throw std::invalid_argument("hex form requires radius >= 1");
    static constexpr char kDigits[] = "0123456789ABCDEF";
    const std::size_t digits = f.table_size() / 4;
    std::string s(digits, '0');
    for (std::size_t i = 0; i < digits; ++i) {
        const std::uint64_t base = 4 * (digits - 1 - i);
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b)
            v |= static_cast<unsigned>(f.at(base + b)) << b;
        s[i] = kDigits[v];
    }
    return s;
}

// Rule spec strings: "eca:<n>", "hex:r<r>:<digits>", and "bin:r<r>:<bits>"
// (bits MSB first; the only form that covers radius 0).
inline LocalRule parse_rule_spec(std::string_view spec) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad rule spec '" + std::string(spec) + "': " + why);
    };
    auto parse_uint = [&](std::string_view s) {
        unsigned v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
            fail("expected an integer, got '" + std::string(s) + "'");
        return v;
    };
    if (spec.starts_with("eca:")) {
        const unsigned n = parse_uint(spec.substr(4));
        if (n > 255)
            fail("ECA number must be in [0,255]");
        return from_eca_number(static_cast<int>(n));
    }
    const bool hex = spec.starts_with("hex:r");
    const bool bin = spec.starts_with("bin:r");
    if (!hex && !bin)
        fail("expected eca:<n>, hex:r<r>:<digits> or bin:r<r>:<bits>");
    const auto rest = spec.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
        fail("missing ':' after radius");
    const unsigned r = parse_uint(rest.substr(0, colon));
    const auto body = rest.substr(colon + 1);
    if (hex)
        return from_hex(r, body);
    if (r > kMaxTableRadius)
        fail("radius too large");
    LocalRule f(r);
    if (body.size() != f.table_size())
        fail("need " + std::to_string(f.table_size()) + " bits");
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] != '0' && body[i] != '1')
            fail("non-binary digit");
        f.set(f.table_size() - 1 - i, body[i] == '1');
    }
    return f;
}

inline std::string to_rule_spec(const LocalRule& f) {
    if (f.radius() == 1)
        return "eca:" + std::to_string(eca_number(f));
    if (f.radius() >= 1)
        return "hex:r" + std::to_string(f.radius()) + ":" + to_hex(f);
    std::string bits;
    for (std::uint64_t k = f.table_size(); k-- > 0;)
        bits.push_back(f(k) ? '1' : '0');
    return "bin:r0:" + bits;
}

/// Applies f to a finite word; output position j reads w[j .. j+2r].
inline Word apply_word(const LocalRule& f, const Word& w) {
    const std::size_t n = f.window_size();
    if (w.size() < n)
        throw std::invalid_argument("word of length " + std::to_string(w.size()) + " shorter than window " +
                                    std::to_string(n));
    const std::uint64_t mask = low_mask(n);
    Word out;
    std::uint64_t window = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        window = ((window << 1) | w[i]) & mask;
        if (i + 1 >= n)
            out.push_back(f.at(window));
    }
    return out;
}

/// Applies f to the periodic point ^inf u ^inf. Output i reads u[i-r .. i+r] cyclically.
inline Word apply_periodic(const LocalRule& f, const Word& u) {
    if (u.empty())
        throw std::invalid_argument("periodic word must be nonempty");
    const std::size_t n = u.size();
    const std::size_t r = f.radius();
    Word out;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t window = 0;
        for (std::size_t t = 0; t < 2 * r + 1; ++t)
            window = (window << 1) | u[(i + n * (r + 1) - r + t) % n];
        out.push_back(f.at(window));
    }
    return out;
}

/// Rule of f ∘ g ∘ σ^shift, where σ(x)_i = x_{i+1}. Radius r_f + r_g + |shift|.
inline LocalRule compose(const LocalRule& f, const LocalRule& g, int shift = 0) {
    const unsigned rf = f.radius();
    const unsigned rg = g.radius();
    const unsigned big_r = rf + rg + static_cast<unsigned>(std::abs(shift));
    LocalRule h(big_r);
    const unsigned width = 2 * big_r + 1;
    const unsigned gw = 2 * rg + 1;
    const std::uint64_t gmask = low_mask(gw);
    // g at offset t in [-rf, rf] reads cells c0(t) .. c0(t)+2rg of the big window
    const int first_cell = static_cast<int>(big_r) + shift - static_cast<int>(rg) - static_cast<int>(rf);
    const unsigned fw = 2 * rf + 1;
    const std::uint64_t count = h.table_size();
    for (std::uint64_t w = 0; w < count; ++w) {
        std::uint64_t inner = 0;
        for (unsigned t = 0; t < fw; ++t) {
            const unsigned last_cell = static_cast<unsigned>(first_cell) + t + gw - 1;
            const std::uint64_t gwin = (w >> (width - 1 - last_cell)) & gmask;
            inner = (inner << 1) | g.at(gwin);
        }
        h.set(w, f(inner));
    }
    return h;
}

/// Same CA with a larger radius; the added cells are ignored.
inline LocalRule pad_radius(const LocalRule& f, unsigned radius) {
    if (radius < f.radius())
        throw std::invalid_argument("cannot pad radius " + std::to_string(f.radius()) + " down to " +
                                    std::to_string(radius));
    if (radius == f.radius())
        return f;
    LocalRule h(radius);
    const unsigned drop = radius - f.radius();
    const std::uint64_t mask = low_mask(f.window_size());
    for (std::uint64_t w = 0; w < h.table_size(); ++w)
        h.set(w, f((w >> drop) & mask));
    return h;
}

/// CA equality: equal as functions on the full shift.
inline bool equals(const LocalRule& f, const LocalRule& g) {
    if (f.radius() == g.radius())
        return f.table() == g.table();
    const LocalRule& small = f.radius() < g.radius() ? f : g;
    const LocalRule& big = f.radius() < g.radius() ? g : f;
    const unsigned drop = big.radius() - small.radius();
    const std::uint64_t mask = low_mask(small.window_size());
    for (std::uint64_t w = 0; w < big.table_size(); ++w)
        if (big(w) != small((w >> drop) & mask))
            return false;
    return true;
}

} // namespace vnreg

#endif
