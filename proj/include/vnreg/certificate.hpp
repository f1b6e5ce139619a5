#ifndef VNREG_CERTIFICATE_HPP
#define VNREG_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bits.hpp"
#include "local_rule.hpp"
#include "periodic.hpp"

namespace vnreg {

/// Choice of periodic preimage per canonical periodic point of the image,
/// listed in canonical order. G(u) is aligned exactly: apply_periodic(f, G(u)) == u.
using GAssignment = std::vector<std::pair<Word, Word>>;

struct ImageNotSft {};

struct WeakPpcFailure {
    Word u;
};

// One eliminated branch of the G search: every G extending `assignment`
// fails at ^inf u . w v ^inf.
struct SppLeaf {
    GAssignment assignment;
    Word u;
    Word w;
    Word v;
};

struct SppFailure {
    std::size_t p = 0;
    std::size_t lmax = 0;
    std::vector<SppLeaf> leaves;
};

struct SurjectiveNotInjective {
    EventuallyPeriodicPoint x;
    EventuallyPeriodicPoint y;
};

struct ForcingSource {
    Word u;                // canonical periodic point of the image
    std::size_t position;  // cell of ^inf u ^inf whose preimage bit is forced
    Bit bit;
};

struct ForcingContradiction {
    unsigned radius = 0;
    Word window;
    ForcingSource first;
    ForcingSource second;
};

using Certificate = std::variant<ImageNotSft, WeakPpcFailure, SppFailure, SurjectiveNotInjective, ForcingContradiction>;

inline std::string kind_name(const Certificate& c) {
    struct {
        std::string operator()(const ImageNotSft&) const { return "ImageNotSft"; }
        std::string operator()(const WeakPpcFailure&) const { return "WeakPpcFailure"; }
        std::string operator()(const SppFailure&) const { return "SppFailure"; }
        std::string operator()(const SurjectiveNotInjective&) const { return "SurjectiveNotInjective"; }
        std::string operator()(const ForcingContradiction&) const { return "ForcingContradiction"; }
    } visitor;
    return std::visit(visitor, c);
}

struct Regular {
    LocalRule witness;
};

struct NonRegular {
    Certificate certificate;
};

struct Unknown {
    std::size_t pmax = 0;
    std::size_t lmax = 0;
    unsigned rmax = 0;
    std::string reason;
};

using Verdict = std::variant<Regular, NonRegular, Unknown>;

inline std::string verdict_name(const Verdict& v) {
    if (std::holds_alternative<Regular>(v))
        return "Regular";
    if (std::holds_alternative<NonRegular>(v))
        return "NonRegular";
    return "Unknown";
}

} // namespace vnreg

#endif
