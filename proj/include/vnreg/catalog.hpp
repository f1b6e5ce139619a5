#ifndef VNREG_CATALOG_HPP
#define VNREG_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "local_rule.hpp"

namespace vnreg {

enum class ExpectedVerdict { Regular, NonRegular };

inline const char* to_string(ExpectedVerdict v) { return v == ExpectedVerdict::Regular ? "Regular" : "NonRegular"; }

struct KnownInverse {
    unsigned radius;
    std::string hex;
    std::string figure;  // name of the shipped pattern program

    LocalRule rule() const { return from_hex(radius, hex); }
};

enum class ImageKind { FullShift, Sft, ProperSofic };

inline const char* to_string(ImageKind k) {
    switch (k) {
    case ImageKind::FullShift:
        return "full shift";
    case ImageKind::Sft:
        return "SFT";
    case ImageKind::ProperSofic:
        return "proper sofic";
    }
    return "?";
}

struct CatalogEntry {
    int eca_number;
    ExpectedVerdict expected_verdict;
    std::optional<KnownInverse> known_inverse;
    std::optional<std::vector<std::string>> expected_forbidden_words;
    ImageKind expected_image;
    bool image_claim_unverified = false;  // claim never double-checked at the source
    std::string expected_certificate;     // certificate kind expected from classify, if non-regular
    std::string notes;

    LocalRule rule() const { return from_eca_number(eca_number); }
};

namespace detail {

inline const char* kEca6InverseHex =
    "00000000000000000000FFF3000000FF0000FFFF000000F00000FF000000FFFF"
    "00000000000000000000FFF30000FFFF0000FFFF0000FFFF0000FFF00000FFFF"
    "00000000000000000000FFF3000000FF0000FFFF000000F00000FF000000FFFF"
    "00000000000000000000FFF30000FFFF0000FFFF000000FF0000FFF30000FFFF"
    "00000000000000000000FFF3000000FF0000FFFF000000F00000FF000000FFFF"
    "00000000000000000000FFF30000FFFF0000FFFF0000FFFF0000FFF00000FFFF"
    "00000000000000000000FFF3000000FF0000FFFF000000F00000FF000000FFFF"
    "00000000000000000000FFF30000FFFF0000FFFF000000F00000FFF30000FFFF";

inline const char* kEca57InverseHex =
    "0000F00F00FFFFFF00E3FEFF0000FFFF0003FC0F0003FFFF00E3F60F0000FFFF"
    "0000F00F000FFFFF00E3FE0F0000FFFF0003FC0F00C3FFFF00E3F60F0000FFFF";

} // namespace detail

/// Golden data: the eleven elementary CA whose regularity was open, plus
/// the XOR rule 102 as the surjective-but-not-injective example.
inline const std::vector<CatalogEntry>& catalog() {
    using V = ExpectedVerdict;
    using I = ImageKind;
    static const std::vector<CatalogEntry> entries{
        {6, V::Regular, KnownInverse{5, detail::kEca6InverseHex, "eca6-inverse"},
         std::vector<std::string>{"111", "100101", "1001001", "11000101", "110001001"}, I::Sft, false, "",
         "no radius-2 inverse (forcing contradiction on 10001); radius 3 and 4 left open"},
        {7, V::Regular, KnownInverse{2, "23232323", "eca7-inverse"}, std::vector<std::string>{"1001"}, I::Sft, false, "",
         "inverse is ECA 35 composed with the shift; unique at radius 2 on image windows"},
        {9, V::NonRegular, std::nullopt,
         std::vector<std::string>{"1011", "10101", "11001", "11000011", "110000101"}, I::Sft, false, "SppFailure",
         "G(0)=1, G(1)=0 is forced and fails on ^0.11 0^"},
        {23, V::Regular, KnownInverse{2, "23FF003B", "eca23-inverse"},
         std::vector<std::string>{"0100010", "01001", "01101", "10010", "10110", "1011101"}, I::Sft, false, "", ""},
        {27, V::NonRegular, std::nullopt, std::nullopt, I::ProperSofic, true, "ImageNotSft",
         "image claimed proper sofic"},
        {28, V::NonRegular, std::nullopt, std::vector<std::string>{"111"}, I::Sft, false, "SppFailure",
         "both fixed points map to 0; ^0.1 0^ has no asymptotic preimage"},
        {33, V::Regular, KnownInverse{2, "0C070F07", "eca33-inverse"},
         std::vector<std::string>{"1011", "1101", "110011"}, I::Sft, false, "", ""},
        {41, V::NonRegular, std::nullopt, std::nullopt, I::ProperSofic, true, "ImageNotSft",
         "image claimed proper sofic"},
        {57, V::Regular, KnownInverse{4, detail::kEca57InverseHex, "eca57-inverse"},
         std::vector<std::string>{"001000", "111000", "111011", "1110101000"}, I::Sft, false, "",
         "a radius-3 forcing contradiction was reported but not trusted"},
        {58, V::NonRegular, std::nullopt, std::nullopt, I::ProperSofic, true, "ImageNotSft",
         "image claimed proper sofic; both choices of G(0) fail at p=1"},
        {77, V::Regular, KnownInverse{2, "107331F7", "eca77-inverse"},
         std::vector<std::string>{"00011", "00111", "11000", "11100", "0001000", "1110111"}, I::Sft, false, "",
         "figure caption states radius 5; the number has 32 bits, i.e. radius 2"},
        {102, V::NonRegular, std::nullopt, std::vector<std::string>{}, I::FullShift, false, "SurjectiveNotInjective",
         "XOR of neighbours: surjective, not injective"},
    };
    return entries;
}

inline const CatalogEntry& catalog_entry(int eca) {
    for (const auto& e : catalog())
        if (e.eca_number == eca)
            return e;
    throw std::out_of_range("no catalog entry for ECA " + std::to_string(eca));
}

} // namespace vnreg

#endif
