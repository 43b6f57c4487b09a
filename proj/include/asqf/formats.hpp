#ifndef ASQF_FORMATS_HPP
#define ASQF_FORMATS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asqf/gf.hpp"
#include "asqf/linpoly.hpp"

namespace asqf {

/// One-line field description: `p=3 s=1 n=4 base= top=1,0,1,0,1`.
/// p and n are required, s defaults to 1, and an empty or missing
/// base/top means the modulus is auto-selected.
struct FieldSpec {
    uint32_t p = 0;
    uint32_t s = 1;
    uint32_t n = 0;
    std::optional<std::vector<uint16_t>> base;
    std::optional<std::vector<uint16_t>> top;
};

FieldSpec parse_field_spec(const std::string& text);

Ctx field_from_spec(const FieldSpec& spec, uint64_t budget = 200000);

/// Canonical spec line for a constructed tower, with the moduli that were
/// actually used spelled out, so outputs identify the model exactly.
std::string field_spec_text(const FieldCtx& K);

/// Coefficient list low-to-high, outer brackets optional. Each entry is a
/// bare F_q value or a parenthesized coordinate tuple over F_q, e.g.
/// `[(0,1),(1,0),0,0]` at n = 4. Lists shorter than n pad with zeros.
LinPoly parse_linpoly(const Ctx& K, const std::string& text);

std::string linpoly_text(const LinPoly& L);

} // namespace asqf

#endif
