#pragma once

#include <string>
#include <string_view>

#include "gamma3/group_core.hpp"
#include "gamma3/induced.hpp"

namespace gamma3 {

/// Parses `([<q> u + <q> v (+ 1/2 z)?, <L>], <int>)`. Whitespace-insensitive.
/// Throws ParseError (with position) on grammar violations and
/// InvalidElement when the element does not belong to the group (unknown
/// point name, z term in a symmorphic group, coordinates outside the group).
WaveletElement parse_element(const GroupData& gd, std::string_view text);

/// Canonical text form; re-parses to an equal element.
std::string print_element(const GroupData& gd, const WaveletElement& g);

/// Parses `(L,m):re,im;(L',m'):re,im;...` into a finitely supported vector.
FinSuppVector parse_finsupp(const GroupData& gd, std::string_view text);

}  // namespace gamma3
