#pragma once

#include <optional>
#include <utility>

#include "gamma3/catalog.hpp"
#include "gamma3/geometry.hpp"
#include "gamma3/scalar.hpp"

namespace gamma3 {

/// Element ([x, L], ell) of the wavelet group: an affine part with exact
/// lattice coordinates x and point-element index L, plus a dilation level.
/// Elements carry no group reference; every operation takes the GroupData
/// they are interpreted against.
struct WaveletElement {
    LatticeVector x;
    int point = 0;
    int ell = 0;

    bool operator==(const WaveletElement&) const = default;
};

inline WaveletElement identity_element() { return {}; }

/// Least conjugation level at which the affine part lies in the wallpaper
/// group; nullopt when the element is not in the wavelet group at all.
std::optional<int> element_level(const GroupData& gd, const WaveletElement& g);
bool is_valid(const GroupData& gd, const WaveletElement& g);
/// Throws InvalidElement when the element does not belong to gd's group.
void require_valid(const GroupData& gd, const WaveletElement& g);

/// ([x,L],l)([y,M],m) = ([M^-1 x + 3^-l y, LM], l+m), exact.
WaveletElement multiply(const GroupData& gd, const WaveletElement& g,
                        const WaveletElement& h);

/// ([x,L],l)^-1 = ([-3^l L x, L^-1], -l), exact.
WaveletElement invert(const GroupData& gd, const WaveletElement& g);

/// ([x,L],l) = ([0,id],l) ([3^l x, L], 0); returns (dilation part, level-0 part).
std::pair<WaveletElement, WaveletElement> factor(const WaveletElement& g);

/// Quotient onto D x Z: (point index, level).
inline std::pair<int, int> quotient_q(const WaveletElement& g) {
    return {g.point, g.ell};
}

/// Kernel test for the quotient: pure translation at level 0 (and valid).
bool in_n3(const GroupData& gd, const WaveletElement& g);

/// The section D x Z -> group: ([3^-l t_L, L], l); t_L = 0 on D^0.
WaveletElement section_gamma(const GroupData& gd, int L, int ell);

/// Character value exp(-2 pi i <B x, omega>) of a translation element.
/// Throws NotInN3 when g is not a pure translation in the group.
Complex char_eval(const GroupData& gd, Vec2 omega, const WaveletElement& g);

/// Dual action of (L, l) on frequencies: 3^l * L_cart * omega.
Vec2 dual_action(const GroupData& gd, int L, int ell, Vec2 omega);

/// Conjugation a b a^-1.
WaveletElement conjugate(const GroupData& gd, const WaveletElement& a,
                         const WaveletElement& b);

}  // namespace gamma3
