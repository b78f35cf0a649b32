#include "gamma3/group_core.hpp"

#include <cmath>

#include "gamma3/errors.hpp"

namespace gamma3 {

std::optional<int> element_level(const GroupData& gd, const WaveletElement& g) {
    return member_gamma3(gd, g.x, g.point);
}

bool is_valid(const GroupData& gd, const WaveletElement& g) {
    if (g.point < 0 || g.point >= gd.order()) return false;
    return element_level(gd, g).has_value();
}

void require_valid(const GroupData& gd, const WaveletElement& g) {
    if (!is_valid(gd, g))
        throw InvalidElement("element does not belong to the wavelet group of " + gd.name());
}

WaveletElement multiply(const GroupData& gd, const WaveletElement& g,
                        const WaveletElement& h) {
    const IMat2 m_inv = gd.point(gd.inv(h.point)).mat_lat;
    return {apply(m_inv, g.x) + h.x.scale3(-g.ell), gd.mul(g.point, h.point),
            g.ell + h.ell};
}

WaveletElement invert(const GroupData& gd, const WaveletElement& g) {
    const LatticeVector lx = apply(gd.point(g.point).mat_lat, g.x);
    return {-lx.scale3(g.ell), gd.inv(g.point), -g.ell};
}

std::pair<WaveletElement, WaveletElement> factor(const WaveletElement& g) {
    WaveletElement dil{{}, 0, g.ell};
    WaveletElement flat{g.x.scale3(g.ell), g.point, 0};
    return {dil, flat};
}

bool in_n3(const GroupData& gd, const WaveletElement& g) {
    return g.point == 0 && g.ell == 0 && !g.x.a.half() && !g.x.b.half() &&
           is_valid(gd, g);
}

WaveletElement section_gamma(const GroupData& gd, int L, int ell) {
    return {gd.offset(L).scale3(-ell), L, ell};
}

Complex char_eval(const GroupData& gd, Vec2 omega, const WaveletElement& g) {
    if (!in_n3(gd, g))
        throw NotInN3("character evaluated outside the translation subgroup");
    const Vec2 xc = gd.to_cartesian(g.x);
    const double t = -kTwoPi * dot(xc, omega);
    return {std::cos(t), std::sin(t)};
}

Vec2 dual_action(const GroupData& gd, int L, int ell, Vec2 omega) {
    return pow3d(ell) * (gd.point(L).cart * omega);
}

WaveletElement conjugate(const GroupData& gd, const WaveletElement& a,
                         const WaveletElement& b) {
    return multiply(gd, multiply(gd, a, b), invert(gd, a));
}

}  // namespace gamma3
