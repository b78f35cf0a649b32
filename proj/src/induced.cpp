#include "gamma3/induced.hpp"

#include "gamma3/errors.hpp"

namespace gamma3 {

Complex sigma_phase(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                    int M, int m) {
    const int src_point = gd.mul(gd.inv(g.point), M);
    const int src_m = m - g.ell;
    const WaveletElement word = multiply(
        gd, multiply(gd, invert(gd, section_gamma(gd, M, m)), g),
        section_gamma(gd, src_point, src_m));
    return char_eval(gd, omega, word);
}

FinSuppVector sigma_apply(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                          const FinSuppVector& f) {
    require_valid(gd, g);
    FinSuppVector out;
    for (const auto& [key, amp] : f.entries()) {
        const auto [m0_point, m0] = key;
        const int M = gd.mul(g.point, m0_point);
        const int m = m0 + g.ell;
        out.set(M, m, sigma_phase(gd, omega, g, M, m) * amp);
    }
    return out;
}

Complex sigma_branch_oracle(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                            int M, int m) {
    const Vec2 xc = gd.to_cartesian(g.x);
    const int lm = gd.mul(gd.inv(g.point), M);
    const Vec2 w = dual_action(gd, lm, m, omega);
    const double t = -kTwoPi * dot(xc, w);
    Complex phase{std::cos(t), std::sin(t)};
    if (gd.in_d0(g.point)) return phase;
    const Vec2 zc = gd.to_cartesian(*gd.glide_z());
    const double zt = kPi * dot(zc, omega) * (gd.in_d0(M) ? -1.0 : 1.0);
    return Complex{std::cos(zt), std::sin(zt)} * phase;
}

Complex covariant_extend(const GroupData& gd, Vec2 omega, const FinSuppVector& f,
                         const WaveletElement& g) {
    require_valid(gd, g);
    const auto [L, ell] = quotient_q(g);
    const WaveletElement n =
        multiply(gd, invert(gd, section_gamma(gd, L, ell)), g);
    return std::conj(char_eval(gd, omega, n)) * f.at(L, ell);
}

FinSuppVector u_omega_apply(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                            const FinSuppVector& f) {
    require_valid(gd, g);
    const WaveletElement g_inv = invert(gd, g);
    FinSuppVector out;
    for (const auto& [key, amp] : f.entries()) {
        (void)amp;
        const int M = gd.mul(g.point, key.first);
        const int m = key.second + g.ell;
        const Complex v =
            covariant_extend(gd, omega, f, multiply(gd, g_inv, section_gamma(gd, M, m)));
        out.set(M, m, v);
    }
    return out;
}

Complex twist_eval(const GroupData& gd, Vec2 omega, int L) {
    if (gd.symmorphic()) {
        (void)gd.point(L);
        return 1.0;
    }
    const Vec2 zc = gd.to_cartesian(*gd.glide_z());
    const double t = kPi * dot(zc, omega) / 2.0 * (gd.in_d0(L) ? -1.0 : 1.0);
    return {std::cos(t), std::sin(t)};
}

}  // namespace gamma3
