#include "gamma3/sampling.hpp"

namespace gamma3 {

WaveletElement random_element(const GroupData& gd, Rng& rng, int coeff_range,
                              int max_depth, int ell_range) {
    const int L = static_cast<int>(rng.range(0, gd.order() - 1));
    const int depth = static_cast<int>(rng.range(0, max_depth));
    const LatticeVector jk{TriadicHalf(rng.range(-coeff_range, coeff_range)),
                           TriadicHalf(rng.range(-coeff_range, coeff_range))};
    const LatticeVector x = gd.offset(L) + jk.scale3(-depth);
    return {x, L, static_cast<int>(rng.range(-ell_range, ell_range))};
}

WaveletElement random_translation(const GroupData& gd, Rng& rng, int coeff_range,
                                  int max_depth) {
    (void)gd;
    const int depth = static_cast<int>(rng.range(0, max_depth));
    const LatticeVector jk{TriadicHalf(rng.range(-coeff_range, coeff_range)),
                           TriadicHalf(rng.range(-coeff_range, coeff_range))};
    return {jk.scale3(-depth), 0, 0};
}

FinSuppVector random_finsupp(const GroupData& gd, Rng& rng, int terms, int m_range) {
    FinSuppVector f;
    for (int i = 0; i < terms; ++i) {
        const int point = static_cast<int>(rng.range(0, gd.order() - 1));
        const int m = static_cast<int>(rng.range(-m_range, m_range));
        f.add(point, m, rng.complex_in_disc(1.0));
    }
    if (f.empty()) f.set(0, 0, 1.0);
    return f;
}

GaussianPacket random_packet(Rng& rng) {
    GaussianPacket p;
    p.amp = rng.uniform(0.5, 1.5) * rng.unit();
    p.center = random_vec(rng, -1.2, 1.2);
    const double t = rng.uniform(0.0, kTwoPi);
    const double l1 = rng.uniform(0.6, 2.0), l2 = rng.uniform(0.6, 2.0);
    const Mat2 rot{std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    const Mat2 diag{l1, 0, 0, l2};
    p.quad = rot.mul(diag).mul(rot.transpose());
    p.freq = random_vec(rng, -1.5, 1.5);
    return p;
}

PacketSum random_packet_sum(Rng& rng, int terms) {
    PacketSum p;
    for (int i = 0; i < terms; ++i) p.terms.push_back(random_packet(rng));
    return p;
}

Vec2 random_vec(Rng& rng, double lo, double hi) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

}  // namespace gamma3
