#pragma once

#include "gamma3/group_core.hpp"
#include "gamma3/induced.hpp"
#include "gamma3/rng.hpp"
#include "gamma3/wavelet_rep.hpp"

namespace gamma3 {

/// Random valid element ([x, L], ell): x = t_L + (j, k) / 3^depth with
/// |j|, |k| <= coeff_range. Every element of the wavelet group has this
/// shape, and every such x is valid for L.
WaveletElement random_element(const GroupData& gd, Rng& rng, int coeff_range = 5,
                              int max_depth = 2, int ell_range = 2);

/// Random pure translation of the triadic lattice (an N_3 element).
WaveletElement random_translation(const GroupData& gd, Rng& rng, int coeff_range = 5,
                                  int max_depth = 2);

FinSuppVector random_finsupp(const GroupData& gd, Rng& rng, int terms = 3,
                             int m_range = 3);

GaussianPacket random_packet(Rng& rng);
PacketSum random_packet_sum(Rng& rng, int terms);

Vec2 random_vec(Rng& rng, double lo, double hi);

}  // namespace gamma3
