#pragma once

#include <vector>

#include "gamma3/group_core.hpp"
#include "gamma3/induced.hpp"
#include "gamma3/orbits.hpp"
#include "gamma3/rng.hpp"

namespace gamma3 {

/// y |-> amp * exp(-pi (y-center)^T quad (y-center) + 2 pi i <freq, y>).
/// quad is symmetric positive definite, so the family is closed under every
/// operator in this module: affine substitutions and the Fourier transform
/// return another packet.
struct GaussianPacket {
    Complex amp{1.0, 0.0};
    Vec2 center{};
    Mat2 quad{};  // identity by default
    Vec2 freq{};
};

Complex packet_eval(const GaussianPacket& p, Vec2 y);

/// Finite formal sum of Gaussian packets; the dense test subspace.
struct PacketSum {
    std::vector<GaussianPacket> terms;

    PacketSum() = default;
    PacketSum(GaussianPacket p) : terms{p} {}
    Complex eval(Vec2 y) const;
};

/// Dilation D_3^k: D_3 g(y) = 3 g(3y).
PacketSum apply_D3(const PacketSum& p, int k);

/// Natural representation R[x,L] g(y) = g(L^-1 y - x); e must have level 0.
PacketSum apply_R(const GroupData& gd, const WaveletElement& e, const PacketSum& p);

/// Wavelet representation V([x,L],l) = R[x,L] D_3^l.
PacketSum apply_V(const GroupData& gd, const WaveletElement& g, const PacketSum& p);

/// Fourier transform with the e^{-2 pi i <x, omega>} convention; closed form
/// on packets.
PacketSum fourier(const PacketSum& p);
PacketSum fourier_inverse(const PacketSum& p);

/// Frequency-side representation
/// Vhat([x,L],l) h(w) = 3^-l e^{-2 pi i <x, L^-1 w>} h(3^-l L^-1 w).
PacketSum apply_Vhat(const GroupData& gd, const WaveletElement& g, const PacketSum& p);

/// Exact L^2 inner product <p, q> = integral p conj(q).
Complex inner_product(const PacketSum& p, const PacketSum& q);
double norm_l2(const PacketSum& p);

/// rho phi (omega, M, j) = 3^j c(omega, M) phi(3^j M omega), for omega in X.
/// Throws OmegaOutsideX.
Complex rho_eval(const GroupData& gd, const CrossSection& cs, const PacketSum& phi,
                 Vec2 omega, int M, int j);

/// The three-branch phase of the conjugated representation on fibers; same
/// closed form as the induced branch oracle with the fiber index in place
/// of the Z coordinate.
Complex vtilde_branch_phase(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                            int M, int j);

/// Element of L^2(X, l^2(D x Z)) realized as a frequency-side packet sum
/// pushed through rho, with a chain of group elements applied through the
/// fiber branch formula on top.
class FiberFunction {
  public:
    explicit FiberFunction(PacketSum source) : source_(std::move(source)) {}

    const PacketSum& source() const { return source_; }
    const std::vector<WaveletElement>& chain() const { return chain_; }

    /// Pointwise value via the branch formula chain over rho(source).
    Complex eval(const GroupData& gd, const CrossSection& cs, Vec2 omega, int M,
                 int j) const;

    /// Folds the chain into the source with the closed-form frequency-side
    /// action: the rho Vhat rho^-1 pipeline, independent of the branch
    /// formula.
    PacketSum collapsed(const GroupData& gd) const;

    /// Samples the fiber at omega into a finitely supported vector over
    /// levels jmin..jmax.
    FinSuppVector sample_fiber(const GroupData& gd, const CrossSection& cs, Vec2 omega,
                               int jmin, int jmax) const;

  private:
    friend FiberFunction apply_Vtilde(const GroupData&, const CrossSection&,
                                      const WaveletElement&, const FiberFunction&);
    PacketSum source_;
    std::vector<WaveletElement> chain_;
};

/// The conjugated representation on fibers (branch-formula form).
FiberFunction apply_Vtilde(const GroupData& gd, const CrossSection& cs,
                           const WaveletElement& g, const FiberFunction& F);

/// Inverse of rho: locates the unique (k, M') with 3^-k M'^-1 xi in X and
/// applies the single surviving summand; boundary and zero frequencies
/// return 0 (measure-zero convention).
Complex rho_inverse_eval(const GroupData& gd, const CrossSection& cs,
                         const FiberFunction& F, Vec2 xi);

/// Smallest level window outside of which |rho phi| <= tail on the annulus
/// 1 <= |omega| < 3 (Gaussian decay upward, the 3^j factor downward).
struct LevelWindow {
    int lo = 0, hi = 0;
};
LevelWindow packet_levels(const PacketSum& phi, double tail = 1e-13);

struct QuadratureSpec {
    int n_radial = 64;   // Gauss-Legendre nodes on [1, 3)
    int n_angular = 64;  // uniform midpoints on (theta1, theta2)
};

/// Quadrature norm of rho phi over X x D x Z (levels from packet decay).
double rho_norm_quadrature(const GroupData& gd, const CrossSection& cs,
                           const PacketSum& phi, const QuadratureSpec& spec = {});

/// Random frequency in the open cross-section, away from the angular
/// boundary by a small margin.
Vec2 random_in_cross_section(const CrossSection& cs, Rng& rng);

struct IntertwineReport {
    long cases = 0;
    double max_residual = 0.0;
    // Branch split: [0] L in D0, [1] L not in D0 & M in D0, [2] neither.
    double branch_max[3] = {0.0, 0.0, 0.0};
    long branch_cases[3] = {0, 0, 0};
};

/// Desk-scale check of the direct-integral decomposition: compares
/// rho(Vhat(g) phi)(omega, M, j) against sigma_omega(g) applied (via
/// induced::sigma_apply) to the sampled fiber rho(phi)(omega, . , .),
/// over random fibers and all (M, |j| <= 2) slots.
IntertwineReport verify_intertwining(const GroupData& gd, const CrossSection& cs,
                                     const WaveletElement& g, const PacketSum& phi,
                                     int n_fibers, Rng& rng);

}  // namespace gamma3
