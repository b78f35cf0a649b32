#include "gamma3/wavelet_rep.hpp"

#include <cmath>
#include <stdexcept>

#include "gamma3/errors.hpp"

namespace gamma3 {

namespace {

Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

double quad_form(const Mat2& p, Vec2 q) {
    return p.a * q.x * q.x + (p.b + p.c) * q.x * q.y + p.d * q.y * q.y;
}

Mat2 congruence(const Mat2& l, const Mat2& p) { return l.mul(p).mul(l.transpose()); }

double min_eigenvalue(const Mat2& p) {
    const double tr = p.a + p.d;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * p.det()));
    return (tr - disc) / 2.0;
}

}  // namespace

Complex packet_eval(const GaussianPacket& p, Vec2 y) {
    const Vec2 q = y - p.center;
    const Complex e{-kPi * quad_form(p.quad, q), kTwoPi * dot(p.freq, y)};
    return p.amp * std::exp(e);
}

Complex PacketSum::eval(Vec2 y) const {
    Complex s = 0.0;
    for (const GaussianPacket& t : terms) s += packet_eval(t, y);
    return s;
}

PacketSum apply_D3(const PacketSum& p, int k) {
    const double s = pow3d(k);
    PacketSum out = p;
    for (GaussianPacket& t : out.terms) {
        t.amp *= s;
        t.center = (1.0 / s) * t.center;
        t.quad = t.quad.scaled(s * s);
        t.freq = s * t.freq;
    }
    return out;
}

PacketSum apply_R(const GroupData& gd, const WaveletElement& e, const PacketSum& p) {
    if (e.ell != 0) throw InvalidElement("apply_R expects a level-0 affine element");
    require_valid(gd, e);
    const Vec2 xc = gd.to_cartesian(e.x);
    const Mat2& lc = gd.point(e.point).cart;
    PacketSum out = p;
    for (GaussianPacket& t : out.terms) {
        t.amp *= cis(-kTwoPi * dot(t.freq, xc));
        t.center = lc * (xc + t.center);
        t.quad = congruence(lc, t.quad);
        t.freq = lc * t.freq;
    }
    return out;
}

PacketSum apply_V(const GroupData& gd, const WaveletElement& g, const PacketSum& p) {
    require_valid(gd, g);
    return apply_R(gd, WaveletElement{g.x, g.point, 0}, apply_D3(p, g.ell));
}

PacketSum fourier(const PacketSum& p) {
    PacketSum out = p;
    for (GaussianPacket& t : out.terms) {
        const double det = t.quad.det();
        const Complex amp =
            t.amp / std::sqrt(det) * cis(kTwoPi * dot(t.center, t.freq));
        const Vec2 c = t.freq, f = -t.center;
        t.quad = t.quad.inverse();
        t.amp = amp;
        t.center = c;
        t.freq = f;
    }
    return out;
}

PacketSum fourier_inverse(const PacketSum& p) {
    PacketSum out = p;
    for (GaussianPacket& t : out.terms) {
        const double det = t.quad.det();
        const Complex amp =
            t.amp / std::sqrt(det) * cis(kTwoPi * dot(t.center, t.freq));
        const Vec2 c = -t.freq, f = t.center;
        t.quad = t.quad.inverse();
        t.amp = amp;
        t.center = c;
        t.freq = f;
    }
    return out;
}

PacketSum apply_Vhat(const GroupData& gd, const WaveletElement& g, const PacketSum& p) {
    require_valid(gd, g);
    const Vec2 xc = gd.to_cartesian(g.x);
    const Mat2& lc = gd.point(g.point).cart;
    const double s = pow3d(-g.ell);
    PacketSum out = p;
    for (GaussianPacket& t : out.terms) {
        t.amp *= s;
        t.center = (1.0 / s) * (lc * t.center);
        t.quad = congruence(lc, t.quad).scaled(s * s);
        t.freq = s * (lc * t.freq) - lc * xc;
    }
    return out;
}

Complex inner_product(const PacketSum& p, const PacketSum& q) {
    Complex total = 0.0;
    for (const GaussianPacket& s : p.terms) {
        for (const GaussianPacket& t : q.terms) {
            const Mat2 qq{s.quad.a + t.quad.a, s.quad.b + t.quad.b,
                          s.quad.c + t.quad.c, s.quad.d + t.quad.d};
            const Vec2 rhs{s.quad.a * s.center.x + s.quad.b * s.center.y +
                               t.quad.a * t.center.x + t.quad.b * t.center.y,
                           s.quad.c * s.center.x + s.quad.d * s.center.y +
                               t.quad.c * t.center.x + t.quad.d * t.center.y};
            const Vec2 mu = qq.inverse() * rhs;
            const double cst = quad_form(s.quad, s.center) + quad_form(t.quad, t.center) -
                               quad_form(qq, mu);
            const Vec2 beta = s.freq - t.freq;
            const double mag = std::exp(-kPi * (cst + quad_form(qq.inverse(), beta))) /
                               std::sqrt(qq.det());
            total += s.amp * std::conj(t.amp) * mag * cis(kTwoPi * dot(beta, mu));
        }
    }
    return total;
}

double norm_l2(const PacketSum& p) {
    return std::sqrt(std::max(0.0, inner_product(p, p).real()));
}

Complex rho_eval(const GroupData& gd, const CrossSection& cs, const PacketSum& phi,
                 Vec2 omega, int M, int j) {
    if (!cross_section_contains(cs, omega))
        throw OmegaOutsideX("rho evaluated outside the cross-section");
    const Vec2 y = pow3d(j) * (gd.point(M).cart * omega);
    return pow3d(j) * twist_eval(gd, omega, M) * phi.eval(y);
}

Complex vtilde_branch_phase(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                            int M, int j) {
    return sigma_branch_oracle(gd, omega, g, M, j);
}

Complex FiberFunction::eval(const GroupData& gd, const CrossSection& cs, Vec2 omega,
                            int M, int j) const {
    Complex phase = 1.0;
    int m = M, level = j;
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
        phase *= vtilde_branch_phase(gd, omega, *it, m, level);
        m = gd.mul(gd.inv(it->point), m);
        level -= it->ell;
    }
    return phase * rho_eval(gd, cs, source_, omega, m, level);
}

PacketSum FiberFunction::collapsed(const GroupData& gd) const {
    PacketSum s = source_;
    for (const WaveletElement& g : chain_) s = apply_Vhat(gd, g, s);
    return s;
}

FinSuppVector FiberFunction::sample_fiber(const GroupData& gd, const CrossSection& cs,
                                          Vec2 omega, int jmin, int jmax) const {
    FinSuppVector f;
    for (int m = 0; m < gd.order(); ++m)
        for (int j = jmin; j <= jmax; ++j) f.set(m, j, eval(gd, cs, omega, m, j));
    return f;
}

FiberFunction apply_Vtilde(const GroupData& gd, const CrossSection& cs,
                           const WaveletElement& g, const FiberFunction& F) {
    (void)cs;
    require_valid(gd, g);
    FiberFunction out = F;
    out.chain_.push_back(g);
    return out;
}

Complex rho_inverse_eval(const GroupData& gd, const CrossSection& cs,
                         const FiberFunction& F, Vec2 xi) {
    const CanonResult c = canonicalize(cs, xi);
    if (c.kind != CanonKind::Interior) return 0.0;
    const auto& [wp, mp, k] = c.form;
    return pow3d(-k) * twist_eval(gd, -wp, mp) * F.eval(gd, cs, wp, mp, k);
}

LevelWindow packet_levels(const PacketSum& phi, double tail) {
    double total_amp = 0.0;
    double max_center = 0.0;
    double lambda = 1e300;
    for (const GaussianPacket& t : phi.terms) {
        total_amp += std::abs(t.amp);
        max_center = std::max(max_center, norm(t.center));
        lambda = std::min(lambda, min_eigenvalue(t.quad));
    }
    if (total_amp == 0.0) return {0, 0};

    LevelWindow w;
    // Downward the 3^j prefactor alone kills the value.
    w.lo = -1;
    while (pow3d(w.lo) * total_amp > tail && w.lo > -120) --w.lo;
    // Upward the Gaussian tail does: evaluation points have norm >= 3^j.
    w.hi = 1;
    for (int j = 1; j < 80; ++j) {
        const double d = std::max(0.0, pow3d(j) - max_center);
        if (pow3d(j) * total_amp * std::exp(-kPi * lambda * d * d) > tail) w.hi = j + 1;
    }
    return w;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>* nodes, std::vector<double>* weights) {
    nodes->resize(n);
    weights->resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        (*nodes)[i] = -x;
        (*nodes)[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        (*weights)[i] = w;
        (*weights)[n - 1 - i] = w;
    }
}

}  // namespace

double rho_norm_quadrature(const GroupData& gd, const CrossSection& cs,
                           const PacketSum& phi, const QuadratureSpec& spec) {
    std::vector<double> xs, ws;
    gauss_legendre(spec.n_radial, &xs, &ws);

    const LevelWindow lw = packet_levels(phi);
    const double dtheta = (cs.theta2 - cs.theta1) / spec.n_angular;

    double total = 0.0;
    for (int ir = 0; ir < spec.n_radial; ++ir) {
        const double r = 2.0 + xs[ir];  // map [-1,1] -> [1,3]
        const double wr = ws[ir];
        for (int ia = 0; ia < spec.n_angular; ++ia) {
            const double th = cs.theta1 + (ia + 0.5) * dtheta;
            const Vec2 omega{r * std::cos(th), r * std::sin(th)};
            double val = 0.0;
            for (int m = 0; m < gd.order(); ++m) {
                const Vec2 mo = gd.point(m).cart * omega;
                for (int j = lw.lo - 1; j <= lw.hi + 1; ++j)
                    val += pow3d(2 * j) * std::norm(phi.eval(pow3d(j) * mo));
            }
            total += wr * dtheta * r * val;
        }
    }
    return std::sqrt(total);
}

Vec2 random_in_cross_section(const CrossSection& cs, Rng& rng) {
    const double margin = 1e-6 * (cs.theta2 - cs.theta1);
    const double th = rng.uniform(cs.theta1 + margin, cs.theta2 - margin);
    const double r = rng.uniform(1.0 + 1e-9, 3.0 - 1e-9);
    return {r * std::cos(th), r * std::sin(th)};
}

IntertwineReport verify_intertwining(const GroupData& gd, const CrossSection& cs,
                                     const WaveletElement& g, const PacketSum& phi,
                                     int n_fibers, Rng& rng) {
    require_valid(gd, g);
    const PacketSum vhat_phi = apply_Vhat(gd, g, phi);
    const FiberFunction F(phi);

    const LevelWindow lw = packet_levels(phi);
    constexpr int kJSpan = 2;
    const int pad = kJSpan + std::abs(g.ell) + 1;
    const int jmin = std::min(lw.lo, -pad) - 1;
    const int jmax = std::max(lw.hi, pad) + 1;

    IntertwineReport rep;
    for (int s = 0; s < n_fibers; ++s) {
        const Vec2 omega = random_in_cross_section(cs, rng);
        const FinSuppVector fiber = F.sample_fiber(gd, cs, omega, jmin, jmax);
        const FinSuppVector sf = sigma_apply(gd, omega, g, fiber);
        for (int m = 0; m < gd.order(); ++m) {
            for (int j = -kJSpan; j <= kJSpan; ++j) {
                const Complex left = rho_eval(gd, cs, vhat_phi, omega, m, j);
                const Complex right = sf.at(m, j);
                const double resid = std::abs(left - right);
                const int branch = gd.in_d0(g.point) ? 0 : (gd.in_d0(m) ? 1 : 2);
                rep.cases += 1;
                rep.max_residual = std::max(rep.max_residual, resid);
                rep.branch_max[branch] = std::max(rep.branch_max[branch], resid);
                rep.branch_cases[branch] += 1;
            }
        }
    }
    return rep;
}

}  // namespace gamma3
