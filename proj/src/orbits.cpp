#include "gamma3/orbits.hpp"

#include <cmath>
#include <stdexcept>

namespace gamma3 {

namespace {

constexpr double kBoundaryTol = 1e-9;
const double kLog3 = std::log(3.0);

// Level with 1 <= 3^-l r < 3. floor(log3 r) first, then an exactness fix-up
// because log is inexact near powers of 3.
int radial_level(double r) {
    int ell = static_cast<int>(std::floor(std::log(r) / kLog3));
    while (r * pow3d(-ell) < 1.0) --ell;
    while (r * pow3d(-ell) >= 3.0) ++ell;
    return ell;
}

}  // namespace

CrossSection build_cross_section(const GroupData& gd) {
    return {&gd, gd.theta1(), gd.theta2()};
}

bool cross_section_contains(const CrossSection& cs, Vec2 omega, double angle_tol) {
    const double r = norm(omega);
    if (!(r >= CrossSection::kRadialLo * (1.0 - 1e-12) && r < CrossSection::kRadialHi))
        return false;
    const double a = wrap_angle(std::atan2(omega.y, omega.x), cs.theta1);
    return a > cs.theta1 + angle_tol && a < cs.theta2 - angle_tol;
}

CanonResult canonicalize(const CrossSection& cs, Vec2 omega) {
    // Denormal norms would overflow 3^|l| in the radial fix-up; they carry
    // no usable direction information either.
    if (norm(omega) < 1e-300) return {CanonKind::Zero, {}};
    const GroupData& gd = *cs.group;

    const int ell = radial_level(norm(omega));
    const Vec2 w0 = pow3d(-ell) * omega;

    bool near_boundary = false;
    for (int L = 0; L < gd.order(); ++L) {
        const Vec2 wp = gd.point(gd.inv(L)).cart * w0;
        const double a = wrap_angle(std::atan2(wp.y, wp.x), cs.theta1);
        if (circle_dist(a, cs.theta1) <= kBoundaryTol ||
            circle_dist(a, cs.theta2) <= kBoundaryTol) {
            near_boundary = true;
            continue;
        }
        if (a > cs.theta1 && a < cs.theta2)
            return {CanonKind::Interior, {wp, L, ell}};
    }
    if (near_boundary) return {CanonKind::Boundary, {}};
    throw std::logic_error("sector copies failed to cover the frequency plane");
}

std::vector<int> stabilizer(const GroupData& gd, Vec2 omega) {
    const double tol = 1e-9 * std::max(1.0, norm(omega));
    std::vector<int> fix;
    for (int L = 0; L < gd.order(); ++L) {
        const Vec2 d = gd.point(L).cart * omega - omega;
        if (std::fabs(d.x) <= tol && std::fabs(d.y) <= tol) fix.push_back(L);
    }
    return fix;
}

bool irreducible(const GroupData& gd, Vec2 omega) { return stabilizer(gd, omega).size() == 1; }

bool same_orbit(const GroupData& gd, Vec2 omega1, Vec2 omega2) {
    const CrossSection cs = build_cross_section(gd);
    const CanonResult c1 = canonicalize(cs, omega1);
    const CanonResult c2 = canonicalize(cs, omega2);
    if (c1.kind != c2.kind) return false;
    if (c1.kind == CanonKind::Zero) return true;
    if (c1.kind == CanonKind::Interior) {
        const Vec2 d = c1.form.omega_prime - c2.form.omega_prime;
        const double tol = 1e-9 * std::max(1.0, norm(c1.form.omega_prime));
        return std::fabs(d.x) <= tol && std::fabs(d.y) <= tol;
    }
    // Boundary: search the orbit directly; radii in one orbit differ by an
    // exact power of 3.
    const double ratio = norm(omega2) / norm(omega1);
    const int ell = static_cast<int>(std::lround(std::log(ratio) / std::log(3.0)));
    const double tol = 1e-9 * std::max(1.0, norm(omega2));
    for (int L = 0; L < gd.order(); ++L) {
        const Vec2 d = pow3d(ell) * (gd.point(L).cart * omega1) - omega2;
        if (std::fabs(d.x) <= tol && std::fabs(d.y) <= tol) return true;
    }
    return false;
}

}  // namespace gamma3
