#pragma once

#include <vector>

#include "gamma3/catalog.hpp"
#include "gamma3/geometry.hpp"

namespace gamma3 {

/// Weak cross-section for the D x Z action on frequencies: the open sector
/// (theta1, theta2) intersected with the annulus 1 <= |omega| < 3. The
/// sector bounds come from the group catalog (cyclic: width 2 pi / k;
/// dihedral: width pi / k with bounds on mirror rays).
struct CrossSection {
    const GroupData* group = nullptr;
    double theta1 = 0.0;
    double theta2 = kTwoPi;

    static constexpr double kRadialLo = 1.0;
    static constexpr double kRadialHi = 3.0;
};

CrossSection build_cross_section(const GroupData& gd);

/// Strict membership in X (angles at least `angle_tol` from the sector
/// boundary).
bool cross_section_contains(const CrossSection& cs, Vec2 omega, double angle_tol = 0.0);

enum class CanonKind { Interior, Boundary, Zero };

/// Witness omega = 3^ell * L * omega_prime with omega_prime in X.
struct CanonicalForm {
    Vec2 omega_prime;
    int point = 0;
    int ell = 0;
};

struct CanonResult {
    CanonKind kind = CanonKind::Zero;
    CanonicalForm form;  // meaningful only when kind == Interior
};

/// Canonicalizes a frequency into the cross-section. Angles within 1e-9 of
/// a sector-boundary ray classify as Boundary (measure-zero orbits excluded
/// from the weak cross-section); the zero vector classifies as Zero.
CanonResult canonicalize(const CrossSection& cs, Vec2 omega);

/// Stability subgroup {L : L omega = omega}, tolerance 1e-9.
std::vector<int> stabilizer(const GroupData& gd, Vec2 omega);

/// True iff the stabilizer is trivial (the induced representation at omega
/// is irreducible).
bool irreducible(const GroupData& gd, Vec2 omega);

/// True iff the two frequencies lie in the same D x Z orbit: canonical
/// forms agree, or both are boundary frequencies on the same ray orbit.
bool same_orbit(const GroupData& gd, Vec2 omega1, Vec2 omega2);

}  // namespace gamma3
