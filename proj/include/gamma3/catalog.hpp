#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamma3/geometry.hpp"
#include "gamma3/scalar.hpp"

namespace gamma3 {

enum class LatticeKind { Square, Rectangular, Hexagonal };

std::string_view lattice_name(LatticeKind k);

/// One element of a point group. `mat_lat` acts on lattice coordinates;
/// `cart` is the same transformation in Cartesian coordinates (B mat B^-1),
/// orthogonal by construction.
struct PointElement {
    std::string name;
    IMat2 mat_lat;
    bool is_reflection = false;  // det == -1
    Mat2 cart;
};

/// Full exact description of one wallpaper group in lattice coordinates.
///
/// Point elements are indexed 0..order()-1 with the identity at index 0;
/// multiplication and inversion are table lookups. `offset(i)` is the
/// canonical translation offset t_L of element i, reduced mod the lattice
/// (zero or z/2). Instances are immutable and globally shareable.
class GroupData {
  public:
    const std::string& name() const { return name_; }
    LatticeKind lattice() const { return lattice_; }
    /// Cartesian basis B = [u v] (columns).
    const Mat2& basis() const { return basis_; }
    const Mat2& basis_inv() const { return basis_inv_; }

    int order() const { return static_cast<int>(points_.size()); }
    const PointElement& point(int i) const;
    int mul(int i, int j) const { return mul_[idx(i) * order() + idx(j)]; }
    int inv(int i) const { return inv_[idx(i)]; }
    /// Index of a lattice matrix in the point group, or -1.
    int find(const IMat2& m) const;
    /// Case-insensitive name lookup, or -1.
    int find_name(std::string_view n) const;

    const LatticeVector& offset(int i) const { return offsets_[idx(i)]; }
    bool in_d0(int i) const { return offsets_[idx(i)].is_zero(); }
    std::vector<int> d0() const;
    bool symmorphic() const { return symmorphic_; }
    const std::optional<LatticeVector>& glide_z() const { return z_; }

    /// Open sector bounds used by the orbit cross-section.
    double theta1() const { return theta1_; }
    double theta2() const { return theta2_; }

    Vec2 to_cartesian(const LatticeVector& v) const;

    /// The 17 canonical names, in catalog order.
    static const std::vector<std::string>& names();
    /// Looks up a group by canonical name or synonym (pmg, pgg, p4g, ...).
    /// Throws UnknownGroup.
    static const GroupData& get(std::string_view name);

    /// Builds a rectangular-lattice group with a custom aspect ratio
    /// (v = (0, aspect)). Other groups ignore the parameter.
    static GroupData make(std::string_view name, int rect_aspect);

  private:
    friend class CatalogBuilder;
    GroupData() = default;
    int idx(int i) const;

    std::string name_;
    LatticeKind lattice_ = LatticeKind::Square;
    Mat2 basis_, basis_inv_;
    std::vector<PointElement> points_;
    std::vector<int> mul_, inv_;
    std::vector<LatticeVector> offsets_;
    std::optional<LatticeVector> z_;
    bool symmorphic_ = true;
    double theta1_ = 0.0, theta2_ = kTwoPi;
};

/// True iff the dilation d*id is compatible with the group: d*t_L stays in
/// the coset t_L + lattice for every point element. Throws
/// std::invalid_argument for d < 2.
bool check_compatibility(const GroupData& gd, int d);

/// Membership of the affine element [x, L] in the wallpaper group itself:
/// x lies in t_L + lattice. Throws PointNotInGroup on a bad index.
bool member_gamma(const GroupData& gd, const LatticeVector& x, int L);

/// Least level l >= 0 with 3^l x in t_L + lattice, i.e. the first conjugate
/// 3^-l Gamma 3^l containing [x, L]; nullopt when no level works.
std::optional<int> member_gamma3(const GroupData& gd, const LatticeVector& x, int L);

}  // namespace gamma3
