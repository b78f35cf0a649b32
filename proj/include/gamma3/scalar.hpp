#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gamma3 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact scalar of the form num / (2^half * 3^pow3).
///
/// This is the coefficient ring of all translation parts that arise in the
/// wavelet group: triadic rationals together with the half-lattice glide
/// offsets. The denominator carries at most one factor of 2; an operation
/// that would need 1/4 throws instead of silently widening the ring.
///
/// Canonical form: num carries no factor of 3 when pow3 > 0, num is odd
/// when the half flag is set, and zero is (0, 0, false). All operations
/// return canonical values. Values are immutable and safe to share.
class TriadicHalf {
  public:
    TriadicHalf() = default;
    TriadicHalf(long long n) : num_(n) {}
    TriadicHalf(BigInt n) : num_(std::move(n)) {}

    /// Builds num / (2^half * 3^pow3) and normalizes.
    static TriadicHalf make(BigInt num, int pow3, bool half);
    static TriadicHalf one_half() { return make(1, 0, true); }

    const BigInt& num() const { return num_; }
    int pow3() const { return pow3_; }
    bool half() const { return half_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return pow3_ == 0 && !half_; }

    TriadicHalf operator-() const;
    friend TriadicHalf operator+(const TriadicHalf& x, const TriadicHalf& y);
    friend TriadicHalf operator-(const TriadicHalf& x, const TriadicHalf& y);

    /// Product; throws std::domain_error when both factors carry the half
    /// flag (the result would need denominator 4).
    friend TriadicHalf operator*(const TriadicHalf& x, const TriadicHalf& y);

    TriadicHalf times(const BigInt& k) const;

    /// Multiplies by 3^k; k may be negative.
    TriadicHalf scale3(int k) const;

    /// Divides by 2; throws std::domain_error if the half flag is already set.
    TriadicHalf halved() const;

    BigInt floor() const;
    /// Fractional part in [0, 1).
    TriadicHalf mod1() const;

    double to_double() const;

    bool operator==(const TriadicHalf&) const = default;

    /// Text form: `n`, `n/2`, `n/3^b`, `n/(2*3^b)`; `3^1` prints as `3`.
    std::string str() const;

    /// Parses the text form starting at `*pos`, advancing it past the scalar.
    /// Throws ParseError on malformed input.
    static TriadicHalf parse(std::string_view text, std::size_t* pos);
    static TriadicHalf parse(std::string_view text);

  private:
    BigInt num_ = 0;
    int pow3_ = 0;
    bool half_ = false;

    void normalize();
};

/// Exact 2x2 integer matrix, row-major. Point-group actions on lattice
/// coordinates live here; all entries stay small (group elements have
/// determinant +-1).
struct IMat2 {
    std::array<long long, 4> m{1, 0, 0, 1};

    static IMat2 identity() { return {}; }
    long long det() const { return m[0] * m[3] - m[1] * m[2]; }
    IMat2 mul(const IMat2& o) const;
    /// Inverse for det = +-1 matrices (adjugate divided by determinant).
    IMat2 inverse() const;
    bool operator==(const IMat2&) const = default;
};

/// Exact lattice coordinates: a*u + b*v in the lattice basis {u, v}.
struct LatticeVector {
    TriadicHalf a, b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    LatticeVector operator-() const { return {-a, -b}; }
    friend LatticeVector operator+(const LatticeVector& x, const LatticeVector& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend LatticeVector operator-(const LatticeVector& x, const LatticeVector& y) {
        return {x.a - y.a, x.b - y.b};
    }
    LatticeVector scale3(int k) const { return {a.scale3(k), b.scale3(k)}; }
    LatticeVector halved() const { return {a.halved(), b.halved()}; }
    /// Componentwise reduction mod 1 (i.e. mod the lattice).
    LatticeVector mod_lattice() const { return {a.mod1(), b.mod1()}; }
    bool operator==(const LatticeVector&) const = default;
};

/// Integer matrix action on exact lattice coordinates.
LatticeVector apply(const IMat2& m, const LatticeVector& v);

}  // namespace gamma3
