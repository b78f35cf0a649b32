#pragma once

#include <map>
#include <utility>

#include "gamma3/group_core.hpp"

namespace gamma3 {

/// Finitely supported complex function on D x Z, the carrier of the induced
/// representations. Keys are (point index, integer level); exact zeros are
/// never stored.
class FinSuppVector {
  public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, Complex>;

    FinSuppVector() = default;
    static FinSuppVector delta(int point, int m) {
        FinSuppVector f;
        f.set(point, m, 1.0);
        return f;
    }

    void set(int point, int m, Complex a) {
        if (a == 0.0)
            entries_.erase({point, m});
        else
            entries_[{point, m}] = a;
    }
    void add(int point, int m, Complex a) { set(point, m, at(point, m) + a); }
    Complex at(int point, int m) const {
        auto it = entries_.find({point, m});
        return it == entries_.end() ? Complex{} : it->second;
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Map& entries() const { return entries_; }

    double norm_sq() const {
        double s = 0;
        for (const auto& [k, a] : entries_) s += std::norm(a);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    /// Max entrywise difference over the union of supports.
    friend double max_diff(const FinSuppVector& f, const FinSuppVector& g) {
        double m = 0;
        for (const auto& [k, a] : f.entries_) m = std::max(m, std::abs(a - g.at(k.first, k.second)));
        for (const auto& [k, a] : g.entries_) m = std::max(m, std::abs(a - f.at(k.first, k.second)));
        return m;
    }

  private:
    Map entries_;
};

/// Phase of the induced representation at target slot (M, m):
/// chi_omega( gamma(M,m)^-1 g gamma(L^-1 M, m - l) ), computed through the
/// exact group algebra. Throws NotInN3 if the conjugated word fails to land
/// in the translation subgroup (which would mean inconsistent offset data).
Complex sigma_phase(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                    int M, int m);

/// The induced representation sigma_omega(g) applied to a finitely
/// supported vector; support is relabeled by (M, m) -> (L M, m + l) and each
/// amplitude picks up a unit-modulus character value. Throws InvalidElement
/// when g is not valid for gd.
FinSuppVector sigma_apply(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                          const FinSuppVector& f);

/// Closed three-branch phase (by D^0 membership of L and M) used only as a
/// cross-check oracle against sigma_phase.
Complex sigma_branch_oracle(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                            int M, int m);

/// Evaluates the covariant extension of f at the group element g: decompose
/// g = gamma(L,l) n with n in N_3 and return conj(chi_omega(n)) f(L,l).
Complex covariant_extend(const GroupData& gd, Vec2 omega, const FinSuppVector& f,
                         const WaveletElement& g);

/// Left-translation realization of the induced representation, read back
/// along the section: (U f)(M,m) = covariant_extend(f, g^-1 gamma(M,m)).
/// Agrees with sigma_apply entrywise; the two share no formula.
FinSuppVector u_omega_apply(const GroupData& gd, Vec2 omega, const WaveletElement& g,
                            const FinSuppVector& f);

/// The twist c(omega, L) = exp(-+ pi i <z, omega> / 2) by D^0 membership;
/// identically 1 for symmorphic groups.
Complex twist_eval(const GroupData& gd, Vec2 omega, int L);

}  // namespace gamma3
