#include "gamma3/catalog.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "gamma3/errors.hpp"

namespace gamma3 {

std::string_view lattice_name(LatticeKind k) {
    switch (k) {
        case LatticeKind::Square: return "square";
        case LatticeKind::Rectangular: return "rectangular";
        case LatticeKind::Hexagonal: return "hexagonal";
    }
    return "?";
}

namespace {

enum class Refl { None, Vertical, Swap, Horizontal };

struct Blueprint {
    const char* name;
    LatticeKind kind;
    int rect_aspect;     // rectangular lattices only
    int rot_order;       // 1, 2, 3, 4, 6
    Refl refl;
    const char* glide;   // nullptr, "v", "u+v": offset on the reflection generator
    double theta1;       // sector start for the orbit cross-section
};

// For the nonsymmorphic rectangular groups the basis is normalized to
// u=(1,0), v=(0,1), matching the convention under which their glide data is
// stated; the symmorphic rectangular groups use aspect 2 so the lattice
// carries no extra metric symmetry. Sector starts sit on mirror rays so the
// open sector is mirror-free (see orbits).
const Blueprint kBlueprints[] = {
    {"p1",   LatticeKind::Rectangular, 2, 1, Refl::None,       nullptr, 0.0},
    {"p2",   LatticeKind::Rectangular, 2, 2, Refl::None,       nullptr, 0.0},
    {"pm",   LatticeKind::Rectangular, 2, 1, Refl::Vertical,   nullptr, -kPi / 2},
    {"pg",   LatticeKind::Rectangular, 1, 1, Refl::Vertical,   "v",     -kPi / 2},
    {"cm",   LatticeKind::Hexagonal,   0, 1, Refl::Swap,       nullptr, kPi / 6},
    {"pmm",  LatticeKind::Rectangular, 2, 2, Refl::Vertical,   nullptr, 0.0},
    {"pmg2", LatticeKind::Rectangular, 1, 2, Refl::Vertical,   "v",     0.0},
    {"pgg2", LatticeKind::Rectangular, 1, 2, Refl::Vertical,   "u+v",   0.0},
    {"cmm",  LatticeKind::Hexagonal,   0, 2, Refl::Swap,       nullptr, kPi / 6},
    {"p4",   LatticeKind::Square,      0, 4, Refl::None,       nullptr, 0.0},
    {"p4m",  LatticeKind::Square,      0, 4, Refl::Vertical,   nullptr, 0.0},
    {"p4mg", LatticeKind::Square,      0, 4, Refl::Vertical,   "u+v",   0.0},
    {"p3",   LatticeKind::Hexagonal,   0, 3, Refl::None,       nullptr, 0.0},
    {"p3m1", LatticeKind::Hexagonal,   0, 3, Refl::Swap,       nullptr, kPi / 6},
    {"p31m", LatticeKind::Hexagonal,   0, 3, Refl::Horizontal, nullptr, 0.0},
    {"p6",   LatticeKind::Hexagonal,   0, 6, Refl::None,       nullptr, 0.0},
    {"p6m",  LatticeKind::Hexagonal,   0, 6, Refl::Horizontal, nullptr, 0.0},
};

const std::map<std::string, std::string, std::less<>>& synonyms() {
    static const std::map<std::string, std::string, std::less<>> table = {
        {"pmg", "pmg2"}, {"pgg", "pgg2"}, {"p4g", "p4mg"},
        {"pmm2", "pmm"}, {"cmm2", "cmm"}, {"p4mm", "p4m"}, {"p6mm", "p6m"},
    };
    return table;
}

std::string lower(std::string_view s) {
    std::string r(s);
    for (char& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return r;
}

IMat2 base_rotation(int order, LatticeKind kind) {
    switch (order) {
        case 1: return IMat2::identity();
        case 2: return {{-1, 0, 0, -1}};
        case 3:
            if (kind != LatticeKind::Hexagonal) break;
            return {{-1, -1, 1, 0}};
        case 4:
            if (kind != LatticeKind::Square) break;
            return {{0, -1, 1, 0}};
        case 6:
            if (kind != LatticeKind::Hexagonal) break;
            return {{0, -1, 1, 1}};
        default: break;
    }
    throw std::logic_error("rotation order incompatible with lattice");
}

IMat2 base_reflection(Refl r, LatticeKind kind) {
    const bool hex = kind == LatticeKind::Hexagonal;
    switch (r) {
        case Refl::Vertical:
            if (hex) break;
            return {{-1, 0, 0, 1}};
        case Refl::Swap:
            if (!hex) break;
            return {{0, 1, 1, 0}};
        case Refl::Horizontal:
            return hex ? IMat2{{1, 1, 0, -1}} : IMat2{{1, 0, 0, -1}};
        case Refl::None: break;
    }
    throw std::logic_error("reflection kind incompatible with lattice");
}

Mat2 cartesian_basis(LatticeKind kind, int aspect) {
    switch (kind) {
        case LatticeKind::Square: return Mat2::identity();
        case LatticeKind::Rectangular: return {1, 0, 0, static_cast<double>(aspect)};
        case LatticeKind::Hexagonal: return {1, 0.5, 0, std::sqrt(3.0) / 2.0};
    }
    throw std::logic_error("bad lattice kind");
}

// Exact orthogonality of B M B^-1 for diagonal B = diag(1, s): the three
// integer identities below are the orthonormal-column conditions cleared of
// denominators.
bool orthogonal_exact_diag(const IMat2& m, long long s) {
    const long long a = m.m[0], b = m.m[1], c = m.m[2], d = m.m[3];
    return a * a + s * s * c * c == 1 && b * b + s * s * d * d == s * s &&
           a * b + s * s * c * d == 0;
}

bool orthogonal_numeric(const Mat2& m, double tol) {
    const Mat2 g = m.transpose().mul(m);
    return std::fabs(g.a - 1) <= tol && std::fabs(g.d - 1) <= tol &&
           std::fabs(g.b) <= tol && std::fabs(g.c) <= tol;
}

}  // namespace

class CatalogBuilder {
  public:
    static GroupData build(const Blueprint& bp, int rect_aspect) {
        GroupData g;
        g.name_ = bp.name;
        g.lattice_ = bp.kind;
        const int aspect = bp.kind == LatticeKind::Rectangular ? rect_aspect : 1;
        g.basis_ = cartesian_basis(bp.kind, aspect);
        g.basis_inv_ = g.basis_.inverse();

        // Point group: rotations id, r1, ..., then reflections s, r1s, ...
        const IMat2 rot = base_rotation(bp.rot_order, bp.kind);
        IMat2 acc = IMat2::identity();
        for (int j = 0; j < bp.rot_order; ++j) {
            g.points_.push_back(make_point(g, j == 0 ? "id" : "r" + std::to_string(j), acc));
            acc = rot.mul(acc);
        }
        if (bp.refl != Refl::None) {
            const IMat2 s = base_reflection(bp.refl, bp.kind);
            acc = IMat2::identity();
            for (int j = 0; j < bp.rot_order; ++j) {
                const std::string nm = j == 0 ? "s" : "r" + std::to_string(j) + "s";
                g.points_.push_back(make_point(g, nm, acc.mul(s)));
                acc = rot.mul(acc);
            }
        }
        verify_points(g, aspect);
        fill_tables(g);
        fill_offsets(g, bp);
        g.theta1_ = bp.theta1;
        const int k = bp.rot_order;
        g.theta2_ = bp.theta1 + (bp.refl == Refl::None ? kTwoPi / k : kPi / k);
        return g;
    }

  private:
    static PointElement make_point(const GroupData& g, std::string name, const IMat2& m) {
        PointElement p;
        p.name = std::move(name);
        p.mat_lat = m;
        p.is_reflection = m.det() == -1;
        // Cartesian form B M B^-1.
        const Mat2 md{static_cast<double>(m.m[0]), static_cast<double>(m.m[1]),
                      static_cast<double>(m.m[2]), static_cast<double>(m.m[3])};
        p.cart = g.basis_.mul(md).mul(g.basis_inv_);
        return p;
    }

    static void verify_points(const GroupData& g, int aspect) {
        for (const PointElement& p : g.points_) {
            const long long d = p.mat_lat.det();
            if (d != 1 && d != -1) throw std::logic_error("point element not in GL2(Z)");
            const bool ok = g.lattice_ == LatticeKind::Hexagonal
                                ? orthogonal_numeric(p.cart, 1e-12)
                                : orthogonal_exact_diag(p.mat_lat, aspect);
            if (!ok) throw std::logic_error("point element not orthogonal: " + p.name);
        }
    }

    static void fill_tables(GroupData& g) {
        const int n = g.order();
        g.mul_.assign(n * n, -1);
        g.inv_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int k = g.find(g.points_[i].mat_lat.mul(g.points_[j].mat_lat));
                if (k < 0) throw std::logic_error("point group not closed");
                g.mul_[i * n + j] = k;
            }
            g.inv_[i] = g.find(g.points_[i].mat_lat.inverse());
            if (g.inv_[i] < 0) throw std::logic_error("point group missing inverse");
        }
    }

    // Offsets t_L by orbit closure from the generators: the product rule
    // [t,L][t',L'] = [L'^-1 t + t', LL'] propagates offsets (mod lattice)
    // until the table is stable. Revisits must agree or the data is
    // inconsistent.
    static void fill_offsets(GroupData& g, const Blueprint& bp) {
        const int n = g.order();
        std::vector<std::optional<LatticeVector>> offs(n);
        offs[0] = LatticeVector{};

        std::vector<std::pair<int, LatticeVector>> gens;
        if (bp.rot_order > 1) gens.emplace_back(g.find(base_rotation(bp.rot_order, bp.kind)),
                                                LatticeVector{});
        if (bp.refl != Refl::None) {
            LatticeVector t;
            if (bp.glide) {
                const bool uv = std::string_view(bp.glide) == "u+v";
                t = LatticeVector{uv ? TriadicHalf::one_half() : TriadicHalf(0),
                                  TriadicHalf::one_half()};
            }
            gens.emplace_back(g.find(base_reflection(bp.refl, bp.kind)), t);
        }

        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                if (!offs[i]) continue;
                for (const auto& [gj, tj] : gens) {
                    const int k = g.mul(i, gj);
                    const IMat2 gj_inv = g.points_[gj].mat_lat.inverse();
                    const LatticeVector t =
                        (apply(gj_inv, *offs[i]) + tj).mod_lattice();
                    if (!offs[k]) {
                        offs[k] = t;
                        changed = true;
                    } else if (!(*offs[k] == t)) {
                        throw std::logic_error("offset closure inconsistent");
                    }
                }
            }
        }

        g.offsets_.resize(n);
        g.symmorphic_ = true;
        for (int i = 0; i < n; ++i) {
            if (!offs[i]) throw std::logic_error("generators do not span point group");
            g.offsets_[i] = *offs[i];
            if (!g.offsets_[i].is_zero()) g.symmorphic_ = false;
        }

        if (bp.glide) {
            const bool uv = std::string_view(bp.glide) == "u+v";
            const LatticeVector z{TriadicHalf(uv ? 1 : 0), TriadicHalf(1)};
            g.z_ = z;
            // Every element outside D^0 must carry exactly z/2 mod lattice.
            const LatticeVector half_z = z.halved().mod_lattice();
            for (int i = 0; i < n; ++i) {
                if (!g.offsets_[i].is_zero() && !(g.offsets_[i] == half_z))
                    throw std::logic_error("offset is neither 0 nor z/2");
            }
            if (g.symmorphic_) throw std::logic_error("glide group came out symmorphic");
        } else if (!g.symmorphic_) {
            throw std::logic_error("symmorphic group acquired offsets");
        }
    }
};

int GroupData::idx(int i) const {
    if (i < 0 || i >= order()) throw PointNotInGroup("point index out of range");
    return i;
}

const PointElement& GroupData::point(int i) const { return points_[idx(i)]; }

int GroupData::find(const IMat2& m) const {
    for (int i = 0; i < order(); ++i)
        if (points_[i].mat_lat == m) return i;
    return -1;
}

int GroupData::find_name(std::string_view n) const {
    const std::string want = lower(n);
    for (int i = 0; i < order(); ++i)
        if (points_[i].name == want) return i;
    return -1;
}

std::vector<int> GroupData::d0() const {
    std::vector<int> r;
    for (int i = 0; i < order(); ++i)
        if (in_d0(i)) r.push_back(i);
    return r;
}

Vec2 GroupData::to_cartesian(const LatticeVector& v) const {
    const double a = v.a.to_double(), b = v.b.to_double();
    return {basis_.a * a + basis_.b * b, basis_.c * a + basis_.d * b};
}

const std::vector<std::string>& GroupData::names() {
    static const std::vector<std::string> ns = [] {
        std::vector<std::string> r;
        for (const Blueprint& bp : kBlueprints) r.emplace_back(bp.name);
        return r;
    }();
    return ns;
}

GroupData GroupData::make(std::string_view name, int rect_aspect) {
    if (rect_aspect < 1) throw std::invalid_argument("rect_aspect must be >= 1");
    std::string key = lower(name);
    if (auto it = synonyms().find(key); it != synonyms().end()) key = it->second;
    for (const Blueprint& bp : kBlueprints)
        if (key == bp.name) return CatalogBuilder::build(bp, rect_aspect);
    throw UnknownGroup("unknown wallpaper group: " + std::string(name));
}

const GroupData& GroupData::get(std::string_view name) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<const GroupData>> cache;
    std::string key = lower(name);
    if (auto it = synonyms().find(key); it != synonyms().end()) key = it->second;

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        for (const Blueprint& bp : kBlueprints) {
            if (key == bp.name) {
                it = cache.emplace(key, std::make_unique<const GroupData>(
                                            CatalogBuilder::build(bp, bp.rect_aspect)))
                         .first;
                return *it->second;
            }
        }
        throw UnknownGroup("unknown wallpaper group: " + std::string(name));
    }
    return *it->second;
}

bool check_compatibility(const GroupData& gd, int d) {
    if (d < 2) throw std::invalid_argument("dilation factor must be >= 2");
    // d*id is compatible iff d*t_L stays in t_L + lattice, i.e. (d-1) t_L
    // lands in the lattice, for every L.
    for (int i = 0; i < gd.order(); ++i) {
        const LatticeVector& t = gd.offset(i);
        const LatticeVector scaled{t.a.times(d - 1), t.b.times(d - 1)};
        if (!scaled.mod_lattice().is_zero()) return false;
    }
    return true;
}

bool member_gamma(const GroupData& gd, const LatticeVector& x, int L) {
    auto lvl = member_gamma3(gd, x, L);
    return lvl && *lvl == 0;
}

std::optional<int> member_gamma3(const GroupData& gd, const LatticeVector& x, int L) {
    const LatticeVector d = x - gd.offset(L);
    // 3^l d integral needs a 3-power denominator only.
    if (d.a.half() || d.b.half()) return std::nullopt;
    return std::max(d.a.pow3(), d.b.pow3());
}

}  // namespace gamma3
