#include "gamma3/render_svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gamma3 {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

/// Accumulates SVG with a fixed world-to-screen map (y axis flipped).
class Canvas {
  public:
    Canvas(double size_px, double world_radius)
        : size_(size_px), scale_(size_px / (2.0 * world_radius)) {}

    Vec2 to_screen(Vec2 w) const {
        return {size_ / 2.0 + scale_ * w.x, size_ / 2.0 - scale_ * w.y};
    }

    void line(Vec2 a, Vec2 b, const std::string& cls, const std::string& extra = "") {
        const Vec2 sa = to_screen(a), sb = to_screen(b);
        body_ << "  <line class=\"" << cls << "\" x1=\"" << fmt(sa.x) << "\" y1=\""
              << fmt(sa.y) << "\" x2=\"" << fmt(sb.x) << "\" y2=\"" << fmt(sb.y) << "\" "
              << extra << "/>\n";
    }

    void circle(Vec2 c, double r_px, const std::string& cls) {
        const Vec2 sc = to_screen(c);
        body_ << "  <circle class=\"" << cls << "\" cx=\"" << fmt(sc.x) << "\" cy=\""
              << fmt(sc.y) << "\" r=\"" << fmt(r_px) << "\"/>\n";
    }

    void path(const std::vector<Vec2>& pts, const std::string& cls,
              const std::string& extra = "") {
        body_ << "  <path class=\"" << cls << "\" d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Vec2 s = to_screen(pts[i]);
            body_ << (i == 0 ? "M" : "L") << fmt(s.x) << " " << fmt(s.y) << " ";
        }
        body_ << "Z\" " << extra << "/>\n";
    }

    std::string finish(const std::string& style) const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size_)
            << "\" height=\"" << fmt(size_) << "\" viewBox=\"0 0 " << fmt(size_) << " "
            << fmt(size_) << "\">\n  <style>" << style << "</style>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

  private:
    double size_, scale_;
    std::ostringstream body_;
};

const char* kStyle =
    "line{stroke:#444;stroke-width:1}"
    ".cell{stroke:#c33;stroke-width:1.5}"
    ".mirror{stroke:#06c;stroke-width:1.2}"
    ".glide-axis{stroke:#0a4;stroke-width:1.2;stroke-dasharray:6 4}"
    ".orbit-point{fill:#c33}"
    ".lattice-point{fill:#222}"
    ".sector{fill:#cde5ff;stroke:#06c;stroke-width:1}"
    ".sector-copy{fill:none;stroke:#999;stroke-width:0.6}";

// +1 eigendirection of an orthogonal reflection [[cos2a, sin2a],[sin2a,-cos2a]].
Vec2 mirror_axis_direction(const Mat2& refl) {
    const double alpha = std::atan2(refl.b, refl.a) / 2.0;
    return {std::cos(alpha), std::sin(alpha)};
}

std::vector<Vec2> sector_ring(double t1, double t2, double r1, double r2, int seg) {
    std::vector<Vec2> pts;
    for (int i = 0; i <= seg; ++i) {
        const double t = t1 + (t2 - t1) * i / seg;
        pts.push_back({r1 * std::cos(t), r1 * std::sin(t)});
    }
    for (int i = seg; i >= 0; --i) {
        const double t = t1 + (t2 - t1) * i / seg;
        pts.push_back({r2 * std::cos(t), r2 * std::sin(t)});
    }
    return pts;
}

}  // namespace

std::string svg_lattice(const GroupData& gd, const RenderOptions& opt) {
    const int e = opt.extent;
    const Mat2& b = gd.basis();
    const Vec2 u{b.a, b.c}, v{b.b, b.d};
    const double radius = (e + 1.0) * (norm(u) + norm(v)) / 1.5;
    Canvas cv(opt.size_px, radius);

    for (int j = -e; j <= e; ++j) {
        cv.line(static_cast<double>(-e) * u + static_cast<double>(j) * v,
                static_cast<double>(e) * u + static_cast<double>(j) * v, "grid");
        cv.line(static_cast<double>(j) * u + static_cast<double>(-e) * v,
                static_cast<double>(j) * u + static_cast<double>(e) * v, "grid");
    }
    cv.path({{0, 0}, u, u + v, v}, "cell", "fill=\"none\"");
    for (int j = -e; j <= e; ++j)
        for (int k = -e; k <= e; ++k)
            cv.circle(static_cast<double>(j) * u + static_cast<double>(k) * v, 2.5,
                      "lattice-point");

    // Mirror and glide axes of the reflections [t_L, L]: the axis passes
    // through half of the off-axis part of the translation; a residual
    // on-axis part makes it a glide.
    for (int i = 0; i < gd.order(); ++i) {
        if (!gd.point(i).is_reflection) continue;
        const Vec2 d = mirror_axis_direction(gd.point(i).cart);
        const Vec2 t = gd.point(i).cart * gd.to_cartesian(gd.offset(i));
        const Vec2 par = dot(t, d) * d;
        const Vec2 perp = t - par;
        const Vec2 p0 = 0.5 * perp;
        const bool glide = std::fabs(dot(t, d)) > 1e-12;
        cv.line(p0 - radius * d, p0 + radius * d, glide ? "glide-axis" : "mirror");
    }
    return cv.finish(kStyle);
}

std::string svg_orbits(const GroupData& gd, Vec2 omega, const RenderOptions& opt) {
    const double radius = pow3d(opt.level_range) * 3.0 * std::max(1.0, norm(omega));
    Canvas cv(opt.size_px, radius);
    cv.line({-radius, 0}, {radius, 0}, "grid");
    cv.line({0, -radius}, {0, radius}, "grid");
    for (int ell = -opt.level_range; ell <= opt.level_range; ++ell)
        for (int L = 0; L < gd.order(); ++L)
            cv.circle(pow3d(ell) * (gd.point(L).cart * omega), 3.0, "orbit-point");
    return cv.finish(kStyle);
}

std::string svg_cross_section(const GroupData& gd, const RenderOptions& opt) {
    const CrossSection cs = build_cross_section(gd);
    const double radius = pow3d(opt.level_range) * 3.2;
    Canvas cv(opt.size_px, radius);

    const std::vector<Vec2> base = sector_ring(cs.theta1, cs.theta2, 1.0, 3.0, 48);
    for (int ell = -opt.level_range; ell <= opt.level_range; ++ell) {
        for (int L = 0; L < gd.order(); ++L) {
            if (ell == 0 && L == 0) continue;
            std::vector<Vec2> copy;
            copy.reserve(base.size());
            for (const Vec2& p : base) copy.push_back(pow3d(ell) * (gd.point(L).cart * p));
            cv.path(copy, "sector-copy");
        }
    }
    cv.path(base, "sector");
    return cv.finish(kStyle);
}

}  // namespace gamma3
