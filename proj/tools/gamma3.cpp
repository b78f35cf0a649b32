#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gamma3/element_text.hpp"
#include "gamma3/errors.hpp"
#include "gamma3/render_svg.hpp"
#include "gamma3/verify.hpp"
#include "gamma3/wavelet_rep.hpp"

using nlohmann::json;
using namespace gamma3;

namespace {

Vec2 parse_vec2(const std::string& s) {
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
        try {
            std::size_t ax = 0, ay = 0;
            const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
            const Vec2 v{std::stod(xs, &ax), std::stod(ys, &ay)};
            if (ax == xs.size() && ay == ys.size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("expected x,y but got '" + s + "'");
}

json group_json(const GroupData& gd) {
    json points = json::array();
    for (int i = 0; i < gd.order(); ++i) {
        const PointElement& p = gd.point(i);
        points.push_back({{"name", p.name},
                          {"mat_lat", {{p.mat_lat.m[0], p.mat_lat.m[1]},
                                       {p.mat_lat.m[2], p.mat_lat.m[3]}}},
                          {"det", p.mat_lat.det()}});
    }
    json offsets = json::object();
    for (int i = 0; i < gd.order(); ++i)
        offsets[gd.point(i).name] = {gd.offset(i).a.str(), gd.offset(i).b.str()};
    json d0 = json::array();
    for (int i : gd.d0()) d0.push_back(gd.point(i).name);
    const Mat2& b = gd.basis();
    json out{{"name", gd.name()},
             {"lattice", std::string(lattice_name(gd.lattice()))},
             {"basis", {{b.a, b.b}, {b.c, b.d}}},
             {"point_group", points},
             {"offsets", offsets},
             {"d0", d0},
             {"symmorphic", gd.symmorphic()},
             {"sector", {{"theta1", gd.theta1()}, {"theta2", gd.theta2()}}}};
    if (gd.glide_z())
        out["z"] = {gd.glide_z()->a.str(), gd.glide_z()->b.str()};
    else
        out["z"] = nullptr;
    return out;
}

json element_json(const GroupData& gd, const WaveletElement& g) {
    return {{"text", print_element(gd, g)},
            {"x", {g.x.a.str(), g.x.b.str()}},
            {"L", gd.point(g.point).name},
            {"ell", g.ell},
            {"level", *element_level(gd, g)}};
}

json finsupp_json(const GroupData& gd, const FinSuppVector& f) {
    json entries = json::array();
    for (const auto& [key, amp] : f.entries()) {
        entries.push_back({{"L", gd.point(key.first).name},
                           {"m", key.second},
                           {"re", amp.real()},
                           {"im", amp.imag()}});
    }
    return {{"entries", entries}, {"norm", f.norm()}};
}

json packet_json(const PacketSum& p) {
    json packets = json::array();
    for (const GaussianPacket& t : p.terms) {
        packets.push_back({{"amp", {t.amp.real(), t.amp.imag()}},
                           {"center", {t.center.x, t.center.y}},
                           {"quad", {{t.quad.a, t.quad.b}, {t.quad.c, t.quad.d}}},
                           {"freq", {t.freq.x, t.freq.y}}});
    }
    return {{"packets", packets}};
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

PacketSum parse_packet(const std::string& s) {
    const std::vector<std::string> parts = split_csv(s);
    if (parts.size() != 8 && parts.size() != 9)
        throw CLI::ValidationError(
            "packet must be c,a1,a2,p11,p12,p22,b1,b2 (or re,im for c: 9 values)");
    std::vector<double> v;
    for (const std::string& p : parts) v.push_back(std::stod(p));
    GaussianPacket g;
    std::size_t i = 0;
    if (parts.size() == 9) {
        g.amp = {v[0], v[1]};
        i = 2;
    } else {
        g.amp = v[0];
        i = 1;
    }
    g.center = {v[i], v[i + 1]};
    g.quad = {v[i + 2], v[i + 3], v[i + 3], v[i + 4]};
    g.freq = {v[i + 5], v[i + 6]};
    if (g.quad.det() <= 0 || g.quad.a <= 0)
        throw CLI::ValidationError("quad part must be positive definite");
    return PacketSum(g);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GAMMA3_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3Gamma wavelet groups over the 17 wallpaper groups"};
    app.require_subcommand(1);

    // catalog
    auto* cat = app.add_subcommand("catalog", "emit exact group data as JSON");
    std::string cat_group = "all";
    cat->add_option("--group", cat_group, "group name or 'all'");

    // elem
    auto* elem = app.add_subcommand("elem", "parse, print and combine group elements");
    std::string elem_group, elem_text, elem_mul;
    bool elem_inv = false, elem_factor = false, elem_json = false;
    elem->add_option("--group", elem_group, "group name")->required();
    elem->add_option("text", elem_text, "element text ([qu u + qv v (+ 1/2 z)?, L], ell)")
        ->required();
    elem->add_option("--mul", elem_mul, "right-multiply by this element");
    elem->add_flag("--inv", elem_inv, "invert the element");
    elem->add_flag("--factor", elem_factor, "emit the dilation/level-0 factorization");
    elem->add_flag("--json", elem_json, "JSON output");

    // orbit
    auto* orbit = app.add_subcommand("orbit", "orbit machinery on frequencies");
    auto* canon = orbit->add_subcommand("canon", "canonicalize into the cross-section");
    std::string canon_group, canon_omega;
    canon->add_option("--group", canon_group)->required();
    canon->add_option("--omega", canon_omega, "frequency x,y")->required();
    auto* stab = orbit->add_subcommand("stab", "stability subgroup of a frequency");
    std::string stab_group, stab_omega;
    stab->add_option("--group", stab_group)->required();
    stab->add_option("--omega", stab_omega, "frequency x,y")->required();
    orbit->require_subcommand(1);

    // rep
    auto* rep = app.add_subcommand("rep", "apply representations");
    auto* sigma = rep->add_subcommand("sigma", "induced representation on D x Z vectors");
    std::string sig_group, sig_omega, sig_elem, sig_vec;
    sigma->add_option("--group", sig_group)->required();
    sigma->add_option("--omega", sig_omega, "frequency x,y")->required();
    sigma->add_option("--elem", sig_elem, "group element text")->required();
    sigma->add_option("--vec", sig_vec, "finite support map (L,m):re,im;...")->required();
    auto* vhat = rep->add_subcommand("vhat", "frequency-side wavelet representation");
    std::string vh_group, vh_elem, vh_packet;
    vhat->add_option("--group", vh_group)->required();
    vhat->add_option("--elem", vh_elem, "group element text")->required();
    vhat->add_option("--packet", vh_packet, "c,a1,a2,p11,p12,p22,b1,b2")->required();
    rep->require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string ver_group = "all";
    std::string ver_suites = "axioms,catalog,orbits,induced,intertwine";
    std::uint64_t ver_seed = default_seed();
    double ver_tol = 1e-9;
    bool ver_quick = false;
    verify->add_option("--group", ver_group, "group name or 'all'");
    verify->add_option("--suite", ver_suites, "comma-separated suite list");
    verify->add_option("--seed", ver_seed, "deterministic seed");
    verify->add_option("--tol", ver_tol, "intertwining residual tolerance");
    verify->add_flag("--quick", ver_quick, "reduced sample counts");

    // render
    auto* render = app.add_subcommand("render", "emit SVG figures");
    std::string ren_kind, ren_group, ren_omega = "2,1", ren_out;
    render->add_option("--kind", ren_kind, "lattice|orbits|cross-section")->required();
    render->add_option("--group", ren_group)->required();
    render->add_option("--omega", ren_omega, "frequency x,y (orbits)");
    render->add_option("--out", ren_out, "output file (default stdout)");

    // JSON is the default machine format; the flag is accepted uniformly.
    for (CLI::App* sc : {cat, canon, stab, sigma, vhat, verify})
        sc->add_flag("--json", "JSON output (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cat) {
            if (cat_group == "all") {
                json all = json::array();
                for (const std::string& name : GroupData::names())
                    all.push_back(group_json(GroupData::get(name)));
                emit(all);
            } else {
                emit(group_json(GroupData::get(cat_group)));
            }
        } else if (*elem) {
            const GroupData& gd = GroupData::get(elem_group);
            WaveletElement g = parse_element(gd, elem_text);
            if (!elem_mul.empty()) g = multiply(gd, g, parse_element(gd, elem_mul));
            if (elem_inv) g = invert(gd, g);
            if (elem_factor) {
                const auto [dil, flat] = factor(g);
                if (elem_json)
                    emit({{"dilation", element_json(gd, dil)},
                          {"flat", element_json(gd, flat)}});
                else
                    std::cout << print_element(gd, dil) << "\n"
                              << print_element(gd, flat) << "\n";
            } else if (elem_json) {
                emit(element_json(gd, g));
            } else {
                std::cout << print_element(gd, g) << "\n";
            }
        } else if (*canon) {
            const GroupData& gd = GroupData::get(canon_group);
            const CanonResult r = canonicalize(build_cross_section(gd), parse_vec2(canon_omega));
            if (r.kind == CanonKind::Zero) emit({{"zero", true}});
            else if (r.kind == CanonKind::Boundary) emit({{"boundary", true}});
            else
                emit({{"omega_prime", {r.form.omega_prime.x, r.form.omega_prime.y}},
                      {"L", gd.point(r.form.point).name},
                      {"ell", r.form.ell}});
        } else if (*stab) {
            const GroupData& gd = GroupData::get(stab_group);
            json names = json::array();
            for (int i : stabilizer(gd, parse_vec2(stab_omega)))
                names.push_back(gd.point(i).name);
            emit({{"stabilizer", names},
                  {"irreducible", stabilizer(gd, parse_vec2(stab_omega)).size() == 1}});
        } else if (*sigma) {
            const GroupData& gd = GroupData::get(sig_group);
            const FinSuppVector out =
                sigma_apply(gd, parse_vec2(sig_omega), parse_element(gd, sig_elem),
                            parse_finsupp(gd, sig_vec));
            emit(finsupp_json(gd, out));
        } else if (*vhat) {
            const GroupData& gd = GroupData::get(vh_group);
            emit(packet_json(
                apply_Vhat(gd, parse_element(gd, vh_elem), parse_packet(vh_packet))));
        } else if (*verify) {
            VerifyOptions opt;
            opt.seed = ver_seed;
            opt.tol_intertwine = ver_tol;
            if (ver_quick) {
                opt.n_axioms = 1000;
                opt.n_orbits = 1000;
                opt.n_induced = 200;
                opt.n_function = 100;
                opt.n_intertwine_elements = 8;
                opt.n_intertwine_samples = 200;
            }
            std::vector<std::string> suites;
            for (const std::string& s : split_csv(ver_suites))
                if (!s.empty()) suites.push_back(s);
            std::vector<SuiteResult> results;
            try {
                results = run_verify(suites, {ver_group}, opt);
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            }
            json rows = json::array();
            for (const SuiteResult& r : results) {
                rows.push_back({{"suite", r.suite},
                                {"group", r.group},
                                {"cases", r.cases},
                                {"max_residual", r.max_residual},
                                {"tolerance", r.tolerance},
                                {"asserted", r.asserted},
                                {"pass", r.pass},
                                {"note", r.note}});
            }
            const bool ok = all_pass(results);
            emit({{"seed", ver_seed},
                  {"tol", ver_tol},
                  {"group", ver_group},
                  {"suites", suites},
                  {"results", rows},
                  {"pass", ok}});
            return ok ? 0 : 1;
        } else if (*render) {
            const GroupData& gd = GroupData::get(ren_group);
            std::string svg;
            if (ren_kind == "lattice") svg = svg_lattice(gd);
            else if (ren_kind == "orbits") svg = svg_orbits(gd, parse_vec2(ren_omega));
            else if (ren_kind == "cross-section") svg = svg_cross_section(gd);
            else {
                std::cerr << "usage error: unknown render kind '" << ren_kind << "'\n";
                return 2;
            }
            if (ren_out.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(ren_out);
                out << svg;
            }
        }
    } catch (const UnknownGroup& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
