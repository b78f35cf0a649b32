// Acceptance suite: runs every verification criterion at its contracted
// tolerance and prints one pass/fail line per criterion. Exit code 0 only
// if all criteria hold.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "gamma3/catalog.hpp"
#include "gamma3/verify.hpp"

using nlohmann::json;
using namespace gamma3;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    long cases = 0;
    double worst = 0.0;
    double seconds = 0.0;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool row_matches(const SuiteResult& r, const std::vector<std::string>& prefixes) {
    for (const std::string& p : prefixes)
        if (r.suite.rfind(p, 0) == 0) return true;
    return false;
}

void fold_rows(Criterion& c, const std::vector<SuiteResult>& rows,
               const std::vector<std::string>& prefixes, bool asserted_only = true) {
    for (const SuiteResult& r : rows) {
        if (!row_matches(r, prefixes)) continue;
        if (asserted_only && !r.asserted) continue;
        c.cases += r.cases;
        // The faithfulness row records a lower-bound witness (it must
        // exceed its tolerance); keep it out of the residual maximum.
        if (r.suite != "intertwine.faithfulness")
            c.worst = std::max(c.worst, r.max_residual);
        if (!r.pass) {
            c.pass = false;
            c.detail += r.suite + "@" + r.group + " resid=" + std::to_string(r.max_residual) + "; ";
        }
    }
}

void print_line(const Criterion& c) {
    std::printf("criterion %d: %-46s %s (cases=%ld, worst=%.3e, %.1fs)\n", c.id,
                c.title.c_str(), c.pass ? "PASS" : "FAIL", c.cases, c.worst, c.seconds);
    if (!c.detail.empty()) std::printf("    %s\n", c.detail.c_str());
}

}  // namespace

int main() {
    const std::vector<std::string> all_groups = {"all"};
    std::vector<Criterion> crits;

    // 1. Exact group algebra: zero tolerance, >= 10^4 elements per group,
    //    all 17 groups, <= 30 s.
    {
        Criterion c{1, "exact group algebra (tol 0, 10^4/group)"};
        VerifyOptions opt;
        opt.seed = 2024;
        opt.n_axioms = 10000;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = run_verify({"axioms"}, all_groups, opt);
        c.seconds = seconds_since(t0);
        fold_rows(c, rows, {"axioms."});
        if (c.seconds > 30.0) {
            c.pass = false;
            c.detail += "runtime over 30 s; ";
        }
        crits.push_back(c);
        print_line(c);
    }

    // 2. Compatibility table: d=3 works everywhere; d=2 fails exactly the
    //    four nonsymmorphic groups. Exact.
    {
        Criterion c{2, "compatibility table (d=3 all, d=2 nonsym)"};
        const auto t0 = std::chrono::steady_clock::now();
        const std::set<std::string> nonsym = {"pg", "pmg2", "pgg2", "p4mg"};
        std::vector<std::string> fail2;
        for (const std::string& name : GroupData::names()) {
            const GroupData& gd = GroupData::get(name);
            ++c.cases;
            if (!check_compatibility(gd, 3)) {
                c.pass = false;
                c.detail += name + " rejected d=3; ";
            }
            if (!check_compatibility(gd, 2)) fail2.push_back(name);
        }
        if (std::set<std::string>(fail2.begin(), fail2.end()) != nonsym) {
            c.pass = false;
            c.detail += "d=2 failure set mismatch; ";
        }
        c.seconds = seconds_since(t0);
        crits.push_back(c);
        print_line(c);
    }

    // 3. Induced representations: unitarity, homomorphism (1e-10), sigma ==
    //    W^-1 U W (1e-12), 10^3 cases per group; branch oracle asserted at
    //    1e-12 for all symmorphic groups plus pg and pmg2.
    std::vector<SuiteResult> induced_rows;
    {
        Criterion c{3, "induced: unitary, homomorphic, W-conjugate"};
        VerifyOptions opt;
        opt.seed = 2024;
        opt.n_induced = 1000;
        const auto t0 = std::chrono::steady_clock::now();
        induced_rows = run_verify({"induced"}, all_groups, opt);
        c.seconds = seconds_since(t0);
        fold_rows(c, induced_rows,
                  {"induced.unitarity", "induced.phase_modulus", "induced.homomorphism",
                   "induced.sigma_equals_WUW", "induced.covariance",
                   "induced.branch_oracle", "induced.equivalence_witness"});
        crits.push_back(c);
        print_line(c);
    }

    // 4. Orbit machinery: round trip 1e-10 and zero disjointness
    //    violations on 10^4 samples, |l| <= 3.
    {
        Criterion c{4, "orbits: round trip 1e-10, disjointness 0"};
        VerifyOptions opt;
        opt.seed = 2024;
        opt.n_orbits = 10000;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = run_verify({"orbits"}, all_groups, opt);
        c.seconds = seconds_since(t0);
        fold_rows(c, rows, {"orbits."});
        crits.push_back(c);
        print_line(c);
    }

    // 5.-7. Function-side identities, the main decomposition theorem and
    //    rho unitarity all live in the intertwine suite.
    std::vector<SuiteResult> inter_rows;
    double inter_seconds = 0.0;
    {
        VerifyOptions opt;
        opt.seed = 2024;
        opt.n_function = 1000;
        opt.n_intertwine_elements = 20;
        opt.n_intertwine_samples = 1000;
        opt.tol_intertwine = 1e-9;
        const auto t0 = std::chrono::steady_clock::now();
        inter_rows = run_verify({"intertwine"}, all_groups, opt);
        inter_seconds = seconds_since(t0);
    }
    {
        Criterion c{5, "function identities (V hom, D3/R, FVF^-1=Vhat)"};
        c.seconds = inter_seconds;
        fold_rows(c, inter_rows,
                  {"intertwine.commutation_D3_R", "intertwine.V_homomorphism",
                   "intertwine.fourier", "intertwine.vhat_conjugation",
                   "intertwine.faithfulness"});
        crits.push_back(c);
        print_line(c);
    }
    {
        Criterion c{6, "main theorem residual <= 1e-9 (15 groups)"};
        c.seconds = inter_seconds;
        fold_rows(c, inter_rows, {"intertwine.main_theorem",
                                  "intertwine.vtilde_branch_vs_pipeline",
                                  "intertwine.fiberwise_direct_integral"});
        if (inter_seconds > 300.0) {
            c.pass = false;
            c.detail += "runtime over 5 min; ";
        }
        crits.push_back(c);
        print_line(c);
    }
    {
        Criterion c{7, "rho unitarity by quadrature (1e-6)"};
        c.seconds = inter_seconds;
        fold_rows(c, inter_rows, {"intertwine.rho_unitarity", "intertwine.rho_roundtrip"});
        crits.push_back(c);
        print_line(c);
    }

    // 8. pgg2/p4mg discrepancy report: quantified, stored as a fixture,
    //    values not asserted.
    {
        Criterion c{8, "pgg2/p4mg branch report written (not asserted)"};
        const auto t0 = std::chrono::steady_clock::now();
        json report = json::array();
        std::set<std::string> seen;
        for (const std::vector<SuiteResult>* rows : {&induced_rows, &inter_rows}) {
            for (const SuiteResult& r : *rows) {
                if (r.group != "pgg2" && r.group != "p4mg") continue;
                if (r.asserted) continue;
                report.push_back({{"suite", r.suite},
                                  {"group", r.group},
                                  {"cases", r.cases},
                                  {"max_discrepancy", r.max_residual},
                                  {"note", r.note}});
                seen.insert(r.suite + "@" + r.group);
                c.worst = std::max(c.worst, r.max_residual);
                c.cases += r.cases;
            }
        }
        const std::set<std::string> want = {
            "induced.branch_oracle@pgg2", "induced.branch_oracle@p4mg",
            "intertwine.main_theorem@pgg2", "intertwine.main_theorem@p4mg",
            "intertwine.vtilde_branch_vs_pipeline@pgg2",
            "intertwine.vtilde_branch_vs_pipeline@p4mg"};
        for (const std::string& w : want) {
            if (!seen.count(w)) {
                c.pass = false;
                c.detail += "missing report row " + w + "; ";
            }
        }
        std::ofstream out("nonsymmorphic_branch_report.json");
        out << report.dump(2) << "\n";
        if (!out) {
            c.pass = false;
            c.detail += "could not write fixture; ";
        }
#ifdef FIXTURE_DIR
        // The committed fixture freezes the report's shape (rows), not the
        // measured values.
        std::ifstream ref(std::string(FIXTURE_DIR) + "/nonsymmorphic_branch_report.json");
        if (ref) {
            json refj;
            ref >> refj;
            std::set<std::string> ref_rows;
            for (const auto& row : refj)
                ref_rows.insert(row["suite"].get<std::string>() + "@" +
                                row["group"].get<std::string>());
            if (ref_rows != seen) {
                c.pass = false;
                c.detail += "fixture shape mismatch; ";
            }
        } else {
            c.pass = false;
            c.detail += "committed fixture missing; ";
        }
#endif
        c.seconds = seconds_since(t0);
        crits.push_back(c);
        print_line(c);
    }

    int passed = 0;
    for (const Criterion& c : crits) passed += c.pass ? 1 : 0;
    std::printf("ACCEPTANCE: %d/%d criteria passed\n", passed,
                static_cast<int>(crits.size()));
    return passed == static_cast<int>(crits.size()) ? 0 : 1;
}
