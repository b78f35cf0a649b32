#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamma3/catalog.hpp"

namespace gamma3 {

/// One verification check on one group. Report-only checks (asserted ==
/// false) record their residual but never fail the run.
struct SuiteResult {
    std::string suite;
    std::string group;
    long cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool asserted = true;
    bool pass = true;
    std::string note;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    double tol_intertwine = 1e-9;
    // Sample counts; defaults match the verification contract.
    int n_axioms = 10000;
    int n_orbits = 10000;
    int n_induced = 1000;
    int n_function = 1000;
    int n_intertwine_elements = 20;
    int n_intertwine_samples = 1000;  // (omega, M, j) samples per element batch
};

/// The suite families understood by run_verify.
const std::vector<std::string>& suite_names();  // axioms, catalog, orbits, induced, intertwine

/// Runs the requested suites on the requested groups ("all" expands to the
/// 17). Deterministic for a fixed seed. Throws std::invalid_argument on an
/// unknown suite name and UnknownGroup on a bad group name.
std::vector<SuiteResult> run_verify(const std::vector<std::string>& suites,
                                    const std::vector<std::string>& groups,
                                    const VerifyOptions& opt);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace gamma3
