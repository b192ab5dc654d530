#pragma once

#include "regpart/cli/json_io.hpp"
#include "regpart/partition.hpp"

#include <string>
#include <vector>

namespace regpart::cli {

/// Range for a verification suite. Enumerative suites use `moduli`; the
/// single-modulus suites use `r`. Every n in [min_n, max_n] is checked.
struct VerifyParams {
    ModulusTuple moduli{2, 3};
    int r = 2;
    int min_n = 0;
    int max_n = 10;
};

const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
VerifyReport run_suite(const std::string& suite, const VerifyParams& params);

} // namespace regpart::cli
