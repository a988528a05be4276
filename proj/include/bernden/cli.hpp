#pragma once

#include "bernden/bernoulli.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace bernden::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,      // bad arguments or a violated precondition
    kExitFalsified = 2,  // oracle disagreement or a failing suite
    kExitCapped = 3,     // power scan hit its k cap
};

struct Context {
    /// When set, the oracle side of `denom` builds polynomials from this table
    /// instead of the computed one. Test harnesses use it to plant a bad value.
    std::shared_ptr<const BernoulliTable> bernoulli_override;
};

/// Runs one command line (without the program name). Output is assembled in
/// full and written once, to `out` or to the --output file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx = {});

} // namespace bernden::cli
