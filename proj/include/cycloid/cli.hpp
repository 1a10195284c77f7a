#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cycloid/lattice.hpp"

namespace cycloid::cli {

/// Outcome of the exhaustive invariant sweep behind `verify`.
struct VerifyReport {
  Int checked = 0;
  std::vector<std::string> violations;
};

/// Checks every params in [1, max]^4: net structure, three-way cyc
/// agreement, closed forms, symmetric and shear invariance.
VerifyReport verify_sweep(Int max, Int max_area);

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycloid::cli
