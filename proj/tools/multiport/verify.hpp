#pragma once

#include <iosfwd>

namespace multiport::cli {

/// Runs every oracle check for dimensions up to max_dim and prints one line
/// per check. Returns true when all are within tolerance.
bool run_verify(int max_dim, double tolerance, std::ostream& out);

}  // namespace multiport::cli
