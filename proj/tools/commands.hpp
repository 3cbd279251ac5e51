#pragma once

#include "borel/theorems.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace borel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Spaces covered by `verify`, in report order: kinds in declaration order,
/// then n, then m.
std::vector<SpaceSpec> sweep_spaces(const std::vector<SpaceKind>& kinds, int max_n, int max_m);

/// verify_space over `spaces` on `jobs` worker threads; result i belongs to
/// spaces[i] regardless of scheduling.
std::vector<VerificationReport> verify_all(const std::vector<SpaceSpec>& spaces, unsigned jobs);

}  // namespace borel::cli
