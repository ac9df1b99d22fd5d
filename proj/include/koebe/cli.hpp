#pragma once

// Command-line front end. Subcommands:
//   coeffs        coefficient list of a family member (JSON or CSV)
//   certify       univalence certificate for one N (JSON)
//   radius-table  Koebe-radius bounds per N (CSV or JSON)
//   boundary      image of the unit circle (CSV or SVG)
//   scan          certificates over a range of N (JSONL, resumable)
// Global flags: --precision <bits>, --output <path>, --format <json|csv|svg>.

#include <iosfwd>
#include <string>
#include <vector>

namespace koebe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitIo = 4;

/// Runs one invocation; args excludes the program name. Output goes to
/// `out` unless --output names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace koebe::cli
