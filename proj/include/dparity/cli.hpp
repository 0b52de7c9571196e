#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dparity/parity_engine.hpp"
#include "dparity/weierstrass.hpp"

namespace dparity::cli {

/// One curve per line as "a1 a2 a3 a4 a6"; blank lines and lines starting
/// with '#' are skipped. Throws ParseError naming the offending line.
std::vector<WeierstrassCurve> parse_curves(std::istream& in);
std::vector<WeierstrassCurve> parse_curve_file(const std::string& path);

/// Lines "prime G_v I_v [eta_eq_chi]" with G_v, I_v in {1, D2, Cp, D2p} and the
/// optional flag one of eta=chi, eta!=chi, true, false, 1, 0.
std::map<Integer, Completion> parse_completions(std::istream& in);
std::map<Integer, Completion> parse_completion_file(const std::string& path);

/// Exit codes.
inline constexpr int kAllPass = 0;
inline constexpr int kVerdictFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (argv[0] is the program name). Human-readable report
/// on `out`, diagnostics on `err`, optional JSON document via --json.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dparity::cli
