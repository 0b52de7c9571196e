#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dparity/base_change.hpp"
#include "dparity/setting.hpp"
#include "dparity/weierstrass.hpp"

namespace dparity {

/// Audit record of one side of the local identity.
struct CaseTrace {
  std::vector<std::string> branches;  // which case of the analysis fired, outermost first
  std::vector<BaseChangeResult> factors;  // C_v({1}) and C_v(C_p) data for the c side
  int ordp_c1 = 0;   // ord_p C_v({1})
  int ordp_ccp = 0;  // ord_p C_v(C_p)
  std::optional<int> epsilon;  // Rohrlich's epsilon where defined; cancels in every ratio
  std::string to_string() const;
};

struct SignWithTrace {
  int sign = 1;
  CaseTrace trace;
};

struct LocalVerdict {
  int w_ratio = 1;
  int c_parity = 1;
  bool equal = true;
  CaseTrace w_trace;
  CaseTrace c_trace;
};

/// (-1)^{ord_p C_v}: ord_p of C_v({1}) / C_v(C_p) from the base-change data
/// (the D2 and G terms of Theta enter squared).
SignWithTrace c_parity(const LocalSetting& s);

/// W(E/K_v, tau_v) / W(E/K_v, (1+eta)_v) from the root number formulas.
SignWithTrace w_ratio(const LocalSetting& s);

/// The epsilon of the potentially good formula at l = p: 1 if r is even or
/// e = 1, else (-1/p), (-3/p), (-2/p) for e in {2,6}, 3, 4.
int rohrlich_epsilon(int p, int r, int defect);

LocalVerdict verify_local(const LocalSetting& s);

struct EnumerationBounds {
  int max_n = 3;
  std::vector<int> r_values{1, 2};
  std::vector<Integer> ells{2, 3, 5, 7, 11};
  /// Strict mode drops (G_v, I_v) that tame ramification cannot produce:
  /// I_v = C_p with l != p needs q = 1 mod p (G_v = C_p) or q = -1 mod p (G_v = D_2p).
  bool strict = false;
};

/// Every admissible setting within bounds, once each, in a fixed order.
/// Throws InadmissibleSettingError for p < 5 or p not prime.
std::vector<LocalSetting> enumerate_settings(int p, const EnumerationBounds& bounds);
/// Whether strict mode keeps the setting.
bool realizable_by_tame_inertia(const LocalSetting& s);

/// Rows e = 6, 4, 3, 2; columns p mod 12 = 1, 5, 7, 11.
using ParityTable = std::array<std::array<int, 4>, 4>;
inline constexpr std::array<int, 4> kTableDefects{6, 4, 3, 2};
inline constexpr std::array<int, 4> kTableResidues{1, 5, 7, 11};
/// The table of signs for potentially good reduction with l = p, r odd, I_v = D_2p.
inline constexpr ParityTable kPrintedTable{{{1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, 1, 1, 1}}};

enum class TableRoute { CParity, WRatio };
/// Builds the table by evaluating the chosen route over every delta of each
/// row and every listed prime of each residue class; an entry is 0 if those
/// evaluations disagree.
ParityTable generate_table(TableRoute route, const std::vector<int>& primes = {13, 37, 61, 5, 17, 29, 7, 19, 31, 11, 23, 47});

/// Per-prime local data supplied for a global computation.
struct Completion {
  SubgroupTag g_v = SubgroupTag::trivial();
  SubgroupTag i_v = SubgroupTag::trivial();
  std::optional<bool> eta_equals_chi;
};

struct GlobalPrimeResult {
  Integer ell;
  LocalSetting setting;
  LocalVerdict verdict;
};

struct GlobalVerdict {
  int w_product = 1;
  int c_product = 1;
  bool equal = true;
  std::vector<GlobalPrimeResult> primes;
};

/// Reduction descriptor of E at ell from Tate's algorithm.
BaseReduction base_reduction(const WeierstrassCurve& e, const Integer& ell);
/// Primes of bad reduction; throws UnsupportedCaseError if the discriminant cannot be factored.
std::vector<Integer> bad_primes(const WeierstrassCurve& e);

/// Products over the bad primes of E. Throws InadmissibleSettingError if a bad
/// prime is missing from the completion; completion entries at good primes are skipped.
GlobalVerdict global_parity(const WeierstrassCurve& e, int p, const std::map<Integer, Completion>& completion);

}  // namespace dparity
