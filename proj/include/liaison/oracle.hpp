// Brute-force verification engine: exhaustive small-window enumeration of
// admissible characters, claim checking with replayable counterexamples,
// and closed-form h^0 oracles for the fixture subschemes.  Claim kernels
// run either serially or OpenMP-parallel; reports are deterministic and
// identical across modes.
#ifndef LIAISON_ORACLE_HPP
#define LIAISON_ORACLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liaison/linkage.hpp"
#include "liaison/resolution.hpp"

#include <json.hpp>

namespace liaison {

struct SearchWindow {
  Deg lo = 0;
  Deg hi = 5;
  Val max_abs = 3;
  Deg max_height = 3;
};

enum class RunMode { serial, parallel };

// Every admissible character with support inside [lo, hi] and values
// bounded by max_abs, each exactly once, sorted by entry list.
std::vector<AdmissibleCharacter> enumerate_admissible(const SearchWindow& w,
                                                      RunMode mode = RunMode::parallel);

struct ClaimReport {
  std::string claim;
  unsigned long long instances = 0;
  std::vector<nlohmann::json> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

const std::vector<std::string>& claim_names();

ClaimReport check_claim(std::string_view claim, const SearchWindow& w,
                        RunMode mode = RunMode::parallel);

// Closed-form h^0 of the ideal sheaf for the recognized fixture schemes.
struct OracleConfig {
  enum class Kind { line, ci, disjoint_lines, four_lines_on_quadric, seminatural };
  Kind kind = Kind::line;
  Deg a = 0, b = 0;  // ci degrees
  int d = 0;         // number of lines / curve degree
  Val genus = 0;     // seminatural curve genus
};

// Accepts "line", "ci(a,b)", "disjoint-lines(d)", "four-lines-on-quadric",
// "seminatural(d,g)".
OracleConfig parse_oracle_config(std::string_view text);

long long hilbert_oracle(const OracleConfig& config, Deg l);

// Character of the fixture: third difference of the h^0 oracle minus the
// step function, taken over a window wide enough to see the zero tail.
AdmissibleCharacter gamma_from_oracle(const OracleConfig& config);

namespace fixtures {

// Two disjoint lines; t1 = 2, e = -2, self-dual.
LinkageClass skew_lines();
// Four disjoint lines on a smooth quadric; t1 = 4, e = -1, self-dual.
LinkageClass four_lines_on_quadric();
// Degree-10 seminatural rational curve; s0 = 5, e = -1.
LinkageClass seminatural_degree10();
// Synthetic class with s0 = 2, s1 = 3, t1 = 5.
LinkageClass synthetic_s1_lt_t1();

// Minimal N-shape resolution of the two-skew-lines class, with dual core.
ResolutionData skew_minimal_n_type();

// All valid models of the class with the given height cap and theta
// support cap, sorted; the standard exhaustive test family.
std::vector<SubschemeModel> model_family(const LinkageClass& cls, Deg max_h,
                                         Deg theta_hi);

}  // namespace fixtures

}  // namespace liaison

#endif
