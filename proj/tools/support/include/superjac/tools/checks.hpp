#pragma once

#include <string>
#include <vector>

#include "superjac/tools/json_io.hpp"

namespace superjac::checks {

struct Config {
  std::uint64_t seed = 0x5eedULL;
  std::uint64_t scan_bound = kDefaultScanBound;
  unsigned ext_cap = kDefaultExtensionCap;
};

// Degree bounds asserted on every pipeline step it observes: deg F <= m + g
// (3g when m = 2g) and an interpolation curve supported on the first m + 1
// basis monomials.
class DegreeAudit {
 public:
  void record(const SuperellipticCurve& c, const StepCertificate& cert);
  PipelineOptions options(const Config& cfg);

  std::size_t steps = 0;
  std::size_t full_steps = 0;    // m = 2g
  std::size_t full_at_bound = 0; // m = 2g and deg F = 3g
  std::size_t violations = 0;
  std::vector<std::string> messages;
};

struct Result {
  int criterion = 0;
  std::string name;
  bool passed = true;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> failures;
  io::json stats = io::json::object();

  void check(bool ok, const std::string& what);
  std::string line(bool with_time = true) const;
};

SuperellipticCurve hyperelliptic_test_curve(std::uint64_t p, int g);  // y^2 = x^(2g+1) + 3x + 1
SuperellipticCurve picard_test_curve(std::uint64_t p);                // y^3 = x^4 + x + 1

Result basis_fidelity();
Result gap_theorem();
Result cantor_equivalence(const Config& cfg, DegreeAudit& audit);
Result group_axioms(const Config& cfg, DegreeAudit& audit);
Result order_annihilation(const Config& cfg, DegreeAudit& audit);
Result field_of_definition(const Config& cfg, DegreeAudit& audit);
Result formula_equivalences(const Config& cfg, DegreeAudit& audit);
Result symmetric_and_lagrange(const Config& cfg);
Result degree_bounds(const DegreeAudit& audit);
Result exhaustive_tier(const Config& cfg);

// basis, cantor, axioms, annihilation, formulas.
const std::vector<std::string>& tier_names();
// Throws PreconditionFailed for an unknown tier.
std::vector<Result> run_tier(const std::string& tier, const Config& cfg);
// Criteria 1 to 10 in order.
std::vector<Result> run_acceptance(const Config& cfg);

}  // namespace superjac::checks
