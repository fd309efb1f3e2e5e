#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjtor {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A quick pass over the main invariants: preset validation, kernel
/// equivalence, Fox vs chain-complex torsion, the figure-eight closed forms,
/// vanishing for every built-in preset, Khovanskii hypotheses and the twisted
/// index.  Prints one line per check.
std::vector<SelftestCheck> run_selftest(std::ostream& out);

}  // namespace adjtor
