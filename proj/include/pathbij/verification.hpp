#ifndef PATHBIJ_VERIFICATION_HPP
#define PATHBIJ_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pathbij/enumeration.hpp"

namespace pathbij {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Exhaustively checks every library invariant over all paths of size up to
// max_n.  Deterministic: identical results for identical arguments.
std::vector<CheckResult> run_invariant_suite(std::size_t max_n,
                                             std::uint64_t cap = kDefaultPathCap);

}  // namespace pathbij

#endif
