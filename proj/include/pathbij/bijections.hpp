#ifndef PATHBIJ_BIJECTIONS_HPP
#define PATHBIJ_BIJECTIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathbij/path_core.hpp"

namespace pathbij {

// UUU-free Dyck n-path -> Motzkin n-path: each UUD block becomes an upstep,
// each remaining UD pair becomes a flatstep, leftover downsteps pass
// through.
LatticePath t1_forward(const LatticePath& path);

// Motzkin n-path -> UUU-free Dyck n-path: U -> UUD, F -> UD, D -> D.
LatticePath t1_inverse(const LatticePath& path);

// Pair-encoding bijection from bicolored Motzkin n-paths onto Dyck
// (n+1)-paths: U -> UU, D -> DD, black flat -> UD, green flat -> DU, then
// prepend an upstep and append a downstep.
LatticePath std_bijection(const LatticePath& path);
LatticePath std_bijection_inverse(const LatticePath& path);

// Statistic-transporting bijection from bicolored Motzkin n-paths onto Dyck
// (n+1)-paths.  With a downstep appended as a convenience:
//   1. upsteps stay,
//   2. each downstep D becomes UDD (the appended one included),
//   3. each green flat becomes UD,
//   4. each black flat becomes U, with a downstep inserted immediately
//      before its associated downstep,
// and the appended downstep, which remains undisturbed, is finally deleted.
// Green flats of the input become the UDUs of the output and downsteps of
// the input become the DDUs of the output.
LatticePath t2_forward(const LatticePath& path);

// Same map, but processes the black flats one at a time in the caller's
// order, doing literal insertions.  The result never depends on the order;
// exists so that order-independence can be checked rather than assumed.
// black_flat_order must list every black-flat position exactly once.
LatticePath t2_forward_ordered(const LatticePath& path,
                               std::span<const std::size_t> black_flat_order);

// Inverse of t2_forward.  On the input with a downstep re-appended, green
// flats are recaptured as peak UDs followed by an upstep, downsteps as the
// UD..D groups guarding each descent, black flats as upsteps whose matching
// downstep sits in the interior of a descent of length >= 3, and original
// upsteps as upsteps where both the upstep and its matching downstep are
// followed by an upstep.
LatticePath t2_inverse(const LatticePath& path);

// t2_forward restricted to Motzkin paths (no green flats): a bijection onto
// UDU-free Dyck (n+1)-paths.
LatticePath restrict_motzkin_to_udu_free(const LatticePath& path);
LatticePath udu_free_dyck_to_motzkin(const LatticePath& path);

// Motzkin n-paths with no ground-level flatsteps map to UDU-free Dyck
// (n+1)-paths ending in UD; dropping that trailing UD yields Dyck n-paths
// with no short descents at all.
LatticePath riordan_to_no_short_descent(const LatticePath& path);
LatticePath no_short_descent_to_riordan(const LatticePath& path);

struct TransportedStat {
  std::string input_stat;
  std::string output_stat;
  std::uint64_t input_value = 0;
  std::uint64_t output_value = 0;
};

struct BijectionReport {
  LatticePath input;
  LatticePath output;
  std::vector<TransportedStat> transported_stats;
};

// t2_forward together with the two statistics it transports.
BijectionReport t2_report(const LatticePath& path);

}  // namespace pathbij

#endif
