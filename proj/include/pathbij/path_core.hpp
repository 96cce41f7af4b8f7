#ifndef PATHBIJ_PATH_CORE_HPP
#define PATHBIJ_PATH_CORE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pathbij/error.hpp"

namespace pathbij {

// One lattice step: U=(1,1), D=(1,-1), or a flatstep (1,0) in one of two
// colors.  Green flatsteps exist only in the bicolored family.
enum class StepKind : unsigned char { Up, Down, FlatBlack, FlatGreen };

enum class PathFamily : unsigned char { Dyck, Motzkin, BicoloredMotzkin };

char step_char(StepKind kind);
int step_rise(StepKind kind);  // +1 for Up, -1 for Down, 0 for flats
bool is_flat(StepKind kind);
const char* family_name(PathFamily family);

// A validated step sequence: #Up equals #Down, no prefix dips below ground
// level, and the token set obeys the family (Dyck: no flats; Motzkin: black
// flats only).  Dyck paths measure their size in semilength (2*size steps);
// the other families in steps.  The empty path belongs to every family.
class LatticePath {
 public:
  LatticePath() = default;  // empty Dyck path

  static LatticePath from_steps(std::vector<StepKind> steps, PathFamily family);

  const std::vector<StepKind>& steps() const noexcept { return steps_; }
  PathFamily family() const noexcept { return family_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t size() const noexcept {
    return family_ == PathFamily::Dyck ? steps_.size() / 2 : steps_.size();
  }
  bool empty() const noexcept { return steps_.empty(); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  LatticePath(std::vector<StepKind> steps, PathFamily family)
      : steps_(std::move(steps)), family_(family) {}

  std::vector<StepKind> steps_;
  PathFamily family_ = PathFamily::Dyck;
};

// Text grammar: one character per step, U=up, D=down, F=black flat,
// G=green flat.  The family is always supplied by the caller, never
// inferred from the text.
LatticePath parse_path(std::string_view text, PathFamily family);
std::string render_path(const LatticePath& path);

// Height of the path before each step; the height after step i is
// start_heights(path)[i] + step_rise(path.steps()[i]).
std::vector<int> start_heights(const LatticePath& path);

// A 0-based step position, or the virtual downstep appended past the end of
// the path (used by associated_downstep for ground-level flatsteps).
class StepIndex {
 public:
  static StepIndex at(std::size_t pos) { return StepIndex(pos); }
  static StepIndex appended_down() { return StepIndex(kAppended); }

  bool is_appended_down() const noexcept { return pos_ == kAppended; }
  std::size_t pos() const;

  friend bool operator==(StepIndex, StepIndex) = default;

 private:
  explicit StepIndex(std::size_t pos) : pos_(pos) {}
  static constexpr std::size_t kAppended = static_cast<std::size_t>(-1);
  std::size_t pos_;
};

// First downstep east of the upstep at up_index that returns to the
// upstep's starting level.  Always exists in a balanced path.
StepIndex matching_downstep(const LatticePath& path, std::size_t up_index);

// First downstep east of the flatstep at flat_index whose initial point
// lies on the flatstep's eastward ray.  Ground-level flatsteps have no such
// interior downstep and answer with the appended-downstep sentinel.
StepIndex associated_downstep(const LatticePath& path, std::size_t flat_index);

struct PathStatistics {
  std::size_t udu_count = 0;
  std::size_t ddu_count = 0;
  std::size_t uuu_count = 0;
  std::size_t green_flat_count = 0;
  std::size_t black_flat_count = 0;
  std::size_t down_count = 0;
  std::size_t descent_count = 0;                   // maximal downstep runs
  std::size_t short_nonterminal_descent_count = 0;  // length-1 runs not ending the path
  std::size_t ground_flat_count = 0;               // flatsteps at height 0

  friend bool operator==(const PathStatistics&, const PathStatistics&) = default;
};

// Pattern counts (UDU/DDU/UUU) are occurrences at consecutive positions and
// may overlap: UDUDUD contains two UDUs.
PathStatistics compute_statistics(const LatticePath& path);

// True if any maximal downstep run has length 1, the terminal descent
// included.
bool has_short_descent(const LatticePath& path);

// Plain-text picture of the path, one row per height band; green flats
// render as '~'.
std::string render_ascii(const LatticePath& path);

}  // namespace pathbij

#endif
