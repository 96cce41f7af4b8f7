#include "pathbij/path_core.hpp"

#include <algorithm>

namespace pathbij {

char step_char(StepKind kind) {
  switch (kind) {
    case StepKind::Up: return 'U';
    case StepKind::Down: return 'D';
    case StepKind::FlatBlack: return 'F';
    case StepKind::FlatGreen: return 'G';
  }
  return '?';
}

int step_rise(StepKind kind) {
  switch (kind) {
    case StepKind::Up: return 1;
    case StepKind::Down: return -1;
    case StepKind::FlatBlack:
    case StepKind::FlatGreen: return 0;
  }
  return 0;
}

bool is_flat(StepKind kind) {
  return kind == StepKind::FlatBlack || kind == StepKind::FlatGreen;
}

const char* family_name(PathFamily family) {
  switch (family) {
    case PathFamily::Dyck: return "dyck";
    case PathFamily::Motzkin: return "motzkin";
    case PathFamily::BicoloredMotzkin: return "bicolored";
  }
  return "?";
}

LatticePath LatticePath::from_steps(std::vector<StepKind> steps,
                                    PathFamily family) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const StepKind kind = steps[i];
    if (kind == StepKind::FlatGreen && family != PathFamily::BicoloredMotzkin)
      throw PathError(Errc::FamilyViolation,
                      "green flatstep outside the bicolored family", i);
    if (kind == StepKind::FlatBlack && family == PathFamily::Dyck)
      throw PathError(Errc::FamilyViolation, "flatstep in a Dyck path", i);
    height += step_rise(kind);
    if (height < 0)
      throw PathError(Errc::NegativePrefix, "path dips below ground level", i);
  }
  if (height != 0)
    throw PathError(Errc::UnbalancedPath,
                    "upsteps and downsteps do not balance");
  return LatticePath(std::move(steps), family);
}

LatticePath parse_path(std::string_view text, PathFamily family) {
  std::vector<StepKind> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(StepKind::Up); break;
      case 'D': steps.push_back(StepKind::Down); break;
      case 'F': steps.push_back(StepKind::FlatBlack); break;
      case 'G': steps.push_back(StepKind::FlatGreen); break;
      default:
        throw PathError(Errc::IllegalCharacter,
                        std::string("unexpected character '") + text[i] + "'",
                        i);
    }
  }
  return LatticePath::from_steps(std::move(steps), family);
}

std::string render_path(const LatticePath& path) {
  std::string text;
  text.reserve(path.length());
  for (StepKind kind : path.steps()) text.push_back(step_char(kind));
  return text;
}

std::vector<int> start_heights(const LatticePath& path) {
  std::vector<int> heights(path.length());
  int height = 0;
  for (std::size_t i = 0; i < path.length(); ++i) {
    heights[i] = height;
    height += step_rise(path.steps()[i]);
  }
  return heights;
}

std::size_t StepIndex::pos() const {
  if (is_appended_down())
    throw PathError(Errc::InternalError,
                    "appended-downstep sentinel has no position");
  return pos_;
}

StepIndex matching_downstep(const LatticePath& path, std::size_t up_index) {
  const auto& steps = path.steps();
  if (up_index >= steps.size() || steps[up_index] != StepKind::Up)
    throw PathError(Errc::NotAnUpstep, "step is not an upstep", up_index);
  const auto heights = start_heights(path);
  const int target = heights[up_index] + 1;
  for (std::size_t j = up_index + 1; j < steps.size(); ++j)
    if (steps[j] == StepKind::Down && heights[j] == target)
      return StepIndex::at(j);
  throw PathError(Errc::InternalError,
                  "balanced path lacks a matching downstep", up_index);
}

StepIndex associated_downstep(const LatticePath& path, std::size_t flat_index) {
  const auto& steps = path.steps();
  if (flat_index >= steps.size() || !is_flat(steps[flat_index]))
    throw PathError(Errc::NotAFlatstep, "step is not a flatstep", flat_index);
  const auto heights = start_heights(path);
  const int level = heights[flat_index];
  for (std::size_t j = flat_index + 1; j < steps.size(); ++j)
    if (steps[j] == StepKind::Down && heights[j] == level)
      return StepIndex::at(j);
  // Only the virtual downstep appended at ground level is left; an interior
  // downstep from any higher ray would have been found above.
  if (level != 0)
    throw PathError(Errc::InternalError,
                    "flatstep ray above ground level escaped the path",
                    flat_index);
  return StepIndex::appended_down();
}

PathStatistics compute_statistics(const LatticePath& path) {
  const auto& steps = path.steps();
  const std::size_t len = steps.size();
  const auto heights = start_heights(path);
  PathStatistics stats;

  for (std::size_t i = 0; i < len; ++i) {
    switch (steps[i]) {
      case StepKind::Up: break;
      case StepKind::Down: ++stats.down_count; break;
      case StepKind::FlatBlack:
        ++stats.black_flat_count;
        if (heights[i] == 0) ++stats.ground_flat_count;
        break;
      case StepKind::FlatGreen:
        ++stats.green_flat_count;
        if (heights[i] == 0) ++stats.ground_flat_count;
        break;
    }
    if (i + 2 < len) {
      const StepKind a = steps[i], b = steps[i + 1], c = steps[i + 2];
      if (a == StepKind::Up && b == StepKind::Down && c == StepKind::Up)
        ++stats.udu_count;
      if (a == StepKind::Down && b == StepKind::Down && c == StepKind::Up)
        ++stats.ddu_count;
      if (a == StepKind::Up && b == StepKind::Up && c == StepKind::Up)
        ++stats.uuu_count;
    }
  }

  std::size_t i = 0;
  while (i < len) {
    if (steps[i] != StepKind::Down) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < len && steps[j + 1] == StepKind::Down) ++j;
    ++stats.descent_count;
    if (j == i && j + 1 != len) ++stats.short_nonterminal_descent_count;
    i = j + 1;
  }
  return stats;
}

bool has_short_descent(const LatticePath& path) {
  const auto& steps = path.steps();
  const std::size_t len = steps.size();
  std::size_t i = 0;
  while (i < len) {
    if (steps[i] != StepKind::Down) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < len && steps[j + 1] == StepKind::Down) ++j;
    if (j == i) return true;
    i = j + 1;
  }
  return false;
}

std::string render_ascii(const LatticePath& path) {
  const auto& steps = path.steps();
  if (steps.empty()) return "";
  const auto heights = start_heights(path);

  std::size_t rows = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int h = heights[i];
    const std::size_t need =
        steps[i] == StepKind::Down ? static_cast<std::size_t>(h)
                                   : static_cast<std::size_t>(h) + 1;
    rows = std::max(rows, need);
  }

  std::vector<std::string> canvas(rows, std::string(steps.size(), ' '));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int h = heights[i];
    switch (steps[i]) {
      case StepKind::Up: canvas[h][i] = '/'; break;
      case StepKind::Down: canvas[h - 1][i] = '\\'; break;
      case StepKind::FlatBlack: canvas[h][i] = '_'; break;
      case StepKind::FlatGreen: canvas[h][i] = '~'; break;
    }
  }

  std::string art;
  for (std::size_t r = rows; r-- > 0;) {
    std::string& line = canvas[r];
    line.erase(line.find_last_not_of(' ') + 1);
    art += line;
    art += '\n';
  }
  return art;
}

}  // namespace pathbij
