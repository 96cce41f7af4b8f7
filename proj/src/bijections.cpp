#include "pathbij/bijections.hpp"

#include <algorithm>
#include <utility>

namespace pathbij {

namespace {

constexpr std::size_t kNoMatch = static_cast<std::size_t>(-1);

void require_no_flats(const LatticePath& path) {
  const auto& steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (is_flat(steps[i]))
      throw PathError(Errc::NotDyck, "path contains a flatstep", i);
}

void require_no_greens(const LatticePath& path, Errc code) {
  const auto& steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == StepKind::FlatGreen)
      throw PathError(code, "path contains a green flatstep", i);
}

// Rule-4 targets: extra_downs[j] downsteps go immediately before step j,
// extra_downs[n] immediately before the appended downstep.
std::vector<std::size_t> rule4_targets(const LatticePath& path) {
  const std::size_t n = path.length();
  std::vector<std::size_t> extra_downs(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (path.steps()[i] != StepKind::FlatBlack) continue;
    const StepIndex target = associated_downstep(path, i);
    ++extra_downs[target.is_appended_down() ? n : target.pos()];
  }
  return extra_downs;
}

}  // namespace

LatticePath t1_forward(const LatticePath& path) {
  require_no_flats(path);
  if (compute_statistics(path).uuu_count != 0)
    throw PathError(Errc::NotUUUFree, "path contains a UUU");

  const auto& steps = path.steps();
  std::vector<StepKind> out;
  out.reserve(path.size());
  std::size_t i = 0;
  while (i < steps.size()) {
    if (steps[i] == StepKind::Down) {
      out.push_back(StepKind::Down);
      ++i;
      continue;
    }
    // A UUU-free balanced path follows an upstep run of length 1 with D and
    // a run of length 2 with D as well.
    if (i + 1 < steps.size() && steps[i + 1] == StepKind::Up) {
      if (i + 2 >= steps.size() || steps[i + 2] != StepKind::Down)
        throw PathError(Errc::InternalError, "UU not followed by D", i);
      out.push_back(StepKind::Up);
      i += 3;
    } else {
      if (i + 1 >= steps.size() || steps[i + 1] != StepKind::Down)
        throw PathError(Errc::InternalError, "U not followed by D", i);
      out.push_back(StepKind::FlatBlack);
      i += 2;
    }
  }
  return LatticePath::from_steps(std::move(out), PathFamily::Motzkin);
}

LatticePath t1_inverse(const LatticePath& path) {
  require_no_greens(path, Errc::NotMotzkin);

  std::vector<StepKind> out;
  out.reserve(2 * path.length());
  for (StepKind kind : path.steps()) {
    switch (kind) {
      case StepKind::Up:
        out.insert(out.end(),
                   {StepKind::Up, StepKind::Up, StepKind::Down});
        break;
      case StepKind::FlatBlack:
        out.insert(out.end(), {StepKind::Up, StepKind::Down});
        break;
      case StepKind::Down:
        out.push_back(StepKind::Down);
        break;
      case StepKind::FlatGreen:
        break;  // excluded above
    }
  }
  return LatticePath::from_steps(std::move(out), PathFamily::Dyck);
}

LatticePath std_bijection(const LatticePath& path) {
  std::vector<StepKind> out;
  out.reserve(2 * path.length() + 2);
  out.push_back(StepKind::Up);
  for (StepKind kind : path.steps()) {
    switch (kind) {
      case StepKind::Up:
        out.insert(out.end(), {StepKind::Up, StepKind::Up});
        break;
      case StepKind::Down:
        out.insert(out.end(), {StepKind::Down, StepKind::Down});
        break;
      case StepKind::FlatBlack:
        out.insert(out.end(), {StepKind::Up, StepKind::Down});
        break;
      case StepKind::FlatGreen:
        out.insert(out.end(), {StepKind::Down, StepKind::Up});
        break;
    }
  }
  out.push_back(StepKind::Down);
  return LatticePath::from_steps(std::move(out), PathFamily::Dyck);
}

LatticePath std_bijection_inverse(const LatticePath& path) {
  require_no_flats(path);
  if (path.empty())
    throw PathError(Errc::NotDecodable,
                    "the empty path is not in the image of the map");
  const auto& steps = path.steps();
  if (steps.front() != StepKind::Up || steps.back() != StepKind::Down)
    throw PathError(Errc::InternalError,
                    "nonempty Dyck path must start with U and end with D");

  std::vector<StepKind> tokens;
  tokens.reserve((steps.size() - 2) / 2);
  for (std::size_t i = 1; i + 1 < steps.size(); i += 2) {
    const bool first_up = steps[i] == StepKind::Up;
    const bool second_up = steps[i + 1] == StepKind::Up;
    if (first_up && second_up) tokens.push_back(StepKind::Up);
    else if (!first_up && !second_up) tokens.push_back(StepKind::Down);
    else if (first_up) tokens.push_back(StepKind::FlatBlack);
    else tokens.push_back(StepKind::FlatGreen);
  }
  try {
    return LatticePath::from_steps(std::move(tokens),
                                   PathFamily::BicoloredMotzkin);
  } catch (const PathError&) {
    throw PathError(Errc::NotDecodable,
                    "decoded step pairs do not form a bicolored path");
  }
}

LatticePath t2_forward(const LatticePath& path) {
  const auto& steps = path.steps();
  const std::size_t n = steps.size();
  const std::vector<std::size_t> extra_downs = rule4_targets(path);

  std::vector<StepKind> out;
  out.reserve(2 * n + 2);
  for (std::size_t j = 0; j <= n; ++j) {
    const StepKind kind = j == n ? StepKind::Down : steps[j];
    switch (kind) {
      case StepKind::Up:
        out.push_back(StepKind::Up);
        break;
      case StepKind::FlatBlack:
        // its downstep lands at the associated target, collected below
        out.push_back(StepKind::Up);
        break;
      case StepKind::FlatGreen:
        out.insert(out.end(), {StepKind::Up, StepKind::Down});
        break;
      case StepKind::Down:
        out.insert(out.end(), {StepKind::Up, StepKind::Down});
        out.insert(out.end(), extra_downs[j], StepKind::Down);
        if (j != n) out.push_back(StepKind::Down);
        break;
    }
  }
  return LatticePath::from_steps(std::move(out), PathFamily::Dyck);
}

LatticePath t2_forward_ordered(const LatticePath& path,
                               std::span<const std::size_t> black_flat_order) {
  const auto& steps = path.steps();
  const std::size_t n = steps.size();

  std::vector<char> claimed(n, 0);
  std::size_t black_total = 0;
  for (StepKind kind : steps)
    if (kind == StepKind::FlatBlack) ++black_total;
  if (black_flat_order.size() != black_total)
    throw PathError(Errc::InternalError,
                    "processing order must cover every black flatstep");
  for (std::size_t f : black_flat_order) {
    if (f >= n || steps[f] != StepKind::FlatBlack || claimed[f])
      throw PathError(Errc::InternalError,
                      "processing order is not a permutation of the black "
                      "flatstep positions");
    claimed[f] = 1;
  }

  // One emitted segment per input position plus the appended downstep.
  std::vector<std::vector<StepKind>> segment(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    switch (steps[j]) {
      case StepKind::Up: segment[j] = {StepKind::Up}; break;
      case StepKind::Down:
        segment[j] = {StepKind::Up, StepKind::Down, StepKind::Down};
        break;
      case StepKind::FlatGreen:
        segment[j] = {StepKind::Up, StepKind::Down};
        break;
      case StepKind::FlatBlack:
        segment[j] = {StepKind::FlatBlack};  // replaced when processed
        break;
    }
  }
  segment[n] = {StepKind::Up, StepKind::Down, StepKind::Down};

  for (std::size_t f : black_flat_order) {
    const StepIndex target = associated_downstep(path, f);
    segment[f] = {StepKind::Up};
    auto& seg = segment[target.is_appended_down() ? n : target.pos()];
    seg.insert(seg.end() - 1, StepKind::Down);  // immediately before the D
  }
  segment[n].pop_back();  // the appended downstep remains undisturbed; drop it

  std::vector<StepKind> out;
  out.reserve(2 * n + 2);
  for (const auto& seg : segment) out.insert(out.end(), seg.begin(), seg.end());
  return LatticePath::from_steps(std::move(out), PathFamily::Dyck);
}

LatticePath t2_inverse(const LatticePath& path) {
  require_no_flats(path);
  if (path.empty())
    throw PathError(Errc::NotDecodable,
                    "the empty path is not in the image of the map");

  // Work on the path with the convenience downstep re-appended.
  std::vector<StepKind> ext(path.steps());
  ext.push_back(StepKind::Down);
  const std::size_t len = ext.size();

  std::vector<std::size_t> match(len, kNoMatch);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < len; ++i) {
    if (ext[i] == StepKind::Up) {
      open.push_back(i);
    } else if (!open.empty()) {
      match[open.back()] = i;
      match[i] = open.back();
      open.pop_back();
    } else if (i + 1 != len) {
      throw PathError(Errc::InternalError, "unmatched interior downstep", i);
    }
    // the re-appended downstep is the one legitimately unmatched step
  }

  // Maximal downstep runs.
  std::vector<std::size_t> run_start(len, kNoMatch), run_end(len, kNoMatch);
  for (std::size_t i = 0; i < len;) {
    if (ext[i] != StepKind::Down) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < len && ext[j + 1] == StepKind::Down) ++j;
    for (std::size_t p = i; p <= j; ++p) {
      run_start[p] = i;
      run_end[p] = j;
    }
    i = j + 1;
  }

  std::vector<char> consumed(len, 0);
  const auto consume = [&](std::size_t i) {
    if (consumed[i])
      throw PathError(Errc::NotDecodable, "step claimed by two rules", i);
    consumed[i] = 1;
  };

  std::vector<StepKind> tokens;
  for (std::size_t i = 0; i < len; ++i) {
    if (ext[i] != StepKind::Up) continue;
    const std::size_t j = match[i];
    if (j == kNoMatch)
      throw PathError(Errc::NotDecodable, "unmatched upstep", i);

    if (j == i + 1) {
      // A peak.  Followed by an upstep it is a recaptured green flat;
      // followed by a downstep it guards a descent whose last downstep is a
      // recaptured downstep of the original path.
      consume(i);
      consume(j);
      const std::size_t e = run_end[j];
      if (e == j) {
        tokens.push_back(StepKind::FlatGreen);
      } else {
        consume(e);
        if (e != len - 1) tokens.push_back(StepKind::Down);
        // e == len - 1 is the re-appended downstep: no token
      }
    } else {
      // An arch over at least one step; the next step is another upstep.
      consume(i);
      const std::size_t rs = run_start[j], re = run_end[j];
      if (j > rs && j < re) {
        // matching downstep in the interior of a descent of length >= 3
        consume(j);
        tokens.push_back(StepKind::FlatBlack);
      } else if (j == re && j + 1 < len && ext[j + 1] == StepKind::Up) {
        // both the upstep and its matching downstep are followed by upsteps
        tokens.push_back(StepKind::Up);
      } else {
        throw PathError(Errc::NotDecodable, "upstep fits no recapture rule",
                        i);
      }
    }
  }

  for (std::size_t i = 0; i < len; ++i)
    if (!consumed[i])
      throw PathError(Errc::NotDecodable, "step claimed by no rule", i);

  try {
    return LatticePath::from_steps(std::move(tokens),
                                   PathFamily::BicoloredMotzkin);
  } catch (const PathError&) {
    throw PathError(Errc::NotDecodable,
                    "recaptured steps do not form a bicolored path");
  }
}

LatticePath restrict_motzkin_to_udu_free(const LatticePath& path) {
  require_no_greens(path, Errc::HasGreenFlat);
  return t2_forward(path);
}

LatticePath udu_free_dyck_to_motzkin(const LatticePath& path) {
  require_no_flats(path);
  if (compute_statistics(path).udu_count != 0)
    throw PathError(Errc::NotDecodable,
                    "path contains a UDU; not in the restricted image");
  const LatticePath bicolored = t2_inverse(path);
  try {
    return LatticePath::from_steps(bicolored.steps(), PathFamily::Motzkin);
  } catch (const PathError&) {
    throw PathError(Errc::InternalError,
                    "UDU-free path decoded to a green flatstep");
  }
}

LatticePath riordan_to_no_short_descent(const LatticePath& path) {
  require_no_greens(path, Errc::HasGreenFlat);
  const PathStatistics stats = compute_statistics(path);
  if (stats.ground_flat_count != 0)
    throw PathError(Errc::HasGroundFlat,
                    "path contains a flatstep at ground level");

  const LatticePath image = t2_forward(path);
  const auto& steps = image.steps();
  if (steps.size() < 2 || steps[steps.size() - 2] != StepKind::Up ||
      steps.back() != StepKind::Down)
    throw PathError(Errc::InternalError,
                    "image of a ground-flat-free path must end with UD");
  std::vector<StepKind> trimmed(steps.begin(), steps.end() - 2);
  return LatticePath::from_steps(std::move(trimmed), PathFamily::Dyck);
}

LatticePath no_short_descent_to_riordan(const LatticePath& path) {
  require_no_flats(path);
  if (has_short_descent(path))
    throw PathError(Errc::NotDecodable, "path contains a short descent");

  std::vector<StepKind> extended(path.steps());
  extended.push_back(StepKind::Up);
  extended.push_back(StepKind::Down);
  const LatticePath bicolored = t2_inverse(
      LatticePath::from_steps(std::move(extended), PathFamily::Dyck));

  LatticePath motzkin = [&] {
    try {
      return LatticePath::from_steps(bicolored.steps(), PathFamily::Motzkin);
    } catch (const PathError&) {
      throw PathError(Errc::InternalError,
                      "UDU-free path decoded to a green flatstep");
    }
  }();
  if (compute_statistics(motzkin).ground_flat_count != 0)
    throw PathError(Errc::InternalError,
                    "path ending in UD decoded to a ground-level flatstep");
  return motzkin;
}

BijectionReport t2_report(const LatticePath& path) {
  BijectionReport report{path, t2_forward(path), {}};
  const PathStatistics in = compute_statistics(report.input);
  const PathStatistics out = compute_statistics(report.output);
  report.transported_stats = {
      {"green_flat_count", "udu_count", in.green_flat_count, out.udu_count},
      {"down_count", "ddu_count", in.down_count, out.ddu_count},
  };
  return report;
}

}  // namespace pathbij
