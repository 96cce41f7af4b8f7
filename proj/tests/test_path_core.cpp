#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "pathbij/enumeration.hpp"
#include "pathbij/path_core.hpp"
#include "test_support.hpp"

using namespace pathbij;

namespace {

// Oracle: pattern occurrences as plain text windows, independent of the
// statistics pass.
std::size_t window_count(const std::string& text, const std::string& pattern) {
  std::size_t count = 0;
  if (text.size() < pattern.size()) return 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
    if (text.compare(i, pattern.size(), pattern) == 0) ++count;
  return count;
}

// Oracle: parenthesis matching with an explicit stack over the text.
std::size_t stack_match(const std::string& text, std::size_t up) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U') {
      open.push_back(i);
    } else if (text[i] == 'D') {
      const std::size_t top = open.back();
      open.pop_back();
      if (top == up) return i;
    }
  }
  REQUIRE(false);
  return 0;
}

// Oracle: eastward-ray simulation on the text with a 'D' appended.  Returns
// the index of the associated downstep, or the appended position.
std::size_t ray_oracle(const std::string& text, std::size_t flat) {
  const std::string extended = text + 'D';
  int level = 0;
  for (std::size_t i = 0; i < flat; ++i)
    level += extended[i] == 'U' ? 1 : extended[i] == 'D' ? -1 : 0;
  int height = level;
  for (std::size_t j = flat + 1; j < extended.size(); ++j) {
    if (extended[j] == 'D' && height == level) return j;
    height += extended[j] == 'U' ? 1 : extended[j] == 'D' ? -1 : 0;
  }
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("parse_path accepts the documented examples") {
  const LatticePath empty = parse_path("", PathFamily::Dyck);
  CHECK(empty.empty());
  CHECK(empty.size() == 0);
  CHECK(empty.family() == PathFamily::Dyck);

  const LatticePath example = parse_path("UUDUDUUDDD", PathFamily::Dyck);
  CHECK(example.size() == 5);
  CHECK(example.length() == 10);

  const LatticePath motzkin = parse_path("UFD", PathFamily::Motzkin);
  CHECK(motzkin.size() == 3);

  const LatticePath green = parse_path("G", PathFamily::BicoloredMotzkin);
  CHECK(green.size() == 1);
}

TEST_CASE("parse_path rejects malformed text") {
  CHECK_PATH_ERROR(parse_path("UUDUD", PathFamily::Dyck), Errc::UnbalancedPath);
  CHECK_PATH_ERROR(parse_path("UDD", PathFamily::Motzkin), Errc::NegativePrefix);
  CHECK_PATH_ERROR(parse_path("UXD", PathFamily::Dyck), Errc::IllegalCharacter);
  CHECK_PATH_ERROR(parse_path("UFD", PathFamily::Dyck), Errc::FamilyViolation);
  CHECK_PATH_ERROR(parse_path("UGD", PathFamily::Motzkin), Errc::FamilyViolation);
  CHECK_PATH_ERROR(parse_path("DU", PathFamily::Dyck), Errc::NegativePrefix);

  try {
    parse_path("UUxDD", PathFamily::Dyck);
    FAIL("expected IllegalCharacter");
  } catch (const PathError& e) {
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 2);
  }
}

TEST_CASE("render_path inverts parse_path") {
  CHECK(render_path(parse_path("", PathFamily::Motzkin)) == "");
  CHECK(render_path(parse_path("UUDUDUUDDD", PathFamily::Dyck)) ==
        "UUDUDUUDDD");
  CHECK(render_path(parse_path("G", PathFamily::BicoloredMotzkin)) == "G");
}

TEST_CASE("parse/render round-trips over every small path") {
  for (PathFamily family : {PathFamily::Dyck, PathFamily::Motzkin,
                            PathFamily::BicoloredMotzkin}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for_each_path(family, n, [&](const LatticePath& path) {
        const std::string text = render_path(path);
        CHECK(parse_path(text, family) == path);
      });
    }
  }
}

TEST_CASE("matching_downstep frozen examples") {
  const LatticePath nested = parse_path("UUDD", PathFamily::Dyck);
  CHECK(matching_downstep(nested, 0) == StepIndex::at(3));
  CHECK(matching_downstep(nested, 1) == StepIndex::at(2));

  const LatticePath adjacent = parse_path("UDUD", PathFamily::Dyck);
  CHECK(matching_downstep(adjacent, 2) == StepIndex::at(3));

  const LatticePath example = parse_path("UUDUDUUDDD", PathFamily::Dyck);
  CHECK(matching_downstep(example, 0) == StepIndex::at(9));

  CHECK_PATH_ERROR(matching_downstep(nested, 2), Errc::NotAnUpstep);
  CHECK_PATH_ERROR(matching_downstep(nested, 17), Errc::NotAnUpstep);
}

TEST_CASE("matching_downstep agrees with the stack oracle and is a "
          "non-crossing pairing") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_path(PathFamily::Dyck, n, [&](const LatticePath& path) {
      const std::string text = render_path(path);
      std::set<std::size_t> downs;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < path.length(); ++i) {
        if (path.steps()[i] != StepKind::Up) continue;
        const std::size_t j = matching_downstep(path, i).pos();
        CHECK(j == stack_match(text, i));
        CHECK(downs.insert(j).second);  // injective
        pairs.emplace_back(i, j);
      }
      CHECK(downs.size() == n);  // covers every downstep
      for (const auto& [a1, b1] : pairs)
        for (const auto& [a2, b2] : pairs)
          CHECK(!(a1 < a2 && a2 < b1 && b1 < b2));  // nested or disjoint
    });
  }
}

TEST_CASE("associated_downstep on the labeled example path") {
  const LatticePath path =
      parse_path("UUDFUFDGDUDFUD", PathFamily::BicoloredMotzkin);
  CHECK(associated_downstep(path, 3) == StepIndex::at(8));
  CHECK(associated_downstep(path, 5) == StepIndex::at(6));
  CHECK(associated_downstep(path, 11) == StepIndex::appended_down());
  CHECK(associated_downstep(path, 7) == StepIndex::at(8));  // the green flat

  CHECK_PATH_ERROR(associated_downstep(path, 0), Errc::NotAFlatstep);
  CHECK_PATH_ERROR(associated_downstep(path, 99), Errc::NotAFlatstep);
}

TEST_CASE("associated_downstep agrees with the ray oracle; ground flats hit "
          "the appended downstep") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_path(PathFamily::BicoloredMotzkin, n, [&](const LatticePath& path) {
      const std::string text = render_path(path);
      const auto heights = start_heights(path);
      for (std::size_t i = 0; i < path.length(); ++i) {
        if (!is_flat(path.steps()[i])) continue;
        const StepIndex target = associated_downstep(path, i);
        const std::size_t oracle = ray_oracle(text, i);
        if (oracle == text.size()) {
          CHECK(target.is_appended_down());
          CHECK(heights[i] == 0);
        } else {
          CHECK(target == StepIndex::at(oracle));
        }
      }
    });
  }
}

TEST_CASE("compute_statistics frozen examples") {
  const PathStatistics udud =
      compute_statistics(parse_path("UDUD", PathFamily::Dyck));
  CHECK(udud.udu_count == 1);
  CHECK(udud.ddu_count == 0);

  const PathStatistics big = compute_statistics(parse_path(
      "UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD", PathFamily::Dyck));
  CHECK(big.udu_count == 1);
  CHECK(big.ddu_count == 5);

  const PathStatistics terminal =
      compute_statistics(parse_path("UUDDUD", PathFamily::Dyck));
  CHECK(terminal.short_nonterminal_descent_count == 0);
  CHECK(terminal.descent_count == 2);

  const PathStatistics ground =
      compute_statistics(parse_path("FUD", PathFamily::Motzkin));
  CHECK(ground.ground_flat_count == 1);
  CHECK(ground.black_flat_count == 1);

  // overlapping windows both count
  CHECK(compute_statistics(parse_path("UDUDUD", PathFamily::Dyck)).udu_count ==
        2);

  CHECK(compute_statistics(LatticePath{}) == PathStatistics{});
}

TEST_CASE("pattern counts agree with the text-window oracle") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_path(PathFamily::BicoloredMotzkin, n, [&](const LatticePath& path) {
      const std::string text = render_path(path);
      const PathStatistics stats = compute_statistics(path);
      CHECK(stats.udu_count == window_count(text, "UDU"));
      CHECK(stats.ddu_count == window_count(text, "DDU"));
      CHECK(stats.uuu_count == window_count(text, "UUU"));
      CHECK(stats.down_count == window_count(text, "D"));
      CHECK(stats.green_flat_count == window_count(text, "G"));
      CHECK(stats.black_flat_count == window_count(text, "F"));
    });
  }
}

TEST_CASE("UDU-free iff no short nonterminal descent, exhaustively") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_path(PathFamily::Dyck, n, [&](const LatticePath& path) {
      const PathStatistics stats = compute_statistics(path);
      CHECK((stats.udu_count == 0) ==
            (stats.short_nonterminal_descent_count == 0));
    });
  }
}

TEST_CASE("has_short_descent counts the terminal descent too") {
  CHECK(!has_short_descent(parse_path("", PathFamily::Dyck)));
  CHECK(has_short_descent(parse_path("UD", PathFamily::Dyck)));
  CHECK(!has_short_descent(parse_path("UUDD", PathFamily::Dyck)));
  CHECK(has_short_descent(parse_path("UUDDUD", PathFamily::Dyck)));
  CHECK(has_short_descent(parse_path("UDUUDD", PathFamily::Dyck)));
}

TEST_CASE("start_heights stays nonnegative and closes at ground level") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_path(PathFamily::BicoloredMotzkin, n, [&](const LatticePath& path) {
      const auto heights = start_heights(path);
      int final_height = 0;
      for (std::size_t i = 0; i < path.length(); ++i) {
        CHECK(heights[i] >= 0);
        final_height = heights[i] + step_rise(path.steps()[i]);
        CHECK(final_height >= 0);
      }
      CHECK(final_height == 0);
    });
  }
}

TEST_CASE("StepIndex sentinel") {
  CHECK(StepIndex::appended_down().is_appended_down());
  CHECK(!StepIndex::at(3).is_appended_down());
  CHECK(StepIndex::at(3).pos() == 3);
  CHECK(StepIndex::at(3) != StepIndex::appended_down());
  CHECK_PATH_ERROR(StepIndex::appended_down().pos(), Errc::InternalError);
}

TEST_CASE("render_ascii draws slopes and colored flats") {
  CHECK(render_ascii(LatticePath{}) == "");
  CHECK(render_ascii(parse_path("UD", PathFamily::Dyck)) == "/\\\n");
  CHECK(render_ascii(parse_path("UFD", PathFamily::Motzkin)) == " _\n/ \\\n");
  CHECK(render_ascii(parse_path("G", PathFamily::BicoloredMotzkin)) == "~\n");
}
