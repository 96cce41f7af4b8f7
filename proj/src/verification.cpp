#include "pathbij/verification.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "pathbij/bijections.hpp"

namespace pathbij {

namespace {

using Strings = std::set<std::string>;

struct Failure {
  std::string detail;
};

// Runs body over every n in [0, max_n]; a nonempty return aborts the check.
template <typename Body>
CheckResult run_check(const std::string& name, std::size_t max_n, Body body) {
  CheckResult result{name, true, ""};
  try {
    for (std::size_t n = 0; n <= max_n; ++n) {
      body(n);
    }
    std::ostringstream detail;
    detail << "n <= " << max_n;
    result.detail = detail.str();
  } catch (const Failure& f) {
    result.passed = false;
    result.detail = f.detail;
  } catch (const PathError& e) {
    result.passed = false;
    result.detail = std::string("unexpected error: ") + e.what();
  }
  return result;
}

void expect(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

Strings rendered_family(PathFamily family, std::size_t n, std::uint64_t cap) {
  Strings out;
  for_each_path(
      family, n,
      [&](const LatticePath& path) { out.insert(render_path(path)); }, cap);
  return out;
}

std::vector<std::size_t> black_flat_positions(const LatticePath& path) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < path.length(); ++i)
    if (path.steps()[i] == StepKind::FlatBlack) positions.push_back(i);
  return positions;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::size_t max_n,
                                             std::uint64_t cap) {
  std::vector<CheckResult> results;

  results.push_back(run_check(
      "parse-render-round-trip", max_n, [&](std::size_t n) {
        for (PathFamily family :
             {PathFamily::Dyck, PathFamily::Motzkin,
              PathFamily::BicoloredMotzkin}) {
          for_each_path(
              family, n,
              [&](const LatticePath& path) {
                const std::string text = render_path(path);
                expect(parse_path(text, family) == path,
                       "parse(render(p)) != p for " + text);
              },
              cap);
        }
      }));

  results.push_back(run_check(
      "udu-free-iff-no-short-nonterminal-descent", max_n, [&](std::size_t n) {
        for_each_path(
            PathFamily::Dyck, n,
            [&](const LatticePath& path) {
              const PathStatistics stats = compute_statistics(path);
              expect((stats.udu_count == 0) ==
                         (stats.short_nonterminal_descent_count == 0),
                     "mismatch on " + render_path(path));
            },
            cap);
      }));

  results.push_back(run_check(
      "matching-downstep-pairing", max_n, [&](std::size_t n) {
        for_each_path(
            PathFamily::Dyck, n,
            [&](const LatticePath& path) {
              std::vector<std::pair<std::size_t, std::size_t>> pairs;
              std::set<std::size_t> downs;
              for (std::size_t i = 0; i < path.length(); ++i) {
                if (path.steps()[i] != StepKind::Up) continue;
                const std::size_t j = matching_downstep(path, i).pos();
                expect(j > i && path.steps()[j] == StepKind::Down,
                       "match is not a later downstep");
                expect(downs.insert(j).second,
                       "two upsteps share a downstep in " + render_path(path));
                pairs.emplace_back(i, j);
              }
              expect(downs.size() == path.length() / 2,
                     "matching does not cover every downstep");
              for (const auto& [a1, b1] : pairs)
                for (const auto& [a2, b2] : pairs)
                  expect(!(a1 < a2 && a2 < b1 && b1 < b2),
                         "crossing pairs in " + render_path(path));
            },
            cap);
      }));

  results.push_back(run_check(
      "ground-flat-associated-with-appended-downstep", max_n,
      [&](std::size_t n) {
        for_each_path(
            PathFamily::BicoloredMotzkin, n,
            [&](const LatticePath& path) {
              const auto heights = start_heights(path);
              for (std::size_t i = 0; i < path.length(); ++i) {
                if (!is_flat(path.steps()[i])) continue;
                const StepIndex target = associated_downstep(path, i);
                if (heights[i] == 0) {
                  expect(target.is_appended_down(),
                         "ground flat with interior downstep in " +
                             render_path(path));
                } else {
                  expect(!target.is_appended_down() &&
                             heights[target.pos()] == heights[i],
                         "associated downstep off the ray in " +
                             render_path(path));
                }
              }
            },
            cap);
      }));

  results.push_back(run_check(
      "t1-bijection-round-trip", max_n, [&](std::size_t n) {
        Strings images;
        for_each_path(
            PathFamily::Dyck, n,
            [&](const LatticePath& path) {
              if (compute_statistics(path).uuu_count != 0) return;
              const LatticePath image = t1_forward(path);
              expect(image.size() == n, "t1 image size is not n");
              expect(t1_inverse(image) == path,
                     "t1 round trip failed on " + render_path(path));
              images.insert(render_path(image));
            },
            cap);
        expect(images == rendered_family(PathFamily::Motzkin, n, cap),
               "t1 image is not exactly the Motzkin family");
      }));

  results.push_back(run_check(
      "t2-bijection-round-trip", max_n, [&](std::size_t n) {
        Strings images;
        for_each_path(
            PathFamily::BicoloredMotzkin, n,
            [&](const LatticePath& path) {
              const LatticePath image = t2_forward(path);
              expect(image.family() == PathFamily::Dyck &&
                         image.length() == 2 * n + 2,
                     "t2 image is not a Dyck (n+1)-path");
              expect(t2_inverse(image) == path,
                     "t2 round trip failed on " + render_path(path));
              images.insert(render_path(image));
            },
            cap);
        expect(images == rendered_family(PathFamily::Dyck, n + 1, cap),
               "t2 image is not exactly the Dyck (n+1) family");
      }));

  results.push_back(run_check(
      "t2-statistic-transport", max_n, [&](std::size_t n) {
        for_each_path(
            PathFamily::BicoloredMotzkin, n,
            [&](const LatticePath& path) {
              const PathStatistics in = compute_statistics(path);
              const PathStatistics out = compute_statistics(t2_forward(path));
              expect(out.udu_count == in.green_flat_count &&
                         out.ddu_count == in.down_count,
                     "statistic transport failed on " + render_path(path));
            },
            cap);
      }));

  results.push_back(run_check(
      "t2-order-independence", std::min<std::size_t>(max_n, 7),
      [&](std::size_t n) {
        std::mt19937_64 rng(0xfeedbeef);
        for_each_path(
            PathFamily::BicoloredMotzkin, n,
            [&](const LatticePath& path) {
              const LatticePath expected = t2_forward(path);
              std::vector<std::size_t> order = black_flat_positions(path);
              expect(t2_forward_ordered(path, order) == expected,
                     "left-to-right order disagrees on " + render_path(path));
              std::reverse(order.begin(), order.end());
              expect(t2_forward_ordered(path, order) == expected,
                     "right-to-left order disagrees on " + render_path(path));
              std::shuffle(order.begin(), order.end(), rng);
              expect(t2_forward_ordered(path, order) == expected,
                     "shuffled order disagrees on " + render_path(path));
            },
            cap);
      }));

  results.push_back(run_check(
      "std-bijection-round-trip", max_n, [&](std::size_t n) {
        Strings images;
        for_each_path(
            PathFamily::BicoloredMotzkin, n,
            [&](const LatticePath& path) {
              const LatticePath image = std_bijection(path);
              expect(image.length() == 2 * n + 2,
                     "pair encoding image has wrong length");
              expect(std_bijection_inverse(image) == path,
                     "pair encoding round trip failed on " +
                         render_path(path));
              images.insert(render_path(image));
            },
            cap);
        expect(images == rendered_family(PathFamily::Dyck, n + 1, cap),
               "pair encoding image is not exactly the Dyck (n+1) family");
      }));

  results.push_back(run_check(
      "generator-counts-and-order", max_n, [&](std::size_t n) {
        for (PathFamily family :
             {PathFamily::Dyck, PathFamily::Motzkin,
              PathFamily::BicoloredMotzkin}) {
          std::uint64_t count = 0;
          LatticePath previous;
          bool first = true;
          for_each_path(
              family, n,
              [&](const LatticePath& path) {
                ++count;
                if (!first)
                  expect(lex_less(previous, path),
                         "stream not strictly increasing");
                previous = path;
                first = false;
              },
              cap);
          expect(CountValue(count) == family_count(family, n),
                 std::string("stream length mismatch for ") +
                     family_name(family));
        }
      }));

  results.push_back(run_check(
      "distribution-brute-equals-formula", max_n, [&](std::size_t n) {
        if (n == 0) return;
        for (PatternStatistic stat :
             {PatternStatistic::Udu, PatternStatistic::Ddu}) {
          CountValue total;
          for (const DistributionRow& row : distribution_table(stat, n, cap)) {
            expect(row.ok(), "brute != formula in a distribution row");
            total = total + row.brute;
          }
          expect(total == catalan(n), "distribution does not sum to catalan");
        }
      }));

  results.push_back(run_check(
      "uuu-free-count-is-motzkin", max_n, [&](std::size_t n) {
        expect(count_uuu_free(n, cap) == motzkin(n),
               "UUU-free count mismatch");
      }));

  results.push_back(run_check(
      "no-short-descent-count-is-riordan", max_n, [&](std::size_t n) {
        expect(count_no_short_descent(n, cap) == riordan(n),
               "no-short-descent count mismatch");
      }));

  results.push_back(run_check(
      "motzkin-restriction-onto-udu-free", max_n, [&](std::size_t n) {
        Strings images;
        for_each_path(
            PathFamily::Motzkin, n,
            [&](const LatticePath& path) {
              const LatticePath image = restrict_motzkin_to_udu_free(path);
              expect(compute_statistics(image).udu_count == 0,
                     "restricted image contains a UDU");
              const bool no_ground_flats =
                  compute_statistics(path).ground_flat_count == 0;
              const auto& steps = image.steps();
              const bool ends_ud =
                  steps.size() >= 2 &&
                  steps[steps.size() - 2] == StepKind::Up &&
                  steps.back() == StepKind::Down;
              expect(no_ground_flats == ends_ud,
                     "ground-flat criterion mismatch on " + render_path(path));
              images.insert(render_path(image));
            },
            cap);
        Strings udu_free;
        for_each_path(
            PathFamily::Dyck, n + 1,
            [&](const LatticePath& path) {
              if (compute_statistics(path).udu_count == 0)
                udu_free.insert(render_path(path));
            },
            cap);
        expect(images == udu_free,
               "restriction does not surject onto UDU-free paths");
      }));

  return results;
}

}  // namespace pathbij
