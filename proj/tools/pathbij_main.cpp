// Command-line front end: enumeration, statistics, bijections, distribution
// tables, sequence printing, and the invariant suite.

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathbij/bijections.hpp"
#include "pathbij/enumeration.hpp"
#include "pathbij/verification.hpp"

namespace {

using namespace pathbij;

int domain_failure(const PathError& error) {
  std::cerr << "error: " << errc_name(error.code()) << ": " << error.detail();
  if (error.index())
    std::cerr << " at position " << (*error.index() + 1)
              << " (positions are 1-based)";
  std::cerr << '\n';
  return 1;
}

PathFamily family_from_name(const std::string& name) {
  if (name == "dyck") return PathFamily::Dyck;
  if (name == "motzkin") return PathFamily::Motzkin;
  return PathFamily::BicoloredMotzkin;
}

struct MapSpec {
  PathFamily input_family;
  std::function<LatticePath(const LatticePath&)> apply;
};

MapSpec select_map(const std::string& bijection, const std::string& direction) {
  const bool forward = direction == "forward";
  if (bijection == "t1")
    return forward ? MapSpec{PathFamily::Dyck, t1_forward}
                   : MapSpec{PathFamily::Motzkin, t1_inverse};
  if (bijection == "t2")
    return forward ? MapSpec{PathFamily::BicoloredMotzkin, t2_forward}
                   : MapSpec{PathFamily::Dyck, t2_inverse};
  if (bijection == "std")
    return forward ? MapSpec{PathFamily::BicoloredMotzkin, std_bijection}
                   : MapSpec{PathFamily::Dyck, std_bijection_inverse};
  // riordan
  return forward ? MapSpec{PathFamily::Motzkin, riordan_to_no_short_descent}
                 : MapSpec{PathFamily::Dyck, no_short_descent_to_riordan};
}

int run_enumerate(PathFamily family, std::size_t n, std::uint64_t cap) {
  std::ostringstream out;
  for_each_path(family, n,
                [&](const LatticePath& path) { out << render_path(path) << '\n'; },
                cap);
  std::cout << out.str();
  return 0;
}

int run_stats(const std::string& text, PathFamily family, bool ascii) {
  const LatticePath path = parse_path(text, family);
  const PathStatistics s = compute_statistics(path);
  std::cout << "udu_count\t" << s.udu_count << '\n'
            << "ddu_count\t" << s.ddu_count << '\n'
            << "uuu_count\t" << s.uuu_count << '\n'
            << "green_flat_count\t" << s.green_flat_count << '\n'
            << "black_flat_count\t" << s.black_flat_count << '\n'
            << "down_count\t" << s.down_count << '\n'
            << "descent_count\t" << s.descent_count << '\n'
            << "short_nonterminal_descent_count\t"
            << s.short_nonterminal_descent_count << '\n'
            << "ground_flat_count\t" << s.ground_flat_count << '\n';
  if (ascii) std::cout << render_ascii(path);
  return 0;
}

int run_map(const std::string& bijection, const std::string& direction,
            const std::string& path_arg, bool path_given) {
  const MapSpec spec = select_map(bijection, direction);
  const auto map_one = [&](const std::string& text) {
    const LatticePath input = parse_path(text, spec.input_family);
    std::cout << render_path(spec.apply(input)) << '\n';
  };
  if (path_given) {
    map_one(path_arg);
    return 0;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    try {
      map_one(line);
    } catch (const PathError& e) {
      std::cerr << "error on input line " << line_no << ": ";
      return domain_failure(e);
    }
  }
  return 0;
}

int run_table(PatternStatistic statistic, std::size_t n, std::uint64_t cap,
              const std::string& format) {
  const std::vector<DistributionRow> rows = distribution_table(statistic, n, cap);
  if (format == "tsv") {
    std::cout << format_table_tsv(rows);
  } else {
    std::cout << "  n   k       brute     formula  ok\n";
    for (const DistributionRow& row : rows) {
      std::cout << std::setw(3) << row.n << ' ' << std::setw(3) << row.k << ' '
                << std::setw(11) << row.brute.get() << ' ' << std::setw(11)
                << row.formula.get() << "  " << (row.ok() ? "yes" : "NO")
                << '\n';
    }
  }
  return 0;
}

int run_seq(const std::string& name, std::size_t count) {
  CountValue (*value)(std::size_t) = nullptr;
  if (name == "catalan") value = catalan;
  else if (name == "motzkin") value = motzkin;
  else value = riordan;
  for (std::size_t i = 0; i < count; ++i) {
    if (i != 0) std::cout << ',';
    std::cout << value(i).get();
  }
  std::cout << '\n';
  return 0;
}

int run_verify(std::size_t max_n, std::uint64_t cap) {
  bool all_passed = true;
  for (const CheckResult& check : run_invariant_suite(max_n, cap)) {
    if (check.passed) {
      std::cout << "PASS " << check.name << '\n';
    } else {
      std::cout << "FAIL " << check.name << ": " << check.detail << '\n';
      all_passed = false;
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck and Motzkin lattice paths: enumeration, statistics, and "
               "statistic-transporting bijections"};
  app.require_subcommand(1);

  const std::vector<std::string> families{"dyck", "motzkin", "bicolored"};

  std::string family_str = "bicolored";
  std::string path_arg, bijection, direction, statistic_str, seq_name;
  std::string format = "tsv";
  std::size_t n = 0, max_n = 8, seq_count = 1;
  std::uint64_t cap = kDefaultPathCap;
  bool ascii = false;

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list every path of the given family "
                                      "and size, one per line, in "
                                      "lexicographic order (U < D < F < G)");
  enumerate->add_option("--family", family_str, "path family")
      ->required()
      ->check(CLI::IsMember(families));
  enumerate->add_option("--n", n, "path size")->required();
  enumerate->add_option("--cap", cap, "refuse runs over this many paths");

  CLI::App* stats = app.add_subcommand(
      "stats", "print the statistics record of one path as name<TAB>value");
  stats->add_option("--path", path_arg, "path text over U, D, F, G")
      ->required();
  stats->add_option("--family", family_str,
                    "family to validate against (default: bicolored)")
      ->check(CLI::IsMember(families));
  stats->add_flag("--ascii", ascii, "also draw the path");

  CLI::App* map = app.add_subcommand(
      "map", "apply a bijection to --path, or to each stdin line");
  map->add_option("--bij", bijection, "which bijection")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "std", "riordan"}));
  map->add_option("--dir", direction, "forward or inverse")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  CLI::Option* map_path = map->add_option("--path", path_arg, "input path");

  CLI::App* table = app.add_subcommand(
      "table", "distribution of a pattern statistic over Dyck n-paths: "
               "brute-force column vs closed-form column");
  table->add_option("--stat", statistic_str, "udu or ddu")
      ->required()
      ->check(CLI::IsMember({"udu", "ddu"}));
  table->add_option("--n", n, "semilength")->required();
  table->add_option("--cap", cap, "refuse runs over this many paths");
  table->add_option("--format", format, "tsv or text")
      ->check(CLI::IsMember({"tsv", "text"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "run the exhaustive invariant suite, one PASS/FAIL line per "
                "property");
  verify->add_option("--max-n", max_n, "largest path size checked");
  verify->add_option("--cap", cap, "refuse runs over this many paths");

  CLI::App* seq =
      app.add_subcommand("seq", "print the first values of a sequence");
  seq->add_option("--name", seq_name, "catalan, motzkin, or riordan")
      ->required()
      ->check(CLI::IsMember({"catalan", "motzkin", "riordan"}));
  seq->add_option("--count", seq_count, "how many values")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed())
      return run_enumerate(family_from_name(family_str), n, cap);
    if (stats->parsed())
      return run_stats(path_arg, family_from_name(family_str), ascii);
    if (map->parsed())
      return run_map(bijection, direction, path_arg, map_path->count() > 0);
    if (table->parsed())
      return run_table(statistic_str == "udu" ? PatternStatistic::Udu
                                              : PatternStatistic::Ddu,
                       n, cap, format);
    if (verify->parsed()) return run_verify(max_n, cap);
    if (seq->parsed()) return run_seq(seq_name, seq_count);
  } catch (const PathError& e) {
    return domain_failure(e);
  }
  return 2;
}
