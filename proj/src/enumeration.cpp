#include "pathbij/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace pathbij {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t result = 0;
  if (__builtin_add_overflow(a, b, &result))
    throw PathError(Errc::Overflow, "count overflow in addition");
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t result = 0;
  if (__builtin_mul_overflow(a, b, &result))
    throw PathError(Errc::Overflow, "count overflow in multiplication");
  return result;
}

// M_0..M_n via the convolution recurrence M_m = M_{m-1} + sum M_i M_{m-2-i}.
std::vector<std::uint64_t> motzkin_row(std::size_t n) {
  std::vector<std::uint64_t> m(n + 1);
  m[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t acc = m[i - 1];
    for (std::size_t k = 0; k + 2 <= i; ++k)
      acc = checked_add(acc, checked_mul(m[k], m[i - 2 - k]));
    m[i] = acc;
  }
  return m;
}

std::vector<std::uint64_t> catalan_row(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < i; ++k)
      acc = checked_add(acc, checked_mul(c[k], c[i - 1 - k]));
    c[i] = acc;
  }
  return c;
}

constexpr std::array<StepKind, 4> kTokenOrder = {
    StepKind::Up, StepKind::Down, StepKind::FlatBlack, StepKind::FlatGreen};

bool family_allows(PathFamily family, StepKind kind) {
  switch (kind) {
    case StepKind::Up:
    case StepKind::Down: return true;
    case StepKind::FlatBlack: return family != PathFamily::Dyck;
    case StepKind::FlatGreen: return family == PathFamily::BicoloredMotzkin;
  }
  return false;
}

// A partial path at `height` with `remaining` steps left can still close
// iff height <= remaining after taking the step.
bool step_feasible(StepKind kind, int height, std::size_t remaining) {
  const int next = height + step_rise(kind);
  return next >= 0 && static_cast<std::size_t>(next) + 1 <= remaining;
}

void visit_recursive(PathFamily family, std::size_t total_steps,
                     std::vector<StepKind>& prefix, int height,
                     const std::function<void(const LatticePath&)>& visit) {
  if (prefix.size() == total_steps) {
    visit(LatticePath::from_steps(prefix, family));
    return;
  }
  const std::size_t remaining = total_steps - prefix.size();
  for (StepKind kind : kTokenOrder) {
    if (!family_allows(family, kind)) continue;
    if (!step_feasible(kind, height, remaining)) continue;
    prefix.push_back(kind);
    visit_recursive(family, total_steps, prefix, height + step_rise(kind),
                    visit);
    prefix.pop_back();
  }
}

int token_rank(StepKind kind) {
  switch (kind) {
    case StepKind::Up: return 0;
    case StepKind::Down: return 1;
    case StepKind::FlatBlack: return 2;
    case StepKind::FlatGreen: return 3;
  }
  return 4;
}

}  // namespace

CountValue CountValue::operator+(CountValue rhs) const {
  return CountValue(checked_add(value_, rhs.value_));
}

CountValue CountValue::operator-(CountValue rhs) const {
  if (rhs.value_ > value_)
    throw PathError(Errc::Overflow, "count underflow in subtraction");
  return CountValue(value_ - rhs.value_);
}

CountValue CountValue::operator*(CountValue rhs) const {
  return CountValue(checked_mul(value_, rhs.value_));
}

CountValue catalan(std::size_t n) { return CountValue(catalan_row(n)[n]); }

CountValue motzkin(std::size_t n) { return CountValue(motzkin_row(n)[n]); }

CountValue riordan(std::size_t n) {
  // R_0 = 1, R_m = M_{m-1} - R_{m-1}; anchored to the enumeration oracle in
  // the tests.
  if (n == 0) return CountValue(1);
  const auto m = motzkin_row(n - 1);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) r = m[i - 1] - r;
  return CountValue(r);
}

CountValue binomial(std::size_t n, std::size_t k) {
  if (k > n) return CountValue(0);
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i)
    result = checked_mul(result, n - k + i) / i;
  return CountValue(result);
}

CountValue power_of_two(std::size_t exponent) {
  if (exponent >= 64)
    throw PathError(Errc::Overflow, "power of two exceeds 64 bits");
  return CountValue(std::uint64_t{1} << exponent);
}

CountValue formula_udu(std::size_t n, std::size_t k) {
  if (n == 0 || k > n - 1)
    throw PathError(Errc::KOutOfRange, "need n >= 1 and 0 <= k <= n-1");
  return binomial(n - 1, k) * motzkin(n - 1 - k);
}

CountValue formula_ddu(std::size_t n, std::size_t k) {
  if (n == 0 || 2 * k > n - 1)
    throw PathError(Errc::KOutOfRange, "need n >= 1 and 0 <= 2k <= n-1");
  return binomial(n - 1, 2 * k) * power_of_two(n - 1 - 2 * k) * catalan(k);
}

CountValue family_count(PathFamily family, std::size_t n) {
  switch (family) {
    case PathFamily::Dyck: return catalan(n);
    case PathFamily::Motzkin: return motzkin(n);
    case PathFamily::BicoloredMotzkin: return catalan(n + 1);
  }
  throw PathError(Errc::InternalError, "unknown family");
}

bool lex_less(const LatticePath& lhs, const LatticePath& rhs) {
  const auto& a = lhs.steps();
  const auto& b = rhs.steps();
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](StepKind x, StepKind y) { return token_rank(x) < token_rank(y); });
}

void for_each_path(PathFamily family, std::size_t n,
                   const std::function<void(const LatticePath&)>& visit,
                   std::uint64_t cap) {
  CountValue total;
  try {
    total = family_count(family, n);
  } catch (const PathError& e) {
    if (e.code() != Errc::Overflow) throw;
    throw PathError(Errc::SizeTooLarge,
                    "family count does not fit in 64 bits");
  }
  if (total.get() > cap) {
    std::ostringstream msg;
    msg << "would enumerate " << total.get() << " paths, cap is " << cap;
    throw PathError(Errc::SizeTooLarge, msg.str());
  }

  const std::size_t total_steps = family == PathFamily::Dyck ? 2 * n : n;
  std::vector<StepKind> prefix;
  prefix.reserve(total_steps);
  visit_recursive(family, total_steps, prefix, 0, visit);
}

std::vector<LatticePath> generate_paths(PathFamily family, std::size_t n,
                                        std::uint64_t cap) {
  std::vector<LatticePath> paths;
  for_each_path(
      family, n, [&](const LatticePath& path) { paths.push_back(path); }, cap);
  return paths;
}

std::vector<DistributionRow> distribution_table(PatternStatistic statistic,
                                                std::size_t n,
                                                std::uint64_t cap) {
  if (n == 0)
    throw PathError(Errc::KOutOfRange, "distribution needs n >= 1");

  std::map<std::size_t, std::uint64_t> brute;
  for_each_path(
      PathFamily::Dyck, n,
      [&](const LatticePath& path) {
        const PathStatistics stats = compute_statistics(path);
        const std::size_t k = statistic == PatternStatistic::Udu
                                  ? stats.udu_count
                                  : stats.ddu_count;
        ++brute[k];
      },
      cap);

  const std::size_t formula_max_k =
      statistic == PatternStatistic::Udu ? n - 1 : (n - 1) / 2;
  std::size_t max_k = formula_max_k;
  if (!brute.empty()) max_k = std::max(max_k, brute.rbegin()->first);

  std::vector<DistributionRow> rows;
  for (std::size_t k = 0; k <= max_k; ++k) {
    DistributionRow row;
    row.n = n;
    row.k = k;
    const auto it = brute.find(k);
    row.brute = CountValue(it == brute.end() ? 0 : it->second);
    row.formula = k <= formula_max_k
                      ? (statistic == PatternStatistic::Udu
                             ? formula_udu(n, k)
                             : formula_ddu(n, k))
                      : CountValue(0);
    if (row.brute.get() != 0 || row.formula.get() != 0) rows.push_back(row);
  }
  return rows;
}

std::string format_table_tsv(const std::vector<DistributionRow>& rows) {
  std::ostringstream out;
  out << "n\tk\tbrute\tformula\tok\n";
  for (const DistributionRow& row : rows)
    out << row.n << '\t' << row.k << '\t' << row.brute.get() << '\t'
        << row.formula.get() << '\t' << (row.ok() ? 1 : 0) << '\n';
  return out.str();
}

CountValue count_uuu_free(std::size_t n, std::uint64_t cap) {
  std::uint64_t count = 0;
  for_each_path(
      PathFamily::Dyck, n,
      [&](const LatticePath& path) {
        if (compute_statistics(path).uuu_count == 0) ++count;
      },
      cap);
  return CountValue(count);
}

CountValue count_no_short_descent(std::size_t n, std::uint64_t cap) {
  std::uint64_t count = 0;
  for_each_path(
      PathFamily::Dyck, n,
      [&](const LatticePath& path) {
        if (!has_short_descent(path)) ++count;
      },
      cap);
  return CountValue(count);
}

LatticePath random_path(PathFamily family, std::size_t n, std::mt19937_64& rng) {
  const std::size_t total_steps = family == PathFamily::Dyck ? 2 * n : n;
  std::vector<StepKind> steps;
  steps.reserve(total_steps);
  int height = 0;
  for (std::size_t taken = 0; taken < total_steps; ++taken) {
    std::vector<StepKind> legal;
    for (StepKind kind : kTokenOrder)
      if (family_allows(family, kind) &&
          step_feasible(kind, height, total_steps - taken))
        legal.push_back(kind);
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    const StepKind kind = legal[pick(rng)];
    steps.push_back(kind);
    height += step_rise(kind);
  }
  return LatticePath::from_steps(std::move(steps), family);
}

}  // namespace pathbij
