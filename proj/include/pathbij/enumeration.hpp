#ifndef PATHBIJ_ENUMERATION_HPP
#define PATHBIJ_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "pathbij/path_core.hpp"

namespace pathbij {

// Exact nonnegative counter.  Arithmetic fails loudly instead of wrapping.
class CountValue {
 public:
  constexpr CountValue() = default;
  constexpr explicit CountValue(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t get() const noexcept { return value_; }

  CountValue operator+(CountValue rhs) const;
  CountValue operator-(CountValue rhs) const;
  CountValue operator*(CountValue rhs) const;

  friend bool operator==(CountValue, CountValue) = default;
  friend auto operator<=>(CountValue, CountValue) = default;

 private:
  std::uint64_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, CountValue value) {
  return os << value.get();
}

CountValue catalan(std::size_t n);
CountValue motzkin(std::size_t n);
CountValue riordan(std::size_t n);
CountValue binomial(std::size_t n, std::size_t k);
CountValue power_of_two(std::size_t exponent);

// Number of Dyck n-paths with exactly k UDUs: C(n-1,k) * M_{n-1-k}.
CountValue formula_udu(std::size_t n, std::size_t k);
// Number of Dyck n-paths with exactly k DDUs: C(n-1,2k) * 2^(n-1-2k) * C_k.
CountValue formula_ddu(std::size_t n, std::size_t k);

inline constexpr std::uint64_t kDefaultPathCap = 10'000'000;

// Closed-form cardinality of the generator's stream: catalan(n) Dyck,
// motzkin(n) Motzkin, catalan(n+1) bicolored Motzkin n-paths.
CountValue family_count(PathFamily family, std::size_t n);

// Token order used by the generators and by lex_less: U < D < F < G.
bool lex_less(const LatticePath& lhs, const LatticePath& rhs);

// Visits every path of the family and size exactly once, in lexicographic
// order.  Refuses with SizeTooLarge when the family count exceeds cap.
void for_each_path(PathFamily family, std::size_t n,
                   const std::function<void(const LatticePath&)>& visit,
                   std::uint64_t cap = kDefaultPathCap);

std::vector<LatticePath> generate_paths(PathFamily family, std::size_t n,
                                        std::uint64_t cap = kDefaultPathCap);

enum class PatternStatistic { Udu, Ddu };

struct DistributionRow {
  std::size_t n = 0;
  std::size_t k = 0;
  CountValue brute;    // exhaustive enumeration + statistics
  CountValue formula;  // closed form
  bool ok() const { return brute == formula; }
};

// One row per k with a nonzero count on either side, k ascending.  The
// brute column never consults the closed form and vice versa.
std::vector<DistributionRow> distribution_table(PatternStatistic statistic,
                                                std::size_t n,
                                                std::uint64_t cap = kDefaultPathCap);

// Columns: n  k  brute  formula  ok (1/0), tab-separated, with header.
std::string format_table_tsv(const std::vector<DistributionRow>& rows);

CountValue count_uuu_free(std::size_t n, std::uint64_t cap = kDefaultPathCap);
CountValue count_no_short_descent(std::size_t n,
                                  std::uint64_t cap = kDefaultPathCap);

// Uniformly random choice among the legal continuations at every step; any
// valid path of the family can be produced.
LatticePath random_path(PathFamily family, std::size_t n, std::mt19937_64& rng);

}  // namespace pathbij

#endif
