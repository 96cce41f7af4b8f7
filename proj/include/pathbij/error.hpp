#ifndef PATHBIJ_ERROR_HPP
#define PATHBIJ_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pathbij {

enum class Errc {
  // parsing / validation
  IllegalCharacter,
  UnbalancedPath,
  NegativePrefix,
  FamilyViolation,
  // step queries
  NotAnUpstep,
  NotAFlatstep,
  // bijection preconditions
  NotDyck,
  NotMotzkin,
  NotUUUFree,
  NotDecodable,
  HasGreenFlat,
  HasGroundFlat,
  // counting / enumeration
  SizeTooLarge,
  Overflow,
  KOutOfRange,
  InternalError,
};

const char* errc_name(Errc code);

// Domain error carrying a machine-checkable code and, when the problem is
// tied to a step, its 0-based index.
class PathError : public std::runtime_error {
 public:
  PathError(Errc code, std::string detail,
            std::optional<std::size_t> index = std::nullopt);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<std::size_t> index_;
};

}  // namespace pathbij

#endif
