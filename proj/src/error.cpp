#include "pathbij/error.hpp"

namespace pathbij {

namespace {

std::string compose_what(const std::string& detail,
                         const std::optional<std::size_t>& index) {
  if (!index) return detail;
  return detail + " at index " + std::to_string(*index);
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::IllegalCharacter: return "IllegalCharacter";
    case Errc::UnbalancedPath: return "UnbalancedPath";
    case Errc::NegativePrefix: return "NegativePrefix";
    case Errc::FamilyViolation: return "FamilyViolation";
    case Errc::NotAnUpstep: return "NotAnUpstep";
    case Errc::NotAFlatstep: return "NotAFlatstep";
    case Errc::NotDyck: return "NotDyck";
    case Errc::NotMotzkin: return "NotMotzkin";
    case Errc::NotUUUFree: return "NotUUUFree";
    case Errc::NotDecodable: return "NotDecodable";
    case Errc::HasGreenFlat: return "HasGreenFlat";
    case Errc::HasGroundFlat: return "HasGroundFlat";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::Overflow: return "Overflow";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::InternalError: return "InternalError";
  }
  return "UnknownError";
}

PathError::PathError(Errc code, std::string detail,
                     std::optional<std::size_t> index)
    : std::runtime_error(compose_what(detail, index)),
      code_(code),
      detail_(std::move(detail)),
      index_(index) {}

}  // namespace pathbij
