#include "deltacat/error.hpp"

namespace deltacat {

const char* to_string(ErrCode code) {
  switch (code) {
    case ErrCode::malformed_input: return "MalformedInput";
    case ErrCode::malformed_category: return "MalformedCategory";
    case ErrCode::not_composable: return "NotComposable";
    case ErrCode::not_a_functor: return "NotAFunctor";
    case ErrCode::boundary_mismatch: return "BoundaryMismatch";
    case ErrCode::unknown_object: return "UnknownObject";
    case ErrCode::unknown_morphism: return "UnknownMorphism";
    case ErrCode::lift_missing: return "LiftMissing";
    case ErrCode::law_violation: return "LawViolation";
    case ErrCode::not_applicable: return "NotApplicable";
    case ErrCode::not_boo: return "NotBOO";
    case ErrCode::not_dopf: return "NotDopf";
    case ErrCode::object_map_mismatch: return "ObjectMapMismatch";
    case ErrCode::lift_not_preserved: return "LiftNotPreserved";
    case ErrCode::get_not_preserved: return "GetNotPreserved";
    case ErrCode::counit_law_violation: return "CounitLawViolation";
    case ErrCode::comult_law_violation: return "ComultLawViolation";
    case ErrCode::triangle_violation: return "TriangleViolation";
    case ErrCode::bounds_exceeded: return "BoundsExceeded";
  }
  return "UnknownError";
}

int exit_class(ErrCode code) {
  switch (code) {
    case ErrCode::malformed_input:
    case ErrCode::malformed_category:
    case ErrCode::not_composable:
    case ErrCode::boundary_mismatch:
    case ErrCode::unknown_object:
    case ErrCode::unknown_morphism:
    case ErrCode::not_applicable:
    case ErrCode::bounds_exceeded:
      return 2;
    default:
      return 1;
  }
}

std::string Error::str() const {
  std::string out = to_string(code);
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  if (!witness.empty()) {
    out += " [witness: ";
    out += witness;
    out += "]";
  }
  return out;
}

bool CheckOutcome::ok() const {
  if (shape_error) return false;
  for (const auto& law : laws)
    if (!law.passed()) return false;
  return true;
}

std::optional<Error> CheckOutcome::first_error() const {
  if (shape_error) return shape_error;
  for (const auto& law : laws) {
    if (!law.passed()) {
      return Error{law.code, detail::cat("law '", law.law, "' violated"),
                   law.witnesses.front()};
    }
  }
  return std::nullopt;
}

}  // namespace deltacat
