#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace deltacat {

enum class ErrCode {
  malformed_input,
  malformed_category,
  not_composable,
  not_a_functor,
  boundary_mismatch,
  unknown_object,
  unknown_morphism,
  lift_missing,
  law_violation,
  not_applicable,
  not_boo,
  not_dopf,
  object_map_mismatch,
  lift_not_preserved,
  get_not_preserved,
  counit_law_violation,
  comult_law_violation,
  triangle_violation,
  bounds_exceeded,
};

const char* to_string(ErrCode code);

// Exit class of an error: 2 means the input is not a well-formed instance of
// its kind, 1 means a well-formed candidate failed a law or verification.
int exit_class(ErrCode code);

struct Error {
  ErrCode code;
  std::string message{};
  std::string witness{};  // counterexample tuple, empty when not applicable

  std::string str() const;
};

template <typename T>
class [[nodiscard]] Result {
 public:
  Result(T value) : repr_(std::move(value)) {}
  Result(Error error) : repr_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(repr_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(repr_); }
  T value() && { return std::get<T>(std::move(repr_)); }
  T&& take() && { return std::get<T>(std::move(repr_)); }
  const Error& error() const { return std::get<Error>(repr_); }

 private:
  std::variant<T, Error> repr_;
};

// One universally quantified law: the size of the domain swept and every
// witness of failure found in it.
struct LawCheck {
  std::string law;
  ErrCode code = ErrCode::law_violation;
  std::size_t domain = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return witnesses.empty(); }
};

struct CheckOutcome {
  std::optional<Error> shape_error;
  std::vector<LawCheck> laws;

  bool ok() const;
  std::optional<Error> first_error() const;
};

template <typename T>
struct CheckedValue {
  std::optional<T> value;  // present only when fully valid
  CheckOutcome outcome;
};

namespace detail {

template <typename... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace detail

}  // namespace deltacat
