#pragma once

#include <utility>
#include <variant>

namespace hazel {

struct ActionError;

/// Value-or-error. Errors are ordinary values so that trying an action
/// to test whether it is enabled stays cheap. Parsers reuse it with
/// their own error type.
template <class T, class E = ActionError>
class Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}  // NOLINT
  Result(E error) : v_(std::in_place_index<1>, std::move(error)) {}  // NOLINT

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const { return std::get<0>(v_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const E& error() const { return std::get<1>(v_); }

 private:
  std::variant<T, E> v_;
};

}  // namespace hazel
