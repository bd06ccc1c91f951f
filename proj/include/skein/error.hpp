#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Base class for every precondition or domain failure raised by the library.
class SkeinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationRule {
  slot_underflow,
  slot_overflow,
  arity_mismatch,
  orientation_inconsistent,
  unbalanced_marking,
  orientation_shape,
  tangle_with_punctures,
  bad_gaps,
};

const char* rule_name(ValidationRule rule);

/// A diagram invariant failed. `event_index` is -1 when the failure is not
/// tied to a particular event (e.g. the final strand count).
class ValidationError : public SkeinError {
 public:
  ValidationError(ValidationRule rule, int event_index, const std::string& detail);

  ValidationRule rule() const { return rule_; }
  int event_index() const { return event_index_; }

 private:
  ValidationRule rule_;
  int event_index_;
};

}  // namespace skein
