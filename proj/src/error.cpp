#include "skein/error.hpp"

namespace skein {

const char* rule_name(ValidationRule rule) {
  switch (rule) {
    case ValidationRule::slot_underflow: return "slot underflow";
    case ValidationRule::slot_overflow: return "slot overflow";
    case ValidationRule::arity_mismatch: return "arity mismatch";
    case ValidationRule::orientation_inconsistent: return "orientation inconsistency";
    case ValidationRule::unbalanced_marking: return "unbalanced marking";
    case ValidationRule::orientation_shape: return "orientation shape";
    case ValidationRule::tangle_with_punctures: return "tangle boundary with punctures";
    case ValidationRule::bad_gaps: return "bad puncture gaps";
  }
  return "unknown";
}

namespace {

std::string describe(ValidationRule rule, int event_index, const std::string& detail) {
  std::string msg = rule_name(rule);
  if (event_index >= 0) msg += " at event " + std::to_string(event_index);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

ValidationError::ValidationError(ValidationRule rule, int event_index, const std::string& detail)
    : SkeinError(describe(rule, event_index, detail)), rule_(rule), event_index_(event_index) {}

}  // namespace skein
