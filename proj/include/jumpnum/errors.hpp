#pragma once

#include <stdexcept>
#include <string>

namespace jumpnum {

enum class errc {
  not_positive,
  not_simple,
  inconsistent_proximity,
  inconsistent_exponents,
  index_out_of_range,
  context_mismatch,
  not_antinef,
  negative_exponent,
  dimension_mismatch,
  nonpositive_bound,
  malformed_jump_set,
  not_integer,
  invalid_sequence,
  invalid_pairs,
  parse_error,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_positive:           return "NotPositive";
    case errc::not_simple:             return "NotSimple";
    case errc::inconsistent_proximity: return "InconsistentProximity";
    case errc::inconsistent_exponents: return "Inconsistent";
    case errc::index_out_of_range:     return "IndexOutOfRange";
    case errc::context_mismatch:       return "ContextMismatch";
    case errc::not_antinef:            return "NotAntinef";
    case errc::negative_exponent:      return "NegativeExponent";
    case errc::dimension_mismatch:     return "DimensionMismatch";
    case errc::nonpositive_bound:      return "NonpositiveBound";
    case errc::malformed_jump_set:     return "MalformedJumpSet";
    case errc::not_integer:            return "NotInteger";
    case errc::invalid_sequence:       return "InvalidSequence";
    case errc::invalid_pairs:          return "InvalidPairs";
    case errc::parse_error:            return "ParseError";
    case errc::internal_error:         return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace jumpnum
