#include "pmvlab/numeric.hpp"

#include <cctype>

#include "pmvlab/carrier_set.hpp"
#include "pmvlab/error.hpp"

namespace pmvlab {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!valid_integer(text)) throw Error(ErrorCode::schema_error, "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt p = parse_bigint(text.substr(0, slash));
  BigInt q = parse_bigint(text.substr(slash + 1));
  if (q == 0) throw Error(ErrorCode::schema_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_table: return "MalformedTable";
    case ErrorCode::out_of_carrier: return "OutOfCarrier";
    case ErrorCode::internal_inconsistency: return "InternalInconsistency";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::no_split: return "NoSplit";
    case ErrorCode::not_enumerable: return "NotEnumerable";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::bad_partition: return "BadPartition";
    case ErrorCode::unit_not_in_group: return "UnitNotInG";
    case ErrorCode::unit_not_strong: return "UnitNotStrong";
    case ErrorCode::closure_violation: return "ClosureViolation";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::not_in_carrier: return "NotInCarrier";
    case ErrorCode::not_chain_factor: return "NotChainFactor";
    case ErrorCode::not_normal: return "NotNormal";
    case ErrorCode::no_decomposition: return "NoDecomposition";
    case ErrorCode::not_summand: return "NotSummand";
    case ErrorCode::not_strongly_projectable: return "NotStronglyProjectable";
    case ErrorCode::iso_failure: return "IsoFailure";
    case ErrorCode::not_in_group: return "NotInG";
    case ErrorCode::not_finite_index: return "NotFiniteIndex";
    case ErrorCode::bound_exhausted: return "BoundExhausted";
    case ErrorCode::not_large: return "NotLarge";
    case ErrorCode::correspondence_failure: return "CorrespondenceFailure";
    case ErrorCode::non_termination: return "NonTermination";
    case ErrorCode::schema_error: return "SchemaError";
  }
  return "Unknown";
}

std::string to_string(const CarrierSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : members(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace pmvlab
