#include "sas/rational.hpp"

#include <cctype>

#include "sas/error.hpp"

namespace sas {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::MeshNotValidated: return "MeshNotValidated";
    case ErrorCode::NotInteriorEdge: return "NotInteriorEdge";
    case ErrorCode::NotInteriorVertex: return "NotInteriorVertex";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SpanDeficient: return "SpanDeficient";
    case ErrorCode::HasBasepoints: return "HasBasepoints";
    case ErrorCode::NotInNet: return "NotInNet";
    case ErrorCode::InsufficientImageData: return "InsufficientImageData";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::SingularBranch: return "SingularBranch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::SchemaError:
    case ErrorCode::DanglingReference:
    case ErrorCode::FileNotFound:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer{std::string(num)}, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw Error(ErrorCode::SyntaxError, "malformed decimal '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
    value = Rational(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::SyntaxError, "malformed number '" + std::string(text) + "'");
    value = Rational(Integer{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long forms_dim(long k) { return k < 0 ? 0 : (k + 2) * (k + 1) / 2; }

}  // namespace sas
