#include "gvkit/rational.hpp"

#include <cctype>

namespace gvkit {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidTruncation: return "invalid_truncation";
    case ErrorKind::SymmetryViolation: return "symmetry_violation";
    case ErrorKind::UnsupportedBackend: return "unsupported_backend";
    case ErrorKind::DomainError: return "domain_error";
    case ErrorKind::IncompatibleContext: return "incompatible_context";
    case ErrorKind::TruncationUnsound: return "truncation_unsound";
    case ErrorKind::IncompleteLocalData: return "incomplete_local_data";
    case ErrorKind::InternalConsistency: return "internal_consistency";
    case ErrorKind::SchemaError: return "schema_error";
  }
  return "unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) fail(ErrorKind::DomainError, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DomainError, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  // Accepted forms: [-]digits or [-]digits/digits.  No whitespace.
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-')
    fail(ErrorKind::SchemaError, "malformed rational: \"" + s + "\"");
  Integer n(num), d(den);
  if (sgn(d) == 0)
    fail(ErrorKind::SchemaError, "rational with zero denominator: \"" + s + "\"");
  return Rational(n, d);
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (is_zero()) fail(ErrorKind::DomainError, "negative power of zero");
    Rational inv = Rational(1) / *this;
    return inv.pow_int(-e);
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(r);  // already canonical: powers of coprime values stay coprime
}

}  // namespace gvkit
