#include "zc/field.hpp"

#include <cctype>

#include "zc/error.hpp"

namespace zc {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DegreeCap: return "DegreeCap";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::XOnlyFactor: return "XOnlyFactor";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::BothConstant: return "BothConstant";
    case ErrorCode::DegenerateFactor: return "DegenerateFactor";
    case ErrorCode::NonzeroDegree: return "NonzeroDegree";
    case ErrorCode::ZeroCycleInput: return "ZeroCycleInput";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::DegenerateModule: return "DegenerateModule";
    case ErrorCode::EmptyCover: return "EmptyCover";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den(1);
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(text.substr(slash + 1), den) && den != 0;
  }
  if (!ok) fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    fail(ErrorCode::NotPrime, "field characteristic " + std::to_string(p) +
                                  " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field::Elem Field::normalize(const Rational& a) const {
  if (p_ == 0) return a;
  Integer num = a.get_num() % p_;
  if (num < 0) num += p_;
  if (a.get_den() != 1) {
    Integer den = a.get_den() % p_;
    if (den == 0) fail(ErrorCode::Parse, "denominator divisible by the characteristic");
    Integer den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), Integer(p_).get_mpz_t());
    num = (num * den_inv) % p_;
  }
  return Elem(num);
}

Field::Elem Field::add(const Elem& a, const Elem& b) const {
  if (p_ == 0) return a + b;
  Elem r;
  r.get_num() = a.get_num() + b.get_num();
  if (r.get_num() >= p_) r.get_num() -= p_;
  return r;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const {
  if (p_ == 0) return a - b;
  Elem r;
  r.get_num() = a.get_num() - b.get_num();
  if (r.get_num() < 0) r.get_num() += p_;
  return r;
}

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  if (p_ == 0) return a * b;
  Elem r;
  r.get_num() = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_num_mpz_t(), r.get_num_mpz_t(), p_);
  return r;
}

Field::Elem Field::neg(const Elem& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  Elem r;
  r.get_num() = Integer(p_) - a.get_num();
  return r;
}

Field::Elem Field::inv(const Elem& a) const {
  if (sgn(a) == 0) fail(ErrorCode::ZeroInput, "division by zero in " + name());
  if (p_ == 0) return 1 / a;
  Elem r;
  mpz_invert(r.get_num_mpz_t(), a.get_num_mpz_t(), Integer(p_).get_mpz_t());
  return r;
}

std::string Field::format(const Elem& a) const {
  if (p_ == 0) return format_rational(a);
  return a.get_num().get_str();
}

Field::Elem Field::parse(std::string_view text) const { return normalize(parse_rational(text)); }

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (!(a == b)) {
    fail(ErrorCode::FieldMismatch,
         std::string(where) + ": field mismatch (" + a.name() + " vs " + b.name() + ")");
  }
}

}  // namespace zc
