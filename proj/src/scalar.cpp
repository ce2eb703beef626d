#include "nilrep/scalar.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace nilrep {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Residue of an arbitrary rational modulo p.
mpq_class residue(const mpq_class& v, std::uint32_t p) {
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_class mod = p;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw std::domain_error("denominator " + den.get_str() + " is not invertible modulo " +
                              std::to_string(p));
    r *= inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  }
  return mpq_class(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "Rationals") return rationals();
  std::string_view digits;
  if (text.starts_with("GF(") && text.ends_with(")"))
    digits = text.substr(3, text.size() - 4);
  else if (text.starts_with("F_"))
    digits = text.substr(2);
  else if (text.starts_with("F"))
    digits = text.substr(1);
  else
    throw std::invalid_argument("unknown field descriptor '" + std::string(text) + "'");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw std::invalid_argument("unknown field descriptor '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

Scalar::Scalar(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpq_class(value)) {}

Scalar::Scalar(const Field& field, const mpq_class& value) : value_(value), char_(field.characteristic()) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
      throw std::invalid_argument("malformed coefficient '" + s + "'");
  mpq_class v;
  if (s.front() == '+') s.erase(0, 1);
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return Scalar(field, v);
}

void Scalar::reduce() {
  if (char_ != kNeutral && char_ != 0) value_ = residue(value_, char_);
}

void Scalar::unify(Scalar& other) {
  if (char_ == other.char_) return;
  if (char_ == kNeutral) {
    char_ = other.char_;
    reduce();
  } else if (other.char_ == kNeutral) {
    other.char_ = char_;
    other.reduce();
  } else {
    throw FieldMismatch("scalars from different fields combined (characteristics " + std::to_string(char_) +
                        " and " + std::to_string(other.char_) + ")");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (char_ == kNeutral || char_ == 0) {
    Scalar r = *this;
    r.value_ = 1 / value_;
    return r;
  }
  mpz_class inv;
  mpz_class mod = char_;
  mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), mod.get_mpz_t());
  Scalar r = *this;
  r.value_ = mpq_class(inv);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (char_ == rhs.char_) {
    value_ += rhs.value_;
  } else {
    Scalar r = rhs;
    unify(r);
    value_ += r.value_;
  }
  if (char_ != kNeutral && char_ != 0) {
    if (value_ >= char_) value_ -= char_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (char_ == rhs.char_) {
    value_ -= rhs.value_;
  } else {
    Scalar r = rhs;
    unify(r);
    value_ -= r.value_;
  }
  if (char_ != kNeutral && char_ != 0) {
    if (sgn(value_) < 0) value_ += char_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (char_ == rhs.char_) {
    value_ *= rhs.value_;
  } else {
    Scalar r = rhs;
    unify(r);
    value_ *= r.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  Scalar r = rhs;
  unify(r);
  return *this *= r.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.char_ == rhs.char_) return lhs.value_ == rhs.value_;
  Scalar a = lhs, b = rhs;
  a.unify(b);
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilrep
