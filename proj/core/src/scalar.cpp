#include "grtor/scalar.hpp"

#include <cctype>
#include <ostream>

#include "grtor/error.hpp"

namespace grtor {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw UsageError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec{Kind::Prime, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "QQ" || s == "Q" || s == "0") return rationals();
  std::string_view digits = s;
  if (digits.starts_with("GF(") && digits.ends_with(")")) {
    digits = digits.substr(3, digits.size() - 4);
  } else if (digits.starts_with("ZZ/")) {
    digits = digits.substr(3);
  }
  if (digits.empty() || digits.size() > 10) throw UsageError("unknown field '" + s + "'");
  std::uint64_t p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("unknown field '" + s + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic) + ")";
}

namespace {

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : modulus_(field.characteristic) {
  if (modulus_ == 0) {
    value_ = mpq_class(value);
  } else {
    long r = value % static_cast<long>(modulus_);
    if (r < 0) r += modulus_;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& value) : modulus_(field.characteristic) {
  if (modulus_ == 0) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, modulus_);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : modulus_(field.characteristic) {
  if (modulus_ == 0) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  } else {
    std::uint32_t den = reduce(value.get_den(), modulus_);
    if (den == 0) throw UsageError("denominator vanishes in " + field.name());
    std::uint64_t num = reduce(value.get_num(), modulus_);
    value_ = static_cast<std::uint32_t>(num * inverse_mod(den, modulus_) % modulus_);
  }
}

bool Scalar::is_zero() const noexcept {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const noexcept {
  return modulus_ == 0 && sgn(std::get<mpq_class>(value_)) < 0;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) {
    throw UsageError("scalar field mismatch: " + field().name() + " vs " + other.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("division by zero");
  Scalar out = *this;
  if (modulus_ != 0) {
    out.value_ = inverse_mod(std::get<std::uint32_t>(value_), modulus_);
  } else {
    out.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (modulus_ != 0) {
    std::uint32_t v = std::get<std::uint32_t>(value_);
    out.value_ = v == 0 ? 0U : modulus_ - v;
  } else {
    out.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ != 0) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ != 0) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + modulus_ -
                      std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (modulus_ != 0) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  if (a.modulus_ != 0) return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::uint32_t Scalar::residue() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_);
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() != 1 || !q.get_num().fits_uint_p()) throw UsageError("scalar is not a small integer");
  return static_cast<std::uint32_t>(q.get_num().get_ui());
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw UsageError("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace grtor
