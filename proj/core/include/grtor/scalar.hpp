#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace grtor {

/// Coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind : std::uint8_t { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() noexcept { return {}; }
  /// Throws UsageError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "QQ", "GF(p)", "ZZ/p" or a bare prime.
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return kind == Kind::Rational; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact field element. Carries its field, so mixing fields is detected.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& value);
  /// Throws UsageError when the denominator vanishes in F_p.
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }

  FieldSpec field() const noexcept {
    return modulus_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldSpec::Kind::Prime, modulus_};
  }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar inverse() const;  // throws UsageError on zero
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "p/q" or an integer; residues in [0, p).
  std::string to_string() const;
  /// Residue in [0, p) for prime fields; numerator for integral rationals.
  std::uint32_t residue() const;
  const mpq_class& rational() const;
  /// True for rationals with negative value; never for F_p.
  bool is_negative() const noexcept;

 private:
  void check_same_field(const Scalar& other) const;

  std::uint32_t modulus_ = 0;  // 0 means Q
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace grtor
