#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grtor/monomial.hpp"
#include "grtor/scalar.hpp"

namespace grtor {

/// k[x_1..x_n]: a coefficient field and ordered, distinct variable names.
class PolyRing {
 public:
  PolyRing(FieldSpec field, std::vector<std::string> names);

  static std::shared_ptr<const PolyRing> make(FieldSpec field, std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(field, std::move(names));
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial. Terms are kept sorted descending in degrevlex with no
/// zero coefficients, so equal polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const Scalar& constant);
  Polynomial(RingPtr ring, const Monomial& mono, const Scalar& coef);

  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial constant(RingPtr ring, long value);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Largest total degree; -1 for zero.
  int degree() const noexcept;
  /// Smallest total degree (the m-adic order); -1 for zero.
  int order() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial homogeneous_component(int degree) const;
  /// Lowest-degree homogeneous component. Throws UsageError on zero.
  Polynomial initial_form() const;
  /// Drops every term of total degree > j_max.
  Polynomial truncate(int j_max) const;

  /// Throws UsageError on zero.
  const Term& leading_term(MonomialOrder order) const;
  Scalar coefficient(const Monomial& mono) const;
  Polynomial monic(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  /// this * coef * mono, without re-sorting.
  Polynomial mul_term(const Monomial& mono, const Scalar& coef) const;
  /// this + coef * mono * other in one merge pass.
  Polynomial add_scaled(const Polynomial& other, const Monomial& mono, const Scalar& coef) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string to_string(const RingPtr& ring, const Monomial& mono);

/// Text grammar: terms joined by + and -, integer coefficients, optional *
/// between factors, ^ for powers, parentheses, and /n for rational scalars.
/// Whitespace-insensitive. Throws ParseError with a column position.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
/// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

enum class Setting : std::uint8_t { Graded, Local };

std::string_view to_string(Setting setting) noexcept;

/// The ring of a computation: G = k[x]/J (graded) or k[x]_(x)/J (local).
struct RingSpec {
  RingPtr ring;
  Setting setting = Setting::Graded;
  std::vector<Polynomial> quotient;

  /// Throws UsageError if graded quotient generators are not homogeneous or
  /// belong to another ring.
  void validate() const;
};

}  // namespace grtor
