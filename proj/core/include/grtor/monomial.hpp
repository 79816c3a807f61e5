#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace grtor {

inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector x^e over at most kMaxVariables variables.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return nvars_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, int value);
  int degree() const noexcept;
  bool is_one() const noexcept;
  /// Index of the last variable with positive exponent, or -1 for 1.
  int max_variable() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for (other / *this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.e_ == b.e_;
  }
  /// Lexicographic comparison of raw exponent arrays; a storage key only.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.e_ < b.e_; }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded orders are well-orders with 1 minimal; LocalDegree has 1 maximal.
enum class MonomialOrder : std::uint8_t {
  Degrevlex,
  Deglex,
  /// Lower total degree is larger; ties broken by degrevlex.
  LocalDegree,
};

std::string_view to_string(MonomialOrder order) noexcept;
bool is_local(MonomialOrder order) noexcept;

/// Strict total order on monomials. Throws UsageError on length mismatch.
std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b);

/// All monomials of the given degree, sorted descending in degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace grtor
