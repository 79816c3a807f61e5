#include "grtor/monomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "grtor/error.hpp"

namespace grtor {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= nvars_) throw UsageError("variable index out of range");
  if (value < 0 || value > std::numeric_limits<Exponent>::max()) {
    throw UsageError("exponent out of range: " + std::to_string(value));
  }
  e_[i] = static_cast<Exponent>(value);
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(e_.begin(), e_.begin() + nvars_, [](Exponent x) { return x == 0; });
}

int Monomial::max_variable() const noexcept {
  for (int i = static_cast<int>(nvars_) - 1; i >= 0; --i) {
    if (e_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    int s = int{e_[i]} + int{other.e_[i]};
    if (s > std::numeric_limits<Exponent>::max()) throw UsageError("exponent overflow");
    out.e_[i] = static_cast<Exponent>(s);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (divisor.e_[i] > e_[i]) throw UsageError("monomial division is not exact");
    out.e_[i] = static_cast<Exponent>(e_[i] - divisor.e_[i]);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) out.e_[i] = std::max(a.e_[i], b.e_[i]);
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003U ^ e_[i];
  return h;
}

std::string_view to_string(MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::Degrevlex: return "degrevlex";
    case MonomialOrder::Deglex: return "deglex";
    case MonomialOrder::LocalDegree: return "local-degree";
  }
  return "?";
}

bool is_local(MonomialOrder order) noexcept { return order == MonomialOrder::LocalDegree; }

namespace {

std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw UsageError("monomial length mismatch");
  const int da = a.degree();
  const int db = b.degree();
  switch (order) {
    case MonomialOrder::Degrevlex:
      if (da != db) return da <=> db;
      return revlex_tiebreak(a, b);
    case MonomialOrder::Deglex:
      if (da != db) return da <=> db;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::LocalDegree:
      if (da != db) return db <=> da;
      return revlex_tiebreak(a, b);
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
    if (var + 1 == nvars) {
      m.set(var, remaining);
      out.push_back(m);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.set(var, e);
      rec(var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return compare(MonomialOrder::Degrevlex, a, b) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace grtor
