#include "grtor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "grtor/error.hpp"

namespace grtor {

namespace {

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  return compare(MonomialOrder::Degrevlex, a, b) == std::strong_ordering::greater;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

PolyRing::PolyRing(FieldSpec field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw UsageError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw UsageError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw UsageError("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, const Scalar& constant) : Polynomial(std::move(ring)) {
  if (!constant.is_zero()) terms_.push_back({Monomial(ring_->nvars()), constant});
}

Polynomial::Polynomial(RingPtr ring, const Monomial& mono, const Scalar& coef) : Polynomial(std::move(ring)) {
  if (mono.size() != ring_->nvars()) throw UsageError("monomial length does not match ring");
  if (!coef.is_zero()) terms_.push_back({mono, coef});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (t.mono.size() != p.ring_->nvars()) throw UsageError("monomial length does not match ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const auto n = ring->nvars();
  const auto f = ring->field();
  return Polynomial(std::move(ring), Monomial::variable(n, index), Scalar::one(f));
}

Polynomial Polynomial::constant(RingPtr ring, long value) {
  const auto f = ring->field();
  return Polynomial(std::move(ring), Scalar(f, value));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const noexcept {
  // Degrevlex sorts by degree first.
  return terms_.empty() ? -1 : terms_.front().mono.degree();
}

int Polynomial::order() const noexcept { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

bool Polynomial::is_homogeneous() const noexcept { return degree() == order(); }

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::initial_form() const {
  if (is_zero()) throw UsageError("the zero polynomial has no initial form");
  return homogeneous_component(order());
}

Polynomial Polynomial::truncate(int j_max) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() <= j_max) out.terms_.push_back(t);
  }
  return out;
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
  if (is_zero()) throw UsageError("the zero polynomial has no leading term");
  if (order == MonomialOrder::Degrevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (compare(order, t.mono, best->mono) == std::strong_ordering::greater) best = &t;
  }
  return *best;
}

Scalar Polynomial::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return degrevlex_greater(t.mono, m); });
  if (it != terms_.end() && it->mono == mono) return it->coef;
  return Scalar::zero(field());
}

Polynomial Polynomial::monic(MonomialOrder order) const {
  if (is_zero()) return *this;
  return *this * leading_term(order).coef.inverse();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw UsageError("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Polynomial Polynomial::add_scaled(const Polynomial& other, const Monomial& mono, const Scalar& coef) const {
  check_ring(other);
  Polynomial out(ring_);
  if (coef.is_zero() || other.is_zero()) {
    out.terms_ = terms_;
    return out;
  }
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * mono;
    if (a == terms_.end() || degrevlex_greater(bm, a->mono)) {
      out.terms_.push_back({bm, b->coef * coef});
      ++b;
    } else if (a->mono == bm) {
      Scalar c = a->coef + b->coef * coef;
      if (!c.is_zero()) out.terms_.push_back({bm, std::move(c)});
      ++a;
      ++b;
    } else {
      out.terms_.push_back(*a++);
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = add_scaled(other, Monomial(ring_->nvars()), Scalar::one(field()));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = add_scaled(other, Monomial(ring_->nvars()), -Scalar::one(field()));
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= s;
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& mono, const Scalar& coef) const {
  Polynomial out(ring_);
  if (coef.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * mono, t.coef * coef});
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  }
  return true;
}

std::string to_string(const RingPtr& ring, const Monomial& mono) {
  std::string out;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring->names()[i];
    if (mono[i] > 1) out += "^" + std::to_string(mono[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Symmetric representative so that -1 in F_p prints as "-1".
std::pair<bool, std::string> signed_coefficient(const Scalar& c) {
  if (c.field().is_rational()) {
    mpq_class q = c.rational();
    bool neg = sgn(q) < 0;
    if (neg) q = -q;
    return {neg, q.get_str()};
  }
  std::uint32_t p = c.field().characteristic;
  std::uint32_t v = c.residue();
  if (v > p / 2) return {true, std::to_string(p - v)};
  return {false, std::to_string(v)};
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    auto [neg, mag] = signed_coefficient(t.coef);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += grtor::to_string(ring_, t.mono);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip_ws();
    if (pos_ == text_.size()) return out;
    out.push_back(expr());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("expected ',' or end of input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Polynomial next = term();
      if (c == '+') {
        acc += next;
      } else {
        acc -= next;
      }
    }
    return acc;
  }

  bool starts_primary(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        mpz_class d = number();
        if (d == 0) fail("division by zero");
        acc *= Scalar(ring_->field(), mpq_class(1, d));
      } else if (starts_primary(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      mpz_class e = number();
      if (!e.fits_sint_p() || e > 65535) fail("exponent too large");
      Polynomial out = Polynomial::constant(ring_, 1);
      for (long k = 0; k < e.get_si(); ++k) out *= base;
      return out;
    }
    return base;
  }

  mpz_class number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial(ring_, Scalar(ring_->field(), number()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return identifier(text_.substr(start, pos_ - start), start);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'");
  }

  // Splits a run of identifier characters into variable names, longest match first.
  Polynomial identifier(std::string_view word, std::size_t start) {
    Monomial m(ring_->nvars());
    std::size_t at = 0;
    while (at < word.size()) {
      std::size_t best = 0;
      std::size_t best_index = 0;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        const auto& name = ring_->names()[v];
        if (name.size() > best && word.substr(at).starts_with(name)) {
          best = name.size();
          best_index = v;
        }
      }
      if (best == 0) {
        pos_ = start + at;
        fail("unknown variable in '" + std::string(word) + "'");
      }
      m.set(best_index, m[best_index] + 1);
      at += best;
    }
    return Polynomial(ring_, m, Scalar::one(ring_->field()));
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse_list();
}

std::string_view to_string(Setting setting) noexcept {
  return setting == Setting::Graded ? "graded" : "local";
}

void RingSpec::validate() const {
  if (!ring) throw UsageError("ring specification without a polynomial ring");
  for (const auto& q : quotient) {
    if (!same_ring(q.ring(), ring)) throw UsageError("quotient generator from another ring");
    if (setting == Setting::Graded && !q.is_homogeneous()) {
      throw UsageError("graded quotient generator is not homogeneous: " + q.to_string());
    }
  }
}

}  // namespace grtor
