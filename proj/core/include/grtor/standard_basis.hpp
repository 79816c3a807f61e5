#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "grtor/groebner.hpp"
#include "grtor/linalg.hpp"

namespace grtor {

/// Standard basis of an ideal of k[x]_(x) (plus the ring's quotient ideal)
/// under the local degree order, by Mora's tangent cone algorithm.
class StandardBasis {
 public:
  /// Throws CapExceeded when a generator or any basis element has degree
  /// above degree_cap.
  StandardBasis(const IdealPresentation& ideal, int degree_cap);

  const RingPtr& ring() const noexcept { return ring_; }
  int degree_cap() const noexcept { return cap_; }
  /// Minimal: no leading monomial divides another.
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

  /// Mora weak normal form: zero iff f lies in the ideal of the local ring.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Reduced degrevlex Groebner basis of the ideal of initial forms, in the
  /// graded setting over the same variables.
  IdealPresentation initial_ideal() const;
  /// Hilbert function of gr(R/I) at degree d.
  long long hilbert_function(int d) const;
  /// dim_k R/I, or nullopt when I is not m-primary.
  std::optional<long long> colength() const;

 private:
  RingPtr ring_;
  int cap_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

/// T = k[x]/(J + m^K) for an ideal J, by linear algebra on the monomials of
/// degree < K. Standard monomials of degree >= j span m^j T.
class LocalTruncatedQuotient {
 public:
  LocalTruncatedQuotient(RingPtr ring, std::vector<Polynomial> ideal, int order_bound);

  const RingPtr& ring() const noexcept { return ring_; }
  int order_bound() const noexcept { return bound_; }
  /// Standard monomials, ascending degree then degrevlex-descending.
  const std::vector<Monomial>& standard_monomials() const noexcept { return standard_; }
  std::optional<std::size_t> standard_index(const Monomial& m) const;

  /// Representative supported on standard monomials.
  Polynomial normal_form(const Polynomial& f) const;
  long long hilbert_function(int d) const;
  long long dimension() const noexcept { return static_cast<long long>(standard_.size()); }

 private:
  RingPtr ring_;
  int bound_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
  SparseEchelon relations_;
  std::vector<Monomial> standard_;
  std::map<Monomial, std::size_t> standard_index_;
};

}  // namespace grtor
