#pragma once

#include <vector>

#include "grtor/groebner.hpp"

namespace grtor {

/// G = k[x]/J for a homogeneous J, with a degrevlex Groebner basis of J.
class GradedQuotient {
 public:
  /// Throws UsageError unless the setting is graded.
  explicit GradedQuotient(RingSpec spec);

  const RingSpec& spec() const noexcept { return spec_; }
  const RingPtr& ring() const noexcept { return spec_.ring; }
  const std::vector<Polynomial>& groebner() const noexcept { return gb_; }

  Polynomial reduce(const Polynomial& p) const;
  PolyVector reduce(PolyVector v) const;
  bool is_standard(const Monomial& m) const noexcept;
  /// Standard monomials of degree d, degrevlex-descending.
  std::vector<Monomial> basis(int degree) const;
  long long hilbert_function(int degree) const;

 private:
  RingSpec spec_;
  std::vector<Polynomial> gb_;
  std::vector<Monomial> leads_;
};

/// Monomial basis of (k[x]/J)_j.
std::vector<Monomial> graded_piece_basis(const RingSpec& spec, int j);

}  // namespace grtor
