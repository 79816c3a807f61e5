#include "grtor/graded_ring.hpp"

#include <algorithm>

#include "grtor/error.hpp"

namespace grtor {

GradedQuotient::GradedQuotient(RingSpec spec) : spec_(std::move(spec)) {
  if (spec_.setting != Setting::Graded) throw UsageError("graded quotient needs the graded setting");
  spec_.validate();
  gb_ = groebner_basis(spec_.quotient);
  for (const auto& g : gb_) leads_.push_back(g.leading_term(MonomialOrder::Degrevlex).mono);
}

Polynomial GradedQuotient::reduce(const Polynomial& p) const {
  if (gb_.empty()) return p;
  return normal_form(p, gb_);
}

PolyVector GradedQuotient::reduce(PolyVector v) const {
  for (auto& p : v) p = reduce(p);
  return v;
}

bool GradedQuotient::is_standard(const Monomial& m) const noexcept {
  return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
}

std::vector<Monomial> GradedQuotient::basis(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for (auto& m : monomials_of_degree(ring()->nvars(), degree)) {
    if (is_standard(m)) out.push_back(std::move(m));
  }
  return out;
}

long long GradedQuotient::hilbert_function(int degree) const { return static_cast<long long>(basis(degree).size()); }

std::vector<Monomial> graded_piece_basis(const RingSpec& spec, int j) { return GradedQuotient(spec).basis(j); }

}  // namespace grtor
