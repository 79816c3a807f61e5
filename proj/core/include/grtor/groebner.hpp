#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grtor/polynomial.hpp"

namespace grtor {

using PolyVector = std::vector<Polynomial>;

struct IdealPresentation {
  RingSpec spec;
  std::vector<Polynomial> generators;

  const RingPtr& ring() const noexcept { return spec.ring; }
  /// Throws UsageError on zero or foreign generators.
  void validate() const;
};

struct ModulePresentation {
  RingSpec spec;
  std::size_t rank = 1;
  std::vector<int> column_degrees;
  std::vector<PolyVector> relations;

  /// R/I as a rank-one module with generator in degree 0.
  static ModulePresentation cyclic(const IdealPresentation& ideal);
  static ModulePresentation free(RingSpec spec, std::vector<int> degrees);

  const RingPtr& ring() const noexcept { return spec.ring; }
  /// Checks lengths and, in the graded setting, homogeneity of relations.
  void validate() const;
};

PolyVector zero_vector(const RingPtr& ring, std::size_t rank);
bool is_zero(const PolyVector& v) noexcept;

/// Degree of a homogeneous vector: deg of any term plus the shift of its
/// position. -1 for zero, nullopt when not homogeneous.
std::optional<int> vector_degree(const PolyVector& v, std::span<const int> shifts);

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::Degrevlex;
  /// Position degrees used by the degree-driven pair selection.
  std::vector<int> shifts;
  /// For homogeneous input: pairs above this degree are skipped, giving a
  /// basis valid in degrees <= max_degree.
  std::optional<int> max_degree;
};

/// Reduced Groebner basis of a submodule of R^rank under position-over-term:
/// lower positions dominate, ties by the monomial order.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(RingPtr ring, std::size_t rank, std::vector<PolyVector> generators,
                      GroebnerOptions options = {});

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<PolyVector>& elements() const noexcept { return elements_; }
  /// Position of the leading term of element k.
  std::size_t lead_position(std::size_t k) const { return lead_pos_[k]; }
  const Monomial& lead_monomial(std::size_t k) const { return lead_mono_[k]; }

  PolyVector normal_form(PolyVector v) const;
  bool contains(const PolyVector& v) const { return is_zero(normal_form(v)); }

 private:
  RingPtr ring_;
  std::size_t rank_;
  GroebnerOptions options_;
  std::vector<PolyVector> elements_;
  std::vector<std::size_t> lead_pos_;
  std::vector<Monomial> lead_mono_;
};

/// Reduced, monic Groebner basis of an ideal of k[x] under a global order,
/// sorted ascending by leading monomial.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators,
                                       MonomialOrder order = MonomialOrder::Degrevlex);
/// Full reduction of f by the given polynomials (unique when they form a
/// Groebner basis).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       MonomialOrder order = MonomialOrder::Degrevlex);

struct SyzygyOptions {
  MonomialOrder order = MonomialOrder::Degrevlex;
  /// Degrees of the rows of the column vectors.
  std::vector<int> row_degrees;
  std::optional<int> max_degree;
  /// For homogeneous columns, keep a minimal generating set.
  bool minimize = true;
};

/// Generators of {a : sum a_k columns[k] = 0} in R^{columns.size()}.
std::vector<PolyVector> syzygies(const RingPtr& ring, std::size_t rank, const std::vector<PolyVector>& columns,
                                 const SyzygyOptions& options = {});

/// Indices of a minimal generating subset of homogeneous candidates in
/// (k[x]/J)^rank, where quotient_gb is a degrevlex Groebner basis of J.
/// Candidates are scanned by ascending degree, stably; zero candidates are
/// never chosen.
std::vector<std::size_t> select_minimal(const RingPtr& ring, const std::vector<PolyVector>& candidates,
                                        std::span<const int> shifts, std::span<const Polynomial> quotient_gb);

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b);
IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b);
/// Computed in k[x] by the syzygy method, with the quotient ideal adjoined to
/// both sides. Returns a reduced degrevlex Groebner basis.
IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace grtor
