#include "grtor/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "grtor/error.hpp"
#include "grtor/linalg.hpp"

namespace grtor {

void IdealPresentation::validate() const {
  if (!spec.ring) throw UsageError("ideal has no ring");
  spec.validate();
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), spec.ring)) throw UsageError("ideal generator belongs to another ring");
    if (g.is_zero()) throw UsageError("ideal generators must be nonzero");
  }
}

ModulePresentation ModulePresentation::cyclic(const IdealPresentation& ideal) {
  ModulePresentation m;
  m.spec = ideal.spec;
  m.rank = 1;
  m.column_degrees = {0};
  for (const auto& g : ideal.generators) m.relations.push_back({g});
  return m;
}

ModulePresentation ModulePresentation::free(RingSpec spec, std::vector<int> degrees) {
  ModulePresentation m;
  m.spec = std::move(spec);
  m.rank = degrees.size();
  m.column_degrees = std::move(degrees);
  return m;
}

void ModulePresentation::validate() const {
  if (!spec.ring) throw UsageError("module has no ring");
  spec.validate();
  if (column_degrees.size() != rank) throw UsageError("column degree count differs from the free rank");
  for (const auto& rel : relations) {
    if (rel.size() != rank) throw UsageError("relation length differs from the free rank");
    for (const auto& p : rel) {
      if (!same_ring(p.ring(), spec.ring)) throw UsageError("relation entry belongs to another ring");
    }
    if (spec.setting == Setting::Graded && !vector_degree(rel, column_degrees)) {
      throw UsageError("relation is not homogeneous for the column degrees");
    }
  }
}

PolyVector zero_vector(const RingPtr& ring, std::size_t rank) { return PolyVector(rank, Polynomial(ring)); }

bool is_zero(const PolyVector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> vector_degree(const PolyVector& v, std::span<const int> shifts) {
  int deg = -1;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    for (const auto& t : v[pos].terms()) {
      int d = t.mono.degree() + (pos < shifts.size() ? shifts[pos] : 0);
      if (deg == -1) {
        deg = d;
      } else if (d != deg) {
        return std::nullopt;
      }
    }
  }
  return deg;
}

namespace {

struct Lead {
  std::size_t pos;
  Monomial mono;
  Scalar coef;
};

std::optional<Lead> lead_of(const PolyVector& v, MonomialOrder order) {
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (!v[pos].is_zero()) {
      const Term& t = v[pos].leading_term(order);
      return Lead{pos, t.mono, t.coef};
    }
  }
  return std::nullopt;
}

void subtract_multiple(PolyVector& p, const PolyVector& g, std::size_t from, const Monomial& m, const Scalar& c) {
  for (std::size_t k = from; k < p.size(); ++k) {
    if (!g[k].is_zero()) p[k] = p[k].add_scaled(g[k], m, -c);
  }
}

// Full reduction of p by the elements whose index passes `use`.
template <class Use>
PolyVector reduce_full(PolyVector p, const std::vector<PolyVector>& elems, const std::vector<Lead>& leads,
                       MonomialOrder order, const RingPtr& ring, Use use) {
  PolyVector rest = zero_vector(ring, p.size());
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    while (!p[pos].is_zero()) {
      const Term t = p[pos].leading_term(order);
      std::size_t k = 0;
      for (; k < elems.size(); ++k) {
        if (use(k) && leads[k].pos == pos && leads[k].mono.divides(t.mono)) break;
      }
      if (k < elems.size()) {
        subtract_multiple(p, elems[k], pos, t.mono / leads[k].mono, t.coef / leads[k].coef);
      } else {
        Polynomial lt(ring, t.mono, t.coef);
        rest[pos] += lt;
        p[pos] -= lt;
      }
    }
  }
  return rest;
}

PolyVector scaled(const PolyVector& v, const Monomial& m, const Scalar& c) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.mul_term(m, c));
  return out;
}

}  // namespace

ModuleGroebnerBasis::ModuleGroebnerBasis(RingPtr ring, std::size_t rank, std::vector<PolyVector> generators,
                                         GroebnerOptions options)
    : ring_(std::move(ring)), rank_(rank), options_(std::move(options)) {
  if (is_local(options_.order)) throw UsageError("Buchberger's algorithm needs a global order");
  if (options_.shifts.empty()) options_.shifts.assign(rank_, 0);
  if (options_.shifts.size() != rank_) throw UsageError("shift count differs from the module rank");
  const MonomialOrder order = options_.order;
  const FieldSpec field = ring_->field();

  std::vector<PolyVector> elems;
  std::vector<Lead> leads;
  std::vector<std::vector<char>> state;  // 0 absent, 1 pending, 2 done
  std::set<std::tuple<int, std::size_t, std::size_t>> queue;
  auto all = [](std::size_t) { return true; };

  auto pair_degree = [&](std::size_t i, std::size_t j) {
    return Monomial::lcm(leads[i].mono, leads[j].mono).degree() + options_.shifts[leads[i].pos];
  };
  auto add = [&](PolyVector v) {
    auto ld = lead_of(v, order);
    Scalar inv = ld->coef.inverse();
    for (auto& p : v) p *= inv;
    ld->coef = Scalar::one(field);
    const std::size_t n = elems.size();
    elems.push_back(std::move(v));
    leads.push_back(*ld);
    for (auto& row : state) row.push_back(0);
    state.emplace_back(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (leads[k].pos != leads[n].pos) continue;
      state[k][n] = state[n][k] = 1;
      queue.emplace(pair_degree(k, n), n, k);
    }
  };

  for (auto& g : generators) {
    if (g.size() != rank_) throw UsageError("generator length differs from the module rank");
    PolyVector h = reduce_full(std::move(g), elems, leads, order, ring_, all);
    if (!is_zero(h)) add(std::move(h));
  }

  while (!queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    state[i][j] = state[j][i] = 2;
    if (options_.max_degree && deg > *options_.max_degree) continue;
    if (rank_ == 1 && Monomial::coprime(leads[i].mono, leads[j].mono)) continue;
    const Monomial l = Monomial::lcm(leads[i].mono, leads[j].mono);
    bool chain = false;
    for (std::size_t k = 0; k < elems.size() && !chain; ++k) {
      if (k == i || k == j || leads[k].pos != leads[i].pos) continue;
      chain = leads[k].mono.divides(l) && state[i][k] == 2 && state[j][k] == 2;
    }
    if (chain) continue;
    PolyVector s = scaled(elems[i], l / leads[i].mono, Scalar::one(field));
    subtract_multiple(s, elems[j], 0, l / leads[j].mono, Scalar::one(field));
    PolyVector h = reduce_full(std::move(s), elems, leads, order, ring_, all);
    if (!is_zero(h)) add(std::move(h));
  }

  std::vector<char> keep(elems.size(), 1);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size() && keep[a]; ++b) {
      if (a == b || !keep[b] || leads[a].pos != leads[b].pos) continue;
      if (leads[b].mono.divides(leads[a].mono) && (leads[b].mono != leads[a].mono || b < a)) keep[a] = 0;
    }
  }
  std::vector<std::size_t> order_idx;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (keep[a]) order_idx.push_back(a);
  }
  for (std::size_t a : order_idx) {
    PolyVector head = zero_vector(ring_, rank_);
    PolyVector tail = elems[a];
    head[leads[a].pos] = Polynomial(ring_, leads[a].mono, leads[a].coef);
    tail[leads[a].pos] -= head[leads[a].pos];
    PolyVector red = reduce_full(std::move(tail), elems, leads, order, ring_,
                                 [&](std::size_t k) { return keep[k] && k != a; });
    red[leads[a].pos] += head[leads[a].pos];
    elems[a] = std::move(red);
  }
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (leads[a].pos != leads[b].pos) return leads[a].pos < leads[b].pos;
    return compare(order, leads[a].mono, leads[b].mono) == std::strong_ordering::less;
  });
  for (std::size_t a : order_idx) {
    elements_.push_back(std::move(elems[a]));
    lead_pos_.push_back(leads[a].pos);
    lead_mono_.push_back(leads[a].mono);
  }
}

PolyVector ModuleGroebnerBasis::normal_form(PolyVector v) const {
  if (v.size() != rank_) throw UsageError("vector length differs from the module rank");
  std::vector<Lead> leads;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    leads.push_back(Lead{lead_pos_[k], lead_mono_[k], Scalar::one(ring_->field())});
  }
  return reduce_full(std::move(v), elements_, leads, options_.order, ring_, [](std::size_t) { return true; });
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, MonomialOrder order) {
  if (generators.empty()) return {};
  RingPtr ring = generators.front().ring();
  std::vector<PolyVector> gens;
  for (auto& g : generators) gens.push_back({std::move(g)});
  ModuleGroebnerBasis gb(ring, 1, std::move(gens), GroebnerOptions{order, {}, std::nullopt});
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) out.push_back(e[0]);
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order) {
  std::vector<const Term*> leads;
  for (const auto& g : basis) {
    if (g.is_zero()) throw UsageError("zero polynomial in a reduction basis");
    leads.push_back(&g.leading_term(order));
  }
  Polynomial p = f;
  Polynomial rest(f.ring());
  while (!p.is_zero()) {
    const Term t = p.leading_term(order);
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      if (leads[k]->mono.divides(t.mono)) break;
    }
    if (k < basis.size()) {
      p = p.add_scaled(basis[k], t.mono / leads[k]->mono, -(t.coef / leads[k]->coef));
    } else {
      Polynomial lt(f.ring(), t.mono, t.coef);
      rest += lt;
      p -= lt;
    }
  }
  return rest;
}

std::vector<PolyVector> syzygies(const RingPtr& ring, std::size_t rank, const std::vector<PolyVector>& columns,
                                 const SyzygyOptions& options) {
  const std::size_t s = columns.size();
  std::vector<int> shifts = options.row_degrees;
  if (shifts.empty()) shifts.assign(rank, 0);
  if (shifts.size() != rank) throw UsageError("row degree count differs from the rank");
  bool homogeneous = true;
  std::vector<int> col_degrees;
  for (const auto& c : columns) {
    if (c.size() != rank) throw UsageError("column length differs from the rank");
    auto d = vector_degree(c, shifts);
    if (!d) {
      homogeneous = false;
      int m = 0;
      for (std::size_t pos = 0; pos < rank; ++pos) {
        if (!c[pos].is_zero()) m = std::max(m, c[pos].degree() + shifts[pos]);
      }
      d = m;
    }
    col_degrees.push_back(*d < 0 ? 0 : *d);
  }
  if (s == 0) return {};
  std::vector<int> aug_shifts = shifts;
  aug_shifts.insert(aug_shifts.end(), col_degrees.begin(), col_degrees.end());
  std::vector<PolyVector> gens;
  for (std::size_t j = 0; j < s; ++j) {
    PolyVector v = columns[j];
    v.resize(rank + s, Polynomial(ring));
    v[rank + j] = Polynomial::constant(ring, 1);
    gens.push_back(std::move(v));
  }
  ModuleGroebnerBasis gb(ring, rank + s, std::move(gens),
                         GroebnerOptions{options.order, aug_shifts, homogeneous ? options.max_degree : std::nullopt});
  std::vector<PolyVector> syz;
  for (std::size_t k = 0; k < gb.elements().size(); ++k) {
    if (gb.lead_position(k) < rank) continue;
    const auto& e = gb.elements()[k];
    PolyVector v(e.begin() + static_cast<std::ptrdiff_t>(rank), e.end());
    if (homogeneous && options.max_degree && vector_degree(v, col_degrees).value_or(0) > *options.max_degree) continue;
    syz.push_back(std::move(v));
  }
  if (homogeneous && options.minimize) {
    auto idx = select_minimal(ring, syz, col_degrees, {});
    std::vector<PolyVector> out;
    for (auto k : idx) out.push_back(std::move(syz[k]));
    return out;
  }
  return syz;
}

std::vector<std::size_t> select_minimal(const RingPtr& ring, const std::vector<PolyVector>& candidates,
                                        std::span<const int> shifts, std::span<const Polynomial> quotient_gb) {
  auto reduce_mod = [&](PolyVector v) {
    if (!quotient_gb.empty()) {
      for (auto& p : v) p = normal_form(p, quotient_gb);
    }
    return v;
  };
  std::vector<PolyVector> reduced;
  std::vector<int> degree;
  for (const auto& c : candidates) {
    PolyVector r = reduce_mod(c);
    auto d = vector_degree(r, shifts);
    if (!d) throw UsageError("minimal generator selection needs homogeneous candidates");
    degree.push_back(*d);
    reduced.push_back(std::move(r));
  }
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  std::vector<std::size_t> selected;
  std::size_t k = 0;
  while (k < order.size()) {
    const int delta = degree[order[k]];
    std::size_t end = k;
    while (end < order.size() && degree[order[end]] == delta) ++end;
    if (delta < 0) {
      k = end;
      continue;
    }
    std::map<std::pair<std::size_t, Monomial>, std::size_t> coords;
    auto to_sparse = [&](const PolyVector& v) {
      SparseVector out;
      for (std::size_t pos = 0; pos < v.size(); ++pos) {
        for (const auto& t : v[pos].terms()) {
          auto [it, inserted] = coords.try_emplace({pos, t.mono}, coords.size());
          out.emplace(it->second, t.coef);
        }
      }
      return out;
    };
    SparseEchelon span(ring->field());
    for (std::size_t s : selected) {
      const int gap = delta - degree[s];
      for (const auto& m : monomials_of_degree(ring->nvars(), gap)) {
        span.insert(to_sparse(reduce_mod(scaled(reduced[s], m, Scalar::one(ring->field())))));
      }
    }
    for (; k < end; ++k) {
      if (span.insert(to_sparse(reduced[order[k]]))) selected.push_back(order[k]);
    }
  }
  std::vector<std::size_t> by_degree;
  for (std::size_t idx : order) {
    if (std::find(selected.begin(), selected.end(), idx) != selected.end()) by_degree.push_back(idx);
  }
  return by_degree;
}

namespace {

void check_same(const IdealPresentation& a, const IdealPresentation& b) {
  if (!same_ring(a.ring(), b.ring()) || a.spec.setting != b.spec.setting) {
    throw UsageError("ideals live in different rings");
  }
}

}  // namespace

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b) {
  check_same(a, b);
  IdealPresentation out{a.spec, a.generators};
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b) {
  check_same(a, b);
  IdealPresentation out{a.spec, {}};
  for (const auto& f : a.generators) {
    for (const auto& g : b.generators) {
      Polynomial p = f * g;
      if (!p.is_zero()) out.generators.push_back(std::move(p));
    }
  }
  return out;
}

IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b) {
  check_same(a, b);
  std::vector<Polynomial> left = a.generators;
  std::vector<Polynomial> right = b.generators;
  left.insert(left.end(), a.spec.quotient.begin(), a.spec.quotient.end());
  right.insert(right.end(), a.spec.quotient.begin(), a.spec.quotient.end());
  IdealPresentation out{a.spec, {}};
  if (left.empty() || right.empty()) return out;
  std::vector<PolyVector> cols;
  for (const auto& f : left) cols.push_back({f});
  for (const auto& g : right) cols.push_back({g});
  SyzygyOptions opts;
  opts.minimize = false;
  std::vector<Polynomial> gens;
  for (const auto& syz : syzygies(a.ring(), 1, cols, opts)) {
    Polynomial p(a.ring());
    for (std::size_t k = 0; k < left.size(); ++k) p += syz[k] * left[k];
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  out.generators = groebner_basis(std::move(gens));
  return out;
}

}  // namespace grtor
