#include "grtor/local_filtered.hpp"

#include <algorithm>
#include <map>

#include "grtor/error.hpp"
#include "grtor/linalg.hpp"
#include "grtor/standard_basis.hpp"

namespace grtor {

const std::vector<PolyVector>& FilteredResolution::differential(std::size_t i) const {
  static const std::vector<PolyVector> none;
  if (i == 0 || i > maps.size()) return none;
  return maps[i - 1];
}

StableFiltration FilteredResolution::filtration(std::size_t i) const {
  StableFiltration s;
  s.kind = StableFiltration::Kind::ShiftedMAdic;
  if (i < shifts.size()) s.shifts = shifts[i];
  s.stability_bound = s.shifts.empty() ? 0 : *std::max_element(s.shifts.begin(), s.shifts.end());
  return s;
}

namespace {

PolyVector apply(const RingPtr& ring, const std::vector<PolyVector>& columns, std::size_t rows, const PolyVector& s) {
  PolyVector out = zero_vector(ring, rows);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (s[k].is_zero()) continue;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!columns[k][r].is_zero()) out[r] += columns[k][r] * s[k];
    }
  }
  return out;
}

void truncate_rows(PolyVector& v, const std::vector<int>& shifts, int cap) {
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = v[r].truncate(cap - shifts[r]);
}

// min over rows of ord v_r + shift_r, or nullopt for zero
std::optional<int> level(const PolyVector& v, const std::vector<int>& shifts) {
  std::optional<int> out;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r].is_zero()) continue;
    int l = v[r].order() + shifts[r];
    if (!out || l < *out) out = l;
  }
  return out;
}

PolyVector graded_part(const PolyVector& v, const std::vector<int>& shifts, int l) {
  PolyVector out;
  for (std::size_t r = 0; r < v.size(); ++r) out.push_back(v[r].homogeneous_component(l - shifts[r]));
  return out;
}

// q homogeneous of degree l in F (shifts `cols`) with d q = target, d given by graded columns.
PolyVector solve_graded(const RingPtr& ring, const std::vector<PolyVector>& d, const std::vector<int>& rows,
                        const std::vector<int>& cols, const PolyVector& target, int l) {
  const FieldSpec& field = ring->field();
  const std::size_t n = ring->nvars();
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (l - cols[k] < 0) continue;
    for (auto& u : monomials_of_degree(n, l - cols[k])) unknowns.emplace_back(k, std::move(u));
  }
  std::map<std::pair<std::size_t, Monomial>, std::size_t> eq;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (l - rows[r] < 0) continue;
    for (auto& u : monomials_of_degree(n, l - rows[r])) eq.emplace(std::pair{r, std::move(u)}, eq.size());
  }
  Matrix a(field, eq.size(), unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const auto& [k, u] = unknowns[c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& t : d[k][r].terms()) {
        auto it = eq.find({r, t.mono * u});
        if (it != eq.end()) a(it->second, c) += t.coef;
      }
    }
  }
  Vector b = zero_vector(field, eq.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& t : target[r].terms()) {
      auto it = eq.find({r, t.mono});
      if (it == eq.end()) throw Error("graded residual of unexpected degree");
      b[it->second] = t.coef;
    }
  }
  auto x = solve(a, b);
  if (!x) throw LiftWindowExceeded("lift correction at level " + std::to_string(l) + " has no solution");
  PolyVector q = zero_vector(ring, cols.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if (!(*x)[c].is_zero()) q[unknowns[c].first] += Polynomial(ring, unknowns[c].second, (*x)[c]);
  }
  return q;
}

}  // namespace

bool is_lift_of(const FilteredResolution& f, const GradedFreeResolution& gres) {
  if (f.shifts != std::vector<std::vector<int>>(gres.shifts.begin(), gres.shifts.begin() + static_cast<std::ptrdiff_t>(std::min(gres.shifts.size(), f.shifts.size())))) {
    return false;
  }
  for (std::size_t i = 1; i < f.shifts.size(); ++i) {
    const auto& d = f.differential(i);
    const auto& g = gres.differential(i);
    const auto& rows = f.shifts[i - 1];
    for (std::size_t k = 0; k < d.size(); ++k) {
      auto l = level(d[k], rows);
      if (l && *l < f.shifts[i][k]) return false;
      if (!(graded_part(d[k], rows, f.shifts[i][k]) == g[k])) return false;
    }
  }
  return true;
}

bool squares_to_zero(const FilteredResolution& f) {
  for (std::size_t i = 2; i < f.shifts.size(); ++i) {
    const auto& rows = f.shifts[i - 2];
    for (const auto& s : f.differential(i)) {
      PolyVector v = apply(f.ring, f.differential(i - 1), rows.size(), s);
      truncate_rows(v, rows, f.cap);
      if (!is_zero(v)) return false;
    }
  }
  return true;
}

FilteredResolution lift_resolution(const GradedFreeResolution& gres, const std::vector<PolyVector>& first_differential,
                                   int cap) {
  if (!gres.spec.quotient.empty()) throw UsageError("lifting needs a polynomial ring without quotient");
  if (gres.max_degree && *gres.max_degree < cap) throw UsageError("graded resolution is truncated below the cap");
  FilteredResolution f;
  f.ring = gres.spec.ring;
  f.cap = cap;
  f.i_max = gres.i_max;
  f.shifts = gres.shifts;
  if (gres.maps.empty()) return f;
  if (first_differential.size() != gres.rank(1)) throw UsageError("first differential has the wrong number of columns");
  std::vector<PolyVector> d1 = first_differential;
  for (auto& c : d1) {
    if (c.size() != gres.rank(0)) throw UsageError("first differential has the wrong number of rows");
    truncate_rows(c, f.shifts[0], cap);
  }
  f.maps.push_back(std::move(d1));
  for (std::size_t i = 2; i <= gres.maps.size(); ++i) {
    const auto& rows = f.shifts[i - 2];
    const auto& mid = f.shifts[i - 1];
    const auto& prev = f.maps[i - 2];
    const auto& graded_prev = gres.differential(i - 1);
    std::vector<PolyVector> cols;
    for (const auto& g : gres.differential(i)) {
      PolyVector s = g;
      truncate_rows(s, mid, cap);
      for (;;) {
        PolyVector v = apply(f.ring, prev, rows.size(), s);
        truncate_rows(v, rows, cap);
        auto l = level(v, rows);
        if (!l) break;
        PolyVector q = solve_graded(f.ring, graded_prev, rows, mid, graded_part(v, rows, *l), *l);
        for (std::size_t r = 0; r < s.size(); ++r) s[r] -= q[r];
        truncate_rows(s, mid, cap);
      }
      cols.push_back(std::move(s));
    }
    f.maps.push_back(std::move(cols));
  }
  return f;
}

CyclicLift lift_cyclic(const IdealPresentation& ideal, int i_max, int cap) {
  if (ideal.spec.setting != Setting::Local || !ideal.spec.quotient.empty()) {
    throw UsageError("lifting needs an ideal of the localized polynomial ring");
  }
  StandardBasis sb(ideal, cap);
  const RingPtr& ring = ideal.ring();
  std::vector<PolyVector> initial;
  for (const auto& g : sb.elements()) initial.push_back({g.initial_form()});
  auto chosen = select_minimal(ring, initial, std::vector<int>{0}, {});
  CyclicLift out;
  out.initial_ideal = IdealPresentation{RingSpec{ring, Setting::Graded, {}}, {}};
  std::vector<PolyVector> d1;
  for (std::size_t k : chosen) {
    out.initial_ideal.generators.push_back(initial[k][0]);
    d1.push_back({sb.elements()[k]});
  }
  ModulePresentation m = ModulePresentation::cyclic(out.initial_ideal);
  out.graded = minimal_resolution(m, i_max, cap);
  const auto& g1 = out.graded.differential(1);
  if (g1.size() != d1.size()) throw Error("minimal resolution changed the generators of the initial ideal");
  for (std::size_t k = 0; k < g1.size(); ++k) {
    if (!(g1[k][0] == out.initial_ideal.generators[k])) throw Error("minimal resolution reordered the initial ideal");
  }
  out.resolution = lift_resolution(out.graded, d1, cap);
  return out;
}

FilteredComplex filtered_tensor(const FilteredResolution& f, const IdealPresentation& other, int i_max, int j_max) {
  if (j_max < 0 || i_max < 0) throw UsageError("bounds must be nonnegative");
  if (f.cap < j_max) throw UsageError("resolution cap " + std::to_string(f.cap) + " is below j_max " + std::to_string(j_max));
  if (!same_ring(f.ring, other.ring())) throw UsageError("modules live in different rings");
  LocalTruncatedQuotient t(f.ring, other.generators, j_max + 1);
  const auto& standard = t.standard_monomials();

  FilteredComplex l;
  l.field = f.ring->field();
  l.j_max = j_max;
  l.truncated = true;
  const int top = std::min(i_max, f.length());
  l.i_max = i_max;
  l.open_top = f.length() > i_max && f.rank(static_cast<std::size_t>(i_max) + 1) > 0;

  // basis of L_i: (generator, standard monomial)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> basis(static_cast<std::size_t>(i_max) + 1);
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index(basis.size());
  l.levels.assign(basis.size(), {});
  for (int i = 0; i <= top; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < f.rank(ui); ++k) {
      for (std::size_t u = 0; u < standard.size(); ++u) {
        int lv = f.shifts[ui][k] + standard[u].degree();
        if (lv > j_max) continue;
        index[ui].emplace(std::pair{k, u}, basis[ui].size());
        basis[ui].emplace_back(k, u);
        l.levels[ui].push_back(lv);
      }
    }
  }
  for (int i = 1; i <= i_max; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    Matrix d(l.field, basis[ui - 1].size(), basis[ui].size());
    if (i <= top) {
      const auto& cols = f.differential(ui);
      const auto& rows = f.shifts[ui - 1];
      for (std::size_t c = 0; c < basis[ui].size(); ++c) {
        const auto [k, u] = basis[ui][c];
        Polynomial mono(f.ring, standard[u], Scalar::one(l.field));
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (cols[k][r].is_zero()) continue;
          Polynomial image = t.normal_form(cols[k][r] * mono);
          for (const auto& term : image.terms()) {
            if (rows[r] + term.mono.degree() > j_max) continue;
            auto w = t.standard_index(term.mono);
            if (!w) throw Error("normal form left a nonstandard monomial");
            d(index[ui - 1].at({r, *w}), c) += term.coef;
          }
        }
      }
    }
    l.differentials.push_back(std::move(d));
  }
  l.validate();
  return l;
}

LocalTorLow tor_local_low(const IdealPresentation& i, const IdealPresentation& j, int j_max, int cap) {
  if (i.spec.setting != Setting::Local || j.spec.setting != Setting::Local) throw UsageError("local Tor needs local ideals");
  LocalTorLow out;
  StandardBasis sum(ideal_sum(i, j), cap);
  out.tor0_length = sum.colength();
  for (int d = 0; d <= j_max; ++d) out.tor0_series.push_back(sum.hilbert_function(d));

  IdealPresentation product = ideal_product(i, j);
  IdealPresentation meet = ideal_intersection(i, j);
  meet.spec = i.spec;
  StandardBasis sb_product(product, cap);
  for (const auto& g : meet.generators) {
    if (!sb_product.contains(g)) {
      out.tor1_zero = false;
      break;
    }
  }
  if (out.tor1_zero) {
    out.tor1_series.assign(static_cast<std::size_t>(j_max) + 1, 0);
    return out;
  }
  StandardBasis sb_meet(meet, cap);
  for (int d = 0; d <= j_max; ++d) out.tor1_series.push_back(sb_product.hilbert_function(d) - sb_meet.hilbert_function(d));
  return out;
}

}  // namespace grtor
