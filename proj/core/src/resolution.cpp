#include "grtor/resolution.hpp"

#include <algorithm>
#include <map>

#include "grtor/error.hpp"
#include "grtor/graded_ring.hpp"
#include "grtor/linalg.hpp"

namespace grtor {

const std::vector<PolyVector>& GradedFreeResolution::differential(std::size_t i) const {
  static const std::vector<PolyVector> empty;
  if (i == 0 || i > maps.size()) return empty;
  return maps[i - 1];
}

namespace {

// Drops generators that a relation with a constant entry makes redundant.
void prune_units(const GradedQuotient& g, std::vector<int>& shifts, std::vector<PolyVector>& rels) {
  for (;;) {
    std::size_t rel = rels.size();
    std::size_t pos = 0;
    for (std::size_t r = 0; r < rels.size() && rel == rels.size(); ++r) {
      for (std::size_t p = 0; p < rels[r].size(); ++p) {
        if (rels[r][p].is_constant() && !rels[r][p].is_zero()) {
          rel = r;
          pos = p;
          break;
        }
      }
    }
    if (rel == rels.size()) return;
    const PolyVector unit = rels[rel];
    const Scalar c = unit[pos].terms().front().coef;
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(rel));
    for (auto& r : rels) {
      if (r[pos].is_zero()) continue;
      Polynomial factor = r[pos] * c.inverse();
      for (std::size_t p = 0; p < r.size(); ++p) r[p] -= factor * unit[p];
      r = g.reduce(std::move(r));
    }
    for (auto& r : rels) r.erase(r.begin() + static_cast<std::ptrdiff_t>(pos));
    shifts.erase(shifts.begin() + static_cast<std::ptrdiff_t>(pos));
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const PolyVector& v) { return is_zero(v); }), rels.end());
  }
}

std::vector<PolyVector> pick(const GradedQuotient& g, std::vector<PolyVector> cands, std::span<const int> shifts,
                             std::optional<int> max_degree, std::vector<int>& degrees) {
  for (auto& c : cands) c = g.reduce(std::move(c));
  auto idx = select_minimal(g.ring(), cands, shifts, g.groebner());
  std::vector<PolyVector> out;
  degrees.clear();
  for (auto k : idx) {
    int d = vector_degree(cands[k], shifts).value();
    if (max_degree && d > *max_degree) continue;
    out.push_back(std::move(cands[k]));
    degrees.push_back(d);
  }
  return out;
}

}  // namespace

GradedFreeResolution minimal_resolution(const ModulePresentation& module, int i_max, std::optional<int> max_degree) {
  module.validate();
  if (module.spec.setting != Setting::Graded) throw UsageError("minimal resolutions need the graded setting");
  if (i_max < 0) throw UsageError("i_max must be nonnegative");
  GradedQuotient g(module.spec);
  const RingPtr& ring = g.ring();

  std::vector<int> shifts0 = module.column_degrees;
  std::vector<PolyVector> rels;
  for (const auto& r : module.relations) {
    PolyVector v = g.reduce(r);
    if (!is_zero(v)) rels.push_back(std::move(v));
  }
  prune_units(g, shifts0, rels);

  GradedFreeResolution res;
  res.spec = module.spec;
  res.i_max = i_max;
  res.max_degree = max_degree;
  res.shifts.push_back(shifts0);
  if (i_max == 0 || shifts0.empty()) return res;

  std::vector<int> degrees;
  std::vector<PolyVector> d1 = pick(g, rels, shifts0, max_degree, degrees);
  if (d1.empty()) return res;
  res.maps.push_back(std::move(d1));
  res.shifts.push_back(degrees);

  for (int i = 1; i < i_max; ++i) {
    const std::vector<PolyVector>& d = res.maps.back();
    const std::vector<int>& rows = res.shifts[static_cast<std::size_t>(i) - 1];
    const std::vector<int>& cols = res.shifts[static_cast<std::size_t>(i)];
    std::vector<PolyVector> columns = d;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (const auto& q : g.groebner()) {
        PolyVector v = zero_vector(ring, rows.size());
        v[k] = q;
        columns.push_back(std::move(v));
      }
    }
    SyzygyOptions opts;
    opts.row_degrees = rows;
    opts.max_degree = max_degree;
    opts.minimize = false;
    std::vector<PolyVector> kernel;
    for (auto& syz : syzygies(ring, rows.size(), columns, opts)) {
      PolyVector a(syz.begin(), syz.begin() + static_cast<std::ptrdiff_t>(d.size()));
      a = g.reduce(std::move(a));
      if (!is_zero(a)) kernel.push_back(std::move(a));
    }
    std::vector<PolyVector> next = pick(g, std::move(kernel), cols, max_degree, degrees);
    if (next.empty()) break;
    res.maps.push_back(std::move(next));
    res.shifts.push_back(degrees);
  }
  return res;
}

namespace {

PolyVector apply_map(const RingPtr& ring, const std::vector<PolyVector>& columns, std::size_t rows,
                     const PolyVector& v) {
  PolyVector out = zero_vector(ring, rows);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t r = 0; r < rows; ++r) out[r] += v[k] * columns[k][r];
  }
  return out;
}

}  // namespace

bool is_complex(const GradedFreeResolution& res) {
  GradedQuotient g(res.spec);
  for (std::size_t i = 1; i + 1 <= res.maps.size(); ++i) {
    for (const auto& col : res.differential(i + 1)) {
      if (!is_zero(g.reduce(apply_map(g.ring(), res.differential(i), res.rank(i - 1), col)))) return false;
    }
  }
  return true;
}

bool is_minimal(const GradedFreeResolution& res) {
  for (const auto& m : res.maps) {
    for (const auto& col : m) {
      for (const auto& p : col) {
        if (p.is_constant() && !p.is_zero()) return false;
      }
    }
  }
  return true;
}

BigradedSeries betti_series(const GradedFreeResolution& res, int j_max) {
  if (!res.minimal || !is_minimal(res)) throw UsageError("Betti numbers need a minimal resolution");
  BigradedSeries s(res.i_max, j_max);
  for (std::size_t i = 0; i < res.shifts.size() && static_cast<int>(i) <= res.i_max; ++i) {
    for (int a : res.shifts[i]) {
      if (a >= 0 && a <= j_max) s.add(static_cast<int>(i), a, 1);
    }
  }
  return s;
}

namespace {

// N_d = (G^m)_d / W_d with coordinates on standard monomials.
class ModulePiece {
 public:
  ModulePiece(const GradedQuotient& g, const ModulePresentation& n, const std::vector<PolyVector>& rels,
              const std::vector<int>& rel_degrees, int d)
      : field_(g.ring()->field()), relations_(field_) {
    for (std::size_t l = 0; l < n.rank; ++l) {
      for (const auto& m : g.basis(d - n.column_degrees[l])) coords_.emplace(std::make_pair(l, m), coords_.size());
    }
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (rel_degrees[r] > d) continue;
      for (const auto& u : monomials_of_degree(g.ring()->nvars(), d - rel_degrees[r])) {
        PolyVector v;
        for (const auto& p : rels[r]) v.push_back(g.reduce(p.mul_term(u, Scalar::one(field_))));
        relations_.insert(raw(v));
      }
    }
    for (const auto& [key, idx] : coords_) {
      if (!relations_.is_pivot(idx)) quotient_.emplace(idx, 0);
    }
    std::size_t q = 0;
    for (auto& [idx, slot] : quotient_) slot = q++;
    for (const auto& [key, idx] : coords_) {
      if (quotient_.count(idx) != 0) representatives_.push_back(key);
    }
    std::sort(representatives_.begin(), representatives_.end(),
              [&](const auto& a, const auto& b) { return quotient_.at(coords_.at(a)) < quotient_.at(coords_.at(b)); });
  }

  std::size_t dim() const noexcept { return quotient_.size(); }
  const std::pair<std::size_t, Monomial>& representative(std::size_t q) const { return representatives_[q]; }

  /// Coordinates in the quotient basis of a reduced degree-d vector.
  SparseVector project(const PolyVector& v, std::size_t offset) const {
    SparseVector s = raw(v);
    relations_.reduce(s);
    SparseVector out;
    for (const auto& [idx, c] : s) out.emplace(offset + quotient_.at(idx), c);
    return out;
  }

 private:
  SparseVector raw(const PolyVector& v) const {
    SparseVector s;
    for (std::size_t l = 0; l < v.size(); ++l) {
      for (const auto& t : v[l].terms()) s.emplace(coords_.at({l, t.mono}), t.coef);
    }
    return s;
  }

  FieldSpec field_;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> coords_;
  SparseEchelon relations_;
  std::map<std::size_t, std::size_t> quotient_;
  std::vector<std::pair<std::size_t, Monomial>> representatives_;
};

}  // namespace

BigradedSeries tor_series(const ModulePresentation& m, const ModulePresentation& n, int i_max, int j_max) {
  m.validate();
  n.validate();
  if (!same_ring(m.ring(), n.ring()) || m.spec.setting != Setting::Graded || n.spec.setting != Setting::Graded) {
    throw UsageError("Tor needs two graded modules over the same ring");
  }
  GradedQuotient g(m.spec);
  if (groebner_basis(n.spec.quotient) != g.groebner()) throw UsageError("modules live over different quotient rings");
  GradedFreeResolution res = minimal_resolution(m, i_max + 1, j_max);

  std::vector<PolyVector> rels;
  std::vector<int> rel_degrees;
  for (const auto& r : n.relations) {
    PolyVector v = g.reduce(r);
    if (is_zero(v)) continue;
    rel_degrees.push_back(vector_degree(v, n.column_degrees).value());
    rels.push_back(std::move(v));
  }
  std::map<int, ModulePiece> pieces;
  auto piece = [&](int d) -> const ModulePiece& {
    auto it = pieces.find(d);
    if (it == pieces.end()) it = pieces.emplace(d, ModulePiece(g, n, rels, rel_degrees, d)).first;
    return it->second;
  };

  BigradedSeries out(i_max, j_max);
  for (int j = 0; j <= j_max; ++j) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(i_max) + 2, 0);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(i_max) + 3, 0);
    for (int i = 0; i <= i_max + 1; ++i) {
      for (int a : (static_cast<std::size_t>(i) < res.shifts.size() ? res.shifts[static_cast<std::size_t>(i)] : std::vector<int>{})) {
        if (a <= j) dims[static_cast<std::size_t>(i)] += piece(j - a).dim();
      }
    }
    for (int i = 1; i <= i_max + 1; ++i) {
      const auto& d = res.differential(static_cast<std::size_t>(i));
      if (d.empty()) continue;
      const auto& targets = res.shifts[static_cast<std::size_t>(i) - 1];
      std::vector<std::size_t> offsets;
      std::size_t off = 0;
      for (int a : targets) {
        offsets.push_back(off);
        if (a <= j) off += piece(j - a).dim();
      }
      SparseEchelon image(g.ring()->field());
      const auto& sources = res.shifts[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (sources[k] > j) continue;
        const ModulePiece& src = piece(j - sources[k]);
        for (std::size_t q = 0; q < src.dim(); ++q) {
          const auto& [l, u] = src.representative(q);
          SparseVector v;
          for (std::size_t r = 0; r < targets.size(); ++r) {
            if (d[k][r].is_zero() || targets[r] > j) continue;
            PolyVector w = zero_vector(g.ring(), n.rank);
            w[l] = g.reduce(d[k][r].mul_term(u, Scalar::one(g.ring()->field())));
            for (auto& [idx, c] : piece(j - targets[r]).project(w, offsets[r])) v.emplace(idx, c);
          }
          image.insert(std::move(v));
        }
      }
      ranks[static_cast<std::size_t>(i)] = image.rank();
    }
    for (int i = 0; i <= i_max; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      long long h = static_cast<long long>(dims[ui]) - static_cast<long long>(ranks[ui]) -
                    static_cast<long long>(ranks[ui + 1]);
      if (h > 0) out.set(i, j, h);
    }
  }
  return out;
}

bool tor_symmetry_check(const ModulePresentation& m, const ModulePresentation& n, int i_max, int j_max) {
  return tor_series(m, n, i_max, j_max) == tor_series(n, m, i_max, j_max);
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

BigradedSeries ek_betti_stable(const IdealPresentation& ideal, int i_max, int j_max) {
  ideal.validate();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators) {
    if (g.size() != 1) throw UsageError("Eliahou-Kervaire needs a monomial ideal; got " + g.to_string());
    gens.push_back(g.terms().front().mono);
  }
  std::vector<Monomial> minimal;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
      if (a != b && gens[b].divides(gens[a])) redundant = gens[b] != gens[a] || b < a;
    }
    if (!redundant) minimal.push_back(gens[a]);
  }
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  for (const auto& u : minimal) {
    const int mu = u.max_variable();
    for (int v = 0; v < mu; ++v) {
      Monomial w = u / Monomial::variable(u.size(), static_cast<std::size_t>(mu)) *
                   Monomial::variable(u.size(), static_cast<std::size_t>(v));
      if (!in_ideal(w)) {
        throw UsageError("ideal is not stable: " + to_string(ideal.ring(), w) + " is missing");
      }
    }
  }
  BigradedSeries s(i_max, j_max);
  for (const auto& u : minimal) {
    for (int i = 0; i <= i_max; ++i) {
      long long b = binomial(u.max_variable(), i);
      if (b > 0 && u.degree() + i <= j_max) s.add(i, u.degree() + i, b);
    }
  }
  return s;
}

BigradedSeries example2_closed_form(int n, int m, int d, int e, int i_max, int j_max) {
  if (d < 2 || d >= e || e < 3 || m < 1 || m > n) {
    throw UsageError("closed form needs 2 <= d < e, e >= 3 and 1 <= m <= n");
  }
  BigradedSeries s(i_max, j_max);
  const long long head[3] = {1, m, m - 1};
  const int head_deg[3] = {0, d, d + 1};
  for (int k = 0; 2 * k <= i_max; ++k) {
    for (int h = 0; h < 3; ++h) {
      int i = 2 * k + h;
      int j = k * e + head_deg[h];
      if (head[h] > 0 && i <= i_max && j <= j_max) s.add(i, j, head[h]);
    }
  }
  return s;
}

}  // namespace grtor
