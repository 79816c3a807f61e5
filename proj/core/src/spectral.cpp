#include "grtor/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "grtor/error.hpp"

namespace grtor {

std::string_view to_string(CellState state) noexcept {
  switch (state) {
    case CellState::Value: return "value";
    case CellState::Indeterminate: return "indeterminate";
    case CellState::ZeroByBound: return "zero-by-bound";
  }
  return "?";
}

CellState SpectralPage::state(int i, int j) const {
  auto it = states.find(Cell{i, j});
  return it == states.end() ? CellState::Value : it->second;
}

BigradedSeries SpectralPage::reliable() const {
  BigradedSeries out(dims.i_max(), dims.j_max());
  for (const auto& [cell, c] : dims.coefficients()) {
    if (determinate(cell.i, cell.j)) out.set(cell.i, cell.j, c);
  }
  return out;
}

namespace {

std::vector<std::size_t> select(const std::vector<int>& levels, auto pred) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < levels.size(); ++b) {
    if (pred(levels[b])) out.push_back(b);
  }
  return out;
}

const std::vector<int>& levels_of(const FilteredComplex& l, int i) {
  static const std::vector<int> none;
  if (i < 0 || i > l.i_max) return none;
  return l.levels[static_cast<std::size_t>(i)];
}

// Rows form a basis of {x in L_i^j : d x in L_{i-1}^{j+r}} in the coordinates
// of the level >= j basis elements, listed in `cols`.
Matrix cycles(const FilteredComplex& l, int i, int j, int r, std::vector<std::size_t>& cols) {
  cols = select(levels_of(l, i), [&](int x) { return x >= j; });
  auto rows = select(levels_of(l, i - 1), [&](int x) { return x < j + r; });
  if (rows.empty() || i == 0) return Matrix::identity(l.field, cols.size());
  return kernel(l.d(i).select_rows(rows).select_columns(cols));
}

// rank of P_{=j} Z_r(i, j)
std::size_t cycle_rank(const FilteredComplex& l, int i, int j, int r) {
  std::vector<std::size_t> cols;
  Matrix z = cycles(l, i, j, r, cols);
  std::vector<std::size_t> at_j;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (levels_of(l, i)[cols[k]] == j) at_j.push_back(k);
  }
  return rank(z.select_columns(at_j));
}

// rank of P_{=j} of d(L_{i+1}^{j-r+1}) intersected with L_i^j
std::size_t boundary_rank(const FilteredComplex& l, int i, int j, int r) {
  if (i + 1 > l.i_max) return 0;
  auto cols = select(levels_of(l, i + 1), [&](int x) { return x >= j - r + 1; });
  if (cols.empty()) return 0;
  auto low = select(levels_of(l, i), [&](int x) { return x < j; });
  auto at_j = select(levels_of(l, i), [&](int x) { return x == j; });
  Matrix d = l.d(i + 1).select_columns(cols);
  Matrix k = low.empty() ? Matrix::identity(l.field, cols.size()) : kernel(d.select_rows(low));
  Matrix image = d.select_rows(at_j) * k.transpose();
  return rank(image);
}

long long page_dim(const FilteredComplex& l, int r, int i, int j) {
  return static_cast<long long>(cycle_rank(l, i, j, r)) - static_cast<long long>(boundary_rank(l, i, j, r));
}

}  // namespace

PageTransition transition_counts(const FilteredComplex& l, int r, int i, int j) {
  PageTransition t;
  t.coker_iota = static_cast<long long>(cycle_rank(l, i, j, r)) - static_cast<long long>(cycle_rank(l, i, j, r + 1));
  t.ker_pi = static_cast<long long>(boundary_rank(l, i, j, r + 1)) - static_cast<long long>(boundary_rank(l, i, j, r));
  return t;
}

SpectralPage page(const FilteredComplex& l, int r) {
  if (r < 1) throw UsageError("pages start at r = 1");
  SpectralPage p;
  p.r = r;
  p.dims = BigradedSeries(l.i_max, l.j_max);
  for (int i = 0; i <= l.i_max; ++i) {
    for (int j = 0; j <= l.j_max; ++j) {
      long long v = page_dim(l, r, i, j);
      if (v < 0) throw Error("negative page dimension; the complex is not filtered");
      if (v > 0) p.dims.set(i, j, v);
      bool unknown = (l.truncated && j + r > l.j_max + 1) || (l.open_top && i == l.i_max);
      if (unknown) p.states[Cell{i, j}] = l.level_count(i, j) == 0 ? CellState::ZeroByBound : CellState::Indeterminate;
    }
  }
  return p;
}

SpectralPage infinity_page(const FilteredComplex& l, int r_used) {
  SpectralPage p;
  p.infinite = true;
  p.r = 0;
  p.dims = BigradedSeries(l.i_max, l.j_max);
  const int window = l.j_max - std::max(r_used, 1);
  for (int i = 0; i <= l.i_max; ++i) {
    const std::size_t n = l.dim(i);
    Matrix boundaries = column_space(l.d(i + 1));
    std::vector<std::size_t> previous;
    auto combined_rank = [&](int j) {
      auto cols = select(levels_of(l, i), [&](int x) { return x >= j; });
      Matrix z = i == 0 ? Matrix::identity(l.field, cols.size()) : kernel(l.d(i).select_columns(cols));
      Matrix stacked = boundaries;
      for (std::size_t k = 0; k < z.rows(); ++k) {
        Vector v = zero_vector(l.field, n);
        for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = z(k, c);
        stacked.append_row(v);
      }
      return rank(stacked);
    };
    std::size_t here = combined_rank(0);
    for (int j = 0; j <= l.j_max; ++j) {
      std::size_t next = combined_rank(j + 1);
      long long v = static_cast<long long>(here) - static_cast<long long>(next);
      if (v > 0) p.dims.set(i, j, v);
      here = next;
      bool unknown = (l.truncated && j > window) || (l.open_top && i == l.i_max);
      if (unknown) p.states[Cell{i, j}] = l.level_count(i, j) == 0 ? CellState::ZeroByBound : CellState::Indeterminate;
    }
  }
  return p;
}

std::vector<PageCancellation> cancellations_at_page(const FilteredComplex& l, int r) {
  std::vector<PageCancellation> out;
  for (int i = 1; i <= l.i_max; ++i) {
    for (int j = 0; j + r <= l.j_max; ++j) {
      long long c = static_cast<long long>(cycle_rank(l, i, j, r)) - static_cast<long long>(cycle_rank(l, i, j, r + 1));
      if (c > 0) out.push_back(PageCancellation{r, i, j, c});
    }
  }
  return out;
}

SpectralRun run_to_stability(const FilteredComplex& l) {
  SpectralRun run;
  const int span = l.max_level() - l.min_level();
  for (int r = 1;; ++r) {
    run.pages.push_back(page(l, r));
    auto cancels = cancellations_at_page(l, r);
    if (!cancels.empty()) run.r_used = r;
    for (const auto& c : cancels) {
      run.cancellations.push_back(c);
      for (long long k = 0; k < c.multiplicity; ++k) run.certificate.steps.push_back(c.to_cancellation());
    }
    if (r > span && cancels.empty()) {
      run.stop_page = r;
      break;
    }
  }
  run.certificate.canonicalize();
  run.infinity = infinity_page(l, run.r_used);
  run.window_j = l.truncated ? l.j_max - std::max(run.r_used, 1) : l.j_max;
  run.window_i = l.open_top ? l.i_max - 1 : l.i_max;
  run.window_exhausted = run.window_j < 0 || run.window_i < 0;
  run.verification = verify_certificate(run.page1().dims, run.certificate, run.infinity.dims);
  return run;
}

RandomComplex random_filtered_complex(std::uint64_t seed, const RandomComplexParams& params) {
  if (params.i_max < 0 || params.max_dim < 0 || params.max_level < 0) throw UsageError("random complex sizes must be nonnegative");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const FieldSpec field = params.field;
  const std::uint64_t p = field.is_rational() ? 97 : field.characteristic;
  auto nonzero = [&]() {
    long v = static_cast<long>(std::uniform_int_distribution<std::uint64_t>(1, p - 1)(rng));
    if (field.is_rational() && uniform(0, 1) == 1) v = -v;
    return Scalar(field, v);
  };

  struct Pair {
    int i;
    int p;
    int q;
  };
  const auto n = static_cast<std::size_t>(params.i_max) + 1;
  std::vector<int> used(n, 0);
  std::vector<Pair> pairs;
  std::vector<std::vector<int>> classes(n);
  for (int i = params.i_max; i >= 0; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i >= 1) {
      int room = std::min(params.max_dim - used[ui], params.max_dim - used[ui - 1]);
      int count = room > 0 ? uniform(0, std::min(room, 3)) : 0;
      for (int k = 0; k < count; ++k) {
        int lo = uniform(0, params.max_level);
        int hi = params.strictly_graded ? lo : uniform(lo, params.max_level);
        pairs.push_back(Pair{i, lo, hi});
        ++used[ui];
        ++used[ui - 1];
      }
    }
    int room = params.max_dim - used[ui];
    int count = room > 0 ? uniform(0, std::min(room, 2)) : 0;
    for (int k = 0; k < count; ++k) {
      classes[ui].push_back(uniform(0, params.max_level));
      ++used[ui];
    }
  }

  RandomComplex out;
  FilteredComplex& l = out.complex;
  l.field = field;
  l.i_max = params.i_max;
  l.j_max = params.max_level;
  l.levels.assign(n, {});
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(n);  // in L_i: (source, target in L_{i-1})
  std::vector<Scalar> weights;
  out.page1 = BigradedSeries(params.i_max, params.max_level);
  out.infinity = BigradedSeries(params.i_max, params.max_level);
  for (std::size_t i = 0; i < n; ++i) {
    for (int x : classes[i]) {
      l.levels[i].push_back(x);
      out.page1.add(static_cast<int>(i), x, 1);
      out.infinity.add(static_cast<int>(i), x, 1);
    }
  }
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> scaffold(n);
  for (const auto& pr : pairs) {
    const auto ui = static_cast<std::size_t>(pr.i);
    std::size_t src = l.levels[ui].size();
    l.levels[ui].push_back(pr.p);
    std::size_t dst = l.levels[ui - 1].size();
    l.levels[ui - 1].push_back(pr.q);
    scaffold[ui].emplace_back(dst, src, nonzero());
    if (pr.q > pr.p) {
      out.page1.add(pr.i, pr.p, 1);
      out.page1.add(pr.i - 1, pr.q, 1);
      out.certificate.steps.push_back(Cancellation{pr.i - 1, pr.p, pr.q});
    }
  }
  out.certificate.canonicalize();

  // Filtered automorphisms g_i: unit triangular for the order (level, index).
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lv = l.levels[i];
    const std::size_t m = lv.size();
    Matrix a = Matrix::identity(field, m);
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t r = 0; r < m; ++r) {
        bool later = lv[r] > lv[c] || (lv[r] == lv[c] && r > c);
        if (params.strictly_graded && lv[r] != lv[c]) later = false;
        if (later && uniform(0, 1) == 1) a(r, c) = nonzero();
      }
    }
    g.push_back(std::move(a));
  }
  for (std::size_t i = 1; i < n; ++i) {
    Matrix d0(field, l.levels[i - 1].size(), l.levels[i].size());
    for (const auto& [r, c, w] : scaffold[i]) d0(r, c) = w;
    l.differentials.push_back(g[i - 1] * d0 * inverse(g[i]));
  }
  // Shuffle each basis so level order is not the storage order.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> perm(l.levels[i].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> lv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) lv[k] = l.levels[i][perm[k]];
    l.levels[i] = std::move(lv);
    if (i >= 1) l.differentials[i - 1] = l.differentials[i - 1].select_columns(perm);
    if (i + 1 < n) l.differentials[i] = l.differentials[i].select_rows(perm);
  }
  l.validate();
  return out;
}

}  // namespace grtor
