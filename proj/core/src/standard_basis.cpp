#include "grtor/standard_basis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "grtor/error.hpp"

namespace grtor {

namespace {

constexpr MonomialOrder kLocal = MonomialOrder::LocalDegree;

int ecart(const Polynomial& f) { return f.degree() - f.order(); }

struct Reducer {
  Polynomial poly;
  Monomial lead;
  Scalar coef;
  int ecart;
};

Reducer make_reducer(Polynomial p) {
  const Term& t = p.leading_term(kLocal);
  Monomial lead = t.mono;
  Scalar coef = t.coef;
  int e = ecart(p);
  return Reducer{std::move(p), lead, coef, e};
}

Polynomial mora_normal_form(const Polynomial& f, std::vector<Reducer> t_set, int cap) {
  Polynomial h = f;
  while (!h.is_zero()) {
    if (h.degree() > cap) throw CapExceeded("normal form degree exceeds the cap " + std::to_string(cap));
    const Term lt = h.leading_term(kLocal);
    const Reducer* best = nullptr;
    for (const auto& g : t_set) {
      if (g.lead.divides(lt.mono) && (best == nullptr || g.ecart < best->ecart)) best = &g;
    }
    if (best == nullptr) break;
    Reducer chosen = *best;
    if (chosen.ecart > ecart(h)) t_set.push_back(make_reducer(h));
    h = h.add_scaled(chosen.poly, lt.mono / chosen.lead, -(lt.coef / chosen.coef));
  }
  return h;
}

}  // namespace

StandardBasis::StandardBasis(const IdealPresentation& ideal, int degree_cap) : ring_(ideal.ring()), cap_(degree_cap) {
  ideal.validate();
  std::vector<Polynomial> gens = ideal.generators;
  gens.insert(gens.end(), ideal.spec.quotient.begin(), ideal.spec.quotient.end());
  std::vector<Reducer> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.degree() > cap_) {
      throw CapExceeded("generator degree " + std::to_string(g.degree()) + " exceeds the cap " + std::to_string(cap_));
    }
  }
  std::set<std::tuple<int, std::size_t, std::size_t>> queue;
  std::vector<std::vector<char>> state;
  auto add = [&](Polynomial p) {
    const std::size_t n = basis.size();
    basis.push_back(make_reducer(std::move(p)));
    for (auto& row : state) row.push_back(0);
    state.emplace_back(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      state[k][n] = state[n][k] = 1;
      queue.emplace(Monomial::lcm(basis[k].lead, basis[n].lead).degree(), n, k);
    }
  };
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial h = mora_normal_form(g, basis, cap_);
    if (!h.is_zero()) add(std::move(h));
  }
  while (!queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    state[i][j] = state[j][i] = 2;
    if (Monomial::coprime(basis[i].lead, basis[j].lead)) continue;
    const Monomial l = Monomial::lcm(basis[i].lead, basis[j].lead);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].lead.divides(l) && state[i][k] == 2 && state[j][k] == 2;
    }
    if (chain) continue;
    Polynomial s = basis[i].poly.mul_term(l / basis[i].lead, basis[i].coef.inverse());
    s = s.add_scaled(basis[j].poly, l / basis[j].lead, -basis[j].coef.inverse());
    Polynomial h = mora_normal_form(s, basis, cap_);
    if (!h.is_zero()) {
      if (h.degree() > cap_) throw CapExceeded("standard basis degree exceeds the cap " + std::to_string(cap_));
      add(std::move(h));
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b || !basis[b].lead.divides(basis[a].lead)) continue;
      redundant = basis[b].lead != basis[a].lead || b < a;
    }
    if (redundant) continue;
    elements_.push_back(basis[a].poly * basis[a].coef.inverse());
    leads_.push_back(basis[a].lead);
  }
}

Polynomial StandardBasis::normal_form(const Polynomial& f) const {
  std::vector<Reducer> t_set;
  for (const auto& e : elements_) t_set.push_back(make_reducer(e));
  return mora_normal_form(f, std::move(t_set), std::max(cap_, f.degree()));
}

IdealPresentation StandardBasis::initial_ideal() const {
  std::vector<Polynomial> forms;
  for (const auto& e : elements_) forms.push_back(e.initial_form());
  IdealPresentation out;
  out.spec = RingSpec{ring_, Setting::Graded, {}};
  out.generators = groebner_basis(std::move(forms));
  return out;
}

long long StandardBasis::hilbert_function(int d) const {
  if (d < 0) return 0;
  long long count = 0;
  for (const auto& m : monomials_of_degree(ring_->nvars(), d)) {
    bool standard = std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
  }
  return count;
}

std::optional<long long> StandardBasis::colength() const {
  const std::size_t n = ring_->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(leads_.begin(), leads_.end(), [&](const Monomial& l) {
      return l.degree() == l[v];
    });
    if (!pure) return std::nullopt;
  }
  long long total = 0;
  for (int d = 0;; ++d) {
    long long h = hilbert_function(d);
    if (h == 0) break;
    total += h;
  }
  return total;
}

LocalTruncatedQuotient::LocalTruncatedQuotient(RingPtr ring, std::vector<Polynomial> ideal, int order_bound)
    : ring_(std::move(ring)), bound_(order_bound), relations_(ring_->field()) {
  if (order_bound < 0) throw UsageError("order bound must be nonnegative");
  for (int d = 0; d < bound_; ++d) {
    for (const auto& m : monomials_of_degree(ring_->nvars(), d)) {
      index_.emplace(m, monomials_.size());
      monomials_.push_back(m);
    }
  }
  auto to_sparse = [&](const Polynomial& p) {
    SparseVector v;
    for (const auto& t : p.terms()) {
      if (t.mono.degree() < bound_) v.emplace(index_.at(t.mono), t.coef);
    }
    return v;
  };
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    const int ord = g.order();
    for (int d = 0; d + ord < bound_; ++d) {
      for (const auto& u : monomials_of_degree(ring_->nvars(), d)) {
        relations_.insert(to_sparse(g.truncate(bound_ - 1 - d).mul_term(u, Scalar::one(ring_->field()))));
      }
    }
  }
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    if (!relations_.is_pivot(k)) {
      standard_index_.emplace(monomials_[k], standard_.size());
      standard_.push_back(monomials_[k]);
    }
  }
}

std::optional<std::size_t> LocalTruncatedQuotient::standard_index(const Monomial& m) const {
  auto it = standard_index_.find(m);
  if (it == standard_index_.end()) return std::nullopt;
  return it->second;
}

Polynomial LocalTruncatedQuotient::normal_form(const Polynomial& f) const {
  SparseVector v;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() < bound_) v.emplace(index_.at(t.mono), t.coef);
  }
  relations_.reduce(v);
  std::vector<Term> terms;
  for (const auto& [idx, c] : v) terms.push_back(Term{monomials_[idx], c});
  return Polynomial::from_terms(ring_, std::move(terms));
}

long long LocalTruncatedQuotient::hilbert_function(int d) const {
  return std::count_if(standard_.begin(), standard_.end(), [&](const Monomial& m) { return m.degree() == d; });
}

}  // namespace grtor
