#include <algorithm>
#include <set>

#include "steinberg/errors.hpp"
#include "steinberg/polyalg/ideal.hpp"

namespace steinberg::polyalg {

Poly normal_form(const Poly& f, std::span<const Poly> basis, const MonomialOrder& ord) {
  Poly rem(f.ring());
  Poly work = f;
  while (!work.is_zero()) {
    const Monomial lm = work.leading_monomial(ord);
    const Rat lc = work.terms().at(lm);
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      const Monomial& glm = g.leading_monomial(ord);
      if (!glm.divides(lm)) continue;
      const Rat factor = lc / g.terms().at(glm);
      work = work - g.mul_term(factor, lm.divide(glm));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return rem;
}

namespace {

struct Pair {
  size_t i, j;
  Monomial lcm;
};

// Deterministic pair choice: smallest lcm in the order, ties by (i, j).
size_t select_pair(const std::vector<Pair>& pairs, const MonomialOrder& ord) {
  size_t best = 0;
  for (size_t k = 1; k < pairs.size(); ++k) {
    const int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
    if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                             (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
      best = k;
  }
  return best;
}

// Sort polynomials by leading monomial ascending; final tie-break on the
// structural term maps keeps the result total and deterministic.
void sort_basis(std::vector<Poly>& v, const MonomialOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const Poly& a, const Poly& b) {
    const int c = ord.compare(a.leading_monomial(ord), b.leading_monomial(ord));
    if (c) return c < 0;
    MonomialStructLess less;
    auto ta = a.terms().begin(), tb = b.terms().begin();
    for (; ta != a.terms().end() && tb != b.terms().end(); ++ta, ++tb) {
      if (less(ta->first, tb->first)) return true;
      if (less(tb->first, ta->first)) return false;
      if (ta->second != tb->second) return ta->second < tb->second;
    }
    return a.terms().size() < b.terms().size();
  });
}

}  // namespace

std::vector<Poly> groebner_basis(std::vector<Poly> gens, const MonomialOrder& ord,
                                 const GroebnerOptions& opts) {
  std::vector<Poly> basis;
  for (Poly& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic(ord));
  if (basis.empty()) return basis;
  sort_basis(basis, ord);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::vector<Pair> pairs;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j,
                           Monomial::lcm(basis[i].leading_monomial(ord),
                                         basis[j].leading_monomial(ord))});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  // Chain criterion bookkeeping: treated(i,j) marks pairs already considered.
  std::set<std::pair<size_t, size_t>> treated;

  while (!pairs.empty()) {
    const size_t pick = select_pair(pairs, ord);
    const Pair pr = pairs[pick];
    pairs.erase(pairs.begin() + static_cast<long>(pick));
    treated.insert({pr.i, pr.j});

    const Poly& fi = basis[pr.i];
    const Poly& fj = basis[pr.j];
    const Monomial& mi = fi.leading_monomial(ord);
    const Monomial& mj = fj.leading_monomial(ord);

    if (Monomial::coprime(mi, mj)) continue;  // first Buchberger criterion

    // Chain criterion: skip if some k has LT(g_k) | lcm and both (i,k), (j,k)
    // were already treated.
    bool chain = false;
    for (size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial(ord).divides(pr.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    Poly s = fi.mul_term(Rat(1), pr.lcm.divide(mi)) - fj.mul_term(Rat(1), pr.lcm.divide(mj));
    Poly r = normal_form(s, basis, ord);
    if (r.is_zero()) continue;
    if (r.total_degree() > opts.degree_bound)
      throw DegreeBoundError("Groebner degree bound " + std::to_string(opts.degree_bound) +
                             " exceeded");
    basis.push_back(r.monic(ord));
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = basis[i].leading_monomial(ord);
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = basis[j].leading_monomial(ord);
      if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Reduce: replace each element by its normal form against the others.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.monic(ord));
  }
  sort_basis(reduced, ord);
  return reduced;
}

}  // namespace steinberg::polyalg
