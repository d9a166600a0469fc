#include "steinberg/polyalg/resolution.hpp"

#include <algorithm>
#include <optional>

#include "steinberg/errors.hpp"

namespace steinberg::polyalg {

namespace {

// ----- free-module Groebner machinery -------------------------------------
//
// Elements of R^k are vectors of Poly. Module terms are (component, monomial)
// pairs, compared term-over-position: components below `split` dominate the
// rest; inside a block the base order decides, with smaller component index
// winning ties. Used with split = #rows it is a plain TOP order; used on
// R^rows ⊕ R^cols it eliminates the upper block, which is what turns a
// Groebner basis of {(column_j, e_j)} into syzygy generators.

struct ModTerm {
  size_t comp;
  Monomial mono;
};

struct ModOrder {
  const MonomialOrder& ord;
  size_t split;

  // positive if a > b
  int compare(size_t ca, const Monomial& ma, size_t cb, const Monomial& mb) const {
    const bool ua = ca < split, ub = cb < split;
    if (ua != ub) return ua ? 1 : -1;
    const int c = ord.compare(ma, mb);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

using Vec = std::vector<Poly>;

bool vec_is_zero(const Vec& v) {
  for (const Poly& p : v)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<ModTerm> lead_term(const Vec& v, const ModOrder& mo) {
  std::optional<ModTerm> best;
  for (size_t c = 0; c < v.size(); ++c) {
    for (const auto& [m, coef] : v[c].terms()) {
      if (!best || mo.compare(c, m, best->comp, best->mono) > 0) best = ModTerm{c, m};
    }
  }
  return best;
}

Rat coeff_of(const Vec& v, const ModTerm& t) { return v[t.comp].coeff(t.mono); }

Vec vec_sub_scaled(const Vec& a, const Vec& b, const Rat& c, const Monomial& m) {
  Vec out = a;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) out[i] = out[i] - b[i].mul_term(c, m);
  return out;
}

Vec vec_monic(const Vec& v, const ModOrder& mo) {
  auto lt = lead_term(v, mo);
  Vec out = v;
  if (!lt) return out;
  const Rat lc = coeff_of(v, *lt);
  for (Poly& p : out) p = p.scaled(Rat(1) / lc);
  return out;
}

// Full reduction of v by the basis; remainder has no term divisible by any
// basis lead (same component, dividing monomial).
Vec mod_normal_form(Vec v, const std::vector<Vec>& basis, const ModOrder& mo) {
  if (v.empty()) return v;
  Vec rem(v.size(), Poly(v.front().ring()));
  while (true) {
    auto lt = lead_term(v, mo);
    if (!lt) break;
    const Rat lc = coeff_of(v, *lt);
    bool reduced = false;
    for (const Vec& g : basis) {
      auto glt = lead_term(g, mo);
      if (!glt || glt->comp != lt->comp || !glt->mono.divides(lt->mono)) continue;
      const Rat f = lc / coeff_of(g, *glt);
      v = vec_sub_scaled(v, g, f, lt->mono.divide(glt->mono));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[lt->comp].add_term(lt->mono, lc);
      v[lt->comp].add_term(lt->mono, -lc);
    }
  }
  return rem;
}

// Structural comparison for deterministic sorting of vectors.
bool vec_struct_less(const Vec& a, const Vec& b) {
  MonomialStructLess less;
  for (size_t i = 0; i < a.size(); ++i) {
    auto ta = a[i].terms().begin();
    auto tb = b[i].terms().begin();
    for (; ta != a[i].terms().end() && tb != b[i].terms().end(); ++ta, ++tb) {
      if (less(ta->first, tb->first)) return true;
      if (less(tb->first, ta->first)) return false;
      if (ta->second != tb->second) return ta->second < tb->second;
    }
    if (ta != a[i].terms().end()) return false;
    if (tb != b[i].terms().end()) return true;
  }
  return false;
}

std::vector<Vec> module_groebner(std::vector<Vec> gens, const ModOrder& mo) {
  std::vector<Vec> basis;
  for (Vec& g : gens)
    if (!vec_is_zero(g)) basis.push_back(vec_monic(g, mo));
  std::sort(basis.begin(), basis.end(), vec_struct_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  struct Pair {
    size_t i, j;
    size_t comp;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](size_t j) {
    auto ltj = lead_term(basis[j], mo);
    for (size_t i = 0; i < j; ++i) {
      auto lti = lead_term(basis[i], mo);
      if (lti->comp != ltj->comp) continue;  // S-pairs need matching components
      pairs.push_back(Pair{i, j, lti->comp, Monomial::lcm(lti->mono, ltj->mono)});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    // smallest lcm first, ties by indices
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const int c = mo.compare(pairs[k].comp, pairs[k].lcm, pairs[best].comp, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                               (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
        best = k;
    }
    const Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    auto lti = lead_term(basis[pr.i], mo);
    auto ltj = lead_term(basis[pr.j], mo);
    Vec s = vec_sub_scaled(
        vec_sub_scaled(Vec(basis[pr.i].size(), Poly(basis[pr.i].front().ring())), basis[pr.i],
                       Rat(-1), pr.lcm.divide(lti->mono)),
        basis[pr.j], Rat(1), pr.lcm.divide(ltj->mono));
    Vec r = mod_normal_form(std::move(s), basis, mo);
    if (vec_is_zero(r)) continue;
    basis.push_back(vec_monic(r, mo));
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize + tail-reduce for a canonical basis.
  std::vector<Vec> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    auto lti = lead_term(basis[i], mo);
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      auto ltj = lead_term(basis[j], mo);
      if (ltj->comp != lti->comp || !ltj->mono.divides(lti->mono)) continue;
      if (!(ltj->mono == lti->mono && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Vec> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Vec r = mod_normal_form(minimal[i], others, mo);
    if (!vec_is_zero(r)) reduced.push_back(vec_monic(r, mo));
  }
  std::sort(reduced.begin(), reduced.end(), vec_struct_less);
  return reduced;
}

std::vector<Vec> matrix_columns(const ModMatrix& M) {
  std::vector<Vec> cols;
  cols.reserve(M.cols());
  for (size_t c = 0; c < M.cols(); ++c) cols.push_back(M.column(c));
  return cols;
}

}  // namespace

bool in_column_module(std::span<const Poly> v, const ModMatrix& M, const MonomialOrder& ord) {
  if (v.size() != M.rows()) throw ShapeMismatchError("membership vector length mismatch");
  const ModOrder mo{ord, M.rows()};
  auto gb = module_groebner(matrix_columns(M), mo);
  Vec vv(v.begin(), v.end());
  return vec_is_zero(mod_normal_form(std::move(vv), gb, mo));
}

ModMatrix syzygies(const ModMatrix& M, const MonomialOrder& ord) {
  const RingPtr ring = M.ring();
  const size_t b = M.rows(), a = M.cols();
  const ModOrder mo{ord, b};

  // Generators (column_j, e_j) in R^b ⊕ R^a.
  std::vector<Vec> gens;
  for (size_t j = 0; j < a; ++j) {
    Vec g;
    g.reserve(b + a);
    for (size_t r = 0; r < b; ++r) g.push_back(M.at(r, j));
    for (size_t k = 0; k < a; ++k)
      g.push_back(k == j ? Poly::constant(ring, Rat(1)) : Poly(ring));
    gens.push_back(std::move(g));
  }
  auto gb = module_groebner(std::move(gens), mo);

  std::vector<Vec> syz;
  for (const Vec& g : gb) {
    bool upper_zero = true;
    for (size_t r = 0; r < b && upper_zero; ++r)
      if (!g[r].is_zero()) upper_zero = false;
    if (upper_zero) syz.emplace_back(g.begin() + static_cast<long>(b), g.end());
  }

  // Prune to an irredundant generating set (deterministic greedy pass).
  const ModOrder mo_a{ord, a};
  bool removed = true;
  while (removed) {
    removed = false;
    for (size_t k = 0; k < syz.size(); ++k) {
      std::vector<Vec> rest;
      for (size_t j = 0; j < syz.size(); ++j)
        if (j != k) rest.push_back(syz[j]);
      if (rest.empty()) break;
      auto rest_gb = module_groebner(rest, mo_a);
      if (vec_is_zero(mod_normal_form(syz[k], rest_gb, mo_a))) {
        syz.erase(syz.begin() + static_cast<long>(k));
        removed = true;
        break;
      }
    }
  }
  std::sort(syz.begin(), syz.end(), vec_struct_less);

  ModMatrix out(ring, a, syz.size());
  for (size_t c = 0; c < syz.size(); ++c) out.set_column(c, syz[c]);
  return out;
}

std::vector<size_t> Resolution::ranks() const {
  std::vector<size_t> r{diffs.empty() ? 1 : diffs.front().rows()};
  for (const ModMatrix& d : diffs) r.push_back(d.cols());
  return r;
}

Resolution free_resolution(const Ideal& I, size_t max_length, const MonomialOrder& ord) {
  const RingPtr ring = I.ring();
  const auto& gb = I.groebner(ord);
  ModMatrix d1(ring, 1, gb.size());
  for (size_t j = 0; j < gb.size(); ++j) d1.at(0, j) = gb[j];

  Resolution res{ring, {d1}};
  while (true) {
    ModMatrix s = syzygies(res.diffs.back(), ord);
    if (s.cols() == 0) break;
    if (res.diffs.size() >= max_length)
      throw LengthExceededError("resolution exceeds length bound " + std::to_string(max_length));
    res.diffs.push_back(std::move(s));
  }
  return res;
}

Resolution resolution_from_matrices(const RingPtr& ring, std::vector<ModMatrix> diffs) {
  for (size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (diffs[i].cols() != diffs[i + 1].rows())
      throw ShapeMismatchError("differential shapes do not chain");
    if (!diffs[i].mul(diffs[i + 1]).is_zero())
      throw NotAComplexError("consecutive differentials do not compose to zero");
  }
  return Resolution{ring, std::move(diffs)};
}

Resolution minimalize(const Resolution& res) {
  std::vector<ModMatrix> d = res.diffs;

  auto find_unit = [&](size_t i, size_t& r, size_t& c) {
    for (r = 0; r < d[i].rows(); ++r)
      for (c = 0; c < d[i].cols(); ++c) {
        const Poly& p = d[i].at(r, c);
        if (!p.is_zero() && p.is_constant()) return true;
      }
    return false;
  };

  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (size_t i = 0; i < d.size() && !stripped; ++i) {
      size_t r = 0, c = 0;
      if (!find_unit(i, r, c)) continue;
      if (i == 0)
        throw Error("unit entry in the presentation differential");
      const Rat u = d[i].at(r, c).constant_term();

      // Clear row r by column operations (mirrors to row ops on d[i+1]).
      for (size_t j = 0; j < d[i].cols(); ++j) {
        if (j == c || d[i].at(r, j).is_zero()) continue;
        const Poly alpha = d[i].at(r, j).scaled(Rat(1) / u);
        for (size_t rr = 0; rr < d[i].rows(); ++rr)
          d[i].at(rr, j) = d[i].at(rr, j) - alpha * d[i].at(rr, c);
        if (i + 1 < d.size())
          for (size_t cc = 0; cc < d[i + 1].cols(); ++cc)
            d[i + 1].at(c, cc) = d[i + 1].at(c, cc) + alpha * d[i + 1].at(j, cc);
      }
      // Clear column c by row operations (mirrors to column ops on d[i-1]).
      for (size_t s = 0; s < d[i].rows(); ++s) {
        if (s == r || d[i].at(s, c).is_zero()) continue;
        const Poly beta = d[i].at(s, c).scaled(Rat(1) / u);
        for (size_t cc = 0; cc < d[i].cols(); ++cc)
          d[i].at(s, cc) = d[i].at(s, cc) - beta * d[i].at(r, cc);
        for (size_t rr = 0; rr < d[i - 1].rows(); ++rr)
          d[i - 1].at(rr, r) = d[i - 1].at(rr, r) + beta * d[i - 1].at(rr, s);
      }

      // The paired basis vectors now split off; drop them.
      for (size_t rr = 0; rr < d[i - 1].rows(); ++rr)
        if (!d[i - 1].at(rr, r).is_zero())
          throw Error("minimalization: predecessor column not cleared");
      if (i + 1 < d.size())
        for (size_t cc = 0; cc < d[i + 1].cols(); ++cc)
          if (!d[i + 1].at(c, cc).is_zero())
            throw Error("minimalization: successor row not cleared");

      d[i - 1] = d[i - 1].drop({}, {r});
      d[i] = d[i].drop({r}, {c});
      if (i + 1 < d.size()) d[i + 1] = d[i + 1].drop({c}, {});
      stripped = true;
    }
  }

  while (!d.empty() && d.back().cols() == 0) d.pop_back();

  for (const ModMatrix& m : d)
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero() && m.at(r, c).constant_term() != 0)
          throw Error("minimalization left a non-constant local unit");

  return Resolution{res.ring, std::move(d)};
}

bool is_exact_at(const ModMatrix& B, const ModMatrix& C, const MonomialOrder& ord) {
  if (B.cols() != C.rows()) throw ShapeMismatchError("complex shapes do not chain");
  if (!B.mul(C).is_zero()) throw NotAComplexError("B*C != 0");
  ModMatrix ker = syzygies(B, ord);
  for (size_t c = 0; c < ker.cols(); ++c) {
    auto v = ker.column(c);
    if (!in_column_module(v, C, ord)) return false;
  }
  return true;
}

Presentation ext_top(const Ideal& I, const Resolution& res) {
  const long c = static_cast<long>(I.ring()->arity()) - I.dim();
  if (static_cast<long>(res.length()) != c)
    throw NotCMError("resolution length " + std::to_string(res.length()) +
                     " differs from codimension " + std::to_string(c));
  const ModMatrix& last = res.diffs.back();
  return Presentation{last.cols(), last.transpose()};
}

}  // namespace steinberg::polyalg
