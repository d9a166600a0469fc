#include "steinberg/cato.hpp"

#include <algorithm>

#include "steinberg/errors.hpp"

namespace steinberg::cato {

using weyl::Perm;

namespace {

void require_gl3(const WeylElem& w) {
  for (const Perm& p : w.factors())
    if (p.n() != 3) throw ShapeMismatchError("operation requires gl3 factors");
}

WeylElem longest_like(const WeylElem& w) {
  std::vector<Perm> f(static_cast<size_t>(w.ntau()), Perm::longest(w.n()));
  return WeylElem(std::move(f));
}

// All elements of the product group S_n^ntau, sorted by total Coxeter length
// then by the map order (so every Bruhat-smaller element comes first).
std::vector<WeylElem> enumerate_product(int ntau, int n) {
  std::vector<std::vector<Perm>> tuples{{}};
  const std::vector<Perm> single = weyl::all_perms(n);
  for (int t = 0; t < ntau; ++t) {
    std::vector<std::vector<Perm>> next;
    for (const auto& tup : tuples)
      for (const Perm& p : single) {
        auto grown = tup;
        grown.push_back(p);
        next.push_back(std::move(grown));
      }
    tuples = std::move(next);
  }
  std::vector<WeylElem> out;
  out.reserve(tuples.size());
  for (auto& tup : tuples) out.emplace_back(std::move(tup));
  std::sort(out.begin(), out.end(), [](const WeylElem& a, const WeylElem& b) {
    const int la = weyl::coxeter_length(a), lb = weyl::coxeter_length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

void add_coeff(std::map<WeylElem, long>& m, const WeylElem& w, long c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

std::string render(const std::map<WeylElem, long>& coeff, const std::string& symbol) {
  if (coeff.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : coeff) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*" + symbol + "(" + w.to_string() + ")";
  }
  return s;
}

}  // namespace

long KClass::at(const WeylElem& w) const {
  const auto it = coeff.find(w);
  return it == coeff.end() ? 0 : it->second;
}

long KClass::total() const {
  long t = 0;
  for (const auto& [w, c] : coeff) t += c;
  return t;
}

std::string KClass::to_string() const {
  return render(coeff, basis == Basis::simple ? "L" : "M");
}

std::string CycleClass::to_string() const { return render(coeff, basis_symbol); }

KClass to_simple_basis(const KClass& c) {
  if (c.basis == Basis::simple) return c;
  KClass out{Basis::simple, {}};
  for (const auto& [w, a] : c.coeff) {
    require_gl3(w);
    for (const WeylElem& v : enumerate_product(w.ntau(), w.n()))
      if (weyl::bruhat_leq(w, v)) add_coeff(out.coeff, v, a);
  }
  return out;
}

KClass to_verma_basis(const KClass& c) {
  if (c.basis == Basis::verma) return c;
  KClass out{Basis::verma, {}};
  if (c.coeff.empty()) return out;
  const WeylElem& probe = c.coeff.begin()->first;
  require_gl3(probe);
  // Invert the unitriangular system s(v) = sum_{w <= v} a(w) bottom-up.
  for (const WeylElem& v : enumerate_product(probe.ntau(), probe.n())) {
    long residue = 0;
    const auto it = c.coeff.find(v);
    if (it != c.coeff.end()) residue = it->second;
    for (const auto& [w, a] : out.coeff)
      if (weyl::bruhat_leq(w, v)) residue -= a;
    add_coeff(out.coeff, v, residue);
  }
  return out;
}

KClass verma_jh(const WeylElem& w) {
  require_gl3(w);
  KClass out{Basis::simple, {}};
  for (const WeylElem& v : enumerate_product(w.ntau(), w.n()))
    if (weyl::bruhat_leq(w, v)) add_coeff(out.coeff, v, 1);
  return out;
}

KClass n_lambda_jh() {
  KClass out{Basis::simple, {}};
  add_coeff(out.coeff, WeylElem({Perm::identity(3)}), 1);
  add_coeff(out.coeff, WeylElem({Perm::simple(3, 1)}), 1);
  add_coeff(out.coeff, WeylElem({Perm::simple(3, 2)}), 1);
  return out;
}

RefinementPosition RefinementPosition::parse(const std::string& words, long m, int n) {
  if (m < 1) throw InvalidSpecError("multiplicity m must be >= 1");
  return RefinementPosition{WeylElem::parse_word(words, n), m};
}

SummandDecomposition s_lambda_wR(const RefinementPosition& pos) {
  require_gl3(pos.w_xR);
  const Perm w0 = Perm::longest(3);

  struct FactorSummand {
    bool is_N;
    Perm w;  // meaningful when !is_N
    std::map<Perm, long> jh;
    std::string label;
  };
  std::vector<std::vector<FactorSummand>> per_factor;
  for (const Perm& wr : pos.w_xR.factors()) {
    std::vector<FactorSummand> list;
    auto add_simple = [&](const Perm& w) {
      list.push_back({false, w, {{w, 1}}, "L(" + w.to_string() + ")"});
    };
    if (!wr.is_identity()) {
      for (const Perm& w : weyl::all_perms(3))
        if (weyl::bruhat_leq(WeylElem({w}), WeylElem({wr * w0}))) add_simple(w);
    } else {
      for (const Perm& w : weyl::all_perms(3))
        if (w.coxeter_length() != 1) add_simple(w);
      FactorSummand nlam{true, Perm::identity(3), {}, "N"};
      nlam.jh = {{Perm::identity(3), 1}, {Perm::simple(3, 1), 1}, {Perm::simple(3, 2), 1}};
      list.push_back(std::move(nlam));
    }
    std::sort(list.begin(), list.end(), [](const FactorSummand& a, const FactorSummand& b) {
      if (a.is_N != b.is_N) return !a.is_N;
      const int la = a.w.coxeter_length(), lb = b.w.coxeter_length();
      if (la != lb) return la < lb;
      return a.w < b.w;
    });
    per_factor.push_back(std::move(list));
  }

  // Cartesian product over the factors: labels concatenate, JH boxtensors.
  struct Partial {
    std::string label;
    std::map<std::vector<Perm>, long> jh;
  };
  std::vector<Partial> acc{{"", {{{}, 1}}}};
  for (const auto& list : per_factor) {
    std::vector<Partial> next;
    for (const auto& part : acc)
      for (const auto& fs : list) {
        Partial grown;
        grown.label = part.label.empty() ? fs.label : part.label + "*" + fs.label;
        for (const auto& [tup, c1] : part.jh)
          for (const auto& [p, c2] : fs.jh) {
            auto t = tup;
            t.push_back(p);
            grown.jh[t] += c1 * c2;
          }
        next.push_back(std::move(grown));
      }
    acc = std::move(next);
  }

  SummandDecomposition out;
  out.kclass.basis = Basis::simple;
  for (const auto& part : acc) {
    out.summands.push_back(part.label);
    for (const auto& [tup, c] : part.jh) add_coeff(out.kclass.coeff, WeylElem(tup), c);
  }
  return out;
}

bool support_nonzero(const WeylElem& w, const RefinementPosition& pos) {
  require_gl3(w);
  if (w.ntau() != pos.w_xR.ntau())
    throw ShapeMismatchError("w and the refinement position have different factor counts");
  return weyl::bruhat_leq(pos.w_xR, w * longest_like(w));
}

namespace {

CycleClass single_cycle(const std::string& symbol, const WeylElem& w,
                        const RefinementPosition& pos) {
  if (!support_nonzero(w, pos))
    throw ZeroSheafError("patched sheaf vanishes at this position");
  CycleClass out{symbol, {}};
  out.coeff.emplace(w * longest_like(w), pos.m);
  return out;
}

}  // namespace

CycleClass cycle_of_verma(const WeylElem& w, const RefinementPosition& pos) {
  return single_cycle("Xqtri", w, pos);
}

CycleClass cycle_of_simple(const WeylElem& w, const RefinementPosition& pos) {
  return single_cycle("Z", w, pos);
}

long classical_dim_ratio(const RefinementPosition& pos) {
  long r = 0;
  for (const Perm& p : pos.w_xR.factors())
    if (p.is_identity()) ++r;
  return 1L << r;
}

long hom_dim_count(unsigned i2_size, long m) {
  if (m < 1) throw InvalidSpecError("multiplicity m must be >= 1");
  return (1L << i2_size) * m;
}

long inclusion_exclusion_check(unsigned i2_size, long m) {
  long value = hom_dim_count(i2_size, m);
  // binomials C(i2_size, j) by a Pascal row
  std::vector<long> binom(i2_size + 1, 0);
  binom[0] = 1;
  for (unsigned i = 1; i <= i2_size; ++i)
    for (unsigned j = i; j >= 1; --j) binom[j] += binom[j - 1];
  for (unsigned j = 1; j <= i2_size; ++j) {
    const long sign = (j % 2 == 1) ? 1 : -1;
    value -= sign * binom[j] * (1L << (i2_size - j)) * m;
  }
  return value;
}

}  // namespace steinberg::cato
