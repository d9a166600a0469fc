#include "steinberg/polyalg/poly.hpp"

#include <algorithm>

#include "steinberg/errors.hpp"

namespace steinberg::polyalg {

Poly Poly::constant(RingPtr ring, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.emplace(Monomial::one(p.ring_->arity()), c);
  return p;
}

Poly Poly::variable(RingPtr ring, size_t i, uint32_t k) {
  Poly p(std::move(ring));
  p.terms_.emplace(Monomial::var(p.ring_->arity(), i, k), Rat(1));
  return p;
}

Poly Poly::term(RingPtr ring, const Rat& c, Monomial m) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coeff(Monomial::one(ring_->arity())); }

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatchError("poly + across rings");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatchError("poly - across rings");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatchError("poly * across rings");
  Poly r(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

Poly Poly::mul_term(const Rat& c, const Monomial& m) const {
  Poly r(ring_);
  if (c == 0) return r;
  for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

const Monomial& Poly::leading_monomial(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("leading monomial of zero");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (ord.greater(m, *best)) best = &m;
  return *best;
}

Rat Poly::leading_coeff(const MonomialOrder& ord) const {
  return terms_.at(leading_monomial(ord));
}

Poly Poly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading_coeff(ord));
}

Poly Poly::derivative(size_t var) const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    r.add_term(d, c * Rat(static_cast<long>(m.e[var])));
  }
  return r;
}

Rat Poly::eval(std::span<const Rat> point) const {
  if (point.size() != ring_->arity()) throw ShapeMismatchError("eval point arity mismatch");
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (size_t i = 0; i < m.e.size(); ++i)
      for (uint32_t k = 0; k < m.e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

bool Poly::involves(size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.e[var]) return true;
  return false;
}

Poly Poly::mapped(const RingPtr& target) const {
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t = Monomial::one(target->arity());
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (!m.e[i]) continue;
      auto j = target->index_of(ring_->var(i));
      if (!j) throw RingMismatchError("variable " + ring_->var(i) + " absent from target ring");
      t.e[*j] = m.e[i];
    }
    r.add_term(t, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  // Deterministic print order: decreasing grevlex.
  std::vector<const std::pair<const Monomial, Rat>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

  std::string s;
  bool first = true;
  for (auto* t : ts) {
    const Monomial& m = t->first;
    Rat c = t->second;
    const bool neg = c < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (neg) c = -c;
    first = false;

    std::string vars;
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (!m.e[i]) continue;
      if (!vars.empty()) vars += '*';
      vars += ring_->var(i);
      if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
    }
    if (vars.empty()) {
      s += rat_to_string(c);
    } else if (c == 1) {
      s += vars;
    } else {
      s += rat_to_string(c) + "*" + vars;
    }
  }
  return s;
}

std::vector<Poly> parse_polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

std::vector<std::string> polys_to_strings(std::span<const Poly> ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace steinberg::polyalg
