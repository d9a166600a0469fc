#pragma once

#include <cstdint>
#include <vector>

namespace steinberg::polyalg {

// Exponent vector of a monomial; index i matches ring variable i.
struct Monomial {
  std::vector<uint32_t> e;

  static Monomial one(size_t arity) { return Monomial{std::vector<uint32_t>(arity, 0)}; }
  static Monomial var(size_t arity, size_t i, uint32_t k = 1) {
    Monomial m = one(arity);
    m.e[i] = k;
    return m;
  }

  size_t arity() const { return e.size(); }
  long total_degree() const {
    long d = 0;
    for (uint32_t x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (uint32_t x : e)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // Quotient this / o; caller guarantees divisibility.
  Monomial divide(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < a.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;
};

// Structural (container) order, independent of any semantic monomial order.
struct MonomialStructLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

}  // namespace steinberg::polyalg
