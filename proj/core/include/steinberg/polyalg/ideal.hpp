#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steinberg/polyalg/poly.hpp"

namespace steinberg::polyalg {

// Options for Buchberger's algorithm. The degree bound is a safety valve:
// exceeding it raises DegreeBoundError instead of looping.
struct GroebnerOptions {
  long degree_bound = 60;
};

// Remainder of f on division by basis (full tail reduction). Deterministic:
// reducers are tried in basis order.
Poly normal_form(const Poly& f, std::span<const Poly> basis, const MonomialOrder& ord);

// Buchberger with the coprime-lead and chain criteria, normal (minimal-lcm)
// pair selection, ties broken by generator index. Returns the reduced
// Groebner basis: monic, auto-reduced, sorted by increasing leading monomial.
std::vector<Poly> groebner_basis(std::vector<Poly> gens, const MonomialOrder& ord,
                                 const GroebnerOptions& opts = {});

// Finitely generated ideal with a per-order cache of reduced Groebner bases.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Reduced Groebner basis under `ord`, memoized per order. When the
  // STEINBERG_CACHE_DIR environment variable names a directory, bases are
  // additionally persisted there keyed by (variables, order, generator
  // strings); a loaded basis is accepted only after recertification
  // (generators reduce to zero against it and it is Buchberger-stable). The
  // directory is trusted input: a stale or hand-edited entry is discarded by
  // the certificate, never silently used, but contents are not sandboxed.
  const std::vector<Poly>& groebner(const MonomialOrder& ord = MonomialOrder::grevlex(),
                                    const GroebnerOptions& opts = {}) const;

  bool contains(const Poly& f) const;
  bool is_unit_ideal() const;   // 1 in I
  bool is_zero_ideal() const;

  // Krull dimension of R/I via maximal independent variable sets modulo the
  // leading-term ideal. dim of the unit ideal is -1 by convention.
  long dim() const;

  // Reduced Groebner bases are unique: equality of ideals is equality of
  // reduced bases under one order.
  bool same_ideal(const Ideal& other) const;

  std::vector<std::string> gens_strings() const;

private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::vector<Poly>> gb_cache_;

public:
  Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {}
  Ideal& operator=(const Ideal& o) {
    ring_ = o.ring_;
    gens_ = o.gens_;
    return *this;
  }
};

// Saturation (I : f^infinity) via the extra-variable trick: adjoin t, add
// 1 - t*f, eliminate t.
Ideal saturate(const Ideal& I, const Poly& f, const GroebnerOptions& opts = {});

// Ideal intersection via the t-trick: eliminate t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});

// Elimination ideal I ∩ Q[vars not in elim]. The result lives in the same
// ring; its generators do not involve the eliminated variables.
Ideal eliminate(const Ideal& I, const std::vector<size_t>& elim_vars,
                const GroebnerOptions& opts = {});

// Restrict an ideal whose generators avoid the complement of `target`'s
// variables into the target ring (matching variables by name).
Ideal restrict_to_subring(const Ideal& I, const RingPtr& target);

// Exact rank of a dense rational matrix (Gaussian elimination).
size_t rat_matrix_rank(std::vector<std::vector<Rat>> m);

// Dimension of the Zariski tangent space at a rational point: arity minus the
// rank of the Jacobian of the reduced Groebner basis at the point. The point
// must lie on V(I) (PointNotOnVarietyError otherwise).
long tangent_dim(const Ideal& I, std::span<const Rat> point);

bool point_on_variety(const Ideal& I, std::span<const Rat> point);

}  // namespace steinberg::polyalg
