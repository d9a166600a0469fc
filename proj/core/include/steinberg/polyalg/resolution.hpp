#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steinberg/polyalg/ideal.hpp"
#include "steinberg/polyalg/modmatrix.hpp"

namespace steinberg::polyalg {

// Generators of the syzygy module of the columns of M (kernel of
// R^cols -> R^rows), pruned to an irredundant generating set. Deterministic.
ModMatrix syzygies(const ModMatrix& M, const MonomialOrder& ord = MonomialOrder::grevlex());

// Module membership: is v in the column span of M?
bool in_column_module(std::span<const Poly> v, const ModMatrix& M,
                      const MonomialOrder& ord = MonomialOrder::grevlex());

// Free resolution of R/I:  ... -> R^{b2} --d2--> R^{b1} --d1--> R -> R/I -> 0.
// diffs[0] is d1 (1 x b1), diffs[i] the (i+1)-st differential. Ranks are
// (1, b1, b2, ...). The construction takes d1 to be the reduced Groebner
// basis of I and each further step an irredundant set of syzygy generators,
// so consecutive products vanish and the complex is exact at every interior
// position by construction.
struct Resolution {
  RingPtr ring;
  std::vector<ModMatrix> diffs;

  size_t length() const { return diffs.size(); }
  std::vector<size_t> ranks() const;  // (1, b1, b2, ...)
  const ModMatrix& last() const { return diffs.back(); }
};

// max_length limits how many differentials are computed
// (LengthExceededError if syzygies keep coming past the bound).
Resolution free_resolution(const Ideal& I, size_t max_length = 12,
                           const MonomialOrder& ord = MonomialOrder::grevlex());

// Resolution built from explicit differentials. Verifies d_i . d_{i+1} = 0
// (NotAComplexError) but not exactness.
Resolution resolution_from_matrices(const RingPtr& ring, std::vector<ModMatrix> diffs);

// Strip unit pivots (entries that are nonzero constants) to obtain the
// minimal free resolution at the origin. For the inputs in this project all
// differential entries are weighted-homogeneous, so units are honest
// constants; a leftover entry with a nonzero constant term raises.
Resolution minimalize(const Resolution& res);

// Is the two-step complex  F2 --C--> F1 --B--> F0  exact at F1?
// Raises NotAComplexError unless B*C = 0.
bool is_exact_at(const ModMatrix& B, const ModMatrix& C,
                 const MonomialOrder& ord = MonomialOrder::grevlex());

// Top Ext module Ext^c(R/I, R) with c = codim(I) = arity - dim(I), presented
// as the cokernel of the transpose of the last differential. Requires the
// resolution length to equal c (NotCMError otherwise).
Presentation ext_top(const Ideal& I, const Resolution& res);

}  // namespace steinberg::polyalg
