#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steinberg/polyalg/ideal.hpp"
#include "steinberg/polyalg/resolution.hpp"
#include "steinberg/weyl.hpp"

namespace steinberg::models {

using polyalg::Ideal;
using polyalg::ModMatrix;
using polyalg::Presentation;
using polyalg::Rat;
using polyalg::Resolution;
using polyalg::RingPtr;

// Coordinate ring of the standard affine chart of the GL3 component space:
// the moving line is spanned by (1, x1, x2), the moving plane is the kernel
// of (y0, y1, 1) with y0 = -(x1*y1 + x2), and the nilpotent matrix has
// strict upper entries u12, u23, u13. Variables in this order (first
// listed = most significant): x1, x2, y1, u12, u23, u13.
RingPtr chart_ring_gl3();

// Chart ring before the diagonal cut, for component rederivation:
// x1, x2, y1, d1, d2, d3, u12, u23, u13.
RingPtr incidence_ring_gl3();

// The irreducible component attached to the longest element, cut out by the
// four recorded generators:
//   u23*x2, u12*(x2 + x1*y1), u12*x1 + u13*x2, u23*y1 - u13*(x2 + x1*y1).
Ideal iw0_gl3();

// Recorded differentials for the length-3 free resolution of the w0
// component:  0 -> R^2 --a3--> R^6 --a2--> R^5 --a1--> R.
// `verbatim` is the transcription as printed in the source data. It fails
// the complex check: the corrected variant replaces the single entry
// a3[5][1] = x1*u12 + x2*u12 by x1*u12 + x2*u13, which makes every
// consecutive product vanish.
struct RecordedComplex {
  ModMatrix a1;  // 1 x 5
  ModMatrix a2;  // 5 x 6
  ModMatrix a3;  // 6 x 2
};
enum class RecordedVariant { verbatim, row6_fixed };
RecordedComplex recorded_complex_w0(RecordedVariant which);

// Resolution built from the verbatim transcription. Raises
// TranscriptionMismatchError (the verbatim data is not a complex); callers
// fall back to free_resolution(iw0_gl3()) and compare Betti ranks.
Resolution recorded_resolution_w0();

// Resolution built from the single-entry-corrected matrices; validated
// (complex + interior exactness + augmentation ideal equals iw0_gl3()).
Resolution recorded_resolution_w0_fixed();

// The two recorded relation lists for the dualizing module as a cokernel of
// R^4 -> R^2: the simplified list prints (x1, u12) where the resolution's
// third differential has (x1, u23); both are exposed.
Presentation recorded_omega_presentation(bool simplified_list);

// Dualizing-module fiber dimension at a rational chart point
// (x1, x2, y1, u12, u23, u13). PointNotOnVarietyError off the component.
// Computed from ext_top of a freshly computed (cached) resolution.
long omega_fiber(std::span<const Rat> point);

// The saturated flag-incidence component before the diagonal cut: the
// incidence ideal of (moving flag, upper-triangular matrix) pairs in the
// full chart (d variables kept), with the cell conditions for relative
// position w imposed and the complement of the cell saturated away.
// n = 2 lives in (x, d1, d2, u), n = 3 in the 9-variable incidence chart.
Ideal incidence_component(int n, const weyl::Perm& w);

// Derive the component ideal from scratch for GL_n (n = 2, 3): take
// incidence_component(n, w), cut by the diagonal ideal (d_i = 0) and
// eliminate the d variables. Returns an ideal in the component chart ring
// whose generators are the reduced Groebner basis.
// ComponentMismatchError for unsupported (n, w).
Ideal rederive_component(int n, const weyl::Perm& w);

// Tangent-space dimension of the 9-dimensional two-flag model at its most
// degenerate point, by the closed formula 9 + lg(w) - ell(w).
int tangent_dim_formula(const weyl::WeylElem& w);

// Independent check of the formula's w0 value: Jacobian tangent dimension of
// the pre-cut w0 component at the origin of the 9-variable chart (the
// flag-bundle direction contributes dim G/B = 3 on top of this).
long jacobian_crosscheck_w0();

// Per-factor data for a product point: the component label w_tau and, for
// w_tau = w0, whether the two flags at the point agree. N_tau = 0 is
// enforced when w_tau = w0 (the multiplicity statement assumes it).
struct PdRPointSpec {
  enum class Flags { equal, distinct, na };
  struct Factor {
    weyl::Perm w;
    Flags flags;
  };
  std::vector<Factor> taus;

  // "w0:equal,w0:distinct,s1s2:na"
  static PdRPointSpec parse(const std::string& text, int n = 3);
  std::string to_string() const;
};

// Fiber dimension of the product dualizing module: factors with w = w0 and
// equal flags contribute 2 (evaluated on the actual presentation at the
// origin), all others 1. Equals 2^r with r = #{tau : w=w0, flags equal}.
long product_omega_fiber(const PdRPointSpec& spec);

// Deterministic on-component sample points (seeded), one per call index:
// stratum 0: distinct flags, N = 0;  stratum 1: distinct flags, N != 0
// (x2 = 0 family);  stratum 2: distinct flags, N != 0 (x2 = -x1*y1 family);
// stratum 3: equal flags, N = 0 (the origin).
std::vector<Rat> sample_point_w0(int stratum, uint64_t seed);

}  // namespace steinberg::models
