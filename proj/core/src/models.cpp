#include "steinberg/models.hpp"

#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg::models {

using polyalg::GroebnerOptions;
using polyalg::MonomialOrder;
using polyalg::Poly;
using polyalg::parse_poly;
using polyalg::parse_polys;

RingPtr chart_ring_gl3() {
  static const RingPtr ring = polyalg::make_ring({"x1", "x2", "y1", "u12", "u23", "u13"});
  return ring;
}

RingPtr incidence_ring_gl3() {
  static const RingPtr ring =
      polyalg::make_ring({"x1", "x2", "y1", "d1", "d2", "d3", "u12", "u23", "u13"});
  return ring;
}

Ideal iw0_gl3() {
  const RingPtr R = chart_ring_gl3();
  return Ideal(R, parse_polys(R, {
                                     "u23*x2",
                                     "u12*x2 + u12*x1*y1",
                                     "u12*x1 + u13*x2",
                                     "u23*y1 - u13*x2 - u13*x1*y1",
                                 }));
}

RecordedComplex recorded_complex_w0(RecordedVariant which) {
  const RingPtr R = chart_ring_gl3();
  RecordedComplex rc;
  rc.a1 = ModMatrix::from_strings(
      R, {{"x1*u12 + x2*u13", "x2*u23", "y1*u12*u23", "x1*y1*u13 - y1*u23 + x2*u13",
           "x2*y1*u13 - x2*u12"}});
  rc.a2 = ModMatrix::from_strings(
      R, {
             {"-x2*u23", "-y1*u23", "0", "x2", "-y1*u13", "0"},
             {"x1*u12 + x2*u13", "y1*u13", "-y1*u12", "-y1", "0", "-y1*u13 + u12"},
             {"0", "x1", "x2", "0", "1", "0"},
             {"0", "0", "0", "-x2", "u12", "0"},
             {"0", "0", "0", "x1", "u13", "u23"},
         });
  const std::string row6 =
      which == RecordedVariant::verbatim ? "x1*u12 + x2*u12" : "x1*u12 + x2*u13";
  rc.a3 = ModMatrix::from_strings(R, {
                                         {"y1", "y1*u13 - u12"},
                                         {"-x2", "0"},
                                         {"x1", "u23"},
                                         {"0", "-u12*u23"},
                                         {"0", "-x2*u23"},
                                         {"0", row6},
                                     });
  return rc;
}

namespace {

Resolution build_recorded(RecordedVariant which) {
  RecordedComplex rc = recorded_complex_w0(which);
  try {
    return polyalg::resolution_from_matrices(chart_ring_gl3(),
                                             {rc.a1, rc.a2, rc.a3});
  } catch (const NotAComplexError& e) {
    throw TranscriptionMismatchError(
        std::string("recorded matrices fail the complex check: ") + e.what());
  }
}

Resolution validated_fixed() {
  Resolution res = build_recorded(RecordedVariant::row6_fixed);
  const RingPtr R = res.ring;
  std::vector<Poly> aug;
  for (size_t j = 0; j < res.diffs[0].cols(); ++j) aug.push_back(res.diffs[0].at(0, j));
  if (!Ideal(R, std::move(aug)).same_ideal(iw0_gl3()))
    throw TranscriptionMismatchError("augmentation ideal differs from the component ideal");
  if (!polyalg::is_exact_at(res.diffs[0], res.diffs[1]) ||
      !polyalg::is_exact_at(res.diffs[1], res.diffs[2]))
    throw TranscriptionMismatchError("recorded complex is not exact in the middle");
  if (polyalg::syzygies(res.diffs[2]).cols() != 0)
    throw TranscriptionMismatchError("leftmost recorded map is not injective");
  return res;
}

}  // namespace

Resolution recorded_resolution_w0() { return build_recorded(RecordedVariant::verbatim); }

Resolution recorded_resolution_w0_fixed() {
  static const Resolution res = validated_fixed();
  return res;
}

Presentation recorded_omega_presentation(bool simplified_list) {
  const RingPtr R = chart_ring_gl3();
  if (simplified_list) {
    // Relation vectors as printed in the simplified cokernel description.
    ModMatrix rel = ModMatrix::from_strings(R, {
                                                   {"y1", "x2", "x1", "0"},
                                                   {"y1*u13 - u12", "0", "u12", "u12*u23"},
                                               });
    return Presentation{2, rel};
  }
  return Presentation{2, recorded_complex_w0(RecordedVariant::row6_fixed).a3.transpose()};
}

namespace {

const Resolution& cached_w0_resolution() {
  static const Resolution res = polyalg::free_resolution(iw0_gl3());
  return res;
}

const Presentation& cached_omega() {
  static const Presentation p = polyalg::ext_top(iw0_gl3(), cached_w0_resolution());
  return p;
}

}  // namespace

long omega_fiber(std::span<const Rat> point) {
  const Ideal I = iw0_gl3();
  if (!polyalg::point_on_variety(I, point))
    throw PointNotOnVarietyError("omega fiber requested off the component");
  return cached_omega().fiber_dim(point);
}

namespace {

struct CellData {
  std::vector<std::string> vanish;
  std::vector<std::string> nonvanish;
};

// Conditions cutting out the locus where the moving flag is in a given
// relative position to the standard flag, on the GL3 chart:
//   moving line = std line      <=> x1 = x2 = 0
//   moving line in std plane    <=> x2 = 0
//   std line in moving plane    <=> x1*y1 + x2 = 0
//   moving plane = std plane    <=> y1 = 0 (and x1*y1 + x2 = 0)
CellData cell_data_gl3(const weyl::Perm& w) {
  const std::string one_line = w.to_string();
  if (one_line == "123") return {{"x1", "x2", "y1"}, {}};
  if (one_line == "213") return {{"x2", "y1"}, {"x1"}};
  if (one_line == "132") return {{"x1", "x2"}, {"y1"}};
  if (one_line == "231") return {{"x2"}, {"x1", "y1"}};
  if (one_line == "312") return {{"x1*y1 + x2"}, {"x2"}};
  if (one_line == "321") return {{}, {"x2", "x1*y1 + x2"}};
  throw ComponentMismatchError("no cell data for " + one_line);
}

// Flag-incidence ideal of the two-flag model on the full GL3 chart: the
// upper-triangular matrix X (diagonal d1,d2,d3) must preserve the moving
// line and the moving plane.
std::vector<Poly> incidence_gens_gl3() {
  const RingPtr R = incidence_ring_gl3();
  return parse_polys(
      R, {
             // rows 1,2 and 1,3 of the 2x2 minors of [v | X*v], v = (1,x1,x2)
             "d2*x1 + u23*x2 - d1*x1 - u12*x1^2 - u13*x1*x2",
             "d3*x2 - d1*x2 - u12*x1*x2 - u13*x2^2",
             // phi(X*w2), phi = (-(x1*y1+x2), y1, 1), w2 = (0,1,-y1)
             "-(x1*y1 + x2)*(u12 - u13*y1) + y1*(d2 - u23*y1) - d3*y1",
         });
}

Ideal saturated_component_gl3(const weyl::Perm& w) {
  const RingPtr R = incidence_ring_gl3();
  const CellData cd = cell_data_gl3(w);
  std::vector<Poly> gens = incidence_gens_gl3();
  for (const auto& s : cd.vanish) gens.push_back(parse_poly(R, s));
  Ideal I(R, std::move(gens));
  for (const auto& s : cd.nonvanish) I = polyalg::saturate(I, parse_poly(R, s));
  return I;
}

Ideal diagonal_cut_and_eliminate(const Ideal& I, const RingPtr& chart,
                                 const std::vector<std::string>& dvars) {
  const RingPtr R = I.ring();
  std::vector<Poly> gens = I.gens();
  std::vector<size_t> elim;
  for (const auto& d : dvars) {
    const auto idx = R->index_of(d);
    gens.push_back(Poly::variable(R, *idx));
    elim.push_back(*idx);
  }
  Ideal cut = polyalg::eliminate(Ideal(R, std::move(gens)), elim);
  Ideal restricted = polyalg::restrict_to_subring(cut, chart);
  return Ideal(chart, restricted.groebner());
}

}  // namespace

namespace {

RingPtr incidence_ring_gl2() {
  static const RingPtr ring = polyalg::make_ring({"x", "d1", "d2", "u"});
  return ring;
}

RingPtr chart_ring_gl2() {
  static const RingPtr ring = polyalg::make_ring({"x", "u"});
  return ring;
}

}  // namespace

Ideal incidence_component(int n, const weyl::Perm& w) {
  if (n == 3) {
    if (w.n() != 3) throw ComponentMismatchError("w must lie in S_3");
    return saturated_component_gl3(w);
  }
  if (n == 2) {
    if (w.n() != 2) throw ComponentMismatchError("w must lie in S_2");
    const RingPtr R = incidence_ring_gl2();
    // single 2x2 minor of [v | Xv], v = (1, x), X = [[d1, u], [0, d2]]
    Ideal I(R, parse_polys(R, {"x*d2 - x*d1 - u*x^2"}));
    if (w.is_identity()) {
      std::vector<Poly> gens = I.gens();
      gens.push_back(parse_poly(R, "x"));
      return Ideal(R, std::move(gens));
    }
    return polyalg::saturate(I, parse_poly(R, "x"));
  }
  throw ComponentMismatchError("rederivation implemented for n = 2, 3 only");
}

Ideal rederive_component(int n, const weyl::Perm& w) {
  const Ideal I = incidence_component(n, w);
  if (n == 3)
    return diagonal_cut_and_eliminate(I, chart_ring_gl3(), {"d1", "d2", "d3"});
  return diagonal_cut_and_eliminate(I, chart_ring_gl2(), {"d1", "d2"});
}

int tangent_dim_formula(const weyl::WeylElem& w) {
  int total = 0;
  for (const weyl::Perm& p : w.factors()) {
    if (p.n() != 3) throw ComponentMismatchError("tangent formula is for GL3 factors");
    total += 9 + p.coxeter_length() - p.reflection_length();
  }
  return total;
}

long jacobian_crosscheck_w0() {
  const Ideal Y = saturated_component_gl3(weyl::Perm::longest(3));
  const std::vector<Rat> origin(incidence_ring_gl3()->arity(), Rat(0));
  return polyalg::tangent_dim(Y, origin);
}

PdRPointSpec PdRPointSpec::parse(const std::string& text, int n) {
  PdRPointSpec spec;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw ComponentMismatchError("factor spec needs word:flags, got " + tok);
    const weyl::WeylElem w = weyl::WeylElem::parse_word(tok.substr(0, colon), n);
    const std::string f = tok.substr(colon + 1);
    Flags flags;
    if (f == "equal")
      flags = Flags::equal;
    else if (f == "distinct")
      flags = Flags::distinct;
    else if (f == "na")
      flags = Flags::na;
    else
      throw ComponentMismatchError("unknown flag state: " + f);
    const bool is_w0 = w.factor(0) == weyl::Perm::longest(n);
    if (is_w0 && flags == Flags::na)
      throw ComponentMismatchError("w0 factors need flags equal|distinct");
    if (!is_w0 && flags != Flags::na)
      throw ComponentMismatchError("flag state applies to w0 factors only");
    spec.taus.push_back(Factor{w.factor(0), flags});
  }
  if (spec.taus.empty()) throw ComponentMismatchError("empty point spec");
  return spec;
}

std::string PdRPointSpec::to_string() const {
  std::string s;
  for (size_t i = 0; i < taus.size(); ++i) {
    if (i) s += ',';
    // stable word form
    const weyl::Perm& p = taus[i].w;
    std::string word;
    if (p.is_identity()) {
      word = "1";
    } else if (p == weyl::Perm::longest(p.n())) {
      word = "w0";
    } else {
      for (int letter : p.reduced_word()) word += "s" + std::to_string(letter);
    }
    s += word;
    s += ':';
    s += taus[i].flags == Flags::equal ? "equal" : (taus[i].flags == Flags::distinct ? "distinct" : "na");
  }
  return s;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small nonzero rational in [-6, 6] \ {0}.
Rat small_nonzero(uint64_t& state) {
  const long v = static_cast<long>(splitmix64(state) % 12) - 6;
  return Rat(v >= 0 ? v + 1 : v);
}

}  // namespace

std::vector<Rat> sample_point_w0(int stratum, uint64_t seed) {
  uint64_t state = seed * 0x243f6a8885a308d3ULL + static_cast<uint64_t>(stratum);
  const Rat zero(0);
  switch (stratum) {
    case 0: {  // distinct flags, N = 0, interior of the open cell
      Rat x1 = small_nonzero(state), y1 = small_nonzero(state), x2 = small_nonzero(state);
      while (x1 * y1 + x2 == 0) x2 = small_nonzero(state);
      return {x1, x2, y1, zero, zero, zero};
    }
    case 1: {  // distinct flags, nonzero nilpotent, x2 = 0 family
      const Rat x1 = small_nonzero(state), y1 = small_nonzero(state),
                u13 = small_nonzero(state);
      return {x1, zero, y1, zero, u13 * x1, u13};
    }
    case 2: {  // distinct flags, nonzero nilpotent, x2 = -x1*y1 family
      const Rat x1 = small_nonzero(state), y1 = small_nonzero(state),
                u13 = small_nonzero(state);
      return {x1, -x1 * y1, y1, u13 * y1, zero, u13};
    }
    case 3:  // equal flags, zero nilpotent
      return std::vector<Rat>(6, zero);
    default:
      throw ComponentMismatchError("unknown stratum " + std::to_string(stratum));
  }
}

long product_omega_fiber(const PdRPointSpec& spec) {
  long result = 1;
  for (const auto& f : spec.taus) {
    if (f.w == weyl::Perm::longest(3)) {
      const std::vector<Rat> pt = f.flags == PdRPointSpec::Flags::equal
                                      ? sample_point_w0(3, 1)
                                      : sample_point_w0(0, 1);
      result *= omega_fiber(pt);
    } else {
      // Components away from w0 are smooth (their labels are products of
      // distinct simple reflections), hence Gorenstein: fiber 1.
      if (!weyl::is_product_of_distinct_simples(weyl::WeylElem({f.w})))
        throw ComponentMismatchError("unexpected non-smooth non-w0 factor");
      result *= 1;
    }
  }
  return result;
}

}  // namespace steinberg::models
