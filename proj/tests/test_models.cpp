#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/models.hpp"

using namespace steinberg;
using namespace steinberg::models;
namespace pa = steinberg::polyalg;
using weyl::Perm;
using weyl::WeylElem;

namespace {

WeylElem single(const Perm& p) { return WeylElem(std::vector<Perm>{p}); }

std::vector<pa::Rat> origin(size_t n) { return std::vector<pa::Rat>(n, pa::Rat(0)); }

size_t eval_rank(const pa::ModMatrix& m, const std::vector<pa::Rat>& pt) {
  return pa::rat_matrix_rank(m.eval(pt));
}

}  // namespace

TEST_CASE("the w0 component ideal and its reduced basis") {
  const auto I = iw0_gl3();
  CHECK(I.gens().size() == 4);
  CHECK(I.ring()->vars() ==
        std::vector<std::string>{"x1", "x2", "y1", "u12", "u23", "u13"});
  CHECK(I.dim() == 3);
  const auto& gb = I.groebner();
  CHECK(gb.size() == 5);
  // The recorded first differential lists exactly the reduced basis elements
  // (up to unit scaling): same ideal, same leading terms, five entries.
  const auto rec = recorded_complex_w0(RecordedVariant::row6_fixed);
  std::vector<pa::Poly> a1_entries;
  for (size_t c = 0; c < rec.a1.cols(); ++c) a1_entries.push_back(rec.a1.at(0, c));
  CHECK(a1_entries.size() == 5);
  CHECK(pa::Ideal(I.ring(), a1_entries).same_ideal(I));
  std::set<std::string> gb_monic, rec_monic;
  const auto ord = pa::MonomialOrder::grevlex();
  for (const auto& g : gb) gb_monic.insert(g.monic(ord).to_string());
  for (const auto& g : a1_entries) rec_monic.insert(g.monic(ord).to_string());
  CHECK(gb_monic == rec_monic);
}

TEST_CASE("verbatim transcription fails the complex check at two entries") {
  CHECK_THROWS_AS((void)recorded_resolution_w0(), TranscriptionMismatchError);
  const auto verb = recorded_complex_w0(RecordedVariant::verbatim);
  const auto prod = verb.a2.mul(verb.a3);
  std::vector<std::pair<size_t, size_t>> bad;
  for (size_t r = 0; r < prod.rows(); ++r)
    for (size_t c = 0; c < prod.cols(); ++c)
      if (!prod.at(r, c).is_zero()) bad.push_back({r, c});
  CHECK(bad == std::vector<std::pair<size_t, size_t>>{{1, 1}, {4, 1}});
  // First composite is fine either way.
  CHECK(verb.a1.mul(verb.a2).is_zero());
}

TEST_CASE("corrected complex validates and matches the computed resolution") {
  const auto fixed = recorded_resolution_w0_fixed();
  CHECK(fixed.ranks() == std::vector<size_t>{1, 5, 6, 2});
  CHECK(fixed.diffs[0].mul(fixed.diffs[1]).is_zero());
  CHECK(fixed.diffs[1].mul(fixed.diffs[2]).is_zero());
  CHECK(pa::is_exact_at(fixed.diffs[0], fixed.diffs[1]));
  CHECK(pa::is_exact_at(fixed.diffs[1], fixed.diffs[2]));
  CHECK(pa::syzygies(fixed.diffs[2]).cols() == 0);

  const auto computed = pa::free_resolution(iw0_gl3());
  CHECK(computed.ranks() == std::vector<size_t>{1, 5, 6, 2});
  CHECK(pa::minimalize(computed).ranks() == std::vector<size_t>{1, 4, 5, 2});
  CHECK(pa::minimalize(fixed).ranks() == std::vector<size_t>{1, 4, 5, 2});
}

TEST_CASE("the corrected entry differs from the verbatim one in one place") {
  const auto verb = recorded_complex_w0(RecordedVariant::verbatim);
  const auto fixd = recorded_complex_w0(RecordedVariant::row6_fixed);
  size_t diffs = 0;
  for (size_t r = 0; r < verb.a3.rows(); ++r)
    for (size_t c = 0; c < verb.a3.cols(); ++c)
      if (verb.a3.at(r, c) != fixd.a3.at(r, c)) ++diffs;
  CHECK(diffs == 1);
  CHECK(verb.a3.at(5, 1) == pa::parse_poly(verb.a3.ring(), "x1*u12 + x2*u12"));
  CHECK(fixd.a3.at(5, 1) == pa::parse_poly(fixd.a3.ring(), "x1*u12 + x2*u13"));
  // The other two matrices are identical.
  size_t same = 0;
  for (size_t c = 0; c < verb.a1.cols(); ++c)
    if (verb.a1.at(0, c) == fixd.a1.at(0, c)) ++same;
  CHECK(same == 5);
}

TEST_CASE("dualizing fibers: 2 at the origin, 1 on the sampled strata") {
  CHECK(omega_fiber(origin(6)) == 2);
  const auto fixd = recorded_complex_w0(RecordedVariant::row6_fixed);
  std::vector<std::vector<pa::Rat>> pts;
  for (int seed = 1; seed <= 4; ++seed) pts.push_back(sample_point_w0(0, seed));
  for (int seed = 1; seed <= 3; ++seed) pts.push_back(sample_point_w0(1, seed));
  for (int seed = 1; seed <= 3; ++seed) pts.push_back(sample_point_w0(2, seed));
  for (const auto& pt : pts) {
    CHECK(omega_fiber(pt) == 1);
    // Fiber = 2 exactly where the last differential evaluates to rank 0.
    CHECK(eval_rank(fixd.a3, pt) == 1);
    CHECK(omega_fiber(pt) == 2 - static_cast<long>(eval_rank(fixd.a3, pt)));
  }
  CHECK(eval_rank(fixd.a3, origin(6)) == 0);
  CHECK_THROWS_AS(omega_fiber(std::vector<pa::Rat>(6, pa::Rat(1))),
                  PointNotOnVarietyError);
}

TEST_CASE("the four-relation shortcut list carries its own subscript slip") {
  const auto plain = recorded_omega_presentation(false);
  const auto simpl = recorded_omega_presentation(true);
  CHECK(plain.rank == 2);
  CHECK(simpl.rank == 2);
  CHECK(plain.relations.cols() == 6);
  CHECK(simpl.relations.cols() == 4);

  std::vector<std::vector<pa::Rat>> pts = {origin(6)};
  for (int stratum = 0; stratum <= 2; ++stratum)
    for (int seed = 1; seed <= 3; ++seed) pts.push_back(sample_point_w0(stratum, seed));

  // The list read off the last differential always presents the right fibers.
  for (const auto& pt : pts) CHECK(plain.fiber_dim(pt) == omega_fiber(pt));

  // The shortcut list agrees at the origin but collapses the module to fiber
  // zero at some component points; no nonzero sheaf on an irreducible variety
  // does that, so one of its subscripts must be off.
  CHECK(simpl.fiber_dim(origin(6)) == 2);
  int zero_fibers = 0;
  for (const auto& pt : pts)
    if (simpl.fiber_dim(pt) == 0) ++zero_fibers;
  CHECK(zero_fibers > 0);

  // Restoring u23 in the third relation (matching the last differential)
  // reconciles the lists at every sampled point: the remaining two columns of
  // the differential are generators of the component ideal, hence vanish on
  // the component and drop from the evaluated span.
  const auto R = chart_ring_gl3();
  const pa::Presentation corrected{
      2, pa::ModMatrix::from_strings(R, {{"y1", "x2", "x1", "0"},
                                         {"y1*u13 - u12", "0", "u23", "u12*u23"}})};
  for (const auto& pt : pts) CHECK(corrected.fiber_dim(pt) == omega_fiber(pt));
}

TEST_CASE("sampled points land on the component and vary with the seed") {
  const auto I = iw0_gl3();
  for (int stratum = 0; stratum <= 3; ++stratum)
    for (int seed = 1; seed <= 4; ++seed)
      CHECK(pa::point_on_variety(I, sample_point_w0(stratum, seed)));
  CHECK(sample_point_w0(0, 1) != sample_point_w0(0, 2));
  CHECK(sample_point_w0(3, 1) == origin(6));
  // Stratum 1 keeps x2 = 0 with a nonzero nilpotent part.
  const auto p1 = sample_point_w0(1, 1);
  CHECK(p1[1] == pa::Rat(0));
  CHECK((p1[3] != pa::Rat(0) || p1[4] != pa::Rat(0) || p1[5] != pa::Rat(0)));
}

TEST_CASE("component rederivation: the longest element reproduces the record") {
  CHECK(rederive_component(3, Perm::longest(3)).same_ideal(iw0_gl3()));
}

TEST_CASE("component rederivation: gl2 cells") {
  const auto s = rederive_component(2, Perm::longest(2));
  CHECK(s.same_ideal(pa::Ideal(s.ring(), {pa::parse_poly(s.ring(), "u*x")})));
  CHECK(s.dim() == 1);
  const auto e = rederive_component(2, Perm::identity(2));
  CHECK(e.same_ideal(pa::Ideal(e.ring(), {pa::parse_poly(e.ring(), "x")})));
  // The open-cell ideal is a hypersurface, hence Gorenstein: its dualizing
  // fiber is 1 at every sampled point of the variety.
  const auto res = pa::free_resolution(s);
  CHECK(res.ranks() == std::vector<size_t>{1, 1});
  const auto top = pa::ext_top(s, res);
  const std::vector<std::vector<pa::Rat>> pts = {
      {pa::Rat(0), pa::Rat(0)}, {pa::Rat(1), pa::Rat(0)},  {pa::Rat(2), pa::Rat(0)},
      {pa::Rat(-3), pa::Rat(0)}, {pa::Rat(1, 2), pa::Rat(0)}, {pa::Rat(0), pa::Rat(1)},
      {pa::Rat(0), pa::Rat(-2)}, {pa::Rat(0), pa::Rat(5)},  {pa::Rat(0), pa::Rat(1, 3)},
      {pa::Rat(0), pa::Rat(7)}};
  for (const auto& pt : pts) CHECK(top.fiber_dim(pt) == 1);
}

TEST_CASE("component rederivation: identity cell is the flag-agreement locus") {
  const auto e3 = rederive_component(3, Perm::identity(3));
  CHECK(e3.same_ideal(pa::Ideal(
      e3.ring(), pa::parse_polys(e3.ring(), {"x1", "x2", "y1"}))));
  CHECK(e3.dim() == 3);
}

TEST_CASE("every rederived cut has pure dimension three") {
  for (const auto& p : weyl::all_perms(3)) CHECK(rederive_component(3, p).dim() == 3);
}

TEST_CASE("unsupported ranks are rejected") {
  CHECK_THROWS_AS(rederive_component(4, Perm::identity(4)), ComponentMismatchError);
  CHECK_THROWS_AS(incidence_component(5, Perm::identity(5)), ComponentMismatchError);
}

TEST_CASE("tangent dimensions of the two-flag model") {
  for (const auto& p : weyl::all_perms(3)) {
    const int expected = (p == Perm::longest(3)) ? 11 : 9;
    CHECK(tangent_dim_formula(single(p)) == expected);
    CHECK((tangent_dim_formula(single(p)) == 9) ==
          weyl::is_product_of_distinct_simples(single(p)));
  }
  // Product elements add factorwise.
  CHECK(tangent_dim_formula(WeylElem::parse("321,123")) == 11 + 9);
  CHECK_THROWS_AS(tangent_dim_formula(single(Perm::identity(2))),
                  ComponentMismatchError);
}

TEST_CASE("jacobian crosschecks on the incidence charts") {
  CHECK(jacobian_crosscheck_w0() == 8);
  // gl2 open cell before the cut: smooth of dimension 3 at the origin.
  const auto y2 = incidence_component(2, Perm::longest(2));
  CHECK(pa::tangent_dim(y2, origin(4)) == 3);
  // gl3 s1 cell before the cut: smooth of dimension 6 at a generic cell point.
  const auto y3 = incidence_component(3, Perm::parse("213"));
  const std::vector<pa::Rat> pt = {pa::Rat(1), pa::Rat(0), pa::Rat(0),
                                   pa::Rat(2), pa::Rat(2), pa::Rat(5),
                                   pa::Rat(0), pa::Rat(0), pa::Rat(0)};
  CHECK(pa::tangent_dim(y3, pt) == 6);
}

TEST_CASE("product point specs: parsing and fibers") {
  const auto spec = PdRPointSpec::parse("w0:equal,w0:distinct,s1s2:na");
  CHECK(spec.taus.size() == 3);
  CHECK(spec.to_string() == "w0:equal,w0:distinct,s1s2:na");
  CHECK(product_omega_fiber(spec) == 2);
  CHECK(product_omega_fiber(PdRPointSpec::parse("w0:equal,w0:equal")) == 4);
  CHECK(product_omega_fiber(PdRPointSpec::parse("w0:distinct")) == 1);
  CHECK(product_omega_fiber(PdRPointSpec::parse("s1s2:na")) == 1);
  CHECK_THROWS_AS(PdRPointSpec::parse("s1:equal"), ComponentMismatchError);
  CHECK_THROWS_AS(PdRPointSpec::parse("w0:na"), ComponentMismatchError);
  CHECK_THROWS_AS(PdRPointSpec::parse("w0:sideways"), ComponentMismatchError);
}
