#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "steinberg/cato.hpp"
#include "steinberg/errors.hpp"

using namespace steinberg;
using namespace steinberg::cato;
using weyl::Perm;
using weyl::WeylElem;

namespace {

WeylElem el(const std::string& text) { return WeylElem::parse(text); }

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("verma classes in the simple basis") {
  CHECK(verma_jh(el("321")).coeff.size() == 1);
  CHECK(verma_jh(el("321")).at(el("321")) == 1);
  CHECK(verma_jh(el("123")).coeff.size() == 6);
  CHECK(verma_jh(el("213")).coeff.size() == 4);  // s1 and everything above it
  CHECK(verma_jh(el("213")).at(el("132")) == 0);
  CHECK(verma_jh(el("213")).at(el("231")) == 1);
  // Two factors: sizes multiply.
  CHECK(verma_jh(el("213,123")).coeff.size() == 4 * 6);
  CHECK_THROWS_AS(verma_jh(WeylElem::parse("1234")), ShapeMismatchError);
}

TEST_CASE("basis changes invert each other") {
  // Delta classes round-trip.
  for (const auto& p : weyl::all_perms(3)) {
    KClass delta{Basis::verma, {{WeylElem({p}), 1}}};
    CHECK(to_verma_basis(to_simple_basis(delta)) == delta);
  }
  // Random integer classes, one and two factors.
  uint64_t st = 4242;
  const auto perms = weyl::all_perms(3);
  for (int trial = 0; trial < 10; ++trial) {
    KClass c{Basis::verma, {}};
    for (const auto& p : perms) {
      const long coef = static_cast<long>(splitmix(st) % 7) - 3;
      if (coef != 0) c.coeff[WeylElem({p})] = coef;
    }
    CHECK(to_verma_basis(to_simple_basis(c)) == c);
  }
  for (int trial = 0; trial < 4; ++trial) {
    KClass c{Basis::verma, {}};
    for (const auto& p : perms)
      for (const auto& q : perms) {
        const long coef = static_cast<long>(splitmix(st) % 5) - 2;
        if (coef != 0) c.coeff[WeylElem(std::vector<Perm>{p, q})] = coef;
      }
    CHECK(to_verma_basis(to_simple_basis(c)) == c);
    CHECK(to_simple_basis(to_verma_basis(to_simple_basis(c))) == to_simple_basis(c));
  }
}

TEST_CASE("the quotient class in both bases") {
  const auto n = n_lambda_jh();
  CHECK(n.basis == Basis::simple);
  CHECK(n.coeff.size() == 3);
  CHECK(n.at(el("123")) == 1);
  CHECK(n.at(el("213")) == 1);
  CHECK(n.at(el("132")) == 1);
  CHECK(n.at(el("321")) == 0);
  // In the Verma basis: M(e) - M(s1s2) - M(s2s1) + M(w0).
  const auto nv = to_verma_basis(n);
  CHECK(nv.at(el("123")) == 1);
  CHECK(nv.at(el("231")) == -1);
  CHECK(nv.at(el("312")) == -1);
  CHECK(nv.at(el("321")) == 1);
  CHECK(nv.coeff.size() == 4);
}

TEST_CASE("summand decompositions at refinement positions") {
  // Generic factor: simples under w_R * w0.
  const auto s1 = s_lambda_wR(RefinementPosition::parse("s1"));
  CHECK(s1.summands ==
        std::vector<std::string>{"L(123)", "L(132)", "L(213)", "L(312)"});
  CHECK(s1.count() == 4);
  CHECK(s1.kclass.total() == 4);

  // Critical factor: length-one simples drop out, the quotient class joins.
  const auto crit = s_lambda_wR(RefinementPosition::parse("1"));
  CHECK(crit.summands ==
        std::vector<std::string>{"L(123)", "L(231)", "L(312)", "L(321)", "N"});
  CHECK(crit.count() == 5);
  CHECK(crit.kclass.at(el("123")) == 2);
  CHECK(crit.kclass.at(el("213")) == 1);
  CHECK(crit.kclass.at(el("132")) == 1);
  CHECK(crit.kclass.at(el("231")) == 1);
  CHECK(crit.kclass.at(el("312")) == 1);
  CHECK(crit.kclass.at(el("321")) == 1);
  CHECK(crit.kclass.total() == 7);

  // Longest-element factor: a single summand.
  const auto top = s_lambda_wR(RefinementPosition::parse("w0"));
  CHECK(top.summands == std::vector<std::string>{"L(123)"});
  CHECK(top.count() == 1);

  // Two factors: counts multiply, labels join with '*'.
  const auto two = s_lambda_wR(RefinementPosition::parse("1,s1"));
  CHECK(two.count() == 20);
  CHECK(two.kclass.total() == 7 * 4);
  CHECK(two.summands.front() == "L(123)*L(123)");
  bool has_joint = false;
  for (const auto& s : two.summands) has_joint = has_joint || s == "N*L(312)";
  CHECK(has_joint);
}

TEST_CASE("support of patched sheaves") {
  const auto all = RefinementPosition::parse("1");
  const auto top = RefinementPosition::parse("w0");
  for (const auto& p : weyl::all_perms(3)) {
    CHECK(support_nonzero(WeylElem({p}), all));
    CHECK(support_nonzero(WeylElem({p}), top) == (p == Perm::identity(3)));
  }
  CHECK_THROWS_AS(support_nonzero(el("123,123"), all), ShapeMismatchError);
}

TEST_CASE("cycle classes are single terms with the generic multiplicity") {
  const auto pos = RefinementPosition::parse("1", 3);
  const auto cv = cycle_of_verma(el("123"), pos);
  CHECK(cv.basis_symbol == "Xqtri");
  CHECK(cv.coeff.size() == 1);
  CHECK(cv.coeff.at(el("321")) == 3);
  CHECK(cv.to_string() == "3*Xqtri(321)");
  const auto cs = cycle_of_simple(el("213"), pos);
  CHECK(cs.basis_symbol == "Z");
  CHECK(cs.coeff.at(el("312")) == 3);  // s1 * w0
  CHECK_THROWS_AS(cycle_of_simple(el("213"), RefinementPosition::parse("w0")),
                  ZeroSheafError);
}

TEST_CASE("classical dimension ratio counts identity factors") {
  CHECK(classical_dim_ratio(RefinementPosition::parse("1")) == 2);
  CHECK(classical_dim_ratio(RefinementPosition::parse("1,1")) == 4);
  CHECK(classical_dim_ratio(RefinementPosition::parse("w0,s1")) == 1);
  CHECK(classical_dim_ratio(RefinementPosition::parse("1,s1,w0")) == 2);
  CHECK(classical_dim_ratio(RefinementPosition::parse("1,1,1")) == 8);
}

TEST_CASE("hom dimension counts and the inclusion-exclusion collapse") {
  CHECK(hom_dim_count(0, 5) == 5);
  CHECK(hom_dim_count(2, 3) == 12);
  CHECK(hom_dim_count(6, 1) == 64);
  for (unsigned i2 = 0; i2 <= 6; ++i2)
    for (long m = 1; m <= 5; ++m)
      CHECK(inclusion_exclusion_check(i2, m) == m);
  CHECK_THROWS_AS(hom_dim_count(2, 0), InvalidSpecError);
  CHECK_THROWS_AS(RefinementPosition::parse("s1", 0), InvalidSpecError);
}

TEST_CASE("rendering is deterministic") {
  KClass c{Basis::simple, {{el("123"), 2}, {el("321"), 1}}};
  CHECK(c.to_string() == "2*L(123) + 1*L(321)");
  KClass m{Basis::verma, {{el("231"), -1}}};
  CHECK(m.to_string() == "-1*M(231)");
  CHECK(KClass{}.to_string() == "0");
}
