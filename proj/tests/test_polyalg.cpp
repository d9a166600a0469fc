#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/polyalg/ideal.hpp"

using namespace steinberg;
using namespace steinberg::polyalg;

namespace {

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Poly random_poly(const RingPtr& ring, uint64_t& st, int nterms) {
  Poly f = Poly::zero(ring);
  for (int t = 0; t < nterms; ++t) {
    long c = static_cast<long>(splitmix(st) % 9) - 4;
    if (c == 0) c = 2;
    Poly term = Poly::constant(ring, Rat(c));
    for (size_t i = 0; i < ring->arity(); ++i) {
      const uint32_t k = static_cast<uint32_t>(splitmix(st) % 3);
      if (k) term = term * Poly::variable(ring, i, k);
    }
    f = f + term;
  }
  return f;
}

}  // namespace

TEST_CASE("monomial order semantics: first variable is largest") {
  const auto r = make_ring({"x", "y", "z"});
  const auto lex = MonomialOrder::lex();
  // x beats any power of later variables under lex.
  CHECK(lex.greater(Monomial::var(3, 0), Monomial::var(3, 1, 5)));
  CHECK(lex.greater(Monomial::var(3, 1), Monomial::var(3, 2, 9)));
  // grevlex on three variables: x^2 > xy > y^2 > xz > yz > z^2.
  const auto g = MonomialOrder::grevlex();
  const std::vector<Monomial> chain = {
      Monomial{{2, 0, 0}}, Monomial{{1, 1, 0}}, Monomial{{0, 2, 0}},
      Monomial{{1, 0, 1}}, Monomial{{0, 1, 1}}, Monomial{{0, 0, 2}}};
  for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(g.greater(chain[i], chain[i + 1]));
  // grevlex is degree-first.
  CHECK(g.greater(Monomial{{0, 0, 3}}, Monomial{{2, 0, 0}}));
  // Elimination block: any monomial containing x beats any x-free monomial.
  const auto b = MonomialOrder::block(1);
  CHECK(b.greater(Monomial{{1, 0, 0}}, Monomial{{0, 9, 9}}));
  CHECK(b.less(Monomial{{0, 1, 0}}, Monomial{{0, 0, 2}}) ==
        g.less(Monomial{{0, 1, 0}}, Monomial{{0, 0, 2}}));
}

TEST_CASE("polynomial arithmetic and printing") {
  const auto r = make_ring({"x", "y"});
  const Poly x = Poly::variable(r, 0);
  const Poly y = Poly::variable(r, 1);
  const Poly f = (x + y) * (x + y);
  CHECK(f == parse_poly(r, "x^2 + 2*x*y + y^2"));
  CHECK(f.to_string() == "x^2 + 2*x*y + y^2");
  CHECK((f - f).is_zero());
  CHECK(parse_poly(r, "1/2*x - 3").to_string() == "1/2*x - 3");
  CHECK(parse_poly(r, "-x^2+ y").to_string() == "-x^2 + y");
  CHECK(parse_poly(r, "0").is_zero());
  CHECK(f.derivative(0) == parse_poly(r, "2*x + 2*y"));
  const std::vector<Rat> pt = {Rat(2), Rat(-1)};
  CHECK(f.eval(pt) == Rat(1));
  CHECK_THROWS_AS(parse_poly(r, "x +"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "q"), ParseError);
}

TEST_CASE("printer output reparses bit-exactly (seeded)") {
  const auto r = make_ring({"x", "y", "z"});
  uint64_t st = 12345;
  for (int k = 0; k < 50; ++k) {
    const Poly f = random_poly(r, st, 4);
    CHECK(parse_poly(r, f.to_string()) == f);
  }
}

TEST_CASE("normal form") {
  const auto r = make_ring({"x", "y"});
  const auto ord = MonomialOrder::grevlex();
  const std::vector<Poly> basis = parse_polys(r, {"x*y - 1", "y^2 - 1"});
  CHECK(normal_form(parse_poly(r, "x^2*y"), basis, ord) == parse_poly(r, "x"));
  // The divisor search takes the first listed match, so x*y^2 reduces through
  // x*y - 1 (leaving y), not through y^2 - 1 (which would leave x).
  CHECK(normal_form(parse_poly(r, "x*y^2"), basis, ord) == parse_poly(r, "y"));
  CHECK(normal_form(parse_poly(r, "y^3 - 1"), basis, ord) == parse_poly(r, "y - 1"));
  // NF is linear over adding basis multiples.
  uint64_t st = 777;
  for (int k = 0; k < 20; ++k) {
    const Poly h = random_poly(r, st, 3);
    const Poly g = random_poly(r, st, 2);
    CHECK(normal_form(h + g * basis[0], basis, ord) == normal_form(h, basis, ord));
  }
}

TEST_CASE("reduced groebner bases: frozen small examples") {
  const auto r = make_ring({"x", "y"});
  const auto gb = groebner_basis(parse_polys(r, {"x^2 + y^2", "x*y"}),
                                 MonomialOrder::grevlex());
  CHECK(polys_to_strings(gb) ==
        std::vector<std::string>{"x*y", "x^2 + y^2", "y^3"});

  // Twisted cubic under lex: the classical four-element basis.
  const auto r3 = make_ring({"x", "y", "z"});
  const auto tc = groebner_basis(parse_polys(r3, {"y - x^2", "z - x^3"}),
                                 MonomialOrder::lex());
  // Strings print terms in decreasing grevlex order (y^2 beats x*z there),
  // while basis elements stay monic with respect to the lex leading term.
  CHECK(polys_to_strings(tc) ==
        std::vector<std::string>{"y^3 - z^2", "-y^2 + x*z", "x*y - z", "x^2 - y"});
}

TEST_CASE("groebner basis is idempotent and order-stable (seeded)") {
  const auto r = make_ring({"x", "y", "z"});
  const auto ord = MonomialOrder::grevlex();
  uint64_t st = 99;
  for (int k = 0; k < 8; ++k) {
    std::vector<Poly> gens = {random_poly(r, st, 3), random_poly(r, st, 3)};
    const auto gb = groebner_basis(gens, ord);
    CHECK(groebner_basis(gb, ord) == gb);
    // Reversing the generator list cannot change the reduced basis.
    std::vector<Poly> rev(gens.rbegin(), gens.rend());
    CHECK(groebner_basis(rev, ord) == gb);
  }
}

TEST_CASE("degree bound raises instead of looping") {
  const auto r3 = make_ring({"x", "y", "z"});
  GroebnerOptions opts;
  opts.degree_bound = 2;
  CHECK_THROWS_AS(
      groebner_basis(parse_polys(r3, {"y - x^2", "z - x^3"}), MonomialOrder::lex(), opts),
      DegreeBoundError);
}

TEST_CASE("ideal membership and unit detection") {
  const auto r = make_ring({"x", "y", "z"});
  const Ideal I(r, parse_polys(r, {"x^2", "y^3"}));
  CHECK(I.contains(parse_poly(r, "x^2*y^4*z")));
  CHECK(I.contains(parse_poly(r, "x^3 + y^3")));
  CHECK_FALSE(I.contains(parse_poly(r, "x*y")));
  CHECK_FALSE(I.contains(parse_poly(r, "z")));
  CHECK_FALSE(I.is_unit_ideal());
  const Ideal U(r, parse_polys(r, {"x", "x + 1"}));
  CHECK(U.is_unit_ideal());
  CHECK(Ideal(r, {}).is_zero_ideal());
}

TEST_CASE("krull dimension") {
  const auto r = make_ring({"x", "y", "z"});
  CHECK(Ideal(r, {}).dim() == 3);
  CHECK(Ideal(r, parse_polys(r, {"x*y", "x*z"})).dim() == 2);
  CHECK(Ideal(r, parse_polys(r, {"x", "y", "z"})).dim() == 0);
  CHECK(Ideal(r, parse_polys(r, {"x", "x + 1"})).dim() == -1);
  CHECK(Ideal(r, parse_polys(r, {"x^2 - y*z"})).dim() == 2);
}

TEST_CASE("ideal equality via reduced bases") {
  const auto r = make_ring({"x", "y"});
  CHECK(Ideal(r, parse_polys(r, {"x", "y"}))
            .same_ideal(Ideal(r, parse_polys(r, {"x + y", "y"}))));
  CHECK_FALSE(Ideal(r, parse_polys(r, {"x"}))
                  .same_ideal(Ideal(r, parse_polys(r, {"y"}))));
}

TEST_CASE("saturation") {
  const auto r = make_ring({"x", "y"});
  const Ideal I(r, parse_polys(r, {"x^2*y", "x*y^2"}));
  const auto S = saturate(I, parse_poly(r, "x"));
  CHECK(S.same_ideal(Ideal(r, parse_polys(r, {"y"}))));
  CHECK(saturate(S, parse_poly(r, "x")).same_ideal(S));
  // Saturating by an element of the ideal gives the unit ideal.
  CHECK(saturate(I, parse_poly(r, "x^2*y")).is_unit_ideal());
}

TEST_CASE("intersection") {
  const auto r = make_ring({"x", "y"});
  CHECK(intersect(Ideal(r, parse_polys(r, {"x"})), Ideal(r, parse_polys(r, {"y"})))
            .same_ideal(Ideal(r, parse_polys(r, {"x*y"}))));
  const Ideal A(r, parse_polys(r, {"x^2", "x*y"}));
  const Ideal B(r, parse_polys(r, {"y"}));
  CHECK(intersect(A, B).same_ideal(Ideal(r, parse_polys(r, {"x*y", "x^2*y"}))));
}

TEST_CASE("elimination and restriction") {
  const auto r = make_ring({"x", "y", "z"});
  const Ideal I(r, parse_polys(r, {"y - x^2", "z - x^3"}));
  const auto E = eliminate(I, {0});
  for (const auto& g : E.gens()) CHECK_FALSE(g.involves(0));
  CHECK(E.contains(parse_poly(r, "y^3 - z^2")));
  const auto small = make_ring({"y", "z"});
  const auto R = restrict_to_subring(E, small);
  CHECK(R.ring()->vars() == std::vector<std::string>{"y", "z"});
  CHECK(R.same_ideal(Ideal(small, parse_polys(small, {"y^3 - z^2"}))));
}

TEST_CASE("exact matrix rank") {
  CHECK(rat_matrix_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rat_matrix_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(5)}}) == 2);
  CHECK(rat_matrix_rank({{Rat(0), Rat(0)}}) == 0);
  CHECK(rat_matrix_rank({{Rat(1, 2), Rat(1, 3)}, {Rat(3), Rat(2)}}) == 1);
}

TEST_CASE("tangent space dimension at rational points") {
  const auto r = make_ring({"x", "y"});
  const Ideal cusp(r, parse_polys(r, {"y^2 - x^3"}));
  const std::vector<Rat> origin = {Rat(0), Rat(0)};
  const std::vector<Rat> smooth = {Rat(1), Rat(1)};
  const std::vector<Rat> off = {Rat(1), Rat(2)};
  CHECK(tangent_dim(cusp, origin) == 2);
  CHECK(tangent_dim(cusp, smooth) == 1);
  CHECK_THROWS_AS(tangent_dim(cusp, off), PointNotOnVarietyError);
  const Ideal node(r, parse_polys(r, {"x*y"}));
  CHECK(tangent_dim(node, origin) == 2);
  CHECK(point_on_variety(node, origin));
  CHECK_FALSE(point_on_variety(node, smooth));
}

TEST_CASE("on-disk basis cache: roundtrip, garbage rejection, certification") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("steinberg-cache-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  REQUIRE(::setenv("STEINBERG_CACHE_DIR", dir.c_str(), 1) == 0);

  const auto r = make_ring({"x", "y", "z"});
  const std::vector<std::string> gens = {"x*y - z", "y^2 - 1", "x^2*z - y"};
  const Ideal first(r, parse_polys(r, gens));
  const auto basis = first.groebner();

  fs::path file;
  size_t entries = 0;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".gb") {
      file = e.path();
      ++entries;
    }
  REQUIRE(entries == 1);

  // A fresh ideal with the same generators loads the identical basis.
  const Ideal second(r, parse_polys(r, gens));
  CHECK(second.groebner() == basis);

  // Unreadable content is discarded and recomputation restores agreement.
  {
    std::ofstream out(file, std::ios::trunc);
    out << "garbage\n";
  }
  const Ideal third(r, parse_polys(r, gens));
  CHECK(third.groebner() == basis);

  // A well-formed entry whose basis is not one fails recertification: the
  // generators below do not reduce to zero against {x}.
  {
    std::ofstream out(file, std::ios::trunc);
    out << "steinberg-gb 1\n";
    out << "vars x,y,z\n";
    out << "order " << MonomialOrder::grevlex().key() << "\n";
    out << "gens 3\n";
    for (const auto& g : parse_polys(r, gens)) out << g.to_string() << "\n";
    out << "basis 1\n";
    out << "x\n";
  }
  const Ideal fourth(r, parse_polys(r, gens));
  CHECK(fourth.groebner() == basis);

  REQUIRE(::unsetenv("STEINBERG_CACHE_DIR") == 0);
  fs::remove_all(dir);

  // With the variable unset no directory reappears.
  const Ideal fifth(r, parse_polys(r, gens));
  CHECK(fifth.groebner() == basis);
  CHECK_FALSE(fs::exists(dir));
}
