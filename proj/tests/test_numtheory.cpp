#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/numtheory.hpp"

using namespace steinberg;
using namespace steinberg::numtheory;

namespace {

// Multiplication in Z[x]/(x^n - 1), for root-of-unity identities.
std::vector<long> cyc_mul(const std::vector<long>& a, const std::vector<long>& b) {
  const size_t n = a.size();
  std::vector<long> out(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
  return out;
}

std::vector<long> primes_below(long bound) {
  std::vector<long> ps;
  for (long p = 2; p < bound; ++p)
    if (is_prime(p)) ps.push_back(p);
  return ps;
}

}  // namespace

TEST_CASE("integer polynomials: parsing, printing, normalization") {
  const auto f = ZPoly::parse("x^3 - x^2 - 4*x - 1");
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "x^3 - x^2 - 4*x - 1");
  CHECK(ZPoly::parse("x^3-x^2-4x-1") == f);
  CHECK(ZPoly::from_coeffs({-1, -4, -1, 1}) == f);
  CHECK(ZPoly::parse("2*x^2+3").to_string() == "2*x^2 + 3");
  CHECK(ZPoly::parse("-x + 5").to_string() == "-x + 5");
  CHECK(ZPoly::parse("7").degree() == 0);
  CHECK(ZPoly::parse("0").is_zero());
  CHECK(derivative(f) == ZPoly::parse("3*x^2 - 2*x - 4"));
  CHECK_THROWS_AS(ZPoly::parse("x^"), ParseError);
  CHECK_THROWS_AS(ZPoly::parse("y + 1"), ParseError);
}

TEST_CASE("primality of small integers") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(is_prime(9973));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(169));
  CHECK_FALSE(is_prime(52));
}

TEST_CASE("frobenius residues: closed cases and the naive oracle") {
  const auto f = ZPoly::parse("x^2 + 1");
  CHECK(frobenius_power(f, 5) == ZPoly::parse("x"));
  CHECK(frobenius_power(f, 3) == ZPoly::parse("2*x"));
  CHECK(frobenius_power(ZPoly::parse("x"), 7) == ZPoly::zero());
  CHECK_THROWS_AS(frobenius_power(f, 6), BadPrimeError);
  CHECK_THROWS_AS(frobenius_power(ZPoly::parse("5*x^2 + 1"), 5), BadPrimeError);
  CHECK_THROWS_AS(frobenius_power(ZPoly::parse("3"), 5), InvalidSpecError);

  const std::vector<ZPoly> samples = {
      ZPoly::parse("x^2 + 1"), ZPoly::parse("x^3 - x^2 - 4*x - 1"),
      ZPoly::parse("x^3 + x^2 - 2*x - 1"), ZPoly::parse("x^4 - x^2 + 1"),
      ZPoly::parse("x^4 - 12*x^2 + 64"), ZPoly::parse("x^3 - 3*x + 1"),
      ZPoly::parse("x^2 + 5")};
  for (const auto& g : samples)
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L})
      CHECK(frobenius_power(g, p) == frobenius_power_naive(g, p));
}

TEST_CASE("total splitting of x^2 + 1 matches the 1 mod 4 criterion") {
  const auto f = ZPoly::parse("x^2 + 1");
  for (long p : primes_below(1000)) {
    if (p == 2) {
      CHECK_FALSE(is_totally_split(f, 2));  // ramified
      continue;
    }
    CHECK(is_totally_split(f, p) == (p % 4 == 1));
  }
}

TEST_CASE("builtin field specs") {
  const auto names = FieldSpec::builtin_names();
  CHECK(names == std::vector<std::string>{"Qi_cubic13", "Qsqrtm3_zeta7",
                                          "Qi_sqrt3_zeta7", "Qsqrtm5_zeta9",
                                          "Qi_sqrt7_cubic43"});
  const std::vector<long> moduli = {52, 21, 84, 180, 1204};
  for (size_t i = 0; i < names.size(); ++i) {
    const auto spec = FieldSpec::builtin_by_name(names[i]);
    CHECK(spec.builtin);
    CHECK(spec.default_modulus == moduli[i]);
    for (const auto& f : spec.polys) CHECK_NOTHROW(verify_irreducible(f));
  }
  CHECK_THROWS_AS(FieldSpec::builtin_by_name("nope"), InvalidSpecError);
}

TEST_CASE("certified irreducibility rejects reducible inputs") {
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^2 - 1")), InvalidSpecError);
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^2 - 2*x + 1")), InvalidSpecError);
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^3 - x")), InvalidSpecError);
  // Quartics splitting as two integer quadratics are caught.
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^4 + 4")), InvalidSpecError);
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^4 - 5*x^2 + 6")), InvalidSpecError);
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^4 - 1")), InvalidSpecError);
  CHECK_NOTHROW(verify_irreducible(ZPoly::parse("x^2 - 2")));
  CHECK_NOTHROW(verify_irreducible(ZPoly::parse("x^4 - x^2 + 1")));
  CHECK_NOTHROW(verify_irreducible(ZPoly::parse("x^4 - 12*x^2 + 64")));
  // Degree 5 is outside the certified range.
  CHECK_THROWS_AS(verify_irreducible(ZPoly::parse("x^5 - x - 1")), InvalidSpecError);
}

TEST_CASE("split reports for field sets") {
  const auto qi13 = FieldSpec::builtin_by_name("Qi_cubic13");
  const auto at5 = is_totally_split_set(qi13, 5);
  CHECK(at5.totally_split);
  CHECK(at5.verdicts == std::vector<std::string>{"split", "split"});
  const auto at3 = is_totally_split_set(qi13, 3);
  CHECK_FALSE(at3.totally_split);
  CHECK(at3.verdicts[0] == "inert-pattern");
  const auto at2 = is_totally_split_set(qi13, 2);
  CHECK_FALSE(at2.totally_split);
  CHECK(at2.verdicts[0] == "ramified");
  CHECK_THROWS_AS(is_totally_split_set(qi13, 52), BadPrimeError);

  // 13 fails for the quartic pair because it is inert in the sqrt(7) part.
  const auto q7 = FieldSpec::builtin_by_name("Qi_sqrt7_cubic43");
  const auto at13 = is_totally_split_set(q7, 13);
  CHECK_FALSE(at13.totally_split);
  CHECK(at13.verdicts[0] == "inert-pattern");
}

TEST_CASE("witness primes for the recorded examples split completely") {
  const auto qi13 = FieldSpec::builtin_by_name("Qi_cubic13");
  for (long p : {5L, 53L, 73L}) CHECK(is_totally_split_set(qi13, p).totally_split);
  const auto z7 = FieldSpec::builtin_by_name("Qsqrtm3_zeta7");
  for (long p : {13L, 43L, 97L}) CHECK(is_totally_split_set(z7, p).totally_split);
  const auto iz7 = FieldSpec::builtin_by_name("Qi_sqrt3_zeta7");
  for (long p : {13L, 97L}) CHECK(is_totally_split_set(iz7, p).totally_split);
  CHECK_FALSE(is_prime(169));  // the recorded third example is a prime square
}

TEST_CASE("compositum polynomials by resultants") {
  CHECK(compositum_poly(ZPoly::parse("x^2 + 1"), ZPoly::parse("x^2 - 2")) ==
        ZPoly::parse("x^4 - 2*x^2 + 9"));
  CHECK(compositum_poly(ZPoly::parse("x^2 + 1"), ZPoly::parse("x - 1")) ==
        ZPoly::parse("x^2 - 2*x + 2"));
  CHECK(compositum_poly(ZPoly::parse("x^2 + 1"), ZPoly::parse("x")) ==
        ZPoly::parse("x^2 + 1"));
  CHECK(compositum_poly(ZPoly::parse("x^2 + 1"), ZPoly::parse("x^2 - 3")) ==
        ZPoly::parse("x^4 - 4*x^2 + 16"));
}

TEST_CASE("splitting in a compositum matches splitting in both parts") {
  const auto f = ZPoly::parse("x^2 + 1");
  const auto g = ZPoly::parse("x^2 - 3");
  const auto comp = compositum_poly(f, g);
  FieldSpec pair{"pair", {f, g}, 0, false};
  FieldSpec whole{"whole", {comp}, 0, false};
  for (long p : primes_below(200)) {
    const auto w = is_totally_split_set(whole, p);
    if (w.verdicts[0] == "ramified") continue;  // polynomial-level ramification
    CHECK(w.totally_split == is_totally_split_set(pair, p).totally_split);
  }
}

TEST_CASE("the recorded cubics are genuine real-cyclotomic minimal polynomials") {
  // eta = zeta_7 + zeta_7^-1 satisfies eta^3 + eta^2 - 2 eta - 1 = 0:
  // in Z[x]/(x^7 - 1) the combination equals the full cyclotomic sum.
  std::vector<long> c7(7, 0);
  c7[1] = 1;
  c7[6] = 1;
  const auto c2 = cyc_mul(c7, c7);
  const auto c3 = cyc_mul(c2, c7);
  std::vector<long> expr(7, 0);
  for (size_t i = 0; i < 7; ++i) expr[i] = c3[i] + c2[i] - 2 * c7[i];
  expr[0] -= 1;
  CHECK(expr == std::vector<long>(7, 1));

  // eta = zeta_9 + zeta_9^-1 satisfies eta^3 - 3 eta + 1 = 0:
  // the combination equals x^6 + x^3 + 1 in Z[x]/(x^9 - 1).
  std::vector<long> c9(9, 0);
  c9[1] = 1;
  c9[8] = 1;
  const auto d3 = cyc_mul(cyc_mul(c9, c9), c9);
  std::vector<long> expr9(9, 0);
  for (size_t i = 0; i < 9; ++i) expr9[i] = d3[i] - 3 * c9[i];
  expr9[0] += 1;
  CHECK(expr9 == std::vector<long>{1, 0, 0, 1, 0, 0, 1, 0, 0});
}

TEST_CASE("congruence classes for the recorded field sets") {
  const auto r52 = congruence_classes(FieldSpec::builtin_by_name("Qi_cubic13"), 52);
  CHECK(r52.classes == std::vector<long>{1, 5, 21, 25});
  CHECK(r52.exact);
  CHECK(r52.subgroup_closed);
  CHECK(r52.subgroup_index == 6);
  CHECK(r52.witnesses.at(5).size() == 3);
  CHECK(r52.witnesses.at(5).front() == 5);
  for (const auto& [cls, ps] : r52.witnesses)
    for (long p : ps) {
      CHECK(p % 52 == cls);
      CHECK(is_totally_split_set(FieldSpec::builtin_by_name("Qi_cubic13"), p)
                .totally_split);
    }

  const auto r21 = congruence_classes(FieldSpec::builtin_by_name("Qsqrtm3_zeta7"), 21);
  CHECK(r21.classes == std::vector<long>{1, 13});
  CHECK(r21.subgroup_index == 6);
  CHECK(r21.witnesses.at(13).front() == 13);

  const auto r84 = congruence_classes(FieldSpec::builtin_by_name("Qi_sqrt3_zeta7"), 84);
  CHECK(r84.classes == std::vector<long>{1, 13});
  CHECK(r84.subgroup_index == 12);
}

TEST_CASE("congruence classes match the character-theory oracle mod 180") {
  // Split <=> p = +-1 (mod 9) for the real-cyclotomic cubic, and the
  // quadratic-character condition p in {1,3,7,9} (mod 20) for x^2 + 5.
  std::vector<long> oracle;
  for (long r = 1; r < 180; ++r) {
    if (std::gcd(r, 180L) != 1) continue;
    const long r9 = r % 9, r20 = r % 20;
    const bool cubic_ok = (r9 == 1 || r9 == 8);
    const bool quad_ok = (r20 == 1 || r20 == 3 || r20 == 7 || r20 == 9);
    if (cubic_ok && quad_ok) oracle.push_back(r);
  }
  CHECK(oracle.size() == 8);
  const auto rep = congruence_classes(FieldSpec::builtin_by_name("Qsqrtm5_zeta9"), 180);
  CHECK(rep.classes == oracle);
  CHECK(rep.exact);
  CHECK(rep.subgroup_closed);
  CHECK(rep.subgroup_index == 6);  // phi(180)/8
}

TEST_CASE("custom specs are heuristic only") {
  const auto custom = FieldSpec::from_polys("x^2+1;x^3-x^2-4x-1");
  CHECK_FALSE(custom.builtin);
  CHECK_THROWS_AS(congruence_classes(custom, 52), NonAbelianSpecError);
  const auto rep = congruence_classes(custom, 52, 3, true);
  CHECK(rep.classes == std::vector<long>{1, 5, 21, 25});
  CHECK_FALSE(rep.exact);
  CHECK_THROWS_AS(FieldSpec::from_polys("x^2-1"), InvalidSpecError);
}

TEST_CASE("prime-side constraint reports") {
  const auto z7 = FieldSpec::builtin_by_name("Qsqrtm3_zeta7");
  const auto ok = taylor_wiles_prime_check(13, z7, "p");
  CHECK(ok.overall);
  CHECK(ok.items.size() >= 3);
  const auto small = taylor_wiles_prime_check(7, z7, "p");
  CHECK_FALSE(small.overall);
  const auto ell = taylor_wiles_prime_check(5, FieldSpec::builtin_by_name("Qi_cubic13"), "ell");
  CHECK(ell.overall);
  CHECK_THROWS_AS(taylor_wiles_prime_check(13, z7, "q"), InvalidSpecError);
  CHECK_THROWS_AS(taylor_wiles_prime_check(12, z7, "p"), BadPrimeError);
}

TEST_CASE("split densities approach the galois-theoretic values") {
  const auto half = split_density(ZPoly::parse("x^2 + 1"), 10000);
  CHECK(half.tested > 1000);
  const double hr = double(half.split) / double(half.tested);
  CHECK(hr > 0.45);
  CHECK(hr < 0.55);
  for (const char* cubic : {"x^3 - x^2 - 4*x - 1", "x^3 + x^2 - 2*x - 1", "x^3 - 3*x + 1"}) {
    const auto third = split_density(ZPoly::parse(cubic), 10000);
    const double tr = double(third.split) / double(third.tested);
    CHECK(tr > 0.28);
    CHECK(tr < 0.38);
  }
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(52) == 24);
  CHECK(euler_phi(21) == 12);
  CHECK(euler_phi(84) == 24);
  CHECK(euler_phi(180) == 48);
  CHECK(euler_phi(1204) == 504);
}
