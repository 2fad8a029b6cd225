#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftlab/cplx.hpp"
#include "shiftlab/scalar.hpp"

using namespace shiftlab;

namespace {

// Small deterministic rational generator for property-style checks.
struct RatGen {
  unsigned long state = 0x9e3779b97f4a7c15ull;
  unsigned long next_u() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  Rat next(long max_num = 1000) {
    long n = static_cast<long>(next_u() % (2 * max_num + 1)) - max_num;
    long d = static_cast<long>(next_u() % static_cast<unsigned long>(max_num)) + 1;
    return Rat(n, d);
  }
  Rat next_pos(long max_num = 1000) {
    long n = static_cast<long>(next_u() % static_cast<unsigned long>(max_num)) + 1;
    long d = static_cast<long>(next_u() % static_cast<unsigned long>(max_num)) + 1;
    return Rat(n, d);
  }
};

}  // namespace

TEST_CASE("directed rounding brackets the value") {
  RatGen gen;
  for (int i = 0; i < 200; ++i) {
    Rat x = gen.next(1000000);
    for (int prec : {16, 53, 128}) {
      Rat lo = round_down(x, prec), hi = round_up(x, prec);
      CHECK(lo <= x);
      CHECK(x <= hi);
      if (x != 0) {
        Rat rel = (hi - lo) / rat_abs(x);
        CHECK(rel <= Rat(4) / rat_pow(Rat(2), prec));
      }
    }
  }
}

TEST_CASE("interval arithmetic contains pointwise results") {
  RatGen gen;
  for (int i = 0; i < 100; ++i) {
    Rat a = gen.next(), b = gen.next(), c = gen.next(), d = gen.next();
    Enclosure A(rat_min(a, b), rat_max(a, b));
    Enclosure B(rat_min(c, d), rat_max(c, d));
    CHECK(enc_add(A, B, 64).contains(a + c));
    CHECK(enc_sub(A, B, 64).contains(a - c));
    CHECK(enc_mul(A, B, 64).contains(a * c));
    CHECK(enc_mul(A, B, 64).contains(b * d));
    if (!B.contains(Rat(0))) CHECK(enc_div(A, B, 64).contains(a / c));
    CHECK(enc_pow(A, 3, 64).contains(rat_pow(a, 3)));
    CHECK(enc_pow(A, 2, 64).contains(rat_pow(b, 2)));
  }
}

TEST_CASE("rational roots: enclosures bracket and exact roots collapse") {
  Enclosure r2 = enc_root_of_rat(Rat(2), 2, 128);
  CHECK(rat_pow(r2.lo, 2) <= 2);
  CHECK(rat_pow(r2.hi, 2) >= 2);
  CHECK(r2.width() <= Rat(1, Int(1) << 100));

  CHECK(enc_root_of_rat(Rat(4), 2, 64).is_point());
  CHECK(enc_root_of_rat(Rat(4), 2, 64).lo == 2);
  CHECK(enc_root_of_rat(Rat(27, 8), 3, 64).lo == Rat(3, 2));

  Enclosure r864 = enc_root_of_rat(Rat(864), 2, 128);
  CHECK_FALSE(r864.is_point());
  CHECK(rat_pow(r864.lo, 2) <= 864);
  CHECK(rat_pow(r864.hi, 2) >= 864);

  Enclosure big = enc_rat_pow_q(Rat(864), Rat(10, 3), 128);
  CHECK(rat_pow(big.lo, 3) <= rat_pow(Rat(864), 10));
  CHECK(rat_pow(big.hi, 3) >= rat_pow(Rat(864), 10));
}

TEST_CASE("exact power and primality predicates") {
  CHECK(rational_kth_root_exact(Rat(1728), 3).value() == 12);
  CHECK(rational_kth_root_exact(Rat(27, 8), 3).value() == Rat(3, 2));
  CHECK_FALSE(rational_kth_root_exact(Rat(864), 2).has_value());
  CHECK(is_perfect_square(Rat(49, 81)));
  CHECK_FALSE(is_perfect_square(Rat(8)));
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(3)));
  CHECK(is_prime(Int(104729)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(4)));
  CHECK_FALSE(is_prime(Int("18446744073709551617")));  // 2^64+1 = 274177 * ...
}

TEST_CASE("monomial scalars") {
  auto basis = std::make_shared<const Basis>(Basis{Rat(8), Rat(4)});
  SUBCASE("integer exponents collapse to rationals") {
    MonomialScalar m(Rat(3), basis, {Rat(2), Rat(-1)});
    CHECK(m.exact_rat().value() == Rat(48));  // 3 * 8^2 / 4
  }
  SUBCASE("fractional exponents enclose correctly") {
    MonomialScalar m(Rat(1), basis, {Rat(0), Rat(1, 2)});  // sqrt(4)
    Enclosure e = mono_enclose(m, 96);
    CHECK(e.contains(Rat(2)));
  }
  SUBCASE("multiplication adds exponents") {
    MonomialScalar a(Rat(2), basis, {Rat(1, 2), Rat(0)});
    MonomialScalar b(Rat(3), basis, {Rat(1, 2), Rat(1)});
    MonomialScalar c = mono_mul(a, b);
    CHECK(c.coeff == 6);
    CHECK(c.exps == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(c.exact_rat().value() == Rat(6 * 8 * 4));
  }
  SUBCASE("rational powers need exact coefficient roots") {
    MonomialScalar a(Rat(9), basis, {Rat(1), Rat(0)});
    MonomialScalar r = mono_pow_rat(a, Rat(1, 2));
    CHECK(r.coeff == 3);
    CHECK(r.exps == std::vector<Rat>{Rat(1, 2), Rat(0)});
    MonomialScalar b(Rat(2), basis, {Rat(1), Rat(0)});
    CHECK_THROWS_AS(mono_pow_rat(b, Rat(1, 2)), invalid_parameter);
  }
  SUBCASE("basis screening") {
    CHECK_THROWS_AS(check_basis_plausible(Basis{Rat(2), Rat(2)}), invalid_parameter);
    CHECK_THROWS_AS(check_basis_plausible(Basis{Rat(2), Rat(8)}), invalid_parameter);
    CHECK_THROWS_AS(check_basis_plausible(Basis{Rat(1)}), invalid_parameter);
    CHECK_NOTHROW(check_basis_plausible(Basis{Rat(864), Rat(4), Rat(12)}));
  }
}

TEST_CASE("scalar algebra") {
  auto basis = std::make_shared<const Basis>(Basis{Rat(8)});
  Scalar r2{Rat(2)};
  Scalar m_half{MonomialScalar(Rat(1), basis, {Rat(1, 2)})};  // sqrt(8)
  SUBCASE("mixed products stay exact where possible") {
    Scalar p = scalar_mul(r2, m_half, 64);
    const auto* m = std::get_if<MonomialScalar>(&p);
    REQUIRE(m != nullptr);
    CHECK(m->coeff == 2);
  }
  SUBCASE("adding like monomials merges coefficients") {
    Scalar a{MonomialScalar(Rat(1, 2), basis, {Rat(1, 2)})};
    Scalar b{MonomialScalar(Rat(1, 3), basis, {Rat(1, 2)})};
    Scalar s = scalar_add(a, b, 64);
    const auto* m = std::get_if<MonomialScalar>(&s);
    REQUIRE(m != nullptr);
    CHECK(m->coeff == Rat(5, 6));
  }
  SUBCASE("normalization collapses integer exponents") {
    Scalar x{MonomialScalar(Rat(3), basis, {Rat(2)})};
    CHECK(scalar_exact_rat(x).value() == 192);
  }
  SUBCASE("powers") {
    Scalar p = scalar_pow_int(m_half, 2, 64);
    CHECK(scalar_exact_rat(p).value() == 8);
  }
}

TEST_CASE("scalar comparison verdicts") {
  auto basis = std::make_shared<const Basis>(Basis{Rat(8)});
  SUBCASE("equal exact") {
    CHECK(scalar_compare(Scalar{Rat(4)}, Scalar{Rat(4)}, 64).verdict == Verdict::equal_exact);
    Scalar a{MonomialScalar(Rat(1), basis, {Rat(1, 2)})};
    Scalar b{MonomialScalar(Rat(1), basis, {Rat(1, 2)})};
    CHECK(scalar_compare(a, b, 64).verdict == Verdict::equal_exact);
    Scalar c{MonomialScalar(Rat(1), basis, {Rat(2)})};
    CHECK(scalar_compare(c, Scalar{Rat(64)}, 64).verdict == Verdict::equal_exact);
  }
  SUBCASE("rational separation is exact") {
    ComparisonReport r = scalar_compare(Scalar{Rat(1, 3)}, Scalar{Rat(2, 3)}, 64);
    CHECK(r.verdict == Verdict::separated_by);
    CHECK(r.gap == Rat(1, 3));
  }
  SUBCASE("distinct monomials separate through enclosures") {
    Scalar a{MonomialScalar(Rat(1), basis, {Rat(1, 2)})};  // sqrt(8) ~ 2.83
    Scalar b{MonomialScalar(Rat(1), basis, {Rat(1, 3)})};  // 2
    ComparisonReport r = scalar_compare(a, b, 128);
    CHECK(r.verdict == Verdict::separated_by);
    CHECK(r.gap > Rat(8, 10));
  }
  SUBCASE("overlap yields inconclusive at zero tolerance, equal within at larger") {
    Enclosure e1(Rat(1), Rat(2)), e2(Rat(3, 2), Rat(5, 2));
    CHECK(scalar_compare(Scalar{e1}, Scalar{e2}, 64).verdict == Verdict::inconclusive);
    CHECK(scalar_compare(Scalar{e1}, Scalar{e2}, 64, Rat(10)).verdict ==
          Verdict::equal_within);
  }
}

TEST_CASE("scalar sup picks exact dominant candidates") {
  std::vector<Scalar> xs{Rat(4), Rat(8), Rat(4)};
  CHECK(scalar_exact_rat(scalar_sup(xs, 64)).value() == 8);
  std::vector<Scalar> ys{Rat(4), Enclosure(Rat(3), Rat(5))};
  Scalar s = scalar_sup(ys, 64);
  CHECK_FALSE(scalar_is_exact(s));
  Enclosure e = scalar_enclose(s, 64);
  CHECK(e.contains(Rat(5)));
}

TEST_CASE("complex boxes") {
  CEnclosure a(Rat(1), Rat(2));
  CEnclosure b(Rat(3), Rat(-1));
  CEnclosure p = cenc_mul(a, b, 64);
  CHECK(p.re.contains(Rat(5)));   // 1*3 - 2*(-1)
  CHECK(p.im.contains(Rat(5)));   // 1*(-1) + 2*3
  CEnclosure q = cenc_div(p, b, 64);
  CHECK(q.re.contains(Rat(1)));
  CHECK(q.im.contains(Rat(2)));
  CHECK(cenc_mod_sq(a, 64).contains(Rat(5)));
  CEnclosure z = cenc_pow(CEnclosure(Rat(0), Rat(1)), 4, 64);
  CHECK(z.re.contains(Rat(1)));
  CHECK(z.im.contains(Rat(0)));
}
