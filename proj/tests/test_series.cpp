#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftlab/series.hpp"

using namespace shiftlab;

namespace {

// Independent oracle for the numerator polynomials: triangle recurrence
// T(n, j) = (j+1) T(n-1, j) + (n-j) T(n-1, j-1), T(0, 0) = 1, whose row n
// gives the coefficients of m_n. A different recurrence than the one the
// implementation iterates, so agreement is meaningful.
std::vector<Int> triangle_row(unsigned long n) {
  std::vector<Int> row{Int(1)};
  for (unsigned long step = 1; step <= n; ++step) {
    std::vector<Int> next(step, Int(0));
    if (step == 1) next = {Int(1)};
    for (std::size_t j = 0; j < next.size(); ++j) {
      Int a = j < row.size() ? row[j] * Int(static_cast<long>(j) + 1) : Int(0);
      Int b = j >= 1 && j - 1 < row.size()
                  ? row[j - 1] * Int(static_cast<long>(step - (j - 1)) - 1)
                  : Int(0);
      next[j] = a + b;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

TEST_CASE("m polynomials: base cases and small instances") {
  CHECK(m_poly(0) == PolyZ::constant(Int(1)));
  CHECK(m_poly(1) == PolyZ::constant(Int(1)));
  CHECK(m_poly(2) == PolyZ(std::vector<Int>{Int(1), Int(1)}));
  CHECK(m_poly(3) == PolyZ(std::vector<Int>{Int(1), Int(4), Int(1)}));
  CHECK(m_poly(4) == PolyZ(std::vector<Int>{Int(1), Int(11), Int(11), Int(1)}));
}

TEST_CASE("m polynomials match the triangle oracle") {
  for (unsigned long k = 1; k <= 14; ++k) {
    auto expect = triangle_row(k);
    auto got = m_poly(k).coeffs();
    CHECK(got == expect);
  }
}

TEST_CASE("m polynomial shape: degree, leading coefficient, value at 1") {
  for (unsigned long k = 1; k <= 32; ++k) {
    PolyZ m = m_poly(k);
    CHECK(m.degree() == static_cast<long>(k) - 1);
    CHECK(m.leading() == 1);
    CHECK(m.eval(Rat(1)) != 0);
  }
  for (unsigned long k = 1; k <= 20; ++k)
    CHECK(m_poly(k).eval(Rat(1)) == Rat(factorial(k)));
}

TEST_CASE("m recurrence holds as exact polynomial identity") {
  PolyZ one_minus_x(std::vector<Int>{Int(1), Int(-1)});
  PolyZ x = PolyZ::monomial(Int(1), 1);
  for (unsigned long k = 0; k <= 32; ++k) {
    PolyZ mk = m_poly(k);
    PolyZ expect = (x * mk.derivative() + mk) * one_minus_x +
                   PolyZ::constant(Int(static_cast<long>(k) + 1)) * (x * mk);
    CHECK(m_poly(k + 1) == expect);
  }
}

TEST_CASE("exact series values at nonnegative index") {
  Rat half(1, 2);
  CHECK(s_nonneg(0, half) == Rat(2));
  CHECK(s_nonneg(1, half) == Rat(4));
  CHECK(s_nonneg(2, half) == Rat(12));
  CHECK(s_nonneg(3, half) == Rat(52));
  CHECK(s_nonneg(2, Rat(1, 3)) == Rat(m_poly(2).eval(Rat(1, 3)) / rat_pow(Rat(2, 3), 3)));
  CHECK_THROWS_AS(s_nonneg(1, Rat(2)), invalid_parameter);
  CHECK_THROWS_AS(s_nonneg(1, Rat(0)), invalid_parameter);
  CHECK_THROWS_AS(s_nonneg(1, Rat(-1, 2)), invalid_parameter);
}

TEST_CASE("partial sums approach the closed form from below") {
  for (unsigned long k : {0ul, 1ul, 3ul, 5ul}) {
    for (Rat q : {Rat(1, 2), Rat(1, 3), Rat(3, 4)}) {
      Rat exact = s_nonneg(k, q);
      Rat p50 = s_partial(static_cast<long>(k), q, 50);
      Rat p200 = s_partial(static_cast<long>(k), q, 200);
      CHECK(p50 < exact);
      CHECK(p50 <= p200);
      CHECK(p200 < exact);
      // 200 terms leave less than 10^-10 at these arguments.
      CHECK(exact - p200 < Rat(1, Int("10000000000")));
    }
  }
}

TEST_CASE("negative-index series enclosures") {
  Rat half(1, 2);
  SUBCASE("single term plus tail") {
    Enclosure e = s_neg(1, half, 1);
    CHECK(e.lo == 1);
    CHECK(e.hi == 2);  // 1 + q/(1-q) = 2 at q = 1/2
  }
  SUBCASE("tail width bound") {
    Enclosure e = s_neg(2, half, 64);
    CHECK(e.width() <= Rat(2) / rat_pow(Rat(2), 63));
  }
  SUBCASE("monotone shrinking") {
    Rat w_prev;
    bool first = true;
    for (unsigned long n : {4ul, 16ul, 64ul, 128ul}) {
      Rat w = s_neg(1, half, n).width();
      if (!first) CHECK(w <= w_prev);
      w_prev = w;
      first = false;
    }
  }
  SUBCASE("enclosures at different depths all intersect") {
    Enclosure a = s_neg(1, half, 8);
    for (unsigned long n : {1ul, 2ul, 16ul, 200ul}) {
      Enclosure b = s_neg(1, half, n);
      CHECK(enc_overlap(a, b));
    }
  }
}

TEST_CASE("closed form for the index -1 series") {
  SUBCASE("q = 1/2 encloses 2 ln 2 to the requested width") {
    Enclosure e = s_minus1_closed(Rat(1, 2), 128);
    // 2 ln 2 = 1.38629436111989061883446424291635313615100026... ;
    // the window below pins 36 digits.
    Rat center = rat_from_str("138629436111989061883446424291635313615") /
                 rat_pow(Rat(10), 38);
    Rat slack = Rat(1, Int("10000000000000000000000000000000000"));  // 1e-34
    CHECK(e.lo >= center - slack);
    CHECK(e.hi <= center + slack);
    CHECK(e.width() <= Rat(2) / rat_pow(Rat(2), 128));
  }
  SUBCASE("q = 3/4 encloses (4/3) ln 4") {
    Enclosure e = s_minus1_closed(Rat(3, 4), 128);
    // (4/3) ln 4 = 1.84839248149318749177928565722180418153... (frozen)
    Rat center = rat_from_str("184839248149318749177928565722180418153") /
                 rat_pow(Rat(10), 38);
    Rat slack = Rat(1, Int("10000000000000000000000000000000000"));  // 1e-34
    CHECK(e.lo >= center - slack);
    CHECK(e.hi <= center + slack);
  }
  SUBCASE("intersects the direct series enclosure for every depth") {
    for (Rat q : {Rat(1, 2), Rat(1, 3), Rat(2, 5)}) {
      Enclosure closed = s_minus1_closed(q, 160);
      for (unsigned long n : {1ul, 3ul, 10ul, 64ul, 300ul})
        CHECK(enc_overlap(closed, s_neg(1, q, n)));
    }
  }
  SUBCASE("width shrinks with precision") {
    for (int bits : {16, 32, 64, 256}) {
      Enclosure e = s_minus1_closed(Rat(1, 2), bits);
      CHECK(e.width() <= Rat(2) / rat_pow(Rat(2), bits));
    }
  }
}

TEST_CASE("term counts for a requested tail") {
  CHECK(s_neg_terms_for_tail(Rat(1, 2), 96) == 98);
  Rat q(1, 3);
  unsigned long n = s_neg_terms_for_tail(q, 96);
  CHECK(rat_pow(q, static_cast<long>(n)) / (1 - q) < Rat(1, Int(1) << 96));
  CHECK(rat_pow(q, static_cast<long>(n) - 1) / (1 - q) >= Rat(1, Int(1) << 96));
}
