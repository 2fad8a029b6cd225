#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftlab/counterexample.hpp"
#include "shiftlab/shift_op.hpp"

using namespace shiftlab;

namespace {

struct Fixture22 {
  CounterexampleParams params = choose_parameters(2, Int(2));
  WeightAssignment w = counterexample_weights(params, 32);
  std::unique_ptr<TailProvider> tail = exact_fan_tail(params);
  FiniteTree t = make_truncation(10, 12, 10);
};

struct Fixture32 {
  CounterexampleParams params = choose_parameters(3, Int(2));
  WeightAssignment w = counterexample_weights(params, 32);
  std::unique_ptr<TailProvider> tail = exact_fan_tail(params);
  FiniteTree t = make_truncation(10, 12, 10);
};

}  // namespace

TEST_CASE("local square sums") {
  Fixture22 f;
  SUBCASE("single-child vertices are the squared child weight") {
    CHECK(scalar_exact_rat(local_square_sum(f.t, f.w, Vertex::branch(3, 2), nullptr))
              .value() == Rat(8, 3));
    CHECK(scalar_exact_rat(local_square_sum(f.t, f.w, Vertex::branch(3, 9), nullptr))
              .value() == Rat(8, 3));
    // children(Spine(i)) = {Spine(i-1)} carrying gamma_{i-1}.
    CHECK(scalar_exact_rat(local_square_sum(f.t, f.w, Vertex::spine(1), nullptr)).value() ==
          Rat(4));
    CHECK(scalar_exact_rat(local_square_sum(f.t, f.w, Vertex::spine(7), nullptr)).value() ==
          Rat(4));
  }
  SUBCASE("branching vertex needs a tail and hits the closed form exactly") {
    CHECK_THROWS_AS(local_square_sum(f.t, f.w, Vertex::spine(0), nullptr),
                    missing_tail_error);
    Scalar s = local_square_sum(f.t, f.w, Vertex::spine(0), f.tail.get());
    CHECK(scalar_exact_rat(s).value() == Rat(4));  // series_value(1, 1/2)
  }
}

TEST_CASE("iterated norms") {
  Fixture22 f;
  SUBCASE("single path of constant weight") {
    // From Branch(i,1), two steps run through beta_i twice.
    Scalar v = iterated_norm_sq(f.t, f.w, Vertex::branch(2, 1), 2, nullptr);
    CHECK(scalar_exact_rat(v).value() == Rat(16));  // (8/2)^2
  }
  SUBCASE("one step is the local sum") {
    for (const Vertex& u : {Vertex::spine(3), Vertex::branch(1, 1), Vertex::spine(0)}) {
      Scalar a = iterated_norm_sq(f.t, f.w, u, 1, f.tail.get());
      Scalar b = local_square_sum(f.t, f.w, u, f.tail.get());
      CHECK(scalar_eq_exact(a, b).value());
    }
  }
  SUBCASE("path through the branching vertex") {
    Scalar v = iterated_norm_sq(f.t, f.w, Vertex::spine(1), 2, f.tail.get());
    CHECK(scalar_exact_rat(v).value() == Rat(16));  // gamma_0^2 * branching sum
  }
  SUBCASE("fan spread from the branching vertex") {
    Scalar v = iterated_norm_sq(f.t, f.w, Vertex::spine(0), 2, f.tail.get());
    CHECK(scalar_exact_rat(v).value() == Rat(16));  // c * S_0(q) = 8*2
  }
  SUBCASE("truncation too small names the first missing vertex") {
    try {
      iterated_norm_sq(f.t, f.w, Vertex::branch(1, 9), 3, nullptr);
      FAIL("expected truncation_insufficient_error");
    } catch (const truncation_insufficient_error& e) {
      CHECK(e.missing == Vertex::branch(1, 11));
    }
  }
}

TEST_CASE("moment-identity condition per vertex") {
  Fixture22 f;
  SUBCASE("chains with constant weight are exactly equal") {
    for (long m = 1; m <= 4; ++m)
      CHECK(js_condition(f.t, f.w, Vertex::branch(4, 2), m, nullptr).verdict ==
            Verdict::equal_exact);
  }
  SUBCASE("equality at the construction exponent") {
    CHECK(js_condition(f.t, f.w, Vertex::spine(0), 2, f.tail.get()).verdict ==
          Verdict::equal_exact);
  }
  SUBCASE("separation at the next exponent, with the known gap") {
    ComparisonReport r = js_condition(f.t, f.w, Vertex::spine(0), 3, f.tail.get());
    CHECK(r.verdict == Verdict::separated_by);
    CHECK(r.gap > Rat(24));
    CHECK(r.gap < Rat(25));
    CHECK(r.lhs.contains(Rat(64)));
  }
  SUBCASE("higher precision never flips a separated verdict") {
    for (int prec : {64, 128, 256}) {
      ComparisonReport r = js_condition(f.t, f.w, Vertex::spine(0), 3, f.tail.get(), prec);
      CHECK(r.verdict == Verdict::separated_by);
    }
  }
}

TEST_CASE("spine equalities stay exact for n = 3") {
  Fixture32 f;
  // At exponent m = n the condition holds at spine vertices via the solved
  // boundary system; the exact monomial algebra must see it syntactically.
  CHECK(js_condition(f.t, f.w, Vertex::spine(2), 3, f.tail.get()).verdict ==
        Verdict::equal_exact);
  CHECK(js_condition(f.t, f.w, Vertex::spine(5), 3, f.tail.get()).verdict ==
        Verdict::equal_exact);
  // And fails at m = 2 with a visible gap.
  ComparisonReport r = js_condition(f.t, f.w, Vertex::spine(1), 2, f.tail.get());
  CHECK(r.verdict == Verdict::separated_by);
}

TEST_CASE("operator norm bound") {
  SUBCASE("counterexample family at n = 2") {
    Fixture22 f;
    Scalar sup = operator_norm_sq_sup(f.t, f.w, f.tail.get());
    CHECK(scalar_exact_rat(sup).value() == Rat(8));  // max(4, 8, 4)
    Enclosure norm = operator_norm_bound(f.t, f.w, f.tail.get());
    CHECK(rat_pow(norm.lo, 2) <= 8);
    CHECK(rat_pow(norm.hi, 2) >= 8);
    CHECK(norm.width() < Rat(1, 1000000));
  }
  SUBCASE("constant weights on a declared-complete path give norm 1") {
    FiniteTree path = make_truncation(6, 1, 6);
    WeightAssignment w = WeightAssignment::constant(Rat(1));
    ZeroFanTail tail;
    Enclosure norm = operator_norm_bound(path, w, &tail);
    CHECK(norm.contains(Rat(1)));
    CHECK(norm.width() == 0);
  }
  SUBCASE("n = 3: the sup is the beta-family head") {
    Fixture32 f;
    Scalar sup = operator_norm_sq_sup(f.t, f.w, f.tail.get());
    Enclosure e = scalar_enclose(sup, 128);
    // c^(1/2) = sqrt(864) = 29.3938769...
    CHECK(e.lo > Rat(29));
    CHECK(e.hi < Rat(30));
    CHECK(scalar_is_exact(sup));
  }
}
