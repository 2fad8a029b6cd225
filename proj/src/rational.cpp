#include "shiftlab/rational.hpp"

namespace shiftlab {

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw invalid_parameter("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::pair<Int, bool> iroot_floor(const Int& a, unsigned long k) {
  if (a < 0) throw invalid_parameter("iroot_floor: negative radicand");
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
  return {r, exact != 0};
}

std::optional<Rat> rational_kth_root_exact(const Rat& r, unsigned long k) {
  if (r < 0) return std::nullopt;
  auto [rn, en] = iroot_floor(r.get_num(), k);
  if (!en) return std::nullopt;
  auto [rd, ed] = iroot_floor(r.get_den(), k);
  if (!ed) return std::nullopt;
  Rat out(rn, rd);
  out.canonicalize();
  return out;
}

bool is_perfect_square(const Rat& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(r.get_den().get_mpz_t());
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d < 65536ul && Int(d * d) <= p; ++d)
    if (p % d == 0) return p == d;
  // All factors below 2^16 excluded; mpz_probab_prime_p(…, 50) answers
  // 2 (prime) or 0 (composite) exactly for everything we accept, and we
  // treat "probably prime" (1) as not certified.
  return mpz_probab_prime_p(p.get_mpz_t(), 50) == 2;
}

namespace {

// Directed rounding to prec significant bits. dir = -1 rounds toward -inf,
// +1 toward +inf.
Rat round_dir(const Rat& x, int prec, int dir) {
  if (prec < min_precision) throw invalid_parameter("precision below minimum");
  if (x == 0) return x;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  long bn = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  long bd = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long shift = prec - (bn - bd);
  if (shift >= bd) return x;  // already representable without loss
  Int m;
  if (shift >= 0) {
    Int scaled_num = num << static_cast<unsigned long>(shift);
    if (dir < 0)
      mpz_fdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
    else
      mpz_cdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
    Rat r(m, Int(1) << static_cast<unsigned long>(shift));
    r.canonicalize();
    return r;
  }
  Int scaled_den = den << static_cast<unsigned long>(-shift);
  if (dir < 0)
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), scaled_den.get_mpz_t());
  else
    mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), scaled_den.get_mpz_t());
  Rat r(m, 1);
  r <<= static_cast<unsigned long>(-shift);
  return r;
}

}  // namespace

Rat round_down(const Rat& x, int prec) { return round_dir(x, prec, -1); }
Rat round_up(const Rat& x, int prec) { return round_dir(x, prec, +1); }

int signum(const Rat& x) { return sgn(x); }

Rat rat_abs(const Rat& x) { return abs(x); }
Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

std::string rat_str(const Rat& x) { return x.get_str(); }

Rat rat_from_str(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw invalid_parameter("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

double rat_to_double(const Rat& x) { return x.get_d(); }

}  // namespace shiftlab
