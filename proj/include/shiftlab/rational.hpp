#ifndef SHIFTLAB_RATIONAL_HPP
#define SHIFTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace shiftlab {

using Int = mpz_class;
using Rat = mpq_class;

// Default working precision, in bits, for outward-rounded interval endpoints.
inline constexpr int default_precision = 128;
inline constexpr int min_precision = 16;

struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct precision_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

/// mpq_class(num, den) does not reduce; this does.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);  // e may be negative; base != 0 then
Int factorial(unsigned long n);

// floor(a^(1/k)) for a >= 0; second member is true iff a is a perfect k-th power.
std::pair<Int, bool> iroot_floor(const Int& a, unsigned long k);

// Exact test: is r the k-th power of a rational? Returns the root if so.
std::optional<Rat> rational_kth_root_exact(const Rat& r, unsigned long k);

bool is_perfect_square(const Rat& r);

// Deterministic for the sizes in use: trial division under 2^16, then GMP's
// primality test which is exact in its "definitely prime/composite" answers.
bool is_prime(const Int& p);

// Outward rounding of a rational to ~prec significant bits. round_down never
// increases the value, round_up never decreases it; both are exact when the
// input already fits in prec bits.
Rat round_down(const Rat& x, int prec);
Rat round_up(const Rat& x, int prec);

int signum(const Rat& x);
Rat rat_abs(const Rat& x);
Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

std::string rat_str(const Rat& x);
Rat rat_from_str(const std::string& s);

// Approximate double value, for report text only.
double rat_to_double(const Rat& x);

}  // namespace shiftlab

#endif
