#include "shiftlab/bilateral.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace shiftlab {

const Rat& BilateralWindow::at(long n) const {
  if (n < lo() || n > hi()) throw invalid_parameter("window index out of range");
  return data[static_cast<std::size_t>(n - offset)];
}

BilateralWindow BilateralWindow::constant(const Rat& weight, long lo, long hi) {
  if (weight <= 0) throw invalid_parameter("weights must be positive");
  if (hi < lo) throw invalid_parameter("empty window");
  BilateralWindow w;
  w.kind = Kind::values;
  w.offset = lo;
  w.data.assign(static_cast<std::size_t>(hi - lo + 1), weight);
  return w;
}

BilateralWindow BilateralWindow::exp_doubling(long lo, long hi) {
  if (hi < lo) throw invalid_parameter("empty window");
  BilateralWindow w;
  w.kind = Kind::log_values;
  w.offset = lo;
  for (long n = lo; n <= hi; ++n) {
    // (-2)^n as an exact rational, negative n giving (+-)1/2^|n|.
    Rat v = rat_pow(Rat(-2), n);
    w.data.push_back(v);
  }
  return w;
}

BilateralWindow BilateralWindow::geometric(const Rat& ratio, long lo, long hi) {
  if (ratio <= 0) throw invalid_parameter("ratio must be positive");
  if (hi < lo) throw invalid_parameter("empty window");
  BilateralWindow w;
  w.kind = Kind::values;
  w.offset = lo;
  for (long n = lo; n <= hi; ++n) w.data.push_back(rat_pow(ratio, n));
  return w;
}

W11Report w11_check(const BilateralWindow& win, long k) {
  if (k < 2) throw invalid_parameter("k must be at least 2");
  if (win.size() < k) throw invalid_parameter("window shorter than k");
  W11Report rep;
  rep.k = k;
  rep.log_scale = win.kind == BilateralWindow::Kind::log_values;
  for (long n = win.lo(); n + k - 1 <= win.hi(); ++n) {
    W11Row row;
    row.n = n;
    if (rep.log_scale) {
      Rat lhs = Rat(k) * win.at(n);
      Rat rhs(0);
      for (long i = 0; i < k; ++i) rhs += win.at(n + i);
      row.gap = rat_abs(lhs - rhs);
    } else {
      Rat lhs = rat_pow(win.at(n), k);
      Rat rhs(1);
      for (long i = 0; i < k; ++i) rhs *= win.at(n + i);
      row.gap = rat_abs(lhs - rhs);
    }
    row.verdict = row.gap == 0 ? Verdict::equal_exact : Verdict::separated_by;
    if (row.gap != 0) rep.all_equal = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

PolyZ char_poly(long k) {
  // k z^k - (z^{k-1} + ... + 1)
  std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(-1));
  c.back() = Int(k);
  return PolyZ(std::move(c));
}

PolyZ char_poly_q(long k) {
  // k z^{k+1} - (k+1) z^k + 1
  std::vector<Int> c(static_cast<std::size_t>(k) + 2, Int(0));
  c[0] = Int(1);
  c[static_cast<std::size_t>(k)] = Int(-(k + 1));
  c[static_cast<std::size_t>(k) + 1] = Int(k);
  return PolyZ(std::move(c));
}

using cd = std::complex<double>;

cd horner(const std::vector<double>& coeffs, cd z) {
  cd acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Aberth-Ehrlich simultaneous iteration from deterministic initial guesses.
std::vector<cd> aberth(const PolyZ& p, double init_radius) {
  long deg = p.degree();
  std::vector<double> c, dc;
  for (const auto& x : p.coeffs()) c.push_back(x.get_d());
  for (const auto& x : p.derivative().coeffs()) dc.push_back(x.get_d());
  std::vector<cd> z(static_cast<std::size_t>(deg));
  for (long i = 0; i < deg; ++i) {
    double theta = 2.0 * M_PI * (static_cast<double>(i) + 0.3579) / static_cast<double>(deg);
    z[static_cast<std::size_t>(i)] = std::polar(init_radius, theta);
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      cd pv = horner(c, z[i]);
      cd dv = horner(dc, z[i]);
      if (dv == cd(0)) continue;
      cd w = pv / dv;
      cd s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) s += cd(1) / (z[i] - z[j]);
      cd corr = w / (cd(1) - w * s);
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

struct CertifiedRoot {
  Rat re, im;   // dyadic center
  Rat radius;   // certified: the disk contains at least one root
  bool exact_one = false;
};

// Upper bound of deg * |p(z)/p'(z)| at an exact rational point.
Rat correction_radius(const PolyZ& p, const PolyZ& dp, const Rat& re, const Rat& im,
                      int bits) {
  auto [pr, pi] = p.eval_complex(re, im);
  auto [dr, di] = dp.eval_complex(re, im);
  Rat num = pr * pr + pi * pi;
  Rat den = dr * dr + di * di;
  if (den == 0) throw precision_exhausted("derivative vanished at candidate root");
  Enclosure ratio = enc_root_of_rat(num / den, 2, bits);
  return ratio.hi * p.degree();
}

}  // namespace

CharSystem char_system(long k, int prec) {
  if (k < 1) throw invalid_parameter("k must be at least 1");
  CharSystem sys;
  sys.k = k;
  sys.p_poly = char_poly(k);
  sys.q_poly = char_poly_q(k);

  PolyZ z_minus_1(std::vector<Int>{Int(-1), Int(1)});
  sys.identity_factored = (z_minus_1 * sys.p_poly == sys.q_poly);
  if (!sys.identity_factored)
    throw internal_invariant_violation("q != (z-1) p");
  if (sys.p_poly.eval(Rat(1)) != 0)
    throw internal_invariant_violation("1 is not a root of p");

  // Simplicity: gcd(q, q') must be a power of (z-1); with the double root at
  // 1 that power is exactly one, so no other root is shared.
  {
    PolyQ g = poly_gcd(PolyQ(sys.q_poly), PolyQ(sys.q_poly.derivative()));
    PolyQ lin(std::vector<Rat>{Rat(-1), Rat(1)});
    long power = 0;
    while (g.degree() >= 1 && g.eval(Rat(1)) == 0) {
      g = g.div_exact(lin);
      ++power;
    }
    sys.shared_root_power = power;
    sys.simplicity_certified = (power == 1 && g.degree() == 0);
  }

  if (k == 1) {
    sys.roots = {CEnclosure(Rat(1))};
    sys.root_moduli = {Enclosure(Rat(1))};
    sys.max_non1_modulus = Enclosure(Rat(0));
    sys.unit_disk_certified = true;
    return sys;
  }

  PolyZ dp = sys.p_poly.derivative();
  const double radii[] = {0.85, 0.6, 0.95};
  const int polish_bits[] = {384, 768, 1536};
  std::string failure;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<cd> approx = aberth(sys.p_poly, radii[attempt]);
    int bits = polish_bits[attempt];
    std::vector<CertifiedRoot> roots;
    bool have_one = false;
    for (const cd& z0 : approx) {
      CertifiedRoot r;
      if (std::abs(z0 - cd(1.0, 0.0)) < 1e-3 && !have_one) {
        r.re = Rat(1);
        r.im = Rat(0);
        r.radius = Rat(0);
        r.exact_one = true;
        have_one = true;
        roots.push_back(std::move(r));
        continue;
      }
      Rat re(round_down(Rat(z0.real()), 64)), im(round_down(Rat(z0.imag()), 64));
      for (int it = 0; it < 3 + attempt * 2; ++it) {
        auto [pr, pi] = sys.p_poly.eval_complex(re, im);
        auto [dr, di] = dp.eval_complex(re, im);
        Rat den = dr * dr + di * di;
        if (den == 0) break;
        // z -= p/p' in exact rational arithmetic, then re-round.
        Rat wr = (pr * dr + pi * di) / den;
        Rat wi = (pi * dr - pr * di) / den;
        re = round_down(re - wr, bits);
        im = round_down(im - wi, bits);
      }
      r.re = re;
      r.im = im;
      r.radius = correction_radius(sys.p_poly, dp, re, im, 96);
      roots.push_back(std::move(r));
    }

    if (!have_one || static_cast<long>(roots.size()) != k) {
      failure = "root-1 identification failed";
      continue;
    }

    // Deterministic order: the exact root 1 first, then by descending real
    // part, ties by ascending imaginary part.
    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
      if (a.exact_one != b.exact_one) return a.exact_one;
      if (a.re != b.re) return a.re > b.re;
      return a.im < b.im;
    });

    // Pairwise disjoint disks: with one disk per root of a degree-k
    // polynomial and at least one root inside each, every disk holds exactly
    // one, so the isolation is complete.
    bool disjoint = true;
    for (std::size_t i = 0; i < roots.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < roots.size() && disjoint; ++j) {
        Rat dx = roots[i].re - roots[j].re, dy = roots[i].im - roots[j].im;
        Rat rr = roots[i].radius + roots[j].radius;
        if (dx * dx + dy * dy <= rr * rr) disjoint = false;
      }
    if (!disjoint) {
      failure = "root disks overlap";
      continue;
    }

    bool inside = true;
    std::vector<Enclosure> moduli;
    for (const auto& r : roots) {
      if (r.exact_one) {
        moduli.push_back(Enclosure(Rat(1)));
        continue;
      }
      Enclosure center_mod = enc_root_of_rat(r.re * r.re + r.im * r.im, 2, 96);
      Rat lo = center_mod.lo - r.radius;
      if (lo < 0) lo = Rat(0);
      Enclosure mod(lo, center_mod.hi + r.radius);
      if (!(mod.hi < 1)) inside = false;
      moduli.push_back(mod);
    }
    if (!inside) {
      failure = "failed to certify a root strictly inside the unit disk";
      continue;
    }

    sys.roots.clear();
    sys.root_moduli = std::move(moduli);
    Enclosure maxmod(Rat(0));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& r = roots[i];
      sys.roots.emplace_back(Enclosure(r.re - r.radius, r.re + r.radius),
                             Enclosure(r.im - r.radius, r.im + r.radius));
      if (!r.exact_one) maxmod = enc_max(maxmod, sys.root_moduli[i]);
    }
    sys.max_non1_modulus = enc_round(maxmod, prec);
    sys.unit_disk_certified = true;
    return sys;
  }
  throw precision_exhausted("root isolation failed (" + failure +
                            "); retry with higher precision");
}

VandermondeSolution vandermonde_solve(const std::vector<CEnclosure>& nodes,
                                      const std::vector<Rat>& initial, int prec) {
  const std::size_t k = nodes.size();
  if (k == 0 || initial.size() != k)
    throw invalid_parameter("vandermonde needs k nodes and k initial values");
  // Rows: powers 0..k-1 of each node; columns: nodes.
  std::vector<std::vector<CEnclosure>> a(k, std::vector<CEnclosure>(k + 1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c)
      a[r][c] = cenc_pow(nodes[c], static_cast<unsigned long>(r), prec);
    a[r][k] = CEnclosure(initial[r]);
  }

  CEnclosure det(Rat(1));
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    double best = -1;
    for (std::size_t r = col; r < k; ++r) {
      Enclosure m = cenc_mod_sq(a[r][col], prec);
      double mag = rat_to_double(m.lo);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = cenc_neg(det);
    }
    if (cenc_mod_sq(a[col][col], prec).contains(Rat(0)))
      throw precision_exhausted("vandermonde pivot reaches zero at this precision");
    det = cenc_mul(det, a[col][col], prec);
    for (std::size_t r = col + 1; r < k; ++r) {
      CEnclosure f = cenc_div(a[r][col], a[col][col], prec);
      for (std::size_t c = col; c <= k; ++c)
        a[r][c] = cenc_sub(a[r][c], cenc_mul(f, a[col][c], prec), prec);
    }
  }
  std::vector<CEnclosure> x(k, CEnclosure(Rat(0)));
  for (std::size_t ri = k; ri-- > 0;) {
    CEnclosure acc = a[ri][k];
    for (std::size_t c = ri + 1; c < k; ++c)
      acc = cenc_sub(acc, cenc_mul(a[ri][c], x[c], prec), prec);
    x[ri] = cenc_div(acc, a[ri][ri], prec);
  }
  return {std::move(x), det};
}

CEnclosure vandermonde_reconstruct(const VandermondeSolution& sol,
                                   const std::vector<CEnclosure>& nodes,
                                   unsigned long n, int prec) {
  if (sol.coefficients.size() != nodes.size())
    throw invalid_parameter("solution/node size mismatch");
  CEnclosure acc(Rat(0));
  for (std::size_t j = 0; j < nodes.size(); ++j)
    acc = cenc_add(acc, cenc_mul(sol.coefficients[j], cenc_pow(nodes[j], n, prec), prec),
                   prec);
  return acc;
}

std::vector<Rat> recurrence_orbit(long k, const std::vector<Rat>& initial,
                                  unsigned long length) {
  if (k < 1 || initial.size() != static_cast<std::size_t>(k))
    throw invalid_parameter("orbit needs k initial values");
  std::vector<Rat> b = initial;
  while (b.size() < length) {
    Rat s(0);
    for (std::size_t i = b.size() - static_cast<std::size_t>(k); i < b.size(); ++i) s += b[i];
    b.push_back(s / k);
  }
  b.resize(length);
  return b;
}

ContractionReport backward_contraction_experiment(long mean_order,
                                                  const std::vector<Rat>& seed,
                                                  unsigned long steps, int prec) {
  if (mean_order < 2) throw invalid_parameter("mean order must be at least 2");
  if (seed.size() != static_cast<std::size_t>(mean_order))
    throw invalid_parameter("seed must have mean_order entries");
  ContractionReport rep;
  rep.mean_order = mean_order;
  rep.steps = steps;
  rep.certified_rho = char_system(mean_order, prec).max_non1_modulus;

  std::vector<Rat> b =
      recurrence_orbit(mean_order, seed, steps + static_cast<unsigned long>(mean_order));
  rep.diffs.reserve(b.size() - 1);
  bool all_zero = true;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    Rat d = rat_abs(b[i + 1] - b[i]);
    if (d != 0) all_zero = false;
    rep.diffs.push_back(std::move(d));
  }
  rep.constant_seed = all_zero;

  if (!all_zero) {
    // Block least squares on the logarithm of block-L2 difference norms;
    // blocks soak up the phase oscillation of complex root pairs.
    const std::size_t block = 4;
    std::size_t fit_lo = std::min<std::size_t>(30, rep.diffs.size() / 3);
    std::vector<double> xs, ys;
    for (std::size_t j = fit_lo; j + block < rep.diffs.size(); j += block) {
      double e2 = 0;
      for (std::size_t t = j; t < j + block; ++t) {
        double v = rat_to_double(rep.diffs[t]);
        e2 += v * v;
      }
      if (e2 > 0) {
        xs.push_back(static_cast<double>(j));
        ys.push_back(0.5 * std::log(e2));
      }
    }
    if (xs.size() >= 2) {
      double n = static_cast<double>(xs.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
      }
      double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      rep.observed_ratio = std::exp(slope);
    }
  }

  // Expanding direction: x_{t+kappa} = kappa x_t - (x_{t+1} + ... + x_{t+kappa-1}).
  {
    std::vector<Rat> x = seed;
    const unsigned long fwd = 24;
    for (unsigned long t = 0; t < fwd; ++t) {
      std::size_t base = x.size() - static_cast<std::size_t>(mean_order);
      Rat nxt = Rat(mean_order) * x[base];
      for (std::size_t i = base + 1; i < x.size(); ++i) nxt -= x[i];
      x.push_back(nxt);
    }
    double d0 = 0, d1 = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      double d = std::abs(rat_to_double(x[i + 1] - x[i]));
      if (d0 == 0 && d > 0 && i < seed.size()) d0 = d;
      d1 = std::max(d1, d);
    }
    if (d0 > 0 && d1 > 0)
      rep.forward_growth_factor = std::pow(d1 / d0, 1.0 / static_cast<double>(fwd));
  }
  return rep;
}

std::string growth_flag_str(GrowthFlag g) {
  switch (g) {
    case GrowthFlag::none_observed: return "none-observed";
    case GrowthFlag::geometric: return "geometric";
    case GrowthFlag::superexponential: return "superexponential";
    case GrowthFlag::identity_driven: return "identity-driven-divergence";
  }
  return "?";
}

namespace {

// Exact forward extension of the weight recurrence forced by the identity at
// exponent k: every non-constant solution has only expanding non-constant
// modes, so divergence past any fixed factor certifies that no bounded
// two-sided weight sequence can satisfy the identity with this window.
// Returns true when divergence was certified within the step budget.
bool extension_diverges(const BilateralWindow& win, long k) {
  const bool logk = win.kind == BilateralWindow::Kind::log_values;
  std::vector<Rat> a = win.data;
  Rat bound_hi, bound_lo;
  if (logk) {
    bound_hi = Rat(0);
    for (const Rat& v : a) bound_hi = rat_max(bound_hi, rat_abs(v));
    bound_hi += 64;
  } else {
    bound_hi = a[0];
    bound_lo = a[0];
    for (const Rat& v : a) {
      bound_hi = rat_max(bound_hi, v);
      bound_lo = rat_min(bound_lo, v);
    }
    bound_hi *= rat_pow(Rat(2), 64);
    bound_lo /= rat_pow(Rat(2), 64);
  }
  // (k-1) a_n = a_{n+1} + ... + a_{n+k-1}; the next element past the window
  // end is a_{n+k-1} = (k-1) a_n - (a_{n+1} + ... + a_{n+k-2}) with
  // n = len - (k-1) in 0-based terms.
  const unsigned long budget = 4096;
  for (unsigned long t = 0; t < budget; ++t) {
    std::size_t base = a.size() - static_cast<std::size_t>(k - 1);
    if (logk) {
      Rat nxt = Rat(k - 1) * a[base];
      for (std::size_t i = base + 1; i < a.size(); ++i) nxt -= a[i];
      a.push_back(std::move(nxt));
      if (rat_abs(a.back()) > bound_hi) return true;
    } else {
      Rat nxt = rat_pow(a[base], k - 1);
      for (std::size_t i = base + 1; i < a.size(); ++i) nxt /= a[i];
      a.push_back(std::move(nxt));
      if (a.back() > bound_hi || a.back() < bound_lo) return true;
    }
  }
  return false;
}

}  // namespace

Classification classify_shift(const BilateralWindow& win, long k) {
  if (k < 2) throw invalid_parameter("k must be at least 2");
  if (win.size() < 2 * k) throw invalid_parameter("window must have length >= 2k");
  Classification cls;
  cls.k_max = k;
  for (long kk = 2; kk <= k; ++kk) {
    W11Report r = w11_check(win, kk);
    if (r.all_equal && cls.identity_k == 0) {
      cls.identity_holds_some_k = true;
      cls.identity_k = kk;
    }
    cls.per_k.push_back(std::move(r));
  }

  cls.constant_weights = true;
  for (const Rat& v : win.data)
    if (v != win.data.front()) {
      cls.constant_weights = false;
      break;
    }

  cls.sup_is_log = win.kind == BilateralWindow::Kind::log_values;
  cls.sup_value = win.data.front();
  for (const Rat& v : win.data) cls.sup_value = rat_max(cls.sup_value, v);

  if (cls.constant_weights) {
    cls.growth = GrowthFlag::none_observed;
  } else if (cls.identity_holds_some_k) {
    if (extension_diverges(win, cls.identity_k)) {
      cls.growth = GrowthFlag::identity_driven;
    } else {
      throw precision_exhausted(
          "identity holds on a non-constant window but the divergence budget "
          "was exhausted; raise the extension budget");
    }
  } else {
    // Report-only heuristics.
    std::vector<double> logs;
    for (const Rat& v : win.data)
      logs.push_back(cls.sup_is_log ? rat_to_double(v) : std::log(rat_to_double(v)));
    double n = static_cast<double>(logs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      double xi = static_cast<double>(i);
      sx += xi;
      sy += logs[i];
      sxx += xi * xi;
      sxy += xi * logs[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double dmax_l = 0, dmax_r = 0;
    for (std::size_t i = 0; i + 1 < logs.size(); ++i) {
      double d = std::abs(logs[i + 1] - logs[i]);
      if (i < logs.size() / 2) dmax_l = std::max(dmax_l, d);
      else dmax_r = std::max(dmax_r, d);
    }
    if (dmax_r > 4 * dmax_l && dmax_r > 1)
      cls.growth = GrowthFlag::superexponential;
    else if (std::abs(slope) > 0.05)
      cls.growth = GrowthFlag::geometric;
    else
      cls.growth = GrowthFlag::none_observed;
  }

  std::ostringstream v;
  if (cls.identity_holds_some_k && cls.constant_weights) {
    v << "consistent: constant weights (a multiple of a unitary; quasinormal)";
  } else if (cls.identity_holds_some_k) {
    if (cls.growth == GrowthFlag::none_observed)
      throw internal_invariant_violation(
          "identity holds on a bounded-looking non-constant window");
    v << "identity holds at k = " << cls.identity_k
      << " but the weight recurrence diverges: bounded-shift rigidity inapplicable "
         "(no bounded two-sided extension exists)";
  } else {
    v << "identity fails on the window for every k in 2.." << k;
  }
  cls.verdict = v.str();
  return cls;
}

}  // namespace shiftlab
