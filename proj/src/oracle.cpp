#include "shiftlab/oracle.hpp"

#include "shiftlab/shift_op.hpp"

#include <iterator>
#include <sstream>

namespace shiftlab {

namespace {

// Normalizes a term: perfect-square radicands fold into the coefficient.
SqrtSum::Term normalize_term(Rat coeff, Rat radicand) {
  if (radicand <= 0) throw invalid_parameter("sqrt term needs a positive radicand");
  if (auto root = rational_kth_root_exact(radicand, 2)) {
    coeff *= *root;
    radicand = 1;
  }
  return {std::move(coeff), std::move(radicand)};
}

}  // namespace

SqrtSum SqrtSum::of_rat(const Rat& r) {
  SqrtSum s;
  if (r != 0) s.terms.push_back({r, Rat(1)});
  return s;
}

SqrtSum SqrtSum::sqrt_of(const Rat& radicand) {
  if (radicand < 0) throw invalid_parameter("sqrt of negative rational");
  SqrtSum s;
  if (radicand != 0) s.terms.push_back(normalize_term(Rat(1), radicand));
  return s;
}

bool SqrtSum::is_rational() const {
  return terms.empty() || (terms.size() == 1 && terms[0].radicand == 1);
}

Rat SqrtSum::as_rat() const {
  if (terms.empty()) return Rat(0);
  if (!is_rational()) throw invalid_parameter("sqrt sum is not rational");
  return terms[0].coeff;
}

Enclosure SqrtSum::enclose(int prec) const {
  Enclosure acc{Rat(0)};
  for (const auto& t : terms) {
    Enclosure root = enc_root_of_rat(t.radicand, 2, prec);
    acc = enc_add(acc, enc_scale(root, t.coeff, prec), prec);
  }
  return acc;
}

std::string SqrtSum::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    if (terms[i].radicand == 1) os << rat_str(terms[i].coeff);
    else os << rat_str(terms[i].coeff) << "*sqrt(" << rat_str(terms[i].radicand) << ")";
  }
  return os.str();
}

SqrtSum sqrt_add(const SqrtSum& a, const SqrtSum& b) {
  SqrtSum out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && a.terms[i].radicand < b.terms[j].radicand)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].radicand < a.terms[i].radicand) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rat c = a.terms[i].coeff + b.terms[j].coeff;
      if (c != 0) out.terms.push_back({std::move(c), a.terms[i].radicand});
      ++i;
      ++j;
    }
  }
  return out;
}

SqrtSum sqrt_mul(const SqrtSum& a, const SqrtSum& b) {
  SqrtSum out;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      SqrtSum one;
      one.terms.push_back(normalize_term(ta.coeff * tb.coeff, ta.radicand * tb.radicand));
      out = sqrt_add(out, one);
    }
  return out;
}

OracleScalar oracle_add(const OracleScalar& a, const OracleScalar& b, int prec) {
  if (const auto* sa = std::get_if<SqrtSum>(&a))
    if (const auto* sb = std::get_if<SqrtSum>(&b)) return sqrt_add(*sa, *sb);
  return enc_add(oracle_enclose(a, prec), oracle_enclose(b, prec), prec);
}

OracleScalar oracle_mul(const OracleScalar& a, const OracleScalar& b, int prec) {
  if (const auto* sa = std::get_if<SqrtSum>(&a))
    if (const auto* sb = std::get_if<SqrtSum>(&b)) return sqrt_mul(*sa, *sb);
  return enc_mul(oracle_enclose(a, prec), oracle_enclose(b, prec), prec);
}

bool oracle_is_zero(const OracleScalar& a) {
  if (const auto* s = std::get_if<SqrtSum>(&a)) return s->is_zero();
  const auto& e = std::get<Enclosure>(a);
  return e.lo == 0 && e.hi == 0;
}

Enclosure oracle_enclose(const OracleScalar& a, int prec) {
  if (const auto* s = std::get_if<SqrtSum>(&a)) return s->enclose(prec);
  return std::get<Enclosure>(a);
}

void SparseMatrix::set(long row, long col, OracleScalar v) {
  if (row < 0 || row >= dim || col < 0 || col >= dim)
    throw invalid_parameter("sparse index out of range");
  if (oracle_is_zero(v)) return;
  cols[static_cast<std::size_t>(col)][row] = std::move(v);
}

long SparseMatrix::nonzeros() const {
  long n = 0;
  for (const auto& c : cols) n += static_cast<long>(c.size());
  return n;
}

SparseMatrix sp_transpose(const SparseMatrix& a) {
  SparseMatrix t(a.dim);
  for (long c = 0; c < a.dim; ++c)
    for (const auto& [r, v] : a.cols[static_cast<std::size_t>(c)])
      t.cols[static_cast<std::size_t>(r)][c] = v;
  return t;
}

SparseMatrix sp_mul(const SparseMatrix& a, const SparseMatrix& b, int prec) {
  if (a.dim != b.dim) throw invalid_parameter("sparse dimension mismatch");
  SparseMatrix c(a.dim);
  for (long j = 0; j < b.dim; ++j) {
    auto& cj = c.cols[static_cast<std::size_t>(j)];
    for (const auto& [k, bkj] : b.cols[static_cast<std::size_t>(j)]) {
      for (const auto& [i, aik] : a.cols[static_cast<std::size_t>(k)]) {
        OracleScalar prod = oracle_mul(aik, bkj, prec);
        auto it = cj.find(i);
        if (it == cj.end()) cj.emplace(i, std::move(prod));
        else it->second = oracle_add(it->second, prod, prec);
      }
    }
  }
  // Drop exact zeros produced by cancellation.
  for (auto& col : c.cols)
    for (auto it = col.begin(); it != col.end();)
      it = oracle_is_zero(it->second) ? col.erase(it) : std::next(it);
  return c;
}

SparseMatrix shift_matrix(const FiniteTree& t, const WeightAssignment& w, int prec) {
  SparseMatrix m(t.vertex_count());
  for (const auto& u : t.vertices()) {
    long cu = t.index_of(u);
    for (const auto& v : t.children(u)) {
      Scalar sq = w.weight_sq(v);
      OracleScalar entry;
      if (auto r = scalar_exact_rat(sq)) entry = SqrtSum::sqrt_of(*r);
      else entry = enc_sqrt(scalar_enclose(sq, prec), prec);
      m.set(t.index_of(v), cu, std::move(entry));
    }
  }
  return m;
}

MajorantFanTail::MajorantFanTail(long n, Rat q, Rat c)
    : n_(n), q_(std::move(q)), c_(std::move(c)) {
  if (n_ < 2 || q_ <= 0 || q_ >= 1 || c_ <= 0)
    throw invalid_parameter("bad majorant tail parameters");
}

Scalar MajorantFanTail::fan_tail(long beta_depth, long branch_count, int prec) const {
  const long s = n_ - 1 - beta_depth;  // k-exponent in sum_{k>I} k^s q^(k-1)
  const long i = branch_count;
  Rat first = rat_pow(Rat(i + 1), s) * rat_pow(q_, i);  // term at k = I+1
  Rat upper;
  if (s <= 0) {
    // k^s decreasing: tail <= first * (1 + q + q^2 + ...) = first/(1-q).
    upper = first / (1 - q_);
  } else {
    // term ratio <= q * ((I+2)/(I+1))^s =: rho; need rho < 1.
    Rat rho = q_ * rat_pow(Rat(i + 2) / Rat(i + 1), s);
    if (rho >= 1)
      throw precision_exhausted("majorant ratio >= 1: enlarge the truncation");
    upper = first / (1 - rho);
  }
  Enclosure series_tail(Rat(0), upper);
  Enclosure cpow = enc_rat_pow_q(c_, make_rat(beta_depth, n_ - 1), prec);
  return enc_mul(cpow, series_tail, prec);
}

std::string MajorantFanTail::describe() const {
  std::ostringstream os;
  os << "geometric majorant: sum_{k>I} k^(n-1-j) q^(k-1) <= (I+1)^(n-1-j) q^I / (1-rho), "
        "rho = q((I+2)/(I+1))^(n-1-j) for n-1-j > 0, rho = q otherwise; "
        "scaled by c^(j/(n-1)); n = "
     << n_ << ", q = " << rat_str(q_) << ", c = " << rat_str(c_);
  return os.str();
}

namespace {

SparseMatrix sp_pow(const SparseMatrix& a, long e, int prec) {
  if (e < 1) throw invalid_parameter("matrix power needs e >= 1");
  SparseMatrix acc = a;
  for (long i = 1; i < e; ++i) acc = sp_mul(acc, a, prec);
  return acc;
}

Enclosure diagonal_entry(const SparseMatrix& m, long idx, int prec) {
  const auto& col = m.cols[static_cast<std::size_t>(idx)];
  auto it = col.find(idx);
  if (it == col.end()) return Enclosure(Rat(0));
  return oracle_enclose(it->second, prec);
}

// Product of gamma_sq(0..i-1) as an enclosure (the spine prefix of a path
// through the branching vertex).
Enclosure gamma_prefix(const WeightAssignment& w, long i, int prec) {
  Enclosure acc{Rat(1)};
  for (long tshift = 0; tshift < i; ++tshift)
    acc = enc_mul(acc, scalar_enclose(w.gamma_sq(tshift), prec), prec);
  return acc;
}

}  // namespace

OracleReport product_compare(const FiniteTree& t, const WeightAssignment& w, long m,
                             const TailProvider& oracle_tails,
                             const TailProvider& closed_form_tails, int prec) {
  if (m < 1) throw invalid_parameter("exponent m must be >= 1");
  OracleReport rep;
  rep.m = m;
  rep.spine_depth = t.spine_depth();
  rep.branch_count = t.branch_count();
  rep.branch_length = t.branch_length();
  rep.precision = prec;
  rep.tail_description = oracle_tails.describe();

  std::vector<Vertex> interior = interior_vertices_with_fan_tail(t, m);
  if (interior.empty()) throw invalid_parameter("interior set empty for this radius");

  SparseMatrix M = shift_matrix(t, w, prec);
  rep.exact_entries = true;
  for (const auto& col : M.cols)
    for (const auto& [r, v] : col)
      if (!std::holds_alternative<SqrtSum>(v)) rep.exact_entries = false;

  SparseMatrix Mt = sp_transpose(M);
  SparseMatrix MtM = sp_mul(Mt, M, prec);
  SparseMatrix G = sp_pow(MtM, m, prec);
  SparseMatrix Pm = sp_pow(M, m, prec);
  SparseMatrix H = sp_mul(sp_transpose(Pm), Pm, prec);

  // Diagonality on the interior: no off-diagonal entry may touch an
  // interior index (distinct descendant cones cannot overlap in a tree; a
  // violation is an implementation bug, not a math event).
  rep.products_diagonal = true;
  std::vector<bool> is_interior(static_cast<std::size_t>(t.vertex_count()), false);
  for (const auto& u : interior) is_interior[static_cast<std::size_t>(t.index_of(u))] = true;
  for (const SparseMatrix* mat : {&G, &H}) {
    for (long c = 0; c < mat->dim; ++c)
      for (const auto& [r, v] : mat->cols[static_cast<std::size_t>(c)])
        if (r != c &&
            (is_interior[static_cast<std::size_t>(r)] || is_interior[static_cast<std::size_t>(c)]))
          rep.products_diagonal = false;
  }
  if (!rep.products_diagonal)
    throw internal_invariant_violation("operator products not diagonal on the interior");

  for (const auto& u : interior) {
    OracleVertexRow row;
    row.u = u;
    long idx = t.index_of(u);
    Enclosure g = diagonal_entry(G, idx, prec);
    Enclosure h = diagonal_entry(H, idx, prec);

    // Fan-tail corrections. G's base local sum misses the fan tail only at
    // the branching vertex itself; H's path sum misses it at Spine(i) for
    // i < m (paths that run through the branching vertex).
    if (u.is_branching_vertex()) {
      Enclosure tail0 = scalar_enclose(oracle_tails.fan_tail(0, t.branch_count(), prec), prec);
      Enclosure base = enc_add(diagonal_entry(MtM, idx, prec), tail0, prec);
      g = enc_pow(base, m, prec);
    }
    if (u.is_spine() && u.i < m) {
      long depth = m - u.i - 1;
      Enclosure tail =
          scalar_enclose(oracle_tails.fan_tail(depth, t.branch_count(), prec), prec);
      Enclosure prefix = gamma_prefix(w, u.i, prec);
      h = enc_add(h, enc_mul(prefix, tail, prec), prec);
    }
    row.lhs = g;
    row.rhs = h;
    if (enc_disjoint(g, h)) {
      row.verdict = Verdict::separated_by;
      row.gap = enc_gap(g, h);
    } else {
      row.verdict = Verdict::equal_within;
      row.width = enc_hull(g, h).width();
    }

    // Closed-path concordance (the symbolic route with its own exact tails).
    Scalar closed_l =
        scalar_pow_int(local_square_sum(t, w, u, &closed_form_tails, prec), m, prec);
    Scalar closed_r = iterated_norm_sq(t, w, u, m, &closed_form_tails, prec);
    row.closed_lhs = scalar_enclose(closed_l, prec);
    row.closed_rhs = scalar_enclose(closed_r, prec);
    row.concordant = enc_overlap(row.lhs, row.closed_lhs) && enc_overlap(row.rhs, row.closed_rhs);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace shiftlab
