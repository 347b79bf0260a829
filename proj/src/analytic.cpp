#include "eqlv/analytic.hpp"

#include <algorithm>
#include <sstream>

namespace eqlv {

RatMat ratmat_identity(const FieldPtr& k, int n) {
  RatMat I(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc::zero(k)));
  for (int i = 0; i < n; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RatFunc::one(k);
  return I;
}

RatMat ratmat_from(const PolyMat& A) {
  RatMat r;
  for (const auto& row : A) {
    r.emplace_back();
    for (const auto& x : row) r.back().emplace_back(x);
  }
  return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  const auto n = a.size(), m = b.front().size(), l = b.size();
  const FieldPtr& k = b.front().front().field();
  RatMat r(n, std::vector<RatFunc>(m, RatFunc::zero(k)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t s = 0; s < l; ++s)
        if (!a[i][s].is_zero() && !b[s][j].is_zero()) r[i][j] = r[i][j] + a[i][s] * b[s][j];
  return r;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  RatMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] + b[i][j];
  return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  RatMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] - b[i][j];
  return r;
}

bool is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

RatMat twist(const RatMat& a, long long k) {
  RatMat r = a;
  for (auto& row : r)
    for (auto& x : row) x = x.compose_power(static_cast<int>(k));
  return r;
}

std::vector<RatFunc> ratmat_solve(RatMat A, std::vector<RatFunc> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col].is_zero()) ++piv;
    if (piv == n) throw TModuleError("singular system over k(t)");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    const RatFunc inv = A[col][col].inv();
    for (std::size_t j = col; j < n; ++j) A[col][j] = A[col][j] * inv;
    b[col] = b[col] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || A[i][col].is_zero()) continue;
      const RatFunc f = A[i][col];
      for (std::size_t j = col; j < n; ++j) A[i][j] = A[i][j] - f * A[col][j];
      b[i] = b[i] - f * b[col];
    }
  }
  return b;
}

namespace {

long long qpow(long long q, int s) {
  long long r = 1;
  for (int i = 0; i < s; ++i) r *= q;
  return r;
}

int max_degree(const RatMat& a) {
  int d = -(1 << 28);
  for (const auto& row : a)
    for (const auto& x : row) d = std::max(d, x.degree());
  return d;
}

}  // namespace

ExpSeries::ExpSeries(TModule E, int S) : E_(std::move(E)) {
  E_.validate();
  e_.push_back(ratmat_identity(E_.k, E_.n));
  deg_.push_back(0);
  extend_to(S);
}

int ExpSeries::degree(int s) const { return deg_.at(static_cast<std::size_t>(s)); }

// e_i A_0^{(q^i)} - A_0 e_i = sum_{s=1}^{min(i,r)} A_s e_{i-s}^{(q^s)}, solved
// as a Sylvester system over k(t).
void ExpSeries::extend_to(int S) {
  const auto n = static_cast<std::size_t>(E_.n);
  const long long q = E_.k->card();
  const RatMat A0 = ratmat_from(E_.A[0]);
  while (order() < S) {
    const int i = order() + 1;
    RatMat R(n, std::vector<RatFunc>(n, RatFunc::zero(E_.k)));
    for (int s = 1; s <= std::min(i, E_.r()); ++s)
      R = R + ratmat_from(E_.A[static_cast<std::size_t>(s)]) * twist(e_[static_cast<std::size_t>(i - s)], qpow(q, s));
    const RatMat Aq = twist(A0, qpow(q, i));
    // vec index j*n + r (column-major)
    RatMat M(n * n, std::vector<RatFunc>(n * n, RatFunc::zero(E_.k)));
    std::vector<RatFunc> rhs(n * n, RatFunc::zero(E_.k));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row = j * n + r;
        rhs[row] = R[r][j];
        for (std::size_t j2 = 0; j2 < n; ++j2) M[row][j2 * n + r] = M[row][j2 * n + r] + Aq[j2][j];
        for (std::size_t r2 = 0; r2 < n; ++r2) M[row][j * n + r2] = M[row][j * n + r2] - A0[r][r2];
      }
    const auto x = ratmat_solve(M, rhs);
    RatMat e(n, std::vector<RatFunc>(n, RatFunc::zero(E_.k)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) e[r][j] = x[j * n + r];
    deg_.push_back(max_degree(e));
    e_.push_back(std::move(e));
  }
}

ExpSeries exp_coeffs(const TModule& E, int S) { return ExpSeries(E, S); }

std::vector<RatMat> log_coeffs(const ExpSeries& es, int S) {
  if (es.order() < S) throw TModuleError("exp series too short for the requested log order");
  const long long q = es.module().k->card();
  const int n = es.module().n;
  std::vector<RatMat> l{ratmat_identity(es.module().k, n)};
  for (int m = 1; m <= S; ++m) {
    RatMat acc(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc::zero(es.module().k)));
    for (int i = 0; i < m; ++i) acc = acc - l[static_cast<std::size_t>(i)] * twist(es.coeff(m - i), qpow(q, i));
    l.push_back(std::move(acc));
  }
  return l;
}

RatMat functional_equation_residual(const ExpSeries& es, int i) {
  const TModule& E = es.module();
  const long long q = E.k->card();
  RatMat r = es.coeff(i) * twist(ratmat_from(E.A[0]), qpow(q, i));
  for (int s = 0; s <= std::min(i, E.r()); ++s)
    r = r - ratmat_from(E.A[static_cast<std::size_t>(s)]) * twist(es.coeff(i - s), qpow(q, s));
  return r;
}

RatMat log_exp_coefficient(const ExpSeries& es, const std::vector<RatMat>& l, int m) {
  const long long q = es.module().k->card();
  RatMat r = l[static_cast<std::size_t>(m)];
  for (int i = 0; i < m; ++i) r = r + l[static_cast<std::size_t>(i)] * twist(es.coeff(m - i), qpow(q, i));
  return r;
}

RatMat exp_log_coefficient(const ExpSeries& es, const std::vector<RatMat>& l, int m) {
  const long long q = es.module().k->card();
  RatMat r = es.coeff(m);
  for (int i = 0; i < m; ++i) r = r + es.coeff(i) * twist(l[static_cast<std::size_t>(m - i)], qpow(q, i));
  return r;
}

// ---------------------------------------------------------------------------
// L_oo arithmetic in basis coordinates

std::vector<Laurent> qpower_coords(const GaloisContext& ctx, const std::vector<Laurent>& y) {
  const int g = ctx.degree;
  const int q = static_cast<int>(ctx.k->card());
  std::vector<Laurent> out(static_cast<std::size_t>(g), Laurent::zero(ctx.k));
  for (int j = 0; j < g; ++j) {
    const Laurent& yj = y[static_cast<std::size_t>(j)];
    if (yj.is_zero() && yj.exact()) continue;
    const Laurent yq = yj.compose_power(q);
    for (int i = 0; i < g; ++i) {
      const Poly& c = ctx.frob[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (c.is_zero()) {
        if (!yq.exact()) out[static_cast<std::size_t>(i)] += Laurent::zero(ctx.k, yq.prec());
        continue;
      }
      out[static_cast<std::size_t>(i)] += yq * Laurent::from_poly(c);
    }
  }
  return out;
}

namespace {

std::vector<Laurent> slice(const LVec& v, int c, int g) {
  return {v.begin() + c * g, v.begin() + (c + 1) * g};
}

// y -> y^{(q)} componentwise
LVec qpower_vec(const GaloisContext& ctx, const LVec& y, int n) {
  const int g = ctx.degree;
  LVec out;
  for (int c = 0; c < n; ++c) {
    const auto p = qpower_coords(ctx, slice(y, c, g));
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

// M y for M over k[t]
LVec polymat_apply(const PolyMat& M, const LVec& y, int g, const FieldPtr& k) {
  const int n = static_cast<int>(M.size());
  LVec out(static_cast<std::size_t>(n * g), Laurent::zero(k));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Poly& a = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (a.is_zero()) continue;
      const Laurent al = Laurent::from_poly(a);
      for (int i = 0; i < g; ++i)
        out[static_cast<std::size_t>(r * g + i)] += al * y[static_cast<std::size_t>(c * g + i)];
    }
  return out;
}

int vec_top(const LVec& y) {
  int t = -(1 << 29);
  for (const auto& x : y) t = std::max(t, x.top_bound());
  return t;
}

int vec_prec(const LVec& y) {
  int p = Laurent::kExact;
  for (const auto& x : y) p = std::min(p, x.prec());
  return p;
}

}  // namespace

LVec apply_A0(const TModule& E, const GaloisContext& ctx, const LVec& x) {
  return polymat_apply(E.A[0], x, ctx.degree, E.k);
}

LVec apply_Et(const TModule& E, const GaloisContext& ctx, const LVec& y) {
  LVec out = polymat_apply(E.A[0], y, ctx.degree, E.k);
  LVec yq = y;
  for (int s = 1; s <= E.r(); ++s) {
    yq = qpower_vec(ctx, yq, E.n);
    const LVec term = polymat_apply(E.A[static_cast<std::size_t>(s)], yq, ctx.degree, E.k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
  }
  return out;
}

LVec eval_exp(ExpSeries& es, const GaloisContext& ctx, const LVec& x, int prec, int max_order) {
  const TModule& E = es.module();
  const int g = ctx.degree, n = E.n;
  LVec out(x.size(), Laurent::zero(E.k, prec));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].truncate(std::min(prec, x[i].prec()));
  LVec y = x;
  int quiet = 0;
  for (int s = 1;; ++s) {
    if (s > max_order) {
      std::ostringstream os;
      os << "exp needs more than " << max_order << " terms to reach precision " << prec;
      throw PrecisionError(os.str());
    }
    y = qpower_vec(ctx, y, n);
    es.extend_to(s);
    const int ytop = vec_top(y);
    if (es.degree(s) + ytop < -prec) {
      // negligible; two consecutive negligible terms with the bound falling end the sum
      if (++quiet >= 2) break;
      continue;
    }
    quiet = 0;
    const RatMat& e = es.coeff(s);
    const int need = prec + std::max(0, ytop) + 2;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const RatFunc& a = e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (a.is_zero()) continue;
        const Laurent al = Laurent::expand_rational(a, need);
        for (int i = 0; i < g; ++i) {
          Laurent term = al * y[static_cast<std::size_t>(c * g + i)];
          out[static_cast<std::size_t>(r * g + i)] += term.truncate(prec);
        }
      }
  }
  for (auto& v : out) v = v.truncate(prec);
  (void)vec_prec;
  return out;
}

// ---------------------------------------------------------------------------
// Lattices

Lattice standard_lattice(const FieldPtr& F, int n) {
  Lattice L{F, n, {}, {}, Laurent::kExact};
  for (int i = 0; i < n; ++i) {
    std::vector<Laurent> v(static_cast<std::size_t>(n), Laurent::zero(F));
    v[static_cast<std::size_t>(i)] = Laurent::one(F);
    L.gens.push_back(v);
    L.degrees.push_back(0);
  }
  return L;
}

namespace {

// binomial(e, k) for any integer e, reduced mod p
Elem binom_mod(const FieldPtr& F, long long e, int k) {
  long long c = 1;
  for (int j = 0; j < k; ++j) c = c * (e - j) / (j + 1);
  return F->from_int(c);
}

// Hasse derivative D_k
Laurent hasse(const Laurent& x, int k) {
  if (k == 0 || x.is_zero()) return x;
  const FieldPtr& F = x.field();
  std::vector<Elem> c;
  const int top = x.top();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const long long e = top - static_cast<long long>(i);
    c.push_back(F->mul(x.coeffs()[i], binom_mod(F, e, k)));
  }
  return Laurent::from_coeffs(F, top - k, std::move(c), x.exact() ? Laurent::kExact : x.prec() + k);
}

// N = A_0 - t, required constant in t
Mat nilpotent_part(const TModule& E) {
  Mat N(E.k, E.n, E.n);
  for (int r = 0; r < E.n; ++r)
    for (int c = 0; c < E.n; ++c) {
      Poly a = E.A[0][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (r == c) a = a - Poly::t(E.k);
      if (a.degree() > 0) throw TModuleError("A_0 - t must be constant for lattice computations");
      N.at(r, c) = a.coeff(0);
    }
  return N;
}

std::vector<Laurent> mat_apply(const Mat& N, const std::vector<Laurent>& v, const FieldPtr& F) {
  std::vector<Laurent> out(v.size(), Laurent::zero(F));
  for (int r = 0; r < N.rows(); ++r)
    for (int c = 0; c < N.cols(); ++c)
      if (N.at(r, c).v) out[static_cast<std::size_t>(r)] += v[static_cast<std::size_t>(c)].scale(N.at(r, c));
  return out;
}

}  // namespace

// f with sum_k N^k D_k f = z; the fixed-point iteration is exact after n steps.
std::vector<Laurent> untwist(const TModule& E, const std::vector<Laurent>& z) {
  if (z.empty()) return z;
  const FieldPtr& F = z.front().field();
  const Mat N = nilpotent_part(E).lift(F);
  if (N.is_zero()) return z;
  std::vector<Laurent> f = z;
  for (int it = 0; it < E.n; ++it) {
    std::vector<Laurent> next = z;
    Mat Nk = N;
    for (int k = 1; k < E.n; ++k) {
      std::vector<Laurent> d;
      for (const auto& x : f) d.push_back(hasse(x, k));
      const auto corr = mat_apply(Nk, d, F);
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= corr[i];
      Nk = Nk * N;
    }
    f = std::move(next);
  }
  return f;
}

namespace {

Laurent lattice_det(const TModule& E, const Lattice& L) {
  LaurentMat M(static_cast<std::size_t>(L.n), std::vector<Laurent>(static_cast<std::size_t>(L.n)));
  for (int i = 0; i < L.n; ++i) {
    const auto f = untwist(E, L.gens[static_cast<std::size_t>(i)]);
    for (int c = 0; c < L.n; ++c) M[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(c)];
  }
  return det(M);
}

}  // namespace

Laurent lattice_index(const TModule& E, const Lattice& L1, const Lattice& L2) {
  const Laurent d1 = lattice_det(E, L1), d2 = lattice_det(E, L2);
  if (d1.exact() && d2.exact() && d1.coeffs().size() == 1) return (d2 * Laurent::monomial(d1.field(), d1.field()->inv(d1.lead()), -d1.top())).monic();
  const int bound = std::min({d2.prec(), L1.prec, L2.prec, 256});
  return (d2 * d1.inv(bound + std::max(0, d1.top()))).monic();
}

// ---------------------------------------------------------------------------
// Unit lattice and class module on a truncated box

namespace {

struct BoxResult {
  bool ok = false;
  std::string note;
  std::vector<Lattice> unit;
  std::vector<Laurent> index;
  int class_dim = 0;
  Mat t_action;
  std::vector<Mat> g_action;
  std::vector<Poly> class_charpoly;
  int kernel_dim = 0, tail_dim = 0;
};

struct Setup {
  const TModule& E;
  const GaloisContext& ctx;
  const CharacterTable& ct;
  // w[chi][i]: chi-coordinate of basis element b_i, a polynomial over F'
  std::vector<std::vector<Poly>> w;
  int wdeg = 0;
};

std::vector<std::vector<Poly>> chi_weights(const GaloisContext& ctx, const CharacterTable& ct) {
  const int g = ctx.degree;
  std::vector<Elem> theta{ctx.k->one()};
  if (g > 1) {
    auto nb = normal_integral_basis(ctx);
    if (!nb) throw ContextError("no normal integral basis found; equivariant analytic side unsupported");
    theta = *nb;
  } else {
    theta.clear();
    for (const auto& c : ctx.one) theta.push_back(c.coeff(0));
  }
  PolyVec th;
  for (const auto& c : theta) th.push_back(Poly::constant(ctx.k, c));
  // columns g.theta, expressed in the basis b
  RatMat Nb(static_cast<std::size_t>(g), std::vector<RatFunc>(static_cast<std::size_t>(g), RatFunc::zero(ctx.k)));
  for (int h = 0; h < g; ++h) {
    const PolyVec col = ctx.apply(h, th);
    for (int i = 0; i < g; ++i) Nb[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] = RatFunc(col[static_cast<std::size_t>(i)]);
  }
  // Ninv[h][i]: coordinate along h.theta of b_i
  std::vector<std::vector<Poly>> Ninv(static_cast<std::size_t>(g), std::vector<Poly>(static_cast<std::size_t>(g), Poly(ctx.k)));
  for (int i = 0; i < g; ++i) {
    std::vector<RatFunc> e(static_cast<std::size_t>(g), RatFunc::zero(ctx.k));
    e[static_cast<std::size_t>(i)] = RatFunc::one(ctx.k);
    const auto x = ratmat_solve(Nb, e);
    for (int h = 0; h < g; ++h) {
      const RatFunc& r = x[static_cast<std::size_t>(h)];
      if (r.den().degree() != 0) throw ContextError("normal basis is not integral");
      Ninv[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] = r.num().scale(ctx.k->inv(r.den().lead()));
    }
  }
  std::vector<std::vector<Poly>> w;
  for (int chi = 0; chi < ct.count(); ++chi) {
    w.emplace_back();
    for (int i = 0; i < g; ++i) {
      Poly acc(ct.split);
      for (int h = 0; h < g; ++h)
        acc += Ninv[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)].lift(ct.split).scale(ct.value(chi, h));
      w.back().push_back(acc);
    }
  }
  return w;
}

// Tail coordinates of y: row (-1 - e) * (n g) + coord, for e in [-Nw+1, -1].
std::vector<Elem> tail_vector(const LVec& y, int Nw) {
  const int ng = static_cast<int>(y.size());
  std::vector<Elem> v(static_cast<std::size_t>((Nw - 1) * ng), Elem{0});
  for (int c = 0; c < ng; ++c)
    for (int e = -1; e > -Nw; --e) v[static_cast<std::size_t>((-1 - e) * ng + c)] = y[static_cast<std::size_t>(c)].coeff(e);
  return v;
}

LVec unit_monomial(const FieldPtr& k, int ng, int coord, int e) {
  LVec x(static_cast<std::size_t>(ng), Laurent::zero(k));
  x[static_cast<std::size_t>(coord)] = Laurent::monomial(k, k->one(), e);
  return x;
}

// y -> h(y) in basis coordinates
LVec act_group(const GaloisContext& ctx, int h, const LVec& y, int n) {
  const int g = ctx.degree;
  LVec out(y.size(), Laurent::zero(ctx.k));
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < g; ++j) {
      const Laurent& yj = y[static_cast<std::size_t>(c * g + j)];
      if (yj.is_zero()) continue;
      for (int i = 0; i < g; ++i) {
        const Poly& a = ctx.action[static_cast<std::size_t>(h)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (!a.is_zero()) out[static_cast<std::size_t>(c * g + i)] += yj * Laurent::from_poly(a);
      }
    }
  return out;
}

BoxResult run_box(ExpSeries& es, const Setup& S, int D, int Nw) {
  const TModule& E = S.E;
  const GaloisContext& ctx = S.ctx;
  const CharacterTable& ct = S.ct;
  const FieldPtr& k = ctx.k;
  const int n = E.n, g = ctx.degree, ng = n * g;
  const int width = D + Nw;  // degrees D .. -Nw+1
  BoxResult R;

  // phi: box -> tails; variable (coord, e) at column coord * width + (D - e)
  Mat phi(k, (Nw - 1) * ng, ng * width);
  for (int coord = 0; coord < ng; ++coord)
    for (int e = D; e > -Nw; --e) {
      const LVec y = eval_exp(es, ctx, unit_monomial(k, ng, coord, e), Nw);
      const auto v = tail_vector(y, Nw);
      for (std::size_t r = 0; r < v.size(); ++r) phi.at(static_cast<int>(r), coord * width + (D - e)) = v[r];
    }
  const Mat K = phi.kernel();
  R.kernel_dim = K.cols();
  R.tail_dim = phi.rows();

  // per character: project, then extract a degree-greedy basis
  const int Dc = D + S.wdeg, Pc = Nw - S.wdeg;
  const int wc = Dc + Pc;
  const FieldPtr& Fp = ct.split;
  const Field& F = *Fp;
  for (int chi = 0; chi < ct.count(); ++chi) {
    // rows: vectors, column (Dc - e) * n + c
    Mat V(Fp, K.cols(), wc * n);
    for (int col = 0; col < K.cols(); ++col)
      for (int c = 0; c < n; ++c)
        for (int i = 0; i < g; ++i) {
          const Poly& wi = S.w[static_cast<std::size_t>(chi)][static_cast<std::size_t>(i)];
          if (wi.is_zero()) continue;
          for (int e = D; e > -Nw; --e) {
            const Elem x = K.at((c * g + i) * width + (D - e), col);
            if (!x.v) continue;
            for (int d = 0; d <= wi.degree(); ++d) {
              const int ee = e + d;
              if (ee <= -Pc) continue;
              Elem& slot = V.at(col, (Dc - ee) * n + c);
              slot = F.add(slot, F.mul(x, wi.coeff(d)));
            }
          }
        }
    const auto piv = rref(V);
    const int rk = static_cast<int>(piv.size());
    auto level = [&](int r) { return Dc - piv[static_cast<std::size_t>(r)] / n; };
    auto lead = [&](int r) {
      std::vector<Elem> v(static_cast<std::size_t>(n));
      const int base = (Dc - level(r)) * n;
      for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] = V.at(r, base + c);
      return v;
    };
    std::vector<std::vector<Elem>> chosen_lv;
    std::vector<int> chosen_rows;
    Mat prev_lv(Fp, n, 0);
    bool monotone = true;
    for (int delta = -Pc + 1; delta <= Dc; ++delta) {
      std::vector<std::vector<Elem>> lvs;
      for (int r = 0; r < rk; ++r)
        if (level(r) == delta) lvs.push_back(lead(r));
      const Mat here = Mat::from_columns(Fp, n, lvs);
      if (prev_lv.cols() > 0 && hcat(here, prev_lv).rank() != here.cols()) monotone = false;
      for (int r = 0; r < rk; ++r) {
        if (level(r) != delta) continue;
        auto trial = chosen_lv;
        trial.push_back(lead(r));
        if (Mat::from_columns(Fp, n, trial).rank() == static_cast<int>(trial.size())) {
          chosen_lv = std::move(trial);
          chosen_rows.push_back(r);
        }
      }
      if (here.cols() > 0) prev_lv = here;
    }
    if (!monotone) {
      R.note = "leading spaces of the truncated lattice are not nested";
      return R;
    }
    if (static_cast<int>(chosen_rows.size()) != n) {
      R.note = "truncated unit lattice has rank < n at this degree bound";
      return R;
    }
    Lattice L{Fp, n, {}, {}, Pc};
    for (int r : chosen_rows) {
      std::vector<Laurent> v;
      for (int c = 0; c < n; ++c) {
        std::vector<Elem> coeffs;
        for (int e = Dc; e > -Pc; --e) coeffs.push_back(V.at(r, (Dc - e) * n + c));
        v.push_back(Laurent::from_coeffs(Fp, Dc, coeffs, Pc));
      }
      L.gens.push_back(std::move(v));
      L.degrees.push_back(level(r));
    }
    // stability under t acting as A_0, compared one degree less precisely
    const Mat Nl = nilpotent_part(E).lift(Fp);
    Mat Vcut(Fp, rk, (wc - 1) * n);
    for (int r = 0; r < rk; ++r)
      for (int j = 0; j < (wc - 1) * n; ++j) Vcut.at(r, j) = V.at(r, j);
    const Mat Kc = Vcut.transpose();
    for (std::size_t gi = 0; gi < L.gens.size(); ++gi) {
      if (L.degrees[gi] >= Dc) continue;
      std::vector<Laurent> tv;
      const auto Nv = mat_apply(Nl, L.gens[gi], Fp);
      for (int c = 0; c < n; ++c) tv.push_back(L.gens[gi][static_cast<std::size_t>(c)].shift(1) + Nv[static_cast<std::size_t>(c)]);
      std::vector<Elem> col;
      for (int e = Dc; e > -Pc + 1; --e)
        for (int c = 0; c < n; ++c) col.push_back(tv[static_cast<std::size_t>(c)].coeff(e));
      if (!Kc.solve(col)) {
        R.note = "truncated unit lattice is not stable under t";
        return R;
      }
    }
    R.index.push_back(lattice_det(E, L).monic());
    R.unit.push_back(std::move(L));
  }

  // class module: tails modulo the image of exp
  const Mat im = phi.column_basis();
  const int T = phi.rows();
  std::vector<int> comp;  // complement: unit vectors, highest degree first
  {
    Mat span = im;
    for (int r = 0; r < T; ++r) {
      std::vector<Elem> u(static_cast<std::size_t>(T), Elem{0});
      u[static_cast<std::size_t>(r)] = k->one();
      Mat trial = hcat(span, Mat::from_columns(k, T, {u}));
      if (trial.rank() > span.cols()) {
        span = trial;
        comp.push_back(r);
      }
    }
  }
  R.class_dim = static_cast<int>(comp.size());
  for (int r : comp)
    if (r / ng + 1 > Nw - 3) {
      R.note = "class module reaches the bottom of the working precision";
      return R;
    }
  Mat basis = im;
  for (int r : comp) {
    std::vector<Elem> u(static_cast<std::size_t>(T), Elem{0});
    u[static_cast<std::size_t>(r)] = k->one();
    basis = hcat(basis, Mat::from_columns(k, T, {u}));
  }
  const int h = R.class_dim;
  auto reduce = [&](const LVec& y) {
    const auto v = tail_vector(y, Nw);
    const auto a = basis.solve(v);
    std::vector<Elem> out(static_cast<std::size_t>(h));
    for (int j = 0; j < h; ++j) out[static_cast<std::size_t>(j)] = (*a)[static_cast<std::size_t>(im.cols() + j)];
    return out;
  };
  auto rep = [&](int j) {
    const int r = comp[static_cast<std::size_t>(j)];
    return unit_monomial(k, ng, r % ng, -1 - r / ng);
  };
  R.t_action = Mat(k, h, h);
  for (int j = 0; j < h; ++j) {
    const auto col = reduce(apply_Et(E, ctx, rep(j)));
    for (int i = 0; i < h; ++i) R.t_action.at(i, j) = col[static_cast<std::size_t>(i)];
  }
  for (int x = 0; x < ctx.G.size(); ++x) {
    Mat A(k, h, h);
    for (int j = 0; j < h; ++j) {
      const auto col = reduce(act_group(ctx, x, rep(j), n));
      for (int i = 0; i < h; ++i) A.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    R.g_action.push_back(A);
  }
  if (h == 0)
    R.class_charpoly.assign(static_cast<std::size_t>(ct.count()), Poly::one(Fp));
  else
    R.class_charpoly = charpoly_equivariant(ct, R.g_action, R.t_action, false);
  R.ok = true;
  return R;
}

bool same(const BoxResult& a, const BoxResult& b, int N) {
  if (a.class_charpoly != b.class_charpoly) return false;
  for (std::size_t i = 0; i < a.index.size(); ++i)
    if (!equal_mod(a.index[i], b.index[i], N)) return false;
  return true;
}

}  // namespace

AnalyticSide analytic_side(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct, int N,
                           const AnalyticOptions& opt) {
  E.validate();
  nilpotent_part(E);
  Setup S{E, ctx, ct, chi_weights(ctx, ct), 0};
  for (const auto& row : S.w)
    for (const auto& p : row) S.wdeg = std::max(S.wdeg, p.degree());
  ExpSeries es(E, 1);
  AnalyticSide out;
  int D = opt.degree_start, Nw = N + opt.margin + S.wdeg;
  std::optional<BoxResult> prev;
  int attempts = 0;
  std::string note;
  while (D <= opt.max_degree) {
    BoxResult r = run_box(es, S, D, Nw);
    if (!r.ok) {
      note = r.note;
      prev.reset();
      ++D;
      continue;
    }
    if (prev && same(*prev, r, N)) {
      out.certified = true;
      out.D = D;
      out.Nw = Nw;
      out.unit = std::move(r.unit);
      out.index = std::move(r.index);
      out.class_dim = r.class_dim;
      out.class_t_action = r.t_action;
      out.class_g_action = r.g_action;
      out.class_charpoly = r.class_charpoly;
      out.kernel_dim = r.kernel_dim;
      out.tail_dim = r.tail_dim;
      return out;
    }
    if (prev) {
      note = "results changed under enlargement";
      if (++attempts > opt.enlargements) break;
    }
    prev = std::move(r);
    ++D;
    Nw += 2;
  }
  out.note = note.empty() ? "degree bound exhausted" : note;
  if (prev) {
    out.D = D;
    out.Nw = Nw;
    out.unit = prev->unit;
    out.index = prev->index;
    out.class_dim = prev->class_dim;
    out.class_charpoly = prev->class_charpoly;
  }
  return out;
}

}  // namespace eqlv
