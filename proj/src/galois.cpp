#include "eqlv/galois.hpp"

#include <algorithm>
#include <map>

namespace eqlv {

std::vector<Poly> monic_of_degree(const FieldPtr& k, int d) {
  std::vector<Poly> out;
  const std::uint64_t q = k->card();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
    std::uint64_t x = n;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
    c[static_cast<std::size_t>(d)] = k->one();
    out.emplace_back(k, std::move(c));
  }
  return out;
}

std::vector<Poly> primes_of_degree(const FieldPtr& k, int d) {
  std::vector<Poly> out;
  for (auto& f : monic_of_degree(k, d))
    if (is_irreducible(f)) out.push_back(std::move(f));
  return out;
}

std::vector<Poly> primes_upto(const FieldPtr& k, int D) {
  std::vector<Poly> out;
  for (int d = 1; d <= D; ++d)
    for (auto& f : primes_of_degree(k, d)) out.push_back(std::move(f));
  return out;
}

// ---- context data ----------------------------------------------------------

namespace {

PolyVec zero_vec(const FieldPtr& k, int n) { return PolyVec(static_cast<std::size_t>(n), Poly(k)); }

PolyVec unit_vec(const FieldPtr& k, int n, int i) {
  PolyVec v = zero_vec(k, n);
  v[static_cast<std::size_t>(i)] = Poly::one(k);
  return v;
}

void axpy(PolyVec& y, const Poly& a, const PolyVec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

}  // namespace

std::string GaloisContext::family_name() const {
  switch (family) {
    case Family::Trivial: return "trivial";
    case Family::Constant: return "constant";
    case Family::Cyclotomic: return "cyclotomic";
    case Family::Custom: return "custom";
  }
  return "custom";
}

PolyVec GaloisContext::multiply(const PolyVec& x, const PolyVec& y) const {
  PolyVec r = zero_vec(k, degree);
  for (int i = 0; i < degree; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < degree; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      axpy(r, x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)],
           mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return r;
}

PolyVec GaloisContext::apply(int g, const PolyVec& x) const {
  PolyVec r = zero_vec(k, degree);
  for (int j = 0; j < degree; ++j)
    axpy(r, x[static_cast<std::size_t>(j)], action[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)]);
  return r;
}

PolyVec GaloisContext::qpower(const PolyVec& x) const {
  PolyVec r = zero_vec(k, degree);
  const int q = static_cast<int>(k->card());
  for (int j = 0; j < degree; ++j)
    axpy(r, x[static_cast<std::size_t>(j)].compose_power(q), frob[static_cast<std::size_t>(j)]);
  return r;
}

void GaloisContext::validate() const {
  if (G.size() != degree) throw ContextError("group order differs from [L:K]");
  if (static_cast<int>(action.size()) != G.size()) throw ContextError("one action table per group element expected");
  for (int j = 0; j < degree; ++j)
    if (action[0][static_cast<std::size_t>(j)] != unit_vec(k, degree, j)) throw ContextError("identity does not act trivially");
  for (int g = 0; g < G.size(); ++g)
    for (int j = 0; j < degree; ++j) {
      const PolyVec bj = unit_vec(k, degree, j);
      for (int h = 0; h < G.size(); ++h)
        if (apply(g, apply(h, bj)) != apply(G.mul(g, h), bj)) throw ContextError("action tables violate the group law");
      if (apply(g, qpower(bj)) != qpower(apply(g, bj))) throw ContextError("group action does not commute with the q-power map");
      for (int i = 0; i < degree; ++i) {
        const PolyVec bi = unit_vec(k, degree, i);
        if (apply(g, multiply(bi, bj)) != multiply(apply(g, bi), apply(g, bj)))
          throw ContextError("group does not act by ring automorphisms");
      }
    }
  if (multiply(one, unit_vec(k, degree, 0)) != unit_vec(k, degree, 0)) throw ContextError("unit element is wrong");
}

GaloisContext trivial_context(const FieldPtr& k) {
  GaloisContext c;
  c.k = k;
  c.G = AbelianGroup::trivial();
  c.family = GaloisContext::Family::Trivial;
  c.degree = 1;
  c.mult = {{unit_vec(k, 1, 0)}};
  c.one = unit_vec(k, 1, 0);
  c.action = {{unit_vec(k, 1, 0)}};
  c.frob = {unit_vec(k, 1, 0)};
  return c;
}

GaloisContext build_constant_context(const FieldPtr& k, int m) {
  if (m < 1) throw ContextError("constant-field degree must be >= 1");
  if (m == 1) return trivial_context(k);
  const FieldPtr km = Field::extend(k, m);
  const Field& K = *km;
  const std::uint32_t q = k->card();
  auto coords = [&](Elem a) {
    std::vector<Elem> c(static_cast<std::size_t>(m));
    std::uint32_t x = a.v;
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(i)] = Elem{x % q};
      x /= q;
    }
    return c;
  };
  // first normal element in index order
  Elem theta{0};
  std::optional<Mat> Binv;
  for (std::uint32_t v = 1; v < K.card() && !Binv; ++v) {
    std::vector<std::vector<Elem>> cols;
    for (int j = 0; j < m; ++j) cols.push_back(coords(K.frobenius_pow(Elem{v}, j)));
    Binv = Mat::from_columns(k, m, cols).inverse();
    theta = Elem{v};
  }
  if (!Binv) throw ContextError("no normal basis found");
  std::vector<Elem> b;
  for (int j = 0; j < m; ++j) b.push_back(K.frobenius_pow(theta, j));
  auto in_basis = [&](Elem a) {
    auto c = Binv->apply(coords(a));
    PolyVec v;
    for (auto x : c) v.push_back(Poly::constant(k, x));
    return v;
  };

  GaloisContext c;
  c.k = k;
  c.G = AbelianGroup::cyclic(m);
  c.family = GaloisContext::Family::Constant;
  c.m = m;
  c.degree = m;
  c.mult.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c.mult[static_cast<std::size_t>(i)].push_back(in_basis(K.mul(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)])));
  c.one = in_basis(K.one());
  for (int g = 0; g < m; ++g) {
    std::vector<PolyVec> cols;
    for (int j = 0; j < m; ++j) cols.push_back(unit_vec(k, m, (j + g) % m));
    c.action.push_back(cols);
  }
  for (int j = 0; j < m; ++j) c.frob.push_back(unit_vec(k, m, (j + 1) % m));
  c.validate();
  return c;
}

// ---- Carlitz torsion ---------------------------------------------------------

std::vector<Poly> carlitz_additive(const Poly& a) {
  const FieldPtr& k = a.field();
  const int q = static_cast<int>(k->card());
  if (a.is_zero()) return {};
  std::vector<Poly> P{Poly::constant(k, a.lead())};
  for (int i = a.degree() - 1; i >= 0; --i) {
    // C_t o P = t P + P^q, then add c_i x
    std::vector<Poly> R(P.size() + 1, Poly(k));
    for (std::size_t s = 0; s < P.size(); ++s) {
      R[s] += Poly::t(k) * P[s];
      R[s + 1] += P[s].compose_power(q);
    }
    R[0] += Poly::constant(k, a.coeff(i));
    P = std::move(R);
  }
  return P;
}

namespace {

// polynomials in lambda with k[t] coefficients, ascending
using BPoly = std::vector<Poly>;

void btrim(BPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

BPoly bmul(const BPoly& a, const BPoly& b, const FieldPtr& k) {
  if (a.empty() || b.empty()) return {};
  BPoly r(a.size() + b.size() - 1, Poly(k));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  btrim(r);
  return r;
}

// division by a lambda-monic divisor
std::pair<BPoly, BPoly> bdivmod(BPoly a, const BPoly& m, const FieldPtr& k) {
  btrim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {{}, a};
  BPoly quo(a.size() - dm, Poly(k));
  for (std::size_t i = a.size(); i-- > dm;) {
    const Poly c = a[i];
    if (c.is_zero()) continue;
    quo[i - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
  }
  btrim(a);
  btrim(quo);
  return {quo, a};
}

BPoly additive_to_bpoly(const std::vector<Poly>& add, const FieldPtr& k) {
  if (add.empty()) return {};
  const std::uint64_t q = k->card();
  std::uint64_t top = 1;
  for (std::size_t i = 1; i < add.size(); ++i) top *= q;
  BPoly r(static_cast<std::size_t>(top) + 1, Poly(k));
  std::uint64_t e = 1;
  for (const auto& c : add) {
    r[static_cast<std::size_t>(e)] = c;
    e *= q;
  }
  btrim(r);
  return r;
}

std::vector<Poly> factor_squarefree(const Poly& f) {
  std::vector<Poly> out;
  Poly g = f;
  for (const auto& p : primes_upto(f.field(), f.degree())) {
    if (g.degree() < 1) break;
    if (!(g % p).is_zero()) continue;
    g = g / p;
    if ((g % p).is_zero()) throw ContextError("conductor must be squarefree");
    out.push_back(p);
  }
  return out;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

}  // namespace

GaloisContext build_cyclotomic_context(const FieldPtr& k, const Poly& f) {
  if (f.degree() < 1) throw ContextError("conductor must be a nonconstant polynomial");
  if (!f.is_monic()) throw ContextError("conductor must be monic");
  const auto primes = factor_squarefree(f);
  const std::uint64_t q = k->card();

  // (k[t]/f)^x as a product of cyclic groups (k[t]/p_i)^x; generators lifted by CRT
  std::vector<int> orders;
  std::vector<Poly> gens, crt_basis;
  for (const auto& p : primes) {
    std::uint64_t n = 1;
    for (int i = 0; i < p.degree(); ++i) n *= q;
    --n;
    const Poly M = f / p;
    auto [g1, s, u] = xgcd(M % p, p);
    const Poly e = (M * s) % f;  // e = 1 mod p, 0 mod the other factors
    if (n == 1) continue;
    std::optional<Poly> gen;
    const Poly lead = Poly::monomial(k, k->one(), p.degree());
    for (const auto& cand : monic_of_degree(k, p.degree())) {
      const Poly a = cand - lead;
      if (a.is_zero()) continue;
      std::uint64_t ord = 1;
      for (Poly x = a; !x.is_one(); x = mulmod(x, a, p)) ++ord;
      if (ord == n) {
        gen = a;
        break;
      }
    }
    orders.push_back(static_cast<int>(n));
    gens.push_back(*gen);
    crt_basis.push_back(e);
  }
  AbelianGroup G(orders);

  GaloisContext c;
  c.k = k;
  c.G = G;
  c.family = GaloisContext::Family::Cyclotomic;
  c.f = f;
  c.degree = G.size();
  for (int g = 0; g < G.size(); ++g) {
    auto ex = G.exps(g);
    // components whose unit group is trivial get residue 1
    Poly a = Poly::one(k);
    for (std::size_t i = 0; i < ex.size(); ++i)
      a += crt_basis[i] * (gens[i].pow(static_cast<unsigned>(ex[i])) - Poly::one(k));
    a = a % f;
    c.residues.push_back(a);
  }

  // phi_f = prod_{g | f} C_g^{mu(f/g)}
  const std::size_t s = primes.size();
  BPoly num{Poly::one(k)}, den{Poly::one(k)};
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    Poly g = Poly::one(k);
    std::size_t missing = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1) g *= primes[i];
      else ++missing;
    }
    BPoly Cg = additive_to_bpoly(carlitz_additive(g), k);
    if (missing % 2 == 0) num = bmul(num, Cg, k);
    else den = bmul(den, Cg, k);
  }
  auto [phi, rem] = bdivmod(num, den, k);
  if (!rem.empty()) throw ContextError("cyclotomic polynomial division is not exact");
  if (static_cast<int>(phi.size()) - 1 != G.size()) throw ContextError("cyclotomic polynomial has unexpected degree");
  const int n = G.size();

  auto reduce = [&](const BPoly& a) {
    auto r = bdivmod(a, phi, k).second;
    PolyVec v = zero_vec(k, n);
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i];
    return v;
  };
  auto to_b = [&](const PolyVec& v) {
    BPoly b(v.begin(), v.end());
    btrim(b);
    return b;
  };
  auto lam_pow = [&](int e) {
    BPoly b(static_cast<std::size_t>(e) + 1, Poly(k));
    b[static_cast<std::size_t>(e)] = Poly::one(k);
    return reduce(b);
  };

  c.mult.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.mult[static_cast<std::size_t>(i)].push_back(lam_pow(i + j));
  c.one = lam_pow(0);
  for (int g = 0; g < n; ++g) {
    const BPoly image = to_b(reduce(additive_to_bpoly(carlitz_additive(c.residues[static_cast<std::size_t>(g)]), k)));
    std::vector<PolyVec> cols;
    BPoly pw{Poly::one(k)};
    for (int j = 0; j < n; ++j) {
      cols.push_back(reduce(pw));
      pw = to_b(reduce(bmul(pw, image, k)));
    }
    c.action.push_back(cols);
  }
  for (int j = 0; j < n; ++j) c.frob.push_back(lam_pow(j * static_cast<int>(q)));
  c.validate();
  return c;
}

std::optional<std::vector<Elem>> normal_integral_basis(const GaloisContext& ctx) {
  const int n = ctx.degree;
  const std::uint64_t q = ctx.k->card();
  std::uint64_t total = 1;
  for (int i = 0; i < n && total <= (1u << 16); ++i) total *= q;
  total = std::min<std::uint64_t>(total, 1u << 16);
  for (std::uint64_t v = 1; v < total; ++v) {
    std::vector<Elem> theta(static_cast<std::size_t>(n));
    PolyVec x;
    std::uint64_t y = v;
    for (int i = 0; i < n; ++i) {
      theta[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(y % q)};
      x.push_back(Poly::constant(ctx.k, theta[static_cast<std::size_t>(i)]));
      y /= q;
    }
    PolyMat M(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int g = 0; g < n; ++g) {
      const PolyVec col = ctx.apply(g, x);
      for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] = col[static_cast<std::size_t>(i)];
    }
    const Poly d = det(M);
    if (d.degree() == 0) return theta;
  }
  return std::nullopt;
}

// ---- residue algebras ----------------------------------------------------

std::vector<Elem> FinAlg::basis_vector(int i) const {
  std::vector<Elem> v(static_cast<std::size_t>(dim), Elem{0});
  v[static_cast<std::size_t>(i)] = k->one();
  return v;
}

std::vector<Elem> FinAlg::mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
  const Field& K = *k;
  std::vector<Elem> r(static_cast<std::size_t>(dim), Elem{0});
  for (int i = 0; i < dim; ++i) {
    if (a[static_cast<std::size_t>(i)].v == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[static_cast<std::size_t>(j)].v == 0) continue;
      const Elem c = K.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
      const auto& m = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int l = 0; l < dim; ++l)
        if (m[static_cast<std::size_t>(l)].v) r[static_cast<std::size_t>(l)] = K.add(r[static_cast<std::size_t>(l)], K.mul(c, m[static_cast<std::size_t>(l)]));
    }
  }
  return r;
}

std::vector<Elem> FinAlg::pow(std::vector<Elem> a, std::uint64_t e) const {
  std::vector<Elem> r = one;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Mat FinAlg::mult_matrix(const std::vector<Elem>& a) const {
  std::vector<std::vector<Elem>> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(mul(a, basis_vector(j)));
  return Mat::from_columns(k, dim, cols);
}

namespace {

std::vector<Elem> reduce_coords(const PolyVec& x, const Poly& p) {
  const int d = p.degree();
  std::vector<Elem> v(x.size() * static_cast<std::size_t>(d), Elem{0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Poly r = x[i] % p;
    for (int j = 0; j < d; ++j) v[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] = r.coeff(j);
  }
  return v;
}

PolyVec shift_vec(const PolyVec& x, int j) {
  PolyVec r;
  for (const auto& c : x) r.push_back(c.shift(j));
  return r;
}

bool inside(const Mat& span, const Mat& cols) {
  if (cols.cols() == 0) return true;
  if (span.cols() == 0) return cols.is_zero();
  return hcat(span, cols).rank() == span.rank();
}

Mat mat_pow(Mat A, std::uint64_t e) {
  Mat R = Mat::identity(A.field(), A.rows());
  while (e) {
    if (e & 1) R = R * A;
    e >>= 1;
    if (e) A = A * A;
  }
  return R;
}

}  // namespace

FinAlg residue_algebra(const GaloisContext& ctx, const Poly& p) {
  const int d = p.degree(), n = ctx.degree;
  FinAlg B;
  B.k = ctx.k;
  B.dim = n * d;
  B.mult.assign(static_cast<std::size_t>(B.dim), std::vector<std::vector<Elem>>(static_cast<std::size_t>(B.dim)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const PolyVec& m = ctx.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
      for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
          B.mult[static_cast<std::size_t>(i * d + a)][static_cast<std::size_t>(l * d + c)] = reduce_coords(shift_vec(m, a + c), p);
    }
  B.one = reduce_coords(ctx.one, p);
  return B;
}

PrimeData prime_data(const GaloisContext& ctx, const Poly& p) {
  if (!p.is_monic() || !is_irreducible(p)) throw ContextError("prime_data needs a monic irreducible polynomial, got " + p.str());
  const FieldPtr& k = ctx.k;
  const int n = ctx.degree;
  PrimeData pd;
  pd.p = p;
  pd.d = p.degree();
  const int d = pd.d;
  pd.B = residue_algebra(ctx, p);
  const int D = pd.B.dim;

  for (int g = 0; g < ctx.G.size(); ++g) {
    std::vector<std::vector<Elem>> cols;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) cols.push_back(reduce_coords(shift_vec(ctx.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)], j), p));
    pd.action.push_back(Mat::from_columns(k, D, cols));
  }
  {
    std::vector<std::vector<Elem>> cols;
    for (int j = 0; j < D; ++j) cols.push_back(pd.B.pow(pd.B.basis_vector(j), k->card()));
    pd.qpow = Mat::from_columns(k, D, cols);
  }
  pd.zbar = reduce_coords(shift_vec(ctx.one, 1), p);
  pd.radical = mat_pow(pd.qpow, static_cast<std::uint64_t>(D)).kernel();

  const Mat I = Mat::identity(k, D);
  const Mat Fd = mat_pow(pd.qpow, static_cast<std::uint64_t>(d));
  for (int g = 0; g < ctx.G.size(); ++g) {
    if (inside(pd.radical, pd.action[static_cast<std::size_t>(g)] - I)) pd.inertia.push_back(g);
    if (inside(pd.radical, pd.action[static_cast<std::size_t>(g)] - Fd)) pd.frob.push_back(g);
  }
  if (pd.frob.empty()) throw ContextError("no Frobenius element found at " + p.str());
  pd.e = static_cast<int>(pd.inertia.size());
  std::vector<int> gens = pd.frob;
  gens.insert(gens.end(), pd.inertia.begin(), pd.inertia.end());
  pd.decomposition = ctx.G.subgroup(gens);
  pd.f = static_cast<int>(pd.decomposition.size()) / pd.e;
  pd.r = ctx.G.size() / static_cast<int>(pd.decomposition.size());

  // primitive idempotents of {x : x^q = x} ~ k^r, split basis element by basis element
  const Field& K = *k;
  const Mat S = (pd.qpow - I).kernel();
  std::vector<std::vector<Elem>> idem{pd.B.one};
  for (int s = 0; s < S.cols(); ++s) {
    const auto x = S.column(s);
    std::vector<std::vector<Elem>> next;
    for (const auto& e : idem)
      for (std::uint32_t c = 0; c < K.card(); ++c) {
        std::vector<Elem> y = e;
        for (std::uint32_t c2 = 0; c2 < K.card(); ++c2) {
          if (c2 == c) continue;
          std::vector<Elem> lin = x;
          for (int i = 0; i < D; ++i) lin[static_cast<std::size_t>(i)] = K.sub(lin[static_cast<std::size_t>(i)], K.mul(Elem{c2}, pd.B.one[static_cast<std::size_t>(i)]));
          const Elem sc = K.inv(K.sub(Elem{c}, Elem{c2}));
          for (auto& v : lin) v = K.mul(v, sc);
          y = pd.B.mul(y, lin);
        }
        if (std::any_of(y.begin(), y.end(), [](Elem v) { return v.v != 0; })) next.push_back(y);
      }
    idem = std::move(next);
  }
  pd.prime_idempotents = idem;
  if (static_cast<int>(idem.size()) != pd.r) throw ContextError("number of primes above p disagrees with |G|/|G_P|");
  return pd;
}

}  // namespace eqlv
