#include "eqlv/lvalue.hpp"

#include <sstream>

namespace eqlv {

std::string variant_name(LVariant v) {
  switch (v) {
    case LVariant::Equivariant: return "equivariant";
    case LVariant::Hom: return "hom";
    case LVariant::Tensor: return "tensor";
    case LVariant::Artin: return "artin";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

int bound(int N, int D) { return D < 0 ? N : D; }

// Exponent of the first nonzero coefficient of x - 1 below t^0, negated; the
// factor is 1 mod t^-gap.
int gap(const Laurent& x, int N) {
  const Laurent d = x - Laurent::one(x.field());
  for (int e = 0; e > -N; --e)
    if (d.coeff(e).v) return -e;
  return N;
}

// Degree layers with a fixed bound D >= 0, or adaptively: stop after a layer of
// degree >= N whose factors are all 1 mod t^-N, requiring a second such layer
// when that layer did not already satisfy the 1 + O(t^-deg p) bound.
template <class Layer>
int run_layers(int N, int D, int cap, Layer layer) {
  if (D >= 0) {
    for (int d = 1; d <= D; ++d) layer(d);
    return D;
  }
  int quiet = 0;
  for (int d = 1; d <= cap; ++d) {
    const int g = layer(d);
    if (d < N) continue;
    if (g >= N && (g >= d || ++quiet >= 2)) return d;
    if (g < N) quiet = 0;
  }
  throw PrecisionError("Euler product has not converged by prime degree " + std::to_string(cap));
}

std::string ratio_note(const Poly& num, const Poly& den) {
  return "(" + num.str() + ")/(" + den.str() + ")";
}

}  // namespace

EulerProduct euler_product_equivariant(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct, int N,
                                       int D) {
  EulerProduct L;
  L.variant = LVariant::Equivariant;
  L.N = N;
  L.value.assign(static_cast<std::size_t>(ct.count()), Laurent::one(ct.split, N));
  L.D = run_layers(N, D, 3 * N, [&](int d) {
    int g = N;
    for (const Poly& p : primes_of_degree(ctx.k, d)) {
      const PrimeData pd = prime_data(ctx, p);
      const EquivariantFactor lf = local_factor_equivariant(E, pd, ct, N);
      LedgerEntry le{p, pd.e, pd.f, pd.r, {}, {}};
      std::ostringstream os;
      for (int chi = 0; chi < ct.count(); ++chi) {
        const auto c = static_cast<std::size_t>(chi);
        const Laurent x = Laurent::expand_rational(lf.lie_chi[c], lf.mod_chi[c], N);
        g = std::min(g, gap(x, N));
        le.factor.push_back(x);
        L.value[c] *= x;
        os << (chi ? "; " : "") << ratio_note(lf.lie_chi[c], lf.mod_chi[c]);
      }
      le.note = os.str();
      L.ledger.push_back(std::move(le));
    }
    return g;
  });
  for (auto& v : L.value) v = v.truncate(N);
  L.gvalue = assemble(ct, L.value);
  return L;
}

EulerProduct euler_product_rep(const TModule& E, const GaloisContext& ctx, const Rep& rho, LVariant variant, int N,
                               int D) {
  if (variant != LVariant::Hom && variant != LVariant::Tensor)
    throw TModuleError("euler_product_rep takes the Hom or Tensor variant");
  EulerProduct L;
  L.variant = variant;
  L.N = N;
  L.value = {Laurent::one(rho.F, N)};
  const RepVariant rv = variant == LVariant::Hom ? RepVariant::Hom : RepVariant::Tensor;
  L.D = run_layers(N, D, 3 * N, [&](int d) {
    int g = N;
    for (const Poly& p : primes_of_degree(ctx.k, d)) {
      const PrimeData pd = prime_data(ctx, p);
      const RepFactor rf = local_factor_rep(E, pd, rho, rv, N);
      g = std::min(g, gap(rf.ratio, N));
      L.value[0] *= rf.ratio;
      L.ledger.push_back({p, pd.e, pd.f, pd.r, {rf.ratio}, ratio_note(rf.lie, rf.mod)});
    }
    return g;
  });
  L.value[0] = L.value[0].truncate(N);
  return L;
}

namespace {

// p^{n dim} / det(p^n - M): the factor det(1 - M/p^n)^{-1}
std::pair<Poly, Poly> artin_factor(const Poly& pF, int n, const Mat& M) {
  const Poly Pn = pF.pow(static_cast<unsigned>(n));
  return {Pn.pow(static_cast<unsigned>(M.rows())), charpoly_at(M, Pn)};
}

}  // namespace

EulerProduct euler_product_artin(int n, const GaloisContext& ctx, const Rep& rho, int N, int D) {
  EulerProduct L;
  L.variant = LVariant::Artin;
  L.N = N;
  L.D = bound(N, D);
  L.value = {Laurent::one(rho.F, N)};
  for (const Poly& p : primes_upto(ctx.k, L.D)) {
    const PrimeData pd = prime_data(ctx, p);
    const FrobeniusData fd = frobenius_on_inertia_quotients(pd, rho);
    const auto [num, den] = artin_factor(p.lift(rho.F), n, fd.on_invariants);
    const Laurent x = Laurent::expand_rational(num, den, N);
    L.value[0] *= x;
    L.ledger.push_back({p, pd.e, pd.f, pd.r, {x}, ratio_note(num, den)});
  }
  L.value[0] = L.value[0].truncate(N);
  return L;
}

Laurent zeta_monic_sum_oracle(const FieldPtr& k, int n, int N) {
  Laurent z = Laurent::zero(k, N);
  for (int d = 0; d < N; ++d) {
    // 1/a^n has top -n d, so degrees with n d >= N contribute nothing
    if (n * d >= N) break;
    for (const Poly& a : monic_of_degree(k, d))
      z += expand_rational(Poly::one(k), a.pow(static_cast<unsigned>(n)), N);
  }
  return z;
}

Comparison compare_mod(const Laurent& a, const Laurent& b, int N) {
  Comparison c;
  if (a.prec() < N || b.prec() < N) {
    std::ostringstream os;
    os << "precision " << std::min(a.prec(), b.prec()) << " below requested " << N;
    c.detail = os.str();
    return c;
  }
  c.first_difference = first_difference(a, b, N);
  c.verdict = c.first_difference ? Verdict::Fail : Verdict::Pass;
  if (c.first_difference) {
    std::ostringstream os;
    os << "first difference at t^" << *c.first_difference;
    c.detail = os.str();
  }
  return c;
}

Comparison combine(const std::vector<Comparison>& parts) {
  Comparison out;
  out.verdict = Verdict::Pass;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Comparison& p = parts[i];
    if (p.verdict == Verdict::Pass) continue;
    if (p.verdict == Verdict::Fail || out.verdict == Verdict::Pass) {
      if (out.verdict != Verdict::Fail) {
        out.verdict = p.verdict;
        out.first_difference = p.first_difference;
        out.detail = "part " + std::to_string(i) + ": " + p.detail;
      }
    }
  }
  return out;
}

Comparison specialize_and_compare(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct,
                                  const EulerProduct& Lg, const Rep& rho, int N) {
  (void)ct;
  if (!Lg.gvalue) throw TModuleError("specialization needs an equivariant product");
  GLaurent u = *Lg.gvalue;
  for (auto& x : u.c) x = x.lift(rho.F);
  const Laurent lhs = twist_det(u, rho);
  const EulerProduct direct = euler_product_rep(E, ctx, rho, LVariant::Hom, N, Lg.D);
  return compare_mod(lhs, direct.value[0], N);
}

ArtinBundle artin_compare(int n, const GaloisContext& ctx, const Rep& rho, int N) {
  const TModule C = make_carlitz_power(ctx.k, n);
  ArtinBundle B;
  const EulerProduct d12 = euler_product_artin(n, ctx, rho, N);
  const EulerProduct ten = euler_product_rep(C, ctx, rho, LVariant::Tensor, N);
  const EulerProduct hom = euler_product_rep(C, ctx, rho, LVariant::Hom, N);
  B.artin = d12.value[0];
  B.tensor = ten.value[0];
  B.hom = hom.value[0];
  B.artin_vs_tensor = compare_mod(B.artin, B.tensor, N);
  B.hom_vs_artin = compare_mod(B.hom, B.artin, N);

  // per-prime identities, polynomial equality
  const FieldPtr& F = rho.F;
  B.witness_num = Poly::one(F);
  B.witness_den = Poly::one(F);
  std::vector<Comparison> parts;
  for (const Poly& p : primes_upto(ctx.k, N)) {
    const PrimeData pd = prime_data(ctx, p);
    if (!pd.unramified()) B.tame = B.tame && (pd.e % static_cast<int>(ctx.k->p()) != 0);
    const FrobeniusData fd = frobenius_on_inertia_quotients(pd, rho);
    const Poly Pn = p.lift(F).pow(static_cast<unsigned>(n));
    const RepFactor h = local_factor_rep(C, pd, rho, RepVariant::Hom, N);
    const RepFactor t = local_factor_rep(C, pd, rho, RepVariant::Tensor, N);
    Comparison c;
    const bool hom_ok = h.mod * Pn.pow(static_cast<unsigned>(fd.on_coinvariants.rows())) ==
                        h.lie * charpoly_at(fd.on_coinvariants, Pn);
    const bool ten_ok = t.mod * Pn.pow(static_cast<unsigned>(fd.on_invariants.rows())) ==
                        t.lie * charpoly_at(fd.on_invariants, Pn);
    c.verdict = hom_ok && ten_ok ? Verdict::Pass : Verdict::Fail;
    if (!hom_ok) c.detail = "Hom identity fails at " + p.str();
    if (!ten_ok) c.detail = "tensor identity fails at " + p.str();
    parts.push_back(c);
    if (!pd.unramified()) {
      // Artin factor over the Hom factor: num/den of the ratio
      const auto [dn, dd] = artin_factor(p.lift(F), n, fd.on_invariants);
      B.witness_num *= dn * h.mod;
      B.witness_den *= dd * h.lie;
    }
  }
  B.per_prime = combine(parts);
  const Poly g = gcd(B.witness_num, B.witness_den);
  B.witness_num = B.witness_num / g;
  B.witness_den = B.witness_den / g;
  const Laurent ratio = (B.artin * B.hom.inv(N)).truncate(N);
  B.witness = compare_mod(ratio, expand_rational(B.witness_num, B.witness_den, N), N);
  return B;
}

ClassFormula verify_class_formula(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct, int N,
                                  const AnalyticOptions& opt) {
  ClassFormula R;
  R.euler = euler_product_equivariant(E, ctx, ct, N);
  R.lhs = R.euler.value;
  R.analytic = analytic_side(E, ctx, ct, N, opt);
  if (R.analytic.index.size() != static_cast<std::size_t>(ct.count())) {
    R.verdict = Verdict::Inconclusive;
    return R;
  }
  for (int chi = 0; chi < ct.count(); ++chi) {
    const auto c = static_cast<std::size_t>(chi);
    const Laurent h = Laurent::from_poly(R.analytic.class_charpoly[c]);
    R.rhs.push_back((R.analytic.index[c] * h).monic().truncate(N));
    R.per_character.push_back(compare_mod(R.lhs[c], R.rhs[c], N));
  }
  const Comparison all = combine(R.per_character);
  R.verdict = all.verdict;
  // an uncertified analytic side cannot produce a pass or a fail
  if (!R.analytic.certified) R.verdict = Verdict::Inconclusive;
  return R;
}

}  // namespace eqlv
