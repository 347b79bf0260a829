#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace eqlv;

namespace {

Poly P(const FieldPtr& k, const std::string& s) { return parse_poly(k, s); }

// sum over divisors d of n of d * N(d) must be q^n
void check_necklace(const FieldPtr& k, int D) {
  auto ps = primes_upto(k, D);
  for (int n = 1; n <= D; ++n) {
    long long s = 0, qn = 1;
    for (int i = 0; i < n; ++i) qn *= k->card();
    for (auto& p : ps)
      if (n % p.degree() == 0) s += p.degree();
    EXPECT_EQ(s, qn) << "degree " << n;
  }
}

}  // namespace

TEST(Galois, PrimeEnumeration) {
  auto F2 = Field::prime(2), F3 = Field::prime(3);
  auto p1 = primes_upto(F2, 1);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_EQ(p1[0].str(), "t");
  EXPECT_EQ(p1[1].str(), "t+1");
  int deg3 = 0;
  for (auto& p : primes_upto(F2, 3)) deg3 += p.degree() == 3;
  EXPECT_EQ(deg3, 2);
  int deg2 = 0;
  for (auto& p : primes_upto(F3, 2)) deg2 += p.degree() == 2;
  EXPECT_EQ(deg2, 3);
  check_necklace(F2, 8);
  check_necklace(F3, 5);
  check_necklace(Field::extend(F2, 2)->as_ground(), 3);
}

TEST(Galois, ConstantContextF8) {
  auto k = Field::prime(2);
  auto ctx = build_constant_context(k, 3);
  EXPECT_EQ(ctx.G.size(), 3);
  auto pt = prime_data(ctx, P(k, "t"));
  EXPECT_EQ(pt.B.dim, 3);
  EXPECT_EQ(pt.e, 1);
  ASSERT_EQ(pt.frob.size(), 1u);
  EXPECT_EQ(pt.frobenius(), ctx.G.generator(0));
  EXPECT_EQ(pt.r, 1);
  auto p3 = prime_data(ctx, P(k, "t^3+t+1"));
  EXPECT_EQ(p3.frobenius(), 0);
  EXPECT_EQ(p3.r, 3);
  EXPECT_EQ(build_constant_context(k, 1).G.size(), 1);
}

TEST(Galois, ConstantFrobeniusIsGeneratorToTheDegree) {
  auto k = Field::prime(2);
  auto ctx = build_constant_context(k, 3);
  for (auto& p : primes_upto(k, 4)) {
    auto pd = prime_data(ctx, p);
    EXPECT_EQ(pd.frobenius(), ctx.G.pow(ctx.G.generator(0), p.degree()));
    EXPECT_EQ(pd.inertia, std::vector<int>{0});
  }
}

TEST(Galois, CyclotomicTorsionPolynomial) {
  auto k = Field::prime(3);
  auto ctx = build_cyclotomic_context(k, P(k, "t"));
  EXPECT_EQ(ctx.G.size(), 2);
  // lambda^2 = -t
  auto sq = ctx.mult[1][1];
  EXPECT_EQ(sq[0], P(k, "2t"));
  EXPECT_TRUE(sq[1].is_zero());
}

TEST(Galois, CyclotomicFrobeniusIsPrimeModConductor) {
  auto k = Field::prime(2);
  const Poly f = P(k, "t^2+t+1");
  auto ctx = build_cyclotomic_context(k, f);
  EXPECT_EQ(ctx.G.size(), 3);
  for (auto& p : primes_upto(k, 4)) {
    auto pd = prime_data(ctx, p);
    if (p == f) continue;
    ASSERT_TRUE(pd.unramified()) << p.str();
    EXPECT_EQ(ctx.residues[static_cast<std::size_t>(pd.frobenius())], p % f) << p.str();
  }
  auto pf = prime_data(ctx, f);
  EXPECT_EQ(pf.e, 3);
  EXPECT_EQ(pf.frob.size(), 3u);
  EXPECT_EQ(pf.inertia.size(), 3u);
  // e divides |kappa_p^x| = 3
  EXPECT_EQ(3 % pf.e, 0);
}

TEST(Galois, CyclotomicComposite) {
  auto k = Field::prime(3);
  const Poly f = P(k, "t^2+t");
  auto ctx = build_cyclotomic_context(k, f);
  EXPECT_EQ(ctx.G.size(), 4);
  for (auto& p : primes_upto(k, 2)) {
    auto pd = prime_data(ctx, p);
    EXPECT_EQ(pd.e * pd.f * pd.r, ctx.G.size());
    if ((f % p).is_zero()) {
      EXPECT_EQ(pd.e, 2);
    } else {
      EXPECT_EQ(ctx.residues[static_cast<std::size_t>(pd.frobenius())], p % f);
    }
    EXPECT_EQ(oracle::frobenius_coset_failure(ctx, pd), -1) << p.str();
  }
}

TEST(Galois, FrobeniusCosetAndCountingAllContexts) {
  auto k = Field::prime(2);
  std::vector<GaloisContext> ctxs = {trivial_context(k), build_constant_context(k, 3),
                                     build_cyclotomic_context(k, P(k, "t^2+t+1")),
                                     build_cyclotomic_context(k, P(k, "t^3+t+1"))};
  for (auto& ctx : ctxs)
    for (auto& p : primes_upto(k, 3)) {
      auto pd = prime_data(ctx, p);
      EXPECT_EQ(pd.e * pd.f * pd.r, ctx.G.size());
      EXPECT_EQ(pd.B.dim, p.degree() * ctx.degree);
      EXPECT_EQ(oracle::frobenius_coset_failure(ctx, pd), -1) << p.str();
      // q-power map is an algebra endomorphism commuting with G
      for (int i = 0; i < pd.B.dim; ++i)
        for (int j = 0; j < pd.B.dim; ++j) {
          auto bi = pd.B.basis_vector(i), bj = pd.B.basis_vector(j);
          EXPECT_EQ(pd.qpow.apply(pd.B.mul(bi, bj)), pd.B.mul(pd.qpow.apply(bi), pd.qpow.apply(bj)));
        }
      for (auto& A : pd.action) EXPECT_EQ(A * pd.qpow, pd.qpow * A);
    }
}

TEST(Galois, UnramifiedResidueAlgebraHasNormalBasis) {
  // kappa_P free of rank one over kappa_p[G_P]: B_p is k[G]-free, i.e. some x has
  // k-independent G-orbit
  auto k = Field::prime(2);
  auto ctx = build_cyclotomic_context(k, P(k, "t^2+t+1"));
  for (auto& p : primes_upto(k, 3)) {
    auto pd = prime_data(ctx, p);
    if (!pd.unramified()) continue;
    bool found = false;
    for (std::uint32_t v = 1; v < (1u << pd.B.dim) && !found; ++v) {
      std::vector<Elem> x(static_cast<std::size_t>(pd.B.dim));
      for (int i = 0; i < pd.B.dim; ++i) x[static_cast<std::size_t>(i)] = Elem{(v >> i) & 1u};
      std::vector<std::vector<Elem>> cols;
      for (int g = 0; g < ctx.G.size(); ++g)
        for (int j = 0; j < pd.d; ++j) {
          // t^j g(x) spans B_p over k when x generates over k[t]/p [G]
          auto y = pd.action[static_cast<std::size_t>(g)].apply(x);
          for (int s = 0; s < j; ++s) y = pd.B.mul(y, pd.zbar);
          cols.push_back(y);
        }
      found = Mat::from_columns(k, pd.B.dim, cols).rank() == pd.B.dim;
    }
    EXPECT_TRUE(found) << p.str();
  }
}

TEST(Galois, RejectsBadInput) {
  auto k = Field::prime(2);
  EXPECT_THROW(build_cyclotomic_context(k, P(k, "t^2")), ContextError);
  EXPECT_THROW(build_cyclotomic_context(k, P(k, "1")), ContextError);
  auto ctx = build_constant_context(k, 3);
  EXPECT_THROW(prime_data(ctx, P(k, "t^2+1")), ContextError);
}

TEST(Galois, NormalIntegralBasis) {
  auto k = Field::prime(2);
  auto nb = normal_integral_basis(build_constant_context(k, 3));
  ASSERT_TRUE(nb.has_value());
}
