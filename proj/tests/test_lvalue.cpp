#include <gtest/gtest.h>

#include "eqlv/lvalue.hpp"

using namespace eqlv;

namespace {

Laurent L(const FieldPtr& k, const std::string& s) { return parse_laurent(k, s); }

}  // namespace

TEST(LValue, ZetaOracleSmall) {
  auto k = Field::prime(2);
  EXPECT_TRUE(equal_mod(zeta_monic_sum_oracle(k, 1, 5), L(k, "1 + t^-2 + t^-3 + t^-4"), 5));
  EXPECT_TRUE(equal_mod(zeta_monic_sum_oracle(k, 1, 1), Laurent::one(k), 1));
  // F_3, degree-one layer: 1/t + 1/(t+1) + 1/(t+2) = -1/(t^3 - t)
  auto k3 = Field::prime(3);
  Laurent layer = Laurent::zero(k3, 9);
  for (const auto& a : monic_of_degree(k3, 1)) layer += expand_rational(Poly::one(k3), a, 9);
  EXPECT_TRUE(equal_mod(layer, expand_rational(Poly::constant(k3, k3->from_int(-1)), parse_poly(k3, "t^3 + 2t"), 9), 9));
}

TEST(LValue, CarlitzEulerProductMatchesMonicSum) {
  for (std::uint32_t p : {2u, 3u}) {
    auto k = Field::prime(p);
    const auto ctx = trivial_context(k);
    const auto ct = decompose(ctx.G, k);
    for (int n = 1; n <= 2; ++n) {
      const auto Lg = euler_product_equivariant(make_carlitz_power(k, n), ctx, ct, 8);
      EXPECT_TRUE(equal_mod(Lg.value[0], zeta_monic_sum_oracle(k, n, 8), 8)) << "p=" << p << " n=" << n;
    }
  }
  auto k = Field::prime(2);
  const auto ctx = trivial_context(k);
  const auto Lg = euler_product_equivariant(make_carlitz_power(k, 1), ctx, decompose(ctx.G, k), 5);
  EXPECT_TRUE(equal_mod(Lg.value[0], L(k, "1 + t^-2 + t^-3 + t^-4"), 5));
}

TEST(LValue, TruncationStability) {
  auto k = Field::prime(2);
  const auto ctx = build_constant_context(k, 3);
  const auto ct = decompose(ctx.G, k);
  const auto E = make_carlitz_power(k, 1);
  const auto a = euler_product_equivariant(E, ctx, ct, 5, 5);
  const auto b = euler_product_equivariant(E, ctx, ct, 5, 7);
  for (std::size_t c = 0; c < a.value.size(); ++c) EXPECT_TRUE(equal_mod(a.value[c], b.value[c], 5));
  for (const auto& v : a.value) EXPECT_EQ(v.coeff(0), Elem{1});
}

TEST(LValue, ClassFormulaTrivialGroup) {
  auto k = Field::prime(2);
  const auto ctx = trivial_context(k);
  const auto ct = decompose(ctx.G, k);
  const auto R = verify_class_formula(make_carlitz_power(k, 1), ctx, ct, 8);
  EXPECT_EQ(R.verdict, Verdict::Pass) << R.analytic.note;
  EXPECT_EQ(R.analytic.class_dim, 0);
  const auto R2 = verify_class_formula(make_carlitz_power(k, 2), ctx, ct, 6);
  EXPECT_EQ(R2.verdict, Verdict::Pass) << R2.analytic.note;
}

TEST(LValue, ClassFormulaConstantContext) {
  auto k = Field::prime(2);
  const auto ctx = build_constant_context(k, 3);
  const auto ct = decompose(ctx.G, k);
  const auto E = make_carlitz_power(k, 1);
  const auto R = verify_class_formula(E, ctx, ct, 6);
  EXPECT_EQ(R.verdict, Verdict::Pass) << R.analytic.note;
  for (int chi = 0; chi < ct.count(); ++chi) {
    const Rep rho = Rep::character(ct, chi);
    EXPECT_EQ(specialize_and_compare(E, ctx, ct, R.euler, rho, 6).verdict, Verdict::Pass) << "chi=" << chi;
  }
}

TEST(LValue, ArtinAgreesWithTensorProduct) {
  auto k = Field::prime(2);
  const auto ctx = build_constant_context(k, 3);
  const auto ct = decompose(ctx.G, k);
  for (int chi = 0; chi < ct.count(); ++chi) {
    const Rep rho = Rep::character(ct, chi);
    const auto a = euler_product_artin(1, ctx, rho, 5);
    const auto b = euler_product_rep(make_carlitz_power(k, 1), ctx, rho, LVariant::Tensor, 5);
    EXPECT_TRUE(equal_mod(a.value[0], b.value[0], 5));
  }
}

TEST(LValue, ArtinCyclotomicTame) {
  auto k = Field::prime(2);
  const auto ctx = build_cyclotomic_context(k, parse_poly(k, "t^2 + t + 1"));
  const auto ct = decompose(ctx.G, k);
  for (int n = 1; n <= 2; ++n)
    for (int chi = 0; chi < ct.count(); ++chi) {
      const auto B = artin_compare(n, ctx, Rep::character(ct, chi), 6);
      EXPECT_TRUE(B.tame);
      EXPECT_EQ(B.artin_vs_tensor.verdict, Verdict::Pass) << B.artin_vs_tensor.detail;
      EXPECT_EQ(B.hom_vs_artin.verdict, Verdict::Pass) << B.hom_vs_artin.detail;
      EXPECT_EQ(B.per_prime.verdict, Verdict::Pass) << B.per_prime.detail;
      EXPECT_EQ(B.witness.verdict, Verdict::Pass);
    }
}

TEST(LValue, RegularRepresentationIsProductOfCharacters) {
  auto k = Field::prime(2);
  const auto ctx = build_cyclotomic_context(k, parse_poly(k, "t^2 + t + 1"));
  const auto ct = decompose(ctx.G, k);
  const auto reg = euler_product_artin(1, ctx, Rep::regular(ctx.G, ct.split), 5);
  Laurent prod = Laurent::one(ct.split, 5);
  for (int chi = 0; chi < ct.count(); ++chi) prod *= euler_product_artin(1, ctx, Rep::character(ct, chi), 5).value[0];
  EXPECT_TRUE(equal_mod(reg.value[0], prod, 5));
}

TEST(LValue, ClassFormulaWithNontrivialClassModule) {
  auto k = Field::prime(2);
  const auto ctx = trivial_context(k);
  const auto ct = decompose(ctx.G, k);
  TModule E = make_carlitz_power(k, 1);
  E.A[1][0][0] = parse_poly(k, "t^3");
  const auto R = verify_class_formula(E, ctx, ct, 6);
  EXPECT_EQ(R.verdict, Verdict::Pass) << R.analytic.note;
  EXPECT_EQ(R.analytic.class_dim, 1);
  EXPECT_EQ(R.analytic.class_charpoly[0], Poly::t(k));
}

TEST(LValue, RankTwoNeedsPrimesBeyondPrecision) {
  // local factors are only 1 + O(t^-deg p / 2) here, so the product runs past degree N
  auto k = Field::prime(2);
  const auto ctx = trivial_context(k);
  const auto ct = decompose(ctx.G, k);
  TModule E = make_carlitz_power(k, 1);
  E.A[1][0][0] = parse_poly(k, "t^2");
  E.A.push_back(PolyMat{{Poly::one(k)}});
  const auto Lg = euler_product_equivariant(E, ctx, ct, 6);
  EXPECT_GT(Lg.D, 6);
  const auto R = verify_class_formula(E, ctx, ct, 6);
  EXPECT_EQ(R.verdict, Verdict::Pass) << R.analytic.note;
  EXPECT_TRUE(equal_mod(R.lhs[0], parse_laurent(k, "1 + t^-1 + t^-2 + t^-4"), 6));
}
