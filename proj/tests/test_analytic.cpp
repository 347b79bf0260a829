#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace eqlv;
using eqlv::oracle::random_module;

namespace {

// sum over monic a of degree < N of 1/a, to precision N
Laurent zeta_one(const FieldPtr& k, int N) {
  Laurent z = Laurent::zero(k, N);
  for (int d = 0; d < N; ++d)
    for (const auto& a : monic_of_degree(k, d)) z += expand_rational(Poly::one(k), a, N);
  return z;
}

// f(A_0) e for polynomial f, by Horner over k[t]
std::vector<Poly> poly_of_A0(const TModule& E, const Poly& f, int j) {
  const int n = E.n;
  std::vector<Poly> v(static_cast<std::size_t>(n), Poly(E.k));
  for (int d = f.degree(); d >= 0; --d) {
    std::vector<Poly> w(static_cast<std::size_t>(n), Poly(E.k));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        w[static_cast<std::size_t>(r)] += E.A[0][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
    w[static_cast<std::size_t>(j)] += Poly::constant(E.k, f.coeff(d));
    v = w;
  }
  return v;
}

}  // namespace

TEST(Analytic, CarlitzCoefficientsAreInverseDi) {
  for (std::uint32_t p : {2u, 3u}) {
    auto k = Field::prime(p);
    ExpSeries es(make_carlitz_power(k, 1), 3);
    const long long q = p;
    long long qi = 1;
    for (int i = 1; i <= 3; ++i) {
      qi *= q;
      Poly Di = Poly::one(k);
      long long qj = 1;
      for (int j = 0; j < i; ++j, qj *= q)
        Di *= Poly::monomial(k, k->one(), static_cast<int>(qi)) - Poly::monomial(k, k->one(), static_cast<int>(qj));
      EXPECT_EQ(es.coeff(i)[0][0], RatFunc(Poly::one(k), Di)) << "p=" << p << " i=" << i;
    }
  }
}

TEST(Analytic, FunctionalEquationAndLogInverse) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u})
    for (int n = 1; n <= 2; ++n)
      for (int r = 1; r <= 2; ++r) {
        auto k = Field::prime(p);
        const TModule E = (r == 1 && rng() % 2) ? make_carlitz_power(k, n) : random_module(k, n, r, rng);
        ExpSeries es(E, 4);
        const auto l = log_coeffs(es, 4);
        for (int i = 1; i <= 4; ++i) {
          EXPECT_TRUE(is_zero(functional_equation_residual(es, i))) << "p=" << p << " n=" << n << " r=" << r;
          EXPECT_TRUE(is_zero(log_exp_coefficient(es, l, i)));
          EXPECT_TRUE(is_zero(exp_log_coefficient(es, l, i)));
        }
      }
}

TEST(Analytic, EvaluatedFunctionalEquation) {
  // exp(A_0 x) = E(t) exp(x), compared numerically on random small x
  std::mt19937 rng(11);
  auto k = Field::prime(2);
  for (int n = 1; n <= 2; ++n) {
    ExpSeries es(make_carlitz_power(k, n), 1);
    const auto ctx = trivial_context(k);
    for (int trial = 0; trial < 5; ++trial) {
      LVec x;
      for (int c = 0; c < n; ++c) {
        std::vector<Elem> cf;
        for (int i = 0; i < 6; ++i) cf.push_back(Elem{static_cast<std::uint32_t>(rng() % 2)});
        x.push_back(Laurent::from_coeffs(k, 0, cf, 12));
      }
      const int prec = 10;
      const LVec lhs = eval_exp(es, ctx, apply_A0(es.module(), ctx, x), prec);
      const LVec rhs = apply_Et(es.module(), ctx, eval_exp(es, ctx, x, prec + 2));
      for (int c = 0; c < n; ++c) EXPECT_TRUE(equal_mod(lhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(c)], prec - 2));
    }
  }
}

TEST(Analytic, ExpOfLogOne) {
  // log_C(1) converges; exp(log(1)) = 1
  auto k = Field::prime(2);
  ExpSeries es(make_carlitz_power(k, 1), 6);
  const auto l = log_coeffs(es, 6);
  const int N = 20;
  Laurent L = Laurent::zero(k, N);
  for (int i = 0; i <= 6; ++i) L += Laurent::expand_rational(l[static_cast<std::size_t>(i)][0][0], N);
  const auto ctx = trivial_context(k);
  const LVec e = eval_exp(es, ctx, {L}, N - 2);
  EXPECT_TRUE(equal_mod(e[0], Laurent::one(k), N - 2));
  // Euler: log_C(1) = zeta(1)
  EXPECT_TRUE(equal_mod(L, zeta_one(k, 12), 12));
}

TEST(Analytic, UntwistInvertsTwistedStructure) {
  std::mt19937 rng(3);
  for (std::uint32_t p : {2u, 3u}) {
    auto k = Field::prime(p);
    const TModule E = make_carlitz_power(k, 3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Poly> f;
      std::vector<Laurent> z(3, Laurent::zero(k));
      for (int j = 0; j < 3; ++j) {
        std::vector<Elem> c;
        for (int d = 0; d < 5; ++d) c.push_back(k->elem(rng() % p));
        f.emplace_back(k, c);
        const auto v = poly_of_A0(E, f.back(), j);
        for (int r = 0; r < 3; ++r) z[static_cast<std::size_t>(r)] += Laurent::from_poly(v[static_cast<std::size_t>(r)]);
      }
      const auto back = untwist(E, z);
      for (int j = 0; j < 3; ++j) EXPECT_TRUE(equal_mod(back[static_cast<std::size_t>(j)], Laurent::from_poly(f[static_cast<std::size_t>(j)]), 20));
    }
  }
}

TEST(Analytic, CarlitzUnitLatticeOverFpT) {
  for (std::uint32_t p : {2u, 3u}) {
    auto k = Field::prime(p);
    const auto ctx = trivial_context(k);
    const auto ct = decompose(ctx.G, k);
    const int N = 6;
    const auto A = analytic_side(make_carlitz_power(k, 1), ctx, ct, N);
    ASSERT_TRUE(A.certified) << A.note;
    EXPECT_EQ(A.class_dim, 0);
    EXPECT_TRUE(equal_mod(A.index[0], zeta_one(k, N), N)) << A.index[0].str();
    EXPECT_EQ(A.unit[0].degrees, std::vector<int>{0});
  }
}

TEST(Analytic, StandardLatticeHasIndexOne) {
  auto k = Field::prime(3);
  const auto E = make_carlitz_power(k, 2);
  const auto L = standard_lattice(k, 2);
  EXPECT_TRUE(equal_mod(lattice_index(E, L, L), Laurent::one(k), 30));
}
