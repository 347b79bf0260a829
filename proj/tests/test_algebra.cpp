#include <gtest/gtest.h>

#include <random>

#include "eqlv/laurent.hpp"
#include "eqlv/linalg.hpp"

using namespace eqlv;

namespace {

// brute-force multiplicative order by repeated multiplication
std::uint32_t naive_order(const Field& F, Elem a) {
  Elem x = a;
  std::uint32_t n = 1;
  while (x != F.one()) {
    x = F.mul(x, a);
    ++n;
  }
  return n;
}

Poly random_poly(const FieldPtr& F, std::mt19937& rng, int deg) {
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % F->card())};
  return Poly(F, c);
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  auto F = Field::prime(7);
  EXPECT_EQ(F->mul(Elem{3}, Elem{5}).v, 1u);
  EXPECT_EQ(F->inv(Elem{3}).v, 5u);
  EXPECT_EQ(F->neg(Elem{2}).v, 5u);
}

TEST(Field, TowerAxioms) {
  auto F4 = Field::extend(Field::prime(2), 2);
  auto F16 = Field::extend(F4, 2);
  std::mt19937 rng(11);
  for (int it = 0; it < 300; ++it) {
    Elem a{static_cast<std::uint32_t>(rng() % 16)}, b{static_cast<std::uint32_t>(rng() % 16)},
        c{static_cast<std::uint32_t>(rng() % 16)};
    EXPECT_EQ(F16->mul(a, F16->add(b, c)), F16->add(F16->mul(a, b), F16->mul(a, c)));
    EXPECT_EQ(F16->mul(F16->mul(a, b), c), F16->mul(a, F16->mul(b, c)));
    if (a.v) EXPECT_EQ(F16->mul(a, F16->inv(a)), F16->one());
  }
  // subfield embeds with identical indices
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) EXPECT_EQ(F16->mul(Elem{a}, Elem{b}), F4->mul(Elem{a}, Elem{b}));
  EXPECT_EQ(naive_order(*F16, F16->primitive()), 15u);
  EXPECT_EQ(F16->frobenius_pow(Elem{5}, 4), Elem{5});
}

TEST(Field, ReducibleModulusReportsFactor) {
  auto F2 = Field::prime(2);
  try {
    Field::extend(F2, 2, std::vector<Elem>{Elem{1}, Elem{0}, Elem{1}});  // (x+1)^2
    FAIL();
  } catch (const ReducibleModulus& e) {
    EXPECT_FALSE(e.factor.empty());
  }
}

TEST(Poly, DivisionIdentity) {
  auto F = Field::extend(Field::prime(3), 2);
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    Poly a = random_poly(F, rng, 1 + static_cast<int>(rng() % 7));
    Poly b = random_poly(F, rng, static_cast<int>(rng() % 4));
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    auto [g, s, u] = xgcd(a, b);
    EXPECT_EQ(s * a + u * b, g);
  }
}

TEST(Poly, IrreducibleCountMatchesNecklaceFormula) {
  // monic irreducibles of degree 4 over F_2: (2^4 - 2^2) / 4 = 3
  auto F = Field::prime(2);
  int count = 0;
  for (std::uint32_t m = 0; m < 16; ++m) {
    std::vector<Elem> c(5);
    for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = Elem{(m >> i) & 1u};
    c[4] = Elem{1};
    if (is_irreducible(Poly(F, c))) ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(Laurent, InverseAndRationalExpansion) {
  auto F = Field::prime(3);
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Poly num = random_poly(F, rng, static_cast<int>(rng() % 4));
    Poly den = random_poly(F, rng, 1 + static_cast<int>(rng() % 4));
    if (den.is_zero() || num.is_zero()) continue;
    Laurent x = Laurent::expand_rational(num, den, 20);
    Laurent back = x * Laurent::from_poly(den);
    EXPECT_TRUE(equal_mod(back, Laurent::from_poly(num), 20 - den.degree()));
    Laurent y = x.inv(30);
    EXPECT_TRUE(equal_mod(x * y, Laurent::one(F), y.prec() - x.top()));
  }
}

TEST(Laurent, PrecisionIsTracked) {
  auto F = Field::prime(2);
  Laurent a = Laurent::expand_rational(Poly::one(F), Poly::t(F) + Poly::one(F), 10);
  EXPECT_THROW(a.coeff(-10), PrecisionError);
  EXPECT_NO_THROW(a.coeff(-9));
}

TEST(Linalg, CharpolyMatchesDeterminantOracle) {
  auto F = Field::prime(5);
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    const int n = 1 + static_cast<int>(rng() % 5);
    Mat A(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = Elem{static_cast<std::uint32_t>(rng() % 5)};
    Poly cp = charpoly(A);
    // evaluate det(x I - A) directly at every x
    for (std::uint32_t x = 0; x < 5; ++x) {
      Mat B = Mat::identity(F, n).scale(Elem{x}) - A;
      EXPECT_EQ(cp.eval(Elem{x}), B.det());
    }
    // Bareiss over F[t] agrees
    PolyMat P(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (i == j ? Poly::t(F) : Poly(F)) - Poly::constant(F, A.at(i, j));
    EXPECT_EQ(det(P), cp);
  }
}

TEST(Linalg, KernelAndSolve) {
  auto F = Field::prime(3);
  std::mt19937 rng(9);
  for (int it = 0; it < 30; ++it) {
    Mat A(F, 4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) A.at(i, j) = Elem{static_cast<std::uint32_t>(rng() % 3)};
    Mat K = A.kernel();
    EXPECT_EQ(K.cols(), 6 - A.rank());
    EXPECT_TRUE((A * K).is_zero());
    std::vector<Elem> x(6);
    for (auto& e : x) e = Elem{static_cast<std::uint32_t>(rng() % 3)};
    auto b = A.apply(x);
    auto y = A.solve(b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(A.apply(*y), b);
  }
}

TEST(Linalg, LaurentDeterminantMatchesPolynomialDeterminant) {
  auto F = Field::prime(2);
  std::mt19937 rng(4);
  for (int it = 0; it < 20; ++it) {
    PolyMat P(3, std::vector<Poly>(3));
    LaurentMat L(3, std::vector<Laurent>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        P[i][j] = random_poly(F, rng, 3);
        L[i][j] = Laurent::from_poly(P[i][j], 40);
      }
    Poly d = det(P);
    Laurent dl = det(L);
    EXPECT_TRUE(equal_mod(dl, Laurent::from_poly(d), 20));
  }
}
