#include <gtest/gtest.h>

#include "eqlv/trace.hpp"

using namespace eqlv;

namespace {

Poly P(const FieldPtr& k, const std::string& s) { return parse_poly(k, s); }

}  // namespace

TEST(Trace, CartierRule) {
  auto k = Field::prime(2);
  EXPECT_EQ(cartier(P(k, "t"), 1, 2), Poly::one(k));
  EXPECT_TRUE(cartier(Poly::one(k), 1, 2).is_zero());
  EXPECT_EQ(cartier(P(k, "t^7 + t^3 + t^2"), 2, 2), P(k, "t + 1"));
  auto k3 = Field::prime(3);
  EXPECT_EQ(cartier(P(k3, "2t^5 + t^2"), 1, 3), P(k3, "2t + 1"));
}

TEST(Trace, CartierSemilinear) {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    auto k = Field::prime(p);
    for (int trial = 0; trial < 20; ++trial) {
      auto rp = [&](int deg) {
        std::vector<Elem> c;
        for (int i = 0; i <= deg; ++i) c.push_back(k->elem(rng() % p));
        return Poly(k, c);
      };
      const Poly f = rp(3), g = rp(8);
      for (int n = 1; n <= 2; ++n) {
        const Poly fq = f.compose_power(static_cast<int>(n == 1 ? p : p * p));
        EXPECT_EQ(cartier(fq * g, n, p), f * cartier(g, n, p));
      }
    }
  }
}

TEST(Trace, AdjointDuality) {
  // <C_n w, t^a e_j> = C^n(<w, tau_n(t^a e_j)>), from the definition of tau_n
  std::mt19937 rng(9);
  auto k = Field::prime(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto S = random_sheaf(k, trial % 2 == 1, rng);
    const int D = nucleus_bound(S) + 1;
    for (std::size_t idx = 0; idx < S.T.size(); ++idx) {
      const int n = S.orders[idx];
      const int Q = n == 1 ? 2 : 4;
      for (int i = 0; i < S.m; ++i)
        for (int e = 0; e <= D; ++e) {
          std::vector<Poly> w(static_cast<std::size_t>(S.m), Poly(k));
          w[static_cast<std::size_t>(i)] = Poly::monomial(k, k->one(), e);
          const auto Cw = adjoint_apply(S, static_cast<int>(idx), w);
          for (int j = 0; j < S.m; ++j)
            for (int a = 0; a < 3; ++a) {
              const Poly lhs = Cw[static_cast<std::size_t>(j)] * Poly::monomial(k, k->one(), a);
              Poly pair(k);
              for (int r = 0; r < S.m; ++r)
                pair += w[static_cast<std::size_t>(r)] * S.T[idx][static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
                        Poly::monomial(k, k->one(), a * Q);
              EXPECT_EQ(lhs, cartier(pair, n, 2));
            }
        }
    }
  }
}

TEST(Trace, NucleusExamples) {
  auto k = Field::prime(2);
  const auto demo = qpower_demo(k);
  const auto Nc = find_nucleus(demo);
  EXPECT_EQ(Nc.D, 0);
  EXPECT_TRUE(Nc.closed);
  EXPECT_TRUE(Nc.ops[0].is_zero());  // C(dt) = 0
  TauSheafLine zero = demo;
  zero.T[0][0][0] = Poly(k);
  EXPECT_EQ(find_nucleus(zero).D, 0);
  EXPECT_EQ(verify_trace_formula(zero, 4).rhs[0], (Series{Elem{1}, {}, {}, {}, {}}));
  // tau = t^3 * Frobenius: degree bound ceil(3/1) - 1 = 2
  TauSheafLine t3 = demo;
  t3.T[0][0][0] = P(k, "t^3");
  EXPECT_EQ(nucleus_bound(t3), 2);
  EXPECT_TRUE(nucleus_at(t3, 2).closed);
}

TEST(Trace, QPowerDemo) {
  auto k = Field::prime(2);
  const auto R = verify_trace_formula(qpower_demo(k), 6);
  EXPECT_EQ(R.verdict, Verdict::Pass) << R.detail;
  // prod (1 - u^deg)^-1 = 1/(1 - 2u) = 1 in characteristic 2
  EXPECT_EQ(R.lhs[0], (Series{Elem{1}, {}, {}, {}, {}, {}, {}}));
  EXPECT_EQ(R.points, 2 + 1 + 2 + 3 + 6 + 9);
}

TEST(Trace, RandomInstances) {
  std::mt19937 rng(2024);
  for (std::uint32_t p : {2u, 3u}) {
    auto k = Field::prime(p);
    const int N = p == 2 ? 5 : 3;
    for (int trial = 0; trial < 10; ++trial) {
      const auto S = random_sheaf(k, p != 3 && trial % 2 == 1, rng);
      const auto R = verify_trace_formula(S, N);
      EXPECT_EQ(R.verdict, Verdict::Pass) << "p=" << p << " trial " << trial << ": " << R.detail;
      EXPECT_TRUE(R.factor_shape);
      EXPECT_TRUE(R.nucleus_stable);
    }
  }
}

TEST(Trace, EquivariantSplitsIntoCharacterTwists) {
  // the character components of a Z/3 instance are the trace formulas of the
  // rank-1 sheaves over F_4 obtained by diagonalizing S
  std::mt19937 rng(77);
  auto k = Field::prime(2);
  const auto S = random_sheaf(k, true, rng);
  const auto R = verify_trace_formula(S, 5);
  ASSERT_EQ(R.verdict, Verdict::Pass) << R.detail;
  const auto ct = decompose(S.G, k);
  // the trivial character does not occur in k^2 with this action
  EXPECT_EQ(R.lhs[0], (Series{Elem{1}, {}, {}, {}, {}, {}}));
  for (int chi = 1; chi < 3; ++chi) {
    // eigenvalue of the generator on the chi-part
    const Elem w = ct.value(chi, S.G.generator(0));
    TauSheafLine one;
    one.k = k;
    one.A = ct.split;
    one.m = 1;
    one.orders = S.orders;
    for (const auto& T : S.T) {
      // T = a + b S with a = T[0][0] + T[1][0]... read a, b from the matrix: S = [[0,1],[1,1]]
      const Poly b = T[1][0].lift(ct.split), a = T[0][0].lift(ct.split);
      one.T.push_back(PolyMat{{a + b.scale(w)}});
    }
    const auto Rc = verify_trace_formula(one, 5);
    EXPECT_EQ(Rc.lhs[0], R.lhs[static_cast<std::size_t>(chi)]) << chi;
  }
}
