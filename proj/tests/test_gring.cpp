#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace eqlv;

using namespace eqlv::oracle;

TEST(Gring, DecomposeZ3OverF2) {
  auto ct = decompose(AbelianGroup::cyclic(3), Field::prime(2));
  EXPECT_EQ(ct.split->card(), 4u);
  ASSERT_EQ(ct.orbits.size(), 2u);
  EXPECT_EQ(ct.orbits[0].size(), 1u);
  EXPECT_EQ(ct.orbits[1].size(), 2u);
}

TEST(Gring, DecomposeZ2OverF3) {
  auto ct = decompose(AbelianGroup::cyclic(2), Field::prime(3));
  EXPECT_EQ(ct.split->card(), 3u);
  EXPECT_EQ(ct.orbits.size(), 2u);
}

TEST(Gring, TrivialGroup) {
  auto ct = decompose(AbelianGroup::trivial(), Field::prime(5));
  EXPECT_EQ(ct.count(), 1);
  EXPECT_EQ(ct.value(0, 0), Elem{1});
}

TEST(Gring, RejectsModularCase) {
  EXPECT_THROW(decompose(AbelianGroup::cyclic(4), Field::prime(2)), GroupRingError);
}

TEST(Gring, OrthogonalityAndIdempotents) {
  std::vector<std::pair<AbelianGroup, FieldPtr>> cases = {
      {AbelianGroup::cyclic(3), Field::prime(2)},      {AbelianGroup::cyclic(5), Field::prime(2)},
      {AbelianGroup::cyclic(7), Field::prime(2)},      {AbelianGroup({3, 3}), Field::prime(2)},
      {AbelianGroup::cyclic(4), Field::prime(3)},      {AbelianGroup({2, 2}), Field::prime(3)},
      {AbelianGroup({2, 4}), Field::prime(5)},         {AbelianGroup::cyclic(9), Field::prime(2)},
      {AbelianGroup::cyclic(11), Field::prime(3)},     {AbelianGroup({2, 6}), Field::prime(5)},
  };
  for (auto& [G, k] : cases) {
    auto ct = decompose(G, k);
    const Field& F = *ct.split;
    ASSERT_EQ(ct.count(), G.size());
    for (int a = 0; a < ct.count(); ++a)
      for (int b = 0; b < ct.count(); ++b) {
        Elem s{0};
        for (int g = 0; g < G.size(); ++g) s = F.add(s, F.mul(ct.value(a, g), ct.value(b, G.inv(g))));
        EXPECT_EQ(s, a == b ? F.from_int(G.size()) : Elem{0});
      }
    // sum of orbit idempotents is 1, products vanish, each is idempotent
    std::vector<GroupRingElem<Poly>> es;
    for (std::size_t o = 0; o < ct.orbits.size(); ++o) {
      auto e = ct.orbit_idempotent(static_cast<int>(o));
      GPoly u{G, {}};
      for (auto x : e) u.c.push_back(Poly::constant(k, x));
      es.push_back(u);
    }
    GPoly sum = gr_scalar(G, Poly(k), Poly(k));
    for (auto& e : es) sum = gr_add(sum, e);
    EXPECT_EQ(sum.c[0], Poly::one(k));
    for (int g = 1; g < G.size(); ++g) EXPECT_TRUE(sum.c[static_cast<std::size_t>(g)].is_zero());
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) {
        auto pr = gr_mul(es[i], es[j]);
        for (int g = 0; g < G.size(); ++g)
          EXPECT_EQ(pr.c[static_cast<std::size_t>(g)], i == j ? es[i].c[static_cast<std::size_t>(g)] : Poly(k));
      }
  }
}

TEST(Gring, DetEquivariantSmallCases) {
  auto k = Field::prime(2);
  AbelianGroup G = AbelianGroup::cyclic(3);
  auto ct = decompose(G, k);
  GPoly g1 = gr_scalar(G, Poly(k), Poly(k));
  g1.c[1] = Poly::one(k);
  EXPECT_EQ(det_equivariant(ct, {{g1}}).c, g1.c);
  std::mt19937 rng(1);
  GPoly a = rand_gpoly(G, k, rng, 2), b = rand_gpoly(G, k, rng, 2);
  GPoly z = gr_scalar(G, Poly(k), Poly(k));
  EXPECT_EQ(det_equivariant(ct, {{a, z}, {z, b}}).c, gr_mul(a, b).c);
}

TEST(Gring, DetEquivariantBlockTriangularMultiplicative) {
  auto k = Field::prime(3);
  AbelianGroup G = AbelianGroup::cyclic(2);
  auto ct = decompose(G, k);
  std::mt19937 rng(2);
  for (int it = 0; it < 20; ++it) {
    GPolyMat A = {{rand_gpoly(G, k, rng, 1), rand_gpoly(G, k, rng, 1)},
                  {rand_gpoly(G, k, rng, 1), rand_gpoly(G, k, rng, 1)}};
    GPolyMat B = {{rand_gpoly(G, k, rng, 1)}};
    GPoly X = rand_gpoly(G, k, rng, 1);
    GPoly z = gr_scalar(G, Poly(k), Poly(k));
    GPolyMat M = {{A[0][0], A[0][1], X}, {A[1][0], A[1][1], X}, {z, z, B[0][0]}};
    EXPECT_EQ(det_equivariant(ct, M).c, gr_mul(det_equivariant(ct, A), det_equivariant(ct, B)).c);
  }
}

TEST(Gring, DetEquivariantMatchesNormOverRegularExpansion) {
  // det over k[t] of the expanded matrix equals the product of all character components
  auto k = Field::prime(2);
  AbelianGroup G = AbelianGroup::cyclic(3);
  auto ct = decompose(G, k);
  std::mt19937 rng(3);
  for (int it = 0; it < 10; ++it) {
    GPolyMat phi = {{rand_gpoly(G, k, rng, 2), rand_gpoly(G, k, rng, 1)},
                    {rand_gpoly(G, k, rng, 1), rand_gpoly(G, k, rng, 2)}};
    auto d = det_equivariant(ct, phi);
    Poly prod = Poly::one(ct.split);
    for (auto& c : components(ct, d)) prod = prod * c;
    EXPECT_EQ(prod, det(regular_expansion(G, ct.split, phi)));
  }
}

TEST(Gring, HomDeterminantIsTwistedEquivariantDeterminant) {
  for (int order : {2, 3}) {
    auto k = Field::prime(order == 2 ? 3 : 2);
    AbelianGroup G = AbelianGroup::cyclic(order);
    auto ct = decompose(G, k);
    std::mt19937 rng(40 + order);
    for (int it = 0; it < 8; ++it) {
      const int r = 1 + static_cast<int>(rng() % 3);
      GPolyMat phi(static_cast<std::size_t>(r));
      for (auto& row : phi)
        for (int j = 0; j < r; ++j) row.push_back(rand_gpoly(G, k, rng, 2));
      for (int chi = 0; chi < ct.count(); ++chi) EXPECT_TRUE(hom_determinant_identity(ct, phi, chi)) << "chi=" << chi;
    }
  }
}

TEST(Gring, TwistDetRegularIsProductOfComponents) {
  auto k = Field::prime(2);
  AbelianGroup G = AbelianGroup::cyclic(3);
  auto ct = decompose(G, k);
  std::mt19937 rng(5);
  for (int it = 0; it < 10; ++it) {
    GLaurent u{G, {}};
    for (int g = 0; g < 3; ++g)
      u.c.push_back(Laurent::expand_rational(rand_poly(k, rng, 3), rand_poly(k, rng, 2) + Poly::monomial(k, k->one(), 3), 12));
    Laurent prod = Laurent::one(ct.split);
    for (auto& c : components(ct, u)) prod = prod * c;
    Laurent tw = twist_det(u, Rep::regular(G, ct.split));
    EXPECT_TRUE(equal_mod(tw, prod, std::min(tw.prec(), prod.prec())));
  }
}

TEST(Gring, MonicRepresentative) {
  auto k = Field::prime(5);
  GLaurent u{AbelianGroup::trivial(), {Laurent::from_poly(Poly(k, {Elem{0}, Elem{0}, Elem{3}}))}};
  auto ct = decompose(u.G, k);
  auto m = monic_representative_gring(ct, u);
  EXPECT_TRUE(equal_mod(m.c[0], Laurent::monomial(k, k->one(), 2), 30));
  // constants go to 1, and normalization is idempotent
  auto k2 = Field::prime(2);
  AbelianGroup G = AbelianGroup::cyclic(3);
  auto ct3 = decompose(G, k2);
  std::mt19937 rng(8);
  GLaurent v{G, {}};
  for (int g = 0; g < 3; ++g)
    v.c.push_back(Laurent::from_poly(rand_poly(k2, rng, 2) + (g == 0 ? Poly::monomial(k2, k2->one(), 3) : Poly(k2)), 20));
  auto m1 = monic_representative_gring(ct3, v);
  auto m2 = monic_representative_gring(ct3, m1);
  for (int g = 0; g < 3; ++g) EXPECT_TRUE(equal_mod(m1.c[static_cast<std::size_t>(g)], m2.c[static_cast<std::size_t>(g)], 20));
  for (auto& c : components(ct3, m1)) EXPECT_EQ(c.lead(), Elem{1});
}

TEST(Gring, RepresentationValidation) {
  auto F = Field::prime(3);
  AbelianGroup G = AbelianGroup::cyclic(2);
  Mat bad(F, 1, 1);
  bad.at(0, 0) = Elem{1};
  bad.at(0, 0) = F->from_int(2);  // -1 has order 2: fine
  EXPECT_NO_THROW(Rep::from_generators(G, F, {bad}));
  Mat wrong(F, 1, 1);
  wrong.at(0, 0) = Elem{1};
  Rep r = Rep::trivial(G, F);
  r.mats[1] = bad;
  r.mats[0] = bad;  // rho(1) != I
  EXPECT_THROW(r.validate(), GroupRingError);
}
