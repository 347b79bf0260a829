#include "eqlv/gring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqlv {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  size_ = 1;
  for (int n : orders_) {
    if (n < 1) throw GroupRingError("cyclic factor order must be positive");
    size_ *= n;
  }
}

int AbelianGroup::exponent() const {
  int e = 1;
  for (int n : orders_) e = std::lcm(e, n);
  return e;
}

int AbelianGroup::generator(int i) const {
  std::vector<int> e(orders_.size(), 0);
  e[static_cast<std::size_t>(i)] = 1 % orders_[static_cast<std::size_t>(i)];
  return index(e);
}

std::vector<int> AbelianGroup::exps(int g) const {
  std::vector<int> e(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = g % orders_[i];
    g /= orders_[i];
  }
  return e;
}

int AbelianGroup::index(const std::vector<int>& e) const {
  int g = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const int n = orders_[i];
    g = g * n + ((e[i] % n) + n) % n;
  }
  return g;
}

int AbelianGroup::mul(int a, int b) const {
  auto x = exps(a), y = exps(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return index(x);
}

int AbelianGroup::inv(int a) const {
  auto x = exps(a);
  for (auto& v : x) v = -v;
  return index(x);
}

int AbelianGroup::pow(int a, long long e) const {
  auto x = exps(a);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<int>((static_cast<long long>(x[i]) * (e % orders_[i])) % orders_[i]);
  return index(x);
}

int AbelianGroup::order_of(int a) const {
  int n = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++n;
  return n;
}

std::vector<int> AbelianGroup::subgroup(const std::vector<int>& gens) const {
  std::vector<char> in(static_cast<std::size_t>(size_), 0);
  std::vector<int> H{0};
  in[0] = 1;
  for (std::size_t i = 0; i < H.size(); ++i)
    for (int g : gens) {
      const int h = mul(H[i], g);
      if (!in[static_cast<std::size_t>(h)]) {
        in[static_cast<std::size_t>(h)] = 1;
        H.push_back(h);
      }
    }
  std::sort(H.begin(), H.end());
  return H;
}

std::string AbelianGroup::label(int g) const {
  std::ostringstream os;
  os << '[';
  auto e = exps(g);
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ']';
  return os.str();
}

int CharacterTable::frobenius(int chi) const {
  const Field& F = *split;
  const auto q = k->card();
  for (int c = 0; c < count(); ++c) {
    bool ok = true;
    for (int g = 0; g < G.size() && ok; ++g) ok = value(c, g) == F.pow(value(chi, g), q);
    if (ok) return c;
  }
  throw GroupRingError("character table not closed under Frobenius");
}

int CharacterTable::conjugate(int chi) const {
  for (int c = 0; c < count(); ++c) {
    bool ok = true;
    for (int g = 0; g < G.size() && ok; ++g) ok = value(c, g) == value(chi, G.inv(g));
    if (ok) return c;
  }
  throw GroupRingError("character table not closed under inversion");
}

std::vector<Elem> CharacterTable::orbit_idempotent(int orbit) const {
  const Field& F = *split;
  std::vector<Elem> e(static_cast<std::size_t>(G.size()), Elem{0});
  for (int chi : orbits[static_cast<std::size_t>(orbit)])
    for (int g = 0; g < G.size(); ++g)
      e[static_cast<std::size_t>(g)] = F.add(e[static_cast<std::size_t>(g)], idempotents[static_cast<std::size_t>(chi)][static_cast<std::size_t>(g)]);
  for (auto x : e)
    if (!F.in_base(x)) throw GroupRingError("orbit idempotent not defined over k");
  return e;
}

CharacterTable decompose(const AbelianGroup& G, const FieldPtr& k) {
  const std::uint32_t p = k->p();
  if (G.size() % static_cast<int>(p) == 0) throw GroupRingError("group order divisible by the characteristic");
  CharacterTable ct;
  ct.G = G;
  ct.k = k;
  const auto e = static_cast<std::uint64_t>(G.exponent());
  // degree of F'/k = order of q modulo exp(G)
  int d = 1;
  for (std::uint64_t qq = k->card() % e; qq != 1 % e; qq = (qq * k->card()) % e) ++d;
  ct.split = Field::extend(k, d);
  const Field& F = *ct.split;

  std::vector<Elem> zeta;
  for (int n : G.orders()) zeta.push_back(F.root_of_unity(static_cast<std::uint32_t>(n)));
  struct Row {
    std::vector<std::uint32_t> key;
    std::vector<Elem> vals;
  };
  std::vector<Row> rows;
  for (int c = 0; c < G.size(); ++c) {
    const auto ce = G.exps(c);
    Row r;
    r.vals.resize(static_cast<std::size_t>(G.size()));
    for (int g = 0; g < G.size(); ++g) {
      const auto ge = G.exps(g);
      Elem v = F.one();
      for (std::size_t i = 0; i < ge.size(); ++i)
        v = F.mul(v, F.pow(zeta[i], static_cast<std::uint64_t>(ce[i]) * static_cast<std::uint64_t>(ge[i])));
      r.vals[static_cast<std::size_t>(g)] = v;
    }
    for (int i = 0; i < G.rank(); ++i) r.key.push_back(r.vals[static_cast<std::size_t>(G.generator(i))].v);
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key < b.key; });
  for (auto& r : rows) ct.values.push_back(std::move(r.vals));

  const Elem inv_n = F.inv(F.from_int(G.size()));
  for (int c = 0; c < G.size(); ++c) {
    std::vector<Elem> idem(static_cast<std::size_t>(G.size()));
    for (int g = 0; g < G.size(); ++g) idem[static_cast<std::size_t>(g)] = F.mul(inv_n, ct.value(c, G.inv(g)));
    ct.idempotents.push_back(std::move(idem));
  }
  std::vector<char> seen(static_cast<std::size_t>(G.size()), 0);
  for (int c = 0; c < G.size(); ++c) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    std::vector<int> orb;
    for (int x = c; !seen[static_cast<std::size_t>(x)]; x = ct.frobenius(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      orb.push_back(x);
    }
    ct.orbits.push_back(std::move(orb));
  }
  return ct;
}

namespace {

template <class T>
T component_impl(const CharacterTable& ct, const GroupRingElem<T>& u, int chi, T acc) {
  for (int g = 0; g < ct.G.size(); ++g)
    acc = acc + u.c[static_cast<std::size_t>(g)].lift(ct.split).scale(ct.value(chi, g));
  return acc;
}

template <class T>
GroupRingElem<T> assemble_impl(const CharacterTable& ct, const std::vector<T>& comps, T zero) {
  const Field& F = *ct.split;
  const Elem inv_n = F.inv(F.from_int(ct.G.size()));
  GroupRingElem<T> u{ct.G, {}};
  for (int g = 0; g < ct.G.size(); ++g) {
    T s = zero;
    for (int chi = 0; chi < ct.count(); ++chi)
      s = s + comps[static_cast<std::size_t>(chi)].scale(F.mul(inv_n, ct.value(chi, ct.G.inv(g))));
    for (auto x : s.coeffs())
      if (!F.in_base(x)) throw GroupRingError("characterwise data is not Galois-stable");
    u.c.push_back(s.lift(ct.k));
  }
  return u;
}

}  // namespace

Poly component(const CharacterTable& ct, const GPoly& u, int chi) {
  return component_impl(ct, u, chi, Poly(ct.split));
}

Laurent component(const CharacterTable& ct, const GLaurent& u, int chi) {
  int prec = Laurent::kExact;
  for (const auto& x : u.c) prec = std::min(prec, x.prec());
  return component_impl(ct, u, chi, Laurent::zero(ct.split, prec));
}

std::vector<Poly> components(const CharacterTable& ct, const GPoly& u) {
  std::vector<Poly> r;
  for (int chi = 0; chi < ct.count(); ++chi) r.push_back(component(ct, u, chi));
  return r;
}

std::vector<Laurent> components(const CharacterTable& ct, const GLaurent& u) {
  std::vector<Laurent> r;
  for (int chi = 0; chi < ct.count(); ++chi) r.push_back(component(ct, u, chi));
  return r;
}

GPoly assemble(const CharacterTable& ct, const std::vector<Poly>& comps) {
  return assemble_impl(ct, comps, Poly(ct.split));
}

GLaurent assemble(const CharacterTable& ct, const std::vector<Laurent>& comps) {
  int prec = Laurent::kExact;
  for (const auto& x : comps) prec = std::min(prec, x.prec());
  return assemble_impl(ct, comps, Laurent::zero(ct.split, prec));
}

GPoly det_equivariant(const CharacterTable& ct, const GPolyMat& phi) {
  const std::size_t n = phi.size();
  for (const auto& row : phi)
    if (row.size() != n) throw GroupRingError("det_equivariant: matrix is not square");
  std::vector<Poly> comps;
  for (int chi = 0; chi < ct.count(); ++chi) {
    if (n == 0) {
      comps.push_back(Poly::one(ct.split));
      continue;
    }
    PolyMat M(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = component(ct, phi[i][j], chi);
    comps.push_back(det(M));
  }
  return assemble(ct, comps);
}

Mat regular_matrix(const AbelianGroup& G, const FieldPtr& F, int g) {
  Mat M(F, G.size(), G.size());
  for (int h = 0; h < G.size(); ++h) M.at(G.mul(g, h), h) = F->one();
  return M;
}

Rep Rep::from_generators(const AbelianGroup& G, const FieldPtr& F, const std::vector<Mat>& gens) {
  if (static_cast<int>(gens.size()) != G.rank()) throw GroupRingError("representation: one matrix per generator expected");
  Rep r;
  r.G = G;
  r.F = F;
  r.dim = gens.empty() ? 1 : gens[0].rows();
  for (int g = 0; g < G.size(); ++g) {
    Mat M = Mat::identity(F, r.dim);
    auto e = G.exps(g);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int s = 0; s < e[i]; ++s) M = M * gens[i];
    r.mats.push_back(M);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Mat P = Mat::identity(F, r.dim);
    for (int s = 0; s < G.orders()[i]; ++s) P = P * gens[i];
    if (P != Mat::identity(F, r.dim)) throw GroupRingError("representation: generator order relation fails");
  }
  r.validate();
  return r;
}

Rep Rep::character(const CharacterTable& ct, int chi) {
  Rep r;
  r.G = ct.G;
  r.F = ct.split;
  r.dim = 1;
  for (int g = 0; g < ct.G.size(); ++g) {
    Mat M(ct.split, 1, 1);
    M.at(0, 0) = ct.value(chi, g);
    r.mats.push_back(M);
  }
  return r;
}

Rep Rep::trivial(const AbelianGroup& G, const FieldPtr& F) {
  Rep r;
  r.G = G;
  r.F = F;
  r.dim = 1;
  r.mats.assign(static_cast<std::size_t>(G.size()), Mat::identity(F, 1));
  return r;
}

Rep Rep::regular(const AbelianGroup& G, const FieldPtr& F) {
  Rep r;
  r.G = G;
  r.F = F;
  r.dim = G.size();
  for (int g = 0; g < G.size(); ++g) r.mats.push_back(regular_matrix(G, F, g));
  return r;
}

void Rep::validate() const {
  if (static_cast<int>(mats.size()) != G.size()) throw GroupRingError("representation: wrong number of matrices");
  for (const auto& M : mats)
    if (M.rows() != dim || M.cols() != dim) throw GroupRingError("representation: dimension mismatch");
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      if (at(g) * at(h) != at(G.mul(g, h))) throw GroupRingError("representation is not multiplicative");
}

Laurent twist_det(const GLaurent& u, const Rep& rho) {
  if (!(u.G == rho.G)) throw GroupRingError("twist_det: group mismatch");
  int prec = Laurent::kExact;
  for (const auto& x : u.c) prec = std::min(prec, x.prec());
  const auto m = static_cast<std::size_t>(rho.dim);
  LaurentMat M(m, std::vector<Laurent>(m, Laurent::zero(rho.F, prec)));
  for (int g = 0; g < u.G.size(); ++g) {
    const Laurent ug = u.c[static_cast<std::size_t>(g)].lift(rho.F);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Elem r = rho.at(g).at(static_cast<int>(i), static_cast<int>(j));
        if (r.v) M[i][j] = M[i][j] + ug.scale(r);
      }
  }
  return det(M);
}

GLaurent monic_representative_gring(const CharacterTable& ct, const GLaurent& u) {
  auto comps = components(ct, u);
  for (auto& c : comps) {
    if (!c.is_unit()) throw PrecisionError("monic representative of a non-unit group-ring element");
    c = c.monic();
  }
  return assemble(ct, comps);
}

Mat isotypic_basis(const CharacterTable& ct, const std::vector<Mat>& action, int chi) {
  const FieldPtr& F = ct.split;
  const int d = action.at(0).rows();
  Mat P(F, d, d);
  for (int g = 0; g < ct.G.size(); ++g)
    P = P + action[static_cast<std::size_t>(g)].lift(F).scale(ct.idempotents[static_cast<std::size_t>(chi)][static_cast<std::size_t>(g)]);
  return P.column_basis();
}

std::vector<Poly> charpoly_equivariant(const CharacterTable& ct, const std::vector<Mat>& action, const Mat& T,
                                       bool require_free) {
  std::vector<Poly> out;
  int dim = -1;
  const Mat TF = T.lift(ct.split);
  for (int chi = 0; chi < ct.count(); ++chi) {
    Mat B = isotypic_basis(ct, action, chi);
    if (dim < 0) dim = B.cols();
    if (require_free && B.cols() != dim)
      throw GroupRingError("space is not free over k[G] (isotypic dimensions differ); wild or unsupported context");
    out.push_back(charpoly(restrict_to(TF, B)));
  }
  return out;
}

namespace {
template <class T>
std::string render_impl(const GroupRingElem<T>& u) {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < u.G.size(); ++g) {
    const T& x = u.c[static_cast<std::size_t>(g)];
    if (x.is_zero()) continue;
    os << (first ? "" : " + ") << '(' << x.str() << ")*" << u.G.label(g);
    first = false;
  }
  return first ? "0" : os.str();
}
}  // namespace

std::string render(const GPoly& u) { return render_impl(u); }
std::string render(const GLaurent& u) { return render_impl(u); }

}  // namespace eqlv
