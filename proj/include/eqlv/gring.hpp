#pragma once

#include <string>
#include <vector>

#include "eqlv/laurent.hpp"
#include "eqlv/linalg.hpp"

namespace eqlv {

/// Finite abelian group Z/n_1 x ... x Z/n_r. Elements are indexed 0..|G|-1 in
/// mixed radix, first factor least significant; index 0 is the identity.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> orders);
  static AbelianGroup trivial() { return AbelianGroup(std::vector<int>{}); }
  static AbelianGroup cyclic(int n) { return AbelianGroup({n}); }

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return size_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  /// Least common multiple of the factor orders.
  int exponent() const;
  int identity() const { return 0; }
  int generator(int i) const;

  std::vector<int> exps(int g) const;
  int index(const std::vector<int>& e) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long e) const;
  int order_of(int a) const;
  /// Subgroup generated by the given elements (sorted indices).
  std::vector<int> subgroup(const std::vector<int>& gens) const;
  std::string label(int g) const;  // "[1,0]"
  bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<int> orders_;
  int size_ = 1;
};

class GroupRingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characters of G with values in the splitting field F' of k.
struct CharacterTable {
  AbelianGroup G;
  FieldPtr k;
  FieldPtr split;                            // F', with base designation k
  std::vector<std::vector<Elem>> values;     // values[chi][g]
  std::vector<std::vector<int>> orbits;      // Frobenius orbits chi -> chi^q, i.e. factors k_i of k[G]
  std::vector<std::vector<Elem>> idempotents;  // e_chi in F'[G]

  int count() const { return static_cast<int>(values.size()); }
  Elem value(int chi, int g) const { return values[static_cast<std::size_t>(chi)][static_cast<std::size_t>(g)]; }
  int trivial() const { return 0; }
  /// chi' with chi'(g) = chi(g)^q.
  int frobenius(int chi) const;
  int conjugate(int chi) const;  // chi^{-1}
  /// Orbit idempotent of k[G] (coefficients in k).
  std::vector<Elem> orbit_idempotent(int orbit) const;
};

/// Splitting field, characters (ordered by their values on the generators),
/// idempotents and Galois orbits. Throws when p divides |G|.
CharacterTable decompose(const AbelianGroup& G, const FieldPtr& k);

/// Element of R[G]; coefficient type T is Elem, Poly or Laurent.
template <class T>
struct GroupRingElem {
  AbelianGroup G;
  std::vector<T> c;  // c[g]
};

using GPoly = GroupRingElem<Poly>;
using GLaurent = GroupRingElem<Laurent>;

template <class T>
GroupRingElem<T> gr_scalar(const AbelianGroup& G, const T& a, const T& zero) {
  GroupRingElem<T> u{G, std::vector<T>(static_cast<std::size_t>(G.size()), zero)};
  u.c[0] = a;
  return u;
}

template <class T>
GroupRingElem<T> gr_add(const GroupRingElem<T>& a, const GroupRingElem<T>& b) {
  GroupRingElem<T> r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  return r;
}

template <class T>
GroupRingElem<T> gr_sub(const GroupRingElem<T>& a, const GroupRingElem<T>& b) {
  GroupRingElem<T> r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  return r;
}

template <class T>
GroupRingElem<T> gr_mul(const GroupRingElem<T>& a, const GroupRingElem<T>& b) {
  const AbelianGroup& G = a.G;
  GroupRingElem<T> r{G, std::vector<T>(a.c.size(), a.c[0] - a.c[0])};
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h) {
      const auto gh = static_cast<std::size_t>(G.mul(g, h));
      r.c[gh] = r.c[gh] + a.c[static_cast<std::size_t>(g)] * b.c[static_cast<std::size_t>(h)];
    }
  return r;
}

/// chi(u) = sum_g u_g chi(g), over F'.
Poly component(const CharacterTable& ct, const GPoly& u, int chi);
Laurent component(const CharacterTable& ct, const GLaurent& u, int chi);
std::vector<Poly> components(const CharacterTable& ct, const GPoly& u);
std::vector<Laurent> components(const CharacterTable& ct, const GLaurent& u);
/// Inverse of `components`: u_g = (1/|G|) sum_chi comp_chi chi(g^-1). The
/// result must be Galois-stable; it is returned over k (throws otherwise).
GPoly assemble(const CharacterTable& ct, const std::vector<Poly>& comps);
GLaurent assemble(const CharacterTable& ct, const std::vector<Laurent>& comps);

/// Square matrix over k[t][G].
using GPolyMat = std::vector<std::vector<GPoly>>;
/// Determinant over k[t][G], characterwise.
GPoly det_equivariant(const CharacterTable& ct, const GPolyMat& phi);

/// Matrix of g acting on k[G] by multiplication (regular representation).
Mat regular_matrix(const AbelianGroup& G, const FieldPtr& F, int g);

/// Matrix representation rho: G -> GL_m(F), one matrix per group element.
struct Rep {
  AbelianGroup G;
  FieldPtr F;
  int dim = 0;
  std::vector<Mat> mats;

  /// Extends generator images multiplicatively; validates the relations.
  static Rep from_generators(const AbelianGroup& G, const FieldPtr& F, const std::vector<Mat>& gens);
  static Rep character(const CharacterTable& ct, int chi);
  static Rep trivial(const AbelianGroup& G, const FieldPtr& F);
  static Rep regular(const AbelianGroup& G, const FieldPtr& F);
  const Mat& at(int g) const { return mats[static_cast<std::size_t>(g)]; }
  /// Throws unless rho(g) rho(h) = rho(gh) for all pairs.
  void validate() const;
};

/// det over F((1/t)) of sum_g u_g rho(g) on V((1/t)).
Laurent twist_det(const GLaurent& u, const Rep& rho);

/// Characterwise monic normalization in k((1/t))[G].
GLaurent monic_representative_gring(const CharacterTable& ct, const GLaurent& u);

/// chi-isotypic part {w : g w = chi(g) w} of a k-space with G-action given by
/// `action[g]` (over k); basis columns over F'.
Mat isotypic_basis(const CharacterTable& ct, const std::vector<Mat>& action, int chi);

/// Characterwise charpolys of a G-equivariant k-linear map T on a k[G]-free
/// space: entry chi is det(t - T) on the chi-isotypic part, over F'[t].
/// Throws GroupRingError when the isotypic dimensions differ (space not free).
/// With require_free = false the isotypic dimensions may differ (finite modules).
std::vector<Poly> charpoly_equivariant(const CharacterTable& ct, const std::vector<Mat>& action, const Mat& T,
                                       bool require_free = true);

std::string render(const GPoly& u);
std::string render(const GLaurent& u);

}  // namespace eqlv
