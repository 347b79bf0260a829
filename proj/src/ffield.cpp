#include "eqlv/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqlv {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint32_t kTableLimit = 1u << 16;

}  // namespace

// ---------------------------------------------------------------------------
// raw polynomial helpers

namespace rawpoly {

std::vector<Elem> trim(std::vector<Elem> a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
  return a;
}

std::vector<Elem> mod(const Field& F, std::vector<Elem> a, const std::vector<Elem>& m) {
  a = trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  const Elem lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    const Elem c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    a = trim(std::move(a));
  }
  return a;
}

std::vector<Elem> mulmod(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b,
                         const std::vector<Elem>& m) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return mod(F, std::move(r), m);
}

std::vector<Elem> gcd(const Field& F, std::vector<Elem> a, std::vector<Elem> b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

std::optional<std::vector<Elem>> find_factor(const Field& F, const std::vector<Elem>& f) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m <= 1) return std::nullopt;
  const std::uint64_t Q = F.card();
  // x^(Q^i) mod f by repeated Q-th powering
  std::vector<Elem> x = {F.zero(), F.one()};
  std::vector<Elem> cur = mod(F, x, f);
  for (int i = 1; i <= m / 2; ++i) {
    std::vector<Elem> acc = {F.one()};
    std::vector<Elem> base = cur;
    for (std::uint64_t e = Q; e; e >>= 1) {
      if (e & 1) acc = mulmod(F, acc, base, f);
      base = mulmod(F, base, base, f);
    }
    cur = acc;
    auto diff = cur;
    diff.resize(std::max<std::size_t>(diff.size(), 2), F.zero());
    diff[1] = F.sub(diff[1], F.one());
    auto g = gcd(F, f, trim(diff));
    if (g.size() > 1) return g;
  }
  return std::nullopt;
}

}  // namespace rawpoly

// ---------------------------------------------------------------------------

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
  std::shared_ptr<Field> F(new Field());
  F->p_ = p;
  F->prime_degree_ = 1;
  F->base_level_ = 0;
  F->levels_.push_back(Level{p, 1, {}});
  F->build_tables();
  return F;
}

FieldPtr Field::as_ground() const {
  std::shared_ptr<Field> F(new Field(*this));
  F->base_level_ = static_cast<int>(levels_.size()) - 1;
  return F;
}

int Field::degree() const {
  int d = 1;
  for (std::size_t i = static_cast<std::size_t>(base_level_) + 1; i < levels_.size(); ++i)
    d *= levels_[i].degree;
  return d;
}

FieldPtr Field::extend(const FieldPtr& base, int degree, std::optional<std::vector<Elem>> modulus) {
  if (degree < 1) throw FieldError("extension degree must be >= 1");
  if (degree == 1) {
    std::shared_ptr<Field> F(new Field(*base));
    F->base_level_ = static_cast<int>(base->levels_.size()) - 1;
    return F;
  }
  const std::uint64_t Q = base->card();
  std::uint64_t card = 1;
  for (int i = 0; i < degree; ++i) {
    card *= Q;
    if (card > 0xFFFFFFFFull) throw FieldError("field too large for 32-bit indices");
  }
  std::vector<Elem> f;
  if (modulus) {
    f = rawpoly::trim(*modulus);
    if (static_cast<int>(f.size()) != degree + 1 || f.back() != base->one())
      throw FieldError("modulus must be monic of degree " + std::to_string(degree));
    for (auto c : f)
      if (c.v >= Q) throw FieldError("modulus coefficient outside base field");
    if (f[0].v == 0) throw ReducibleModulus("modulus divisible by x", {base->zero(), base->one()});
    if (auto fac = rawpoly::find_factor(*base, f))
      throw ReducibleModulus("reducible modulus", *fac);
  } else {
    // lexicographic scan: leading non-monic coefficient most significant
    std::uint64_t total = card;  // Q^degree candidates
    bool found = false;
    for (std::uint64_t n = 0; n < total && !found; ++n) {
      std::vector<Elem> cand(static_cast<std::size_t>(degree) + 1);
      std::uint64_t r = n;
      for (int i = 0; i < degree; ++i) {
        cand[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(r % Q)};
        r /= Q;
      }
      cand.back() = base->one();
      if (cand[0].v == 0) continue;
      if (!rawpoly::find_factor(*base, cand)) {
        f = cand;
        found = true;
      }
    }
    if (!found) throw FieldError("no irreducible polynomial found");
  }
  std::shared_ptr<Field> F(new Field(*base));
  F->log_.clear();
  F->exp_.clear();
  F->base_level_ = static_cast<int>(base->levels_.size()) - 1;
  F->prime_degree_ = base->prime_degree_ * degree;
  F->levels_.push_back(Level{static_cast<std::uint32_t>(card), degree, f});
  F->build_tables();
  return F;
}

void Field::build_tables() {
  const std::uint32_t n = card();
  if (n > kTableLimit) return;
  // find a primitive element by brute force using slow multiplication
  std::vector<std::uint32_t> lg(n, 0), ex(2 * n, 0);
  for (std::uint32_t g = 1; g < n; ++g) {
    std::vector<char> seen(n, 0);
    Elem x = one();
    std::uint32_t k = 0;
    bool ok = true;
    for (; k < n - 1; ++k) {
      if (seen[x.v]) {
        ok = false;
        break;
      }
      seen[x.v] = 1;
      ex[k] = x.v;
      x = mul_level(levels() - 1, x, Elem{g});
    }
    if (ok && x.v == 1) {
      for (std::uint32_t i = 0; i < n - 1; ++i) {
        lg[ex[i]] = i;
        ex[i + n - 1] = ex[i];
      }
      log_ = std::move(lg);
      exp_ = std::move(ex);
      return;
    }
  }
  throw FieldError("no primitive element (modulus not irreducible?)");
}

Elem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::elem(std::uint32_t index) const {
  if (index >= card()) throw FieldError("element index out of range");
  return Elem{index};
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.v ^ b.v};
  std::uint32_t r = 0, mulp = 1;
  std::uint32_t x = a.v, y = b.v;
  while (x || y) {
    r += ((x % p_ + y % p_) % p_) * mulp;
    x /= p_;
    y /= p_;
    mulp *= p_;
  }
  return Elem{r};
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  std::uint32_t r = 0, mulp = 1, x = a.v;
  while (x) {
    r += ((p_ - x % p_) % p_) * mulp;
    x /= p_;
    mulp *= p_;
  }
  return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_level(int lvl, Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return zero();
  if (lvl == 0) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % p_)};
  const Level& L = levels_[static_cast<std::size_t>(lvl)];
  const std::uint32_t sc = levels_[static_cast<std::size_t>(lvl) - 1].card;
  const auto m = static_cast<std::size_t>(L.degree);
  std::vector<Elem> x(m), y(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = Elem{a.v % sc};
    y[i] = Elem{b.v % sc};
    a.v /= sc;
    b.v /= sc;
  }
  auto lower_mul = [&](Elem u, Elem w) { return mul_level(lvl - 1, u, w); };
  std::vector<Elem> prod(2 * m - 1, zero());
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = add(prod[i + j], lower_mul(x[i], y[j]));
  }
  // reduce by the monic modulus
  for (std::size_t k = prod.size(); k-- > m;) {
    const Elem c = prod[k];
    if (c.v == 0) continue;
    for (std::size_t i = 0; i < m; ++i) prod[k - m + i] = sub(prod[k - m + i], lower_mul(c, L.modulus[i]));
    prod[k] = zero();
  }
  std::uint32_t r = 0;
  for (std::size_t i = m; i-- > 0;) r = r * sc + prod[i].v;
  return Elem{r};
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return zero();
  if (!log_.empty()) return Elem{exp_[log_[a.v] + log_[b.v]]};
  return mul_level(levels() - 1, a, b);
}

Elem Field::inv_slow(Elem a) const { return pow(a, card() - 2); }

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw FieldError("division by zero in finite field");
  if (!log_.empty()) return Elem{exp_[(card() - 1 - log_[a.v]) % (card() - 1)]};
  return inv_slow(a);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  if (!log_.empty()) {
    const std::uint64_t n = card() - 1;
    return Elem{exp_[static_cast<std::size_t>((std::uint64_t{log_[a.v]} * (e % n)) % n)]};
  }
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius_pow(Elem a, int n) const {
  for (int i = 0; i < n; ++i) a = pow(a, q());
  return a;
}

Elem Field::trace_to_base(Elem a) const {
  Elem s = zero(), x = a;
  for (int i = 0; i < degree(); ++i) {
    s = add(s, x);
    x = pow(x, q());
  }
  return s;
}

Elem Field::norm_to_base(Elem a) const {
  Elem s = one(), x = a;
  for (int i = 0; i < degree(); ++i) {
    s = mul(s, x);
    x = pow(x, q());
  }
  return s;
}

std::uint32_t Field::order(Elem a) const {
  if (a.v == 0) throw FieldError("zero has no multiplicative order");
  const std::uint32_t n = card() - 1;
  std::uint32_t best = n;
  for (std::uint32_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (pow(a, d) == one()) return d;
    if (pow(a, n / d) == one()) best = std::min(best, n / d);
  }
  return best;
}

Elem Field::primitive() const {
  if (!log_.empty()) return Elem{exp_[1 % std::max<std::uint32_t>(1, card() - 1)]};
  for (std::uint32_t g = 1; g < card(); ++g)
    if (order(Elem{g}) == card() - 1) return Elem{g};
  throw FieldError("no primitive element");
}

Elem Field::root_of_unity(std::uint32_t n) const {
  if (n == 0 || (card() - 1) % n != 0)
    throw FieldError("field has no primitive " + std::to_string(n) + "-th root of unity");
  return pow(primitive(), (card() - 1) / n);
}

std::string Field::format(Elem a) const {
  std::ostringstream os;
  os << '[';
  std::uint32_t x = a.v;
  for (int i = 0; i < prime_degree_; ++i) {
    if (i) os << ',';
    os << (x % p_);
    x /= p_;
  }
  os << ']';
  return os.str();
}

Elem Field::parse(const std::string& s) const {
  std::string body;
  for (char c : s)
    if (c != '[' && c != ']' && c != ' ') body.push_back(c);
  std::vector<std::uint32_t> digits;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    long long d = std::stoll(tok);
    if (d < 0 || d >= static_cast<long long>(p_)) throw FieldError("coordinate out of range: " + tok);
    digits.push_back(static_cast<std::uint32_t>(d));
  }
  if (static_cast<int>(digits.size()) > prime_degree_) throw FieldError("too many coordinates: " + s);
  std::uint32_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * p_ + digits[i];
  return Elem{r};
}

bool Field::same_as(const Field& o) const {
  if (p_ != o.p_ || levels_.size() != o.levels_.size() || base_level_ != o.base_level_) return false;
  return contains(o);
}

bool Field::contains(const Field& sub) const {
  if (p_ != sub.p_ || sub.levels_.size() > levels_.size()) return false;
  for (std::size_t i = 0; i < sub.levels_.size(); ++i)
    if (levels_[i].modulus != sub.levels_[i].modulus || levels_[i].degree != sub.levels_[i].degree)
      return false;
  return true;
}

}  // namespace eqlv
