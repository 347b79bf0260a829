#include "eqlv/run.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace eqlv {

using Json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kCommands = {"zeta", "lvalue", "artin", "class-formula", "trace-check"};

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size() || x < INT32_MIN || x > INT32_MAX) throw std::invalid_argument(v);
    return static_cast<int>(x);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

// smallest prime factor and exponent; exponent 0 when n is not a prime power
std::pair<std::uint32_t, int> prime_power(std::uint32_t n) {
  if (n < 2) return {0, 0};
  std::uint32_t p = 2;
  while (n % p) ++p;
  int a = 0;
  while (n % p == 0) n /= p, ++a;
  return n == 1 ? std::make_pair(p, a) : std::make_pair(p, 0);
}

}  // namespace

std::map<std::string, std::string> RunConfig::to_kv() const {
  return {{"command", command},
          {"q", std::to_string(q)},
          {"context", context},
          {"m", std::to_string(m)},
          {"conductor", conductor},
          {"carlitz", std::to_string(carlitz)},
          {"module", module},
          {"prec", std::to_string(prec)},
          {"degree-bound", std::to_string(degree_bound)},
          {"rep", rep},
          {"variant", variant},
          {"demo", demo},
          {"instance", instance},
          {"equivariant", equivariant ? "true" : "false"},
          {"seed", std::to_string(seed)},
          {"count", std::to_string(count)}};
}

RunConfig RunConfig::from_kv(const std::map<std::string, std::string>& kv) {
  RunConfig c;
  for (const auto& [key, v] : kv) {
    if (key == "command") c.command = v;
    else if (key == "q") {
      const int x = to_int(key, v);
      if (x < 2) throw ConfigError("q must be a prime power");
      c.q = static_cast<std::uint32_t>(x);
    } else if (key == "context") c.context = v;
    else if (key == "m") c.m = to_int(key, v);
    else if (key == "conductor") c.conductor = v;
    else if (key == "carlitz") c.carlitz = to_int(key, v);
    else if (key == "module") c.module = v;
    else if (key == "prec") c.prec = to_int(key, v);
    else if (key == "degree-bound") c.degree_bound = to_int(key, v);
    else if (key == "rep") c.rep = v;
    else if (key == "variant") c.variant = v;
    else if (key == "demo") c.demo = v;
    else if (key == "instance") c.instance = v;
    else if (key == "equivariant") c.equivariant = to_bool(key, v);
    else if (key == "seed") {
      const int x = to_int(key, v);
      if (x < 0) throw ConfigError("seed must be non-negative");
      c.seed = static_cast<std::uint64_t>(x);
    } else if (key == "count") c.count = to_int(key, v);
    else if (key == "output") c.output = v;
    else throw ConfigError("unknown key '" + key + "'");
  }
  return c;
}

void RunConfig::validate() const {
  if (!kCommands.count(command)) throw ConfigError("unknown command '" + command + "'");
  const auto [p, a] = prime_power(q);
  if (a != 1) throw ConfigError("q = " + std::to_string(q) + ": only prime fields are supported");
  if (prec < 1 || prec > 16) throw ConfigError("prec must lie in 1..16");
  if (degree_bound < -1 || degree_bound == 0 || degree_bound > 3 * prec)
    throw ConfigError("degree-bound must be -1 (automatic) or lie in 1..3*prec");
  if (carlitz < 1 || carlitz > 4) throw ConfigError("carlitz must lie in 1..4");
  if (context != "trivial" && context != "constant" && context != "cyclotomic")
    throw ConfigError("context must be trivial, constant or cyclotomic");
  if (context == "constant") {
    if (m < 1 || m > 6) throw ConfigError("m must lie in 1..6");
    if (m % static_cast<int>(p) == 0) throw ConfigError("|G| = m must be prime to the characteristic");
  }
  if (rep != "all" && rep != "trivial" && rep != "regular" && rep.rfind("chi:", 0) != 0)
    throw ConfigError("rep must be all, trivial, regular or chi:<index>");
  if (rep.rfind("chi:", 0) == 0) to_int("rep", rep.substr(4));
  if (command == "zeta" && (context != "trivial" || !module.empty()))
    throw ConfigError("zeta takes a Carlitz power over the trivial context");
  if (command == "artin" && !module.empty()) throw ConfigError("artin works with Carlitz powers only");
  if (command == "lvalue" && variant != "equivariant" && variant != "hom" && variant != "tensor" && variant != "artin")
    throw ConfigError("variant must be equivariant, hom, tensor or artin");
  if (command == "lvalue" && variant == "artin" && !module.empty())
    throw ConfigError("the artin variant works with Carlitz powers only");
  if (command == "trace-check") {
    if (demo != "qpower" && demo != "random" && demo != "instance")
      throw ConfigError("demo must be qpower, random or instance");
    if (demo == "instance" && instance.empty()) throw ConfigError("demo = instance needs an instance");
    if (demo == "random" && (count < 1 || count > 100)) throw ConfigError("count must lie in 1..100");
    if (demo == "random" && equivariant && p == 3) throw ConfigError("G = Z/3 needs a characteristic other than 3");
  }
}

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (!val.empty() && val[0] == '"') {
      // a basic string; the rest of the line may hold a comment
      try {
        std::size_t end = 1;
        while (end < val.size() && val[end] != '"') end += val[end] == '\\' ? 2 : 1;
        if (end >= val.size()) throw ConfigError("unterminated string");
        const std::string rest = trim(val.substr(end + 1));
        if (!rest.empty() && rest[0] != '#') throw ConfigError("trailing text after string");
        val = Json::parse(val.substr(0, end + 1)).get<std::string>();
      } catch (const Json::exception& e) {
        throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      const auto hash = val.find('#');
      if (hash != std::string::npos) val = trim(val.substr(0, hash));
    }
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = val;
  }
  return kv;
}

std::string render_kv_text(const std::map<std::string, std::string>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + Json(v).dump() + "\n";
  return out;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 2;
}

namespace {

struct Setup {
  FieldPtr k;
  GaloisContext ctx;
  CharacterTable ct;
};

Setup setup(const RunConfig& c) {
  Setup s;
  s.k = Field::prime(c.q);
  try {
    if (c.context == "trivial") s.ctx = trivial_context(s.k);
    else if (c.context == "constant") s.ctx = build_constant_context(s.k, c.m);
    else s.ctx = build_cyclotomic_context(s.k, parse_poly(s.k, c.conductor));
    s.ct = decompose(s.ctx.G, s.k);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("context: ") + e.what());
  }
  return s;
}

TModule make_module(const RunConfig& c, const FieldPtr& k) {
  if (c.module.empty()) return make_carlitz_power(k, c.carlitz);
  try {
    const Json j = Json::parse(c.module);
    TModule E;
    E.k = k;
    for (const auto& mat : j) {
      PolyMat A;
      for (const auto& row : mat) {
        std::vector<Poly> r;
        for (const auto& x : row) r.push_back(parse_poly(k, x.get<std::string>()));
        A.push_back(r);
      }
      E.A.push_back(A);
    }
    if (E.A.empty()) throw TModuleError("module needs A_0");
    E.n = static_cast<int>(E.A[0].size());
    for (const auto& A : E.A) {
      if (static_cast<int>(A.size()) != E.n) throw TModuleError("matrices must be n x n");
      for (const auto& row : A)
        if (static_cast<int>(row.size()) != E.n) throw TModuleError("matrices must be n x n");
    }
    E.validate();
    return E;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("module: ") + e.what());
  }
}

struct NamedRep {
  std::string name;
  Rep rho;
};

std::vector<NamedRep> make_reps(const RunConfig& c, const Setup& s) {
  std::vector<NamedRep> out;
  if (c.rep == "all") {
    for (int chi = 0; chi < s.ct.count(); ++chi) out.push_back({"chi:" + std::to_string(chi), Rep::character(s.ct, chi)});
  } else if (c.rep == "trivial") {
    out.push_back({"trivial", Rep::trivial(s.ctx.G, s.ct.split)});
  } else if (c.rep == "regular") {
    out.push_back({"regular", Rep::regular(s.ctx.G, s.ct.split)});
  } else {
    const int chi = to_int("rep", c.rep.substr(4));
    if (chi < 0 || chi >= s.ct.count())
      throw ConfigError("rep: character index out of range 0.." + std::to_string(s.ct.count() - 1));
    out.push_back({c.rep, Rep::character(s.ct, chi)});
  }
  return out;
}

Json comparison_json(const Comparison& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["first_difference"] = c.first_difference ? Json(*c.first_difference) : Json(nullptr);
  j["detail"] = c.detail;
  return j;
}

Json character_table_json(const CharacterTable& ct) {
  Json j;
  j["group"] = ct.G.orders();
  j["split_degree"] = ct.split->degree();
  Json vals = Json::array();
  for (int chi = 0; chi < ct.count(); ++chi) {
    Json row = Json::array();
    for (int g = 0; g < ct.G.size(); ++g) row.push_back(ct.split->format(ct.value(chi, g)));
    vals.push_back(row);
  }
  j["values"] = vals;
  return j;
}

// primes in (degree, lex) order; the products already emit them that way,
// the sort pins it down
Json ledger_json(const EulerProduct& L) {
  std::vector<const LedgerEntry*> es;
  for (const auto& e : L.ledger) es.push_back(&e);
  std::stable_sort(es.begin(), es.end(), [](const LedgerEntry* a, const LedgerEntry* b) {
    if (a->p.degree() != b->p.degree()) return a->p.degree() < b->p.degree();
    for (int i = a->p.degree(); i >= 0; --i)
      if (a->p.coeff(i).v != b->p.coeff(i).v) return a->p.coeff(i).v < b->p.coeff(i).v;
    return false;
  });
  Json arr = Json::array();
  for (const LedgerEntry* e : es) {
    Json j;
    j["prime"] = e->p.str();
    j["degree"] = e->p.degree();
    j["e"] = e->e;
    j["f"] = e->f;
    j["r"] = e->r;
    j["factor"] = e->note;
    Json fs = Json::array();
    for (const auto& x : e->factor) fs.push_back(x.str());
    j["expansion"] = fs;
    arr.push_back(j);
  }
  return arr;
}

Json product_json(const EulerProduct& L) {
  Json j;
  j["variant"] = variant_name(L.variant);
  j["prec"] = L.N;
  j["degree_bound"] = L.D;
  Json v = Json::array();
  for (const auto& x : L.value) v.push_back(x.str());
  j["value"] = v;
  if (L.gvalue) {
    Json g = Json::array();
    for (const auto& x : L.gvalue->c) g.push_back(x.str());
    j["group_ring_value"] = g;
  }
  j["ledger"] = ledger_json(L);
  return j;
}

struct Outcome {
  Verdict verdict = Verdict::Inconclusive;
  Json body;
  std::vector<std::string> lines;  // summary
};

Outcome run_zeta(const RunConfig& c) {
  const Setup s = setup(c);
  const TModule E = make_module(c, s.k);
  Outcome o;
  const EulerProduct L = euler_product_equivariant(E, s.ctx, s.ct, c.prec, c.degree_bound);
  const Laurent oracle = zeta_monic_sum_oracle(s.k, c.carlitz, c.prec);
  const Comparison cmp = compare_mod(L.value[0], oracle, c.prec);
  o.verdict = cmp.verdict;
  o.body["euler_product"] = product_json(L);
  o.body["monic_sum"] = oracle.str();
  o.body["comparison"] = comparison_json(cmp);
  o.lines.push_back("euler product  " + L.value[0].str());
  o.lines.push_back("monic sum      " + oracle.str());
  o.lines.push_back("primes used    degree <= " + std::to_string(L.D) + ", " + std::to_string(L.ledger.size()) + " primes");
  if (cmp.first_difference) o.lines.push_back(cmp.detail);
  return o;
}

Outcome run_lvalue(const RunConfig& c) {
  const Setup s = setup(c);
  const TModule E = make_module(c, s.k);
  const auto reps = make_reps(c, s);
  Outcome o;
  std::vector<Comparison> parts;
  Json items = Json::array();
  if (c.variant == "equivariant") {
    const EulerProduct L = euler_product_equivariant(E, s.ctx, s.ct, c.prec, c.degree_bound);
    o.body["euler_product"] = product_json(L);
    o.lines.push_back("L(E,G) per character, prime degree <= " + std::to_string(L.D));
    for (std::size_t chi = 0; chi < L.value.size(); ++chi)
      o.lines.push_back("  chi:" + std::to_string(chi) + "  " + L.value[chi].str());
    // each representation: twist_det of L(E,G) against the direct Hom product
    for (const auto& nr : reps) {
      const Comparison cmp = specialize_and_compare(E, s.ctx, s.ct, L, nr.rho, c.prec);
      Json j;
      j["rep"] = nr.name;
      j["specialization"] = comparison_json(cmp);
      items.push_back(j);
      parts.push_back(cmp);
      o.lines.push_back("specialization " + nr.name + ": " + verdict_name(cmp.verdict) +
                        (cmp.detail.empty() ? "" : " (" + cmp.detail + ")"));
    }
  } else {
    // single product; the check is stability under enlarging the degree bound
    for (const auto& nr : reps) {
      auto product = [&](int D) {
        if (c.variant == "artin") return euler_product_artin(c.carlitz, s.ctx, nr.rho, c.prec, D);
        return euler_product_rep(E, s.ctx, nr.rho, c.variant == "hom" ? LVariant::Hom : LVariant::Tensor, c.prec, D);
      };
      const EulerProduct L = product(c.degree_bound);
      const EulerProduct L2 = product(L.D + 2);
      const Comparison cmp = compare_mod(L.value[0], L2.value[0], c.prec);
      Json j;
      j["rep"] = nr.name;
      j["euler_product"] = product_json(L);
      j["enlarged_degree_bound"] = L2.D;
      j["stability"] = comparison_json(cmp);
      items.push_back(j);
      parts.push_back(cmp);
      o.lines.push_back(nr.name + "  " + L.value[0].str() + "  [stable to degree " + std::to_string(L2.D) + ": " +
                        verdict_name(cmp.verdict) + "]");
    }
  }
  o.body["representations"] = items;
  const Comparison all = combine(parts);
  o.body["comparison"] = comparison_json(all);
  o.verdict = all.verdict;
  return o;
}

Outcome run_artin(const RunConfig& c) {
  const Setup s = setup(c);
  const auto reps = make_reps(c, s);
  Outcome o;
  std::vector<Comparison> parts;
  Json items = Json::array();
  for (const auto& nr : reps) {
    const ArtinBundle B = artin_compare(c.carlitz, s.ctx, nr.rho, c.prec);
    Json j;
    j["rep"] = nr.name;
    j["artin"] = B.artin.str();
    j["tensor"] = B.tensor.str();
    j["hom"] = B.hom.str();
    j["tame"] = B.tame;
    j["artin_vs_tensor"] = comparison_json(B.artin_vs_tensor);
    j["hom_vs_artin"] = comparison_json(B.hom_vs_artin);
    j["per_prime"] = comparison_json(B.per_prime);
    j["ramified_ratio"] = "(" + B.witness_num.str() + ")/(" + B.witness_den.str() + ")";
    j["ratio_check"] = comparison_json(B.witness);
    items.push_back(j);
    std::vector<Comparison> mine = {B.artin_vs_tensor, B.per_prime, B.witness};
    // L(C^n, rho) = L(n, rho) is only claimed in the tame case
    if (B.tame) mine.push_back(B.hom_vs_artin);
    const Comparison r = combine(mine);
    parts.push_back(r);
    o.lines.push_back(nr.name + "  L(n,rho) = " + B.artin.str());
    o.lines.push_back("    tensor " + verdict_name(B.artin_vs_tensor.verdict) + ", hom " +
                      verdict_name(B.hom_vs_artin.verdict) + (B.tame ? "" : " (wild, not required)") + ", per-prime " +
                      verdict_name(B.per_prime.verdict) + ", ramified ratio " + verdict_name(B.witness.verdict));
    if (r.verdict != Verdict::Pass) o.lines.push_back("    " + r.detail);
  }
  o.body["character_table"] = character_table_json(s.ct);
  o.body["representations"] = items;
  const Comparison all = combine(parts);
  o.body["comparison"] = comparison_json(all);
  o.verdict = all.verdict;
  return o;
}

Outcome run_class_formula(const RunConfig& c) {
  const Setup s = setup(c);
  const TModule E = make_module(c, s.k);
  Outcome o;
  const ClassFormula R = verify_class_formula(E, s.ctx, s.ct, c.prec);
  const AnalyticSide& A = R.analytic;
  Json an;
  an["certified"] = A.certified;
  an["note"] = A.note;
  an["box_degree"] = A.D;
  an["working_precision"] = A.Nw;
  an["kernel_dim"] = A.kernel_dim;
  an["tail_dim"] = A.tail_dim;
  an["class_module_dim"] = A.class_dim;
  Json idx = Json::array(), hp = Json::array();
  for (const auto& x : A.index) idx.push_back(x.str());
  for (const auto& x : A.class_charpoly) hp.push_back(x.str());
  an["lattice_index"] = idx;
  an["class_module_order"] = hp;
  o.body["character_table"] = character_table_json(s.ct);
  o.body["euler_product"] = product_json(R.euler);
  o.body["analytic"] = an;
  Json per = Json::array();
  for (std::size_t chi = 0; chi < R.per_character.size(); ++chi) {
    Json j;
    j["character"] = static_cast<int>(chi);
    j["lhs"] = R.lhs[chi].str();
    j["rhs"] = R.rhs[chi].str();
    j["comparison"] = comparison_json(R.per_character[chi]);
    per.push_back(j);
    o.lines.push_back("chi:" + std::to_string(chi) + "  L = " + R.lhs[chi].str());
    o.lines.push_back("       index*|H| = " + R.rhs[chi].str() + "  [" + verdict_name(R.per_character[chi].verdict) + "]");
    if (R.per_character[chi].first_difference) o.lines.push_back("       " + R.per_character[chi].detail);
  }
  o.body["per_character"] = per;
  o.lines.push_back("class module dimension " + std::to_string(A.class_dim) + ", unit lattice " +
                    (A.certified ? "certified" : "not certified") + (A.note.empty() ? "" : " (" + A.note + ")"));
  Comparison all = combine(R.per_character);
  all.verdict = R.verdict;
  o.body["comparison"] = comparison_json(all);
  o.verdict = R.verdict;
  return o;
}

TauSheafLine parse_instance(const std::string& text, const FieldPtr& k) {
  try {
    const Json j = Json::parse(text);
    TauSheafLine S;
    S.k = k;
    S.A = k;
    S.m = j.at("m").get<int>();
    for (const auto& op : j.at("ops")) {
      S.orders.push_back(op.at("n").get<int>());
      PolyMat T;
      for (const auto& row : op.at("T")) {
        std::vector<Poly> r;
        for (const auto& x : row) r.push_back(parse_poly(k, x.get<std::string>()));
        T.push_back(r);
      }
      S.T.push_back(T);
    }
    if (j.contains("generator")) {
      Mat g(k, S.m, S.m);
      int i = 0;
      for (const auto& row : j.at("generator")) {
        int jj = 0;
        for (const auto& x : row) g.at(i, jj++) = k->parse(x.get<std::string>());
        ++i;
      }
      // cyclic group generated by g
      std::vector<Mat> pw = {Mat::identity(k, S.m)};
      while (pw.size() <= 12) {
        Mat next = pw.back() * g;
        if (next == pw.front()) break;
        pw.push_back(next);
      }
      if (pw.size() > 12) throw ContextError("generator has order above 12");
      if (pw.size() > 1) {
        S.G = AbelianGroup::cyclic(static_cast<int>(pw.size()));
        for (int h = 0; h < S.G.size(); ++h) S.action.push_back(pw[static_cast<std::size_t>(S.G.exps(h)[0])]);
      }
    }
    S.validate();
    return S;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
}

Json sheaf_json(const TauSheafLine& S) {
  Json j;
  j["m"] = S.m;
  Json ops = Json::array();
  for (std::size_t i = 0; i < S.T.size(); ++i) {
    Json T = Json::array();
    for (const auto& row : S.T[i]) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(x.str());
      T.push_back(r);
    }
    ops.push_back({{"n", S.orders[i]}, {"T", T}});
  }
  j["ops"] = ops;
  j["group"] = S.G.orders();
  return j;
}

Outcome run_trace(const RunConfig& c) {
  const FieldPtr k = Field::prime(c.q);
  std::vector<TauSheafLine> sheaves;
  if (c.demo == "qpower") {
    sheaves.push_back(qpower_demo(k));
  } else if (c.demo == "instance") {
    sheaves.push_back(parse_instance(c.instance, k));
  } else {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(c.seed));
    for (int i = 0; i < c.count; ++i) sheaves.push_back(random_sheaf(k, c.equivariant, rng));
  }
  for (const auto& S : sheaves)
    if (S.G.size() % static_cast<int>(k->p()) == 0) throw ConfigError("|G| must be prime to the characteristic");
  Outcome o;
  std::vector<Comparison> parts;
  Json items = Json::array();
  for (std::size_t i = 0; i < sheaves.size(); ++i) {
    const TauSheafLine& S = sheaves[i];
    const TraceCheck R = verify_trace_formula(S, c.prec);
    const FieldPtr F = decompose(S.G, S.A).split;
    Json j;
    j["sheaf"] = sheaf_json(S);
    j["nucleus_degree_bound"] = R.D0;
    j["points"] = R.points;
    j["factor_shape"] = R.factor_shape;
    j["nucleus_stable"] = R.nucleus_stable;
    Json per = Json::array();
    for (std::size_t chi = 0; chi < R.lhs.size(); ++chi)
      per.push_back({{"character", static_cast<int>(chi)},
                     {"lhs", render_series(*F, R.lhs[chi])},
                     {"rhs", render_series(*F, R.rhs[chi])}});
    j["per_character"] = per;
    j["verdict"] = verdict_name(R.verdict);
    j["detail"] = R.detail;
    items.push_back(j);
    Comparison cmp;
    cmp.verdict = R.verdict;
    cmp.detail = R.detail;
    parts.push_back(cmp);
    std::string head = sheaves.size() > 1 ? "instance " + std::to_string(i) + ": " : "";
    o.lines.push_back(head + "m=" + std::to_string(S.m) + " r=" + std::to_string(S.T.size()) + " |G|=" +
                      std::to_string(S.G.size()) + "  " + std::to_string(R.points) + " points, nucleus D=" +
                      std::to_string(R.D0) + "  [" + verdict_name(R.verdict) + "]");
    for (std::size_t chi = 0; chi < R.lhs.size(); ++chi)
      o.lines.push_back("    chi:" + std::to_string(chi) + "  " + render_series(*F, R.lhs[chi]));
    if (R.verdict != Verdict::Pass) o.lines.push_back("    " + R.detail);
  }
  o.body["instances"] = items;
  const Comparison all = combine(parts);
  o.body["comparison"] = comparison_json(all);
  o.verdict = all.verdict;
  return o;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::string error;
  try {
    if (cfg.command == "zeta") o = run_zeta(cfg);
    else if (cfg.command == "lvalue") o = run_lvalue(cfg);
    else if (cfg.command == "artin") o = run_artin(cfg);
    else if (cfg.command == "class-formula") o = run_class_formula(cfg);
    else o = run_trace(cfg);
  } catch (const PrecisionError& e) {
    // the search budget ran out: neither verified nor refuted
    o = Outcome{};
    error = e.what();
  } catch (const GroupRingError& e) {
    throw ConfigError(e.what());
  } catch (const ContextError& e) {
    throw ConfigError(e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json report;
  report["schema"] = kReportSchema;
  Json conf;
  for (const auto& [k, v] : cfg.to_kv()) conf[k] = v;
  report["config"] = conf;
  report["verdict"] = verdict_name(o.verdict);
  if (!error.empty()) report["error"] = error;
  for (auto it = o.body.begin(); it != o.body.end(); ++it) report[it.key()] = it.value();

  RunResult r;
  r.verdict = o.verdict;
  r.json = report.dump(2) + "\n";
  std::ostringstream os;
  os << cfg.command << "  q=" << cfg.q;
  if (cfg.command != "trace-check") os << "  context=" << cfg.context;
  os << "  prec=" << cfg.prec << "\n";
  for (const auto& l : o.lines) os << l << "\n";
  if (!error.empty()) os << "inconclusive: " << error << "\n";
  os << "verdict: " << verdict_name(o.verdict) << "\n";
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "time: " << ms << " ms\n";
  r.summary = os.str();
  return r;
}

}  // namespace eqlv
