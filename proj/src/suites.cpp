#include "qha/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "qha/error.hpp"

namespace qha {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ConfigError, "config." + where + ": " + what);
}

int vertex_of(const Quiver& q, const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "vertex names are strings");
  try {
    return q.index(v.get<std::string>());
  } catch (const Error&) {
    bad(where, "unknown vertex '" + v.get<std::string>() + "'");
  }
}

std::vector<std::string> names_of(const json& arr, const std::string& where) {
  if (!arr.is_array()) bad(where, "expected an array of vertex names");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) bad(where + "[" + std::to_string(k) + "]", "expected a string");
    out.push_back(arr[k].get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_of(const json& arr, const std::string& where) {
  if (!arr.is_array()) bad(where, "expected an array of [from, to] pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    auto p = names_of(arr[k], where + "[" + std::to_string(k) + "]");
    if (p.size() != 2) bad(where + "[" + std::to_string(k) + "]", "expected two vertex names");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

long int_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<long>();
}

std::vector<int> vertex_ints(const Quiver& q, const json& obj, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object vertex -> integer");
  std::vector<int> out(q.size(), 0);
  for (const auto& [k, v] : obj.items()) {
    int i = vertex_of(q, k, where);
    long x = int_of(v, where + "." + k);
    if (x < 0) bad(where + "." + k, "must be non-negative");
    out[i] = static_cast<int>(x);
  }
  return out;
}

Scalar scalar_of(Field f, const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Scalar(f, v.get<long>());
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
  bad(where, "expected an integer or a string such as \"3/2\"");
}

const std::set<std::string> kKeys = {"char",  "vertices", "arrows",     "involution", "lambda", "gamma",
                                     "Lambda", "orbit_seed", "group", "partition",  "hecke"};

std::string tuple_of(const Config& c) { return tuple_str(c.quiver, c.orbit_seed); }

json config_params(const Config& c) {
  json p;
  p["field"] = c.field.name();
  p["orbit_seed"] = tuple_of(c);
  p["group"] = std::string(1, group_tag(c.group));
  p["config"] = c.echo;
  return p;
}

Report make_report(std::string suite, const Config& c, const RunOptions& o) {
  Report r;
  r.suite = std::move(suite);
  r.params = config_params(c);
  r.params["seed"] = o.seed;
  r.params["samples"] = o.samples;
  r.params["max_len"] = o.max_len;
  r.params["max_ydeg"] = o.max_ydeg;
  return r;
}

void append(std::vector<CheckCase>& out, std::vector<CheckCase> more, const std::string& prefix = {}) {
  for (auto& c : more) {
    if (!prefix.empty()) c.relation = prefix + c.relation;
    out.push_back(std::move(c));
  }
}

// runs f on a case vector, turning library errors into one failing case
template <class F>
void guarded(std::vector<CheckCase>& out, const std::string& name, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    add_check(out, name, "-", false, e.what());
  }
}

const Partition& need_partition(const Config& c) {
  if (!c.partition) bad("partition", "this suite needs a partition");
  return *c.partition;
}

}  // namespace

AlgebraPtr Config::algebra() const {
  return Algebra::create(field, quiver, params, make_orbit(quiver, orbit_seed, group), mode());
}

Config parse_config(const json& j) {
  if (!j.is_object()) bad("", "top level must be an object");
  for (const auto& [k, v] : j.items())
    if (!kKeys.contains(k)) bad(k, "unknown key");
  Config c;
  c.echo = j;
  long ch = j.contains("char") ? int_of(j["char"], "char") : 0;
  try {
    c.field = ch == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(ch));
  } catch (const Error& e) {
    bad("char", e.what());
  }
  bool have_params = false;
  if (j.contains("hecke")) {
    const json& h = j["hecke"];
    if (!h.is_object()) bad("hecke", "expected an object");
    for (const char* k : {"q", "p", "x"})
      if (!h.contains(k)) bad(std::string("hecke.") + k, "missing");
    for (const char* k : {"vertices", "arrows", "involution", "lambda", "gamma"})
      if (j.contains(k)) bad(k, "not allowed together with hecke");
    std::vector<Scalar> xs;
    if (!h["x"].is_array()) bad("hecke.x", "expected an array");
    for (std::size_t k = 0; k < h["x"].size(); ++k)
      xs.push_back(scalar_of(c.field, h["x"][k], "hecke.x[" + std::to_string(k) + "]"));
    std::string mode = h.value("mode", "B");
    if (mode != "B" && mode != "D") bad("hecke.mode", "expected B or D");
    try {
      auto hq = build_hecke_quiver(c.field, scalar_of(c.field, h["q"], "hecke.q"), xs,
                                   scalar_of(c.field, h["p"], "hecke.p"), mode == "B" ? HeckeMode::B : HeckeMode::D);
      c.quiver = hq.quiver;
      c.params = hq.params;
      have_params = true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigError) throw;
      bad("hecke", e.what());
    }
  } else {
    if (!j.contains("vertices")) bad("vertices", "missing");
    auto names = names_of(j["vertices"], "vertices");
    std::set<std::string> known(names.begin(), names.end());
    std::vector<std::pair<std::string, std::string>> arrows, involution;
    for (const char* key : {"arrows", "involution"}) {
      if (!j.contains(key)) continue;
      auto& dst = std::string(key) == "arrows" ? arrows : involution;
      dst = pairs_of(j[key], key);
      for (std::size_t k = 0; k < dst.size(); ++k)
        for (const auto& v : {dst[k].first, dst[k].second})
          if (!known.count(v)) bad(std::string(key) + "[" + std::to_string(k) + "]", "unknown vertex '" + v + "'");
    }
    try {
      c.quiver = Quiver(names, arrows, involution);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigError) throw;
      bad("vertices", e.what());
    }
  }
  if (!have_params) {
    c.params = Params::zero(c.field, c.quiver);
    if (j.contains("lambda")) c.params.lambda = vertex_ints(c.quiver, j["lambda"], "lambda");
    if (j.contains("gamma")) {
      if (!j["gamma"].is_object()) bad("gamma", "expected an object vertex -> scalar");
      for (const auto& [k, v] : j["gamma"].items())
        c.params.gamma[vertex_of(c.quiver, k, "gamma")] = scalar_of(c.field, v, "gamma." + k);
    }
  }
  if (j.contains("Lambda")) c.Lambda = vertex_ints(c.quiver, j["Lambda"], "Lambda");
  if (!j.contains("orbit_seed")) bad("orbit_seed", "missing");
  const json& seed = j["orbit_seed"];
  if (!seed.is_array()) bad("orbit_seed", "expected an array of vertex names");
  for (std::size_t k = 0; k < seed.size(); ++k)
    c.orbit_seed.push_back(vertex_of(c.quiver, seed[k], "orbit_seed[" + std::to_string(k) + "]"));
  if (c.orbit_seed.size() > kMaxRank) bad("orbit_seed", "rank above " + std::to_string(kMaxRank));
  std::string g = j.value("group", c.quiver.has_involution() ? "B" : "S");
  try {
    c.group = parse_group(g);
  } catch (const Error&) {
    bad("group", "expected S or B");
  }
  if (c.group == Group::D) bad("group", "type D runs on a B-orbit; use group B");
  if (j.contains("partition")) {
    const json& p = j["partition"];
    if (!p.is_array() || p.empty()) bad("partition", "expected a non-empty array of vertex blocks");
    Partition part{std::vector<int>(c.quiver.size(), -1), static_cast<int>(p.size())};
    for (std::size_t b = 0; b < p.size(); ++b) {
      std::string where = "partition[" + std::to_string(b) + "]";
      if (!p[b].is_array()) bad(where, "expected an array of vertex names");
      for (const auto& v : p[b]) {
        int i = vertex_of(c.quiver, v, where);
        if (part.block[i] >= 0) bad(where, "vertex listed twice");
        part.block[i] = static_cast<int>(b);
      }
    }
    for (int v = 0; v < c.quiver.size(); ++v)
      if (part.block[v] < 0) bad("partition", "vertex '" + c.quiver.name(v) + "' is in no block");
    c.partition = part;
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + e.what());
  }
  return parse_config(j);
}

int workers_from_env() {
  const char* v = std::getenv("QHA_WORKERS");
  if (!v) return 1;
  int n = std::atoi(v);
  return std::clamp(n, 1, 64);
}

// ---------------------------------------------------------------- reports

bool Report::pass() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
}

void Report::normalise() {
  std::stable_sort(cases.begin(), cases.end(), [](const CheckCase& a, const CheckCase& b) {
    return std::tie(a.relation, a.tuple, a.branch) < std::tie(b.relation, b.tuple, b.branch);
  });
}

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["params"] = params;
  json cs = json::array();
  for (const auto& c : cases) {
    json e{{"name", c.relation}, {"subject", c.tuple}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.branch.empty()) e["branch"] = c.branch;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["cases"] = std::move(cs);
  if (!extra.is_null()) j["records"] = extra;
  j["summary"] = {{"total", cases.size()}, {"failed", failures()}, {"status", pass() ? "pass" : "fail"}};
  return j;
}

std::string Report::to_text() const {
  std::ostringstream s;
  s << "suite " << suite << "\n";
  for (const auto& [k, v] : params.items())
    if (k != "config") s << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  std::map<std::string, std::pair<int, int>> groups;
  for (const auto& c : cases) {
    auto& g = groups[c.relation.substr(0, c.relation.find('['))];
    ++g.first;
    if (!c.pass) ++g.second;
  }
  for (const auto& [name, g] : groups)
    s << "  " << (g.second ? "FAIL " : "ok   ") << name << " (" << g.first << " cases" << (g.second ? ", " + std::to_string(g.second) + " failed" : "") << ")\n";
  for (const auto& c : cases)
    if (!c.pass)
      s << "  failed: " << c.relation << " " << c.tuple << (c.branch.empty() ? "" : " {" + c.branch + "}") << " "
        << c.detail << "\n";
  s << (pass() ? "PASS" : "FAIL") << " " << suite << ": " << cases.size() - failures() << "/" << cases.size() << "\n";
  return s.str();
}

// ---------------------------------------------------------------- suites

Report run_validate(const Config& c, const RunOptions& o) {
  Report r = make_report("validate", c, o);
  auto& out = r.cases;
  guarded(out, "params_valid", [&] {
    c.params.validate(c.quiver);
    add_check(out, "params_valid", "-", true);
  });
  guarded(out, "orbit_full", [&] {
    Orbit orb = make_orbit(c.quiver, c.orbit_seed, c.group);
    add_check(out, "orbit_full", tuple_of(c), true, std::to_string(orb.size()) + " tuples");
    AlgebraPtr alg = c.algebra();
    add_check(out, "algebra_descriptor", tuple_of(c), true, c.group == Group::S ? "type A" : "type B");
    if (c.partition) {
      c.partition->validate(c.quiver);
      add_check(out, "partition_component_stable", "-", true);
      ComponentSplit s = orbit_components(c.quiver, orb, *c.partition);
      std::string sizes;
      for (int x : s.sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(x);
      add_check(out, "orbit_components", tuple_of(c), true, "sizes " + sizes);
    }
    if (c.Lambda) add_check(out, "Lambda_length", "-", static_cast<int>(c.Lambda->size()) == c.quiver.size());
  });
  r.normalise();
  return r;
}

Report run_relations(const Config& c, const RunOptions& o) {
  Report r = make_report("relations", c, o);
  AlgebraPtr alg = c.algebra();
  RelationData base = relation_data(*alg);
  int w = std::max(1, std::min(o.workers, static_cast<int>(base.tuples.size())));
  std::vector<std::vector<CheckCase>> parts(w);
  auto job = [&](int k) {
    RelationData rd = base;
    rd.tuples.clear();
    for (std::size_t t = k; t < base.tuples.size(); t += w) rd.tuples.push_back(base.tuples[t]);
    OpContext ctx(*alg);
    type_a_relations(rd, ctx, parts[k]);
    if (alg->mode() == Mode::B) type_b_relations(rd, ctx, parts[k]);
  };
  if (w == 1) {
    job(0);
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < w; ++k) pool.emplace_back(job, k);
  }
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (auto& p : parts)
    for (auto& cs : p)
      if (seen.insert({cs.relation, cs.tuple, cs.branch}).second) r.cases.push_back(std::move(cs));
  if (alg->zero_params() && alg->rank() >= 2) append(r.cases, verify_w_relations(alg), "W:");
  r.normalise();
  return r;
}

Report run_pbw(const Config& c, const RunOptions& o) {
  Report r = make_report("pbw", c, o);
  AlgebraPtr alg = c.algebra();
  std::mt19937_64 rng(o.seed);
  auto pool = enumerate_monomials(*alg, o.max_len, o.max_ydeg);
  Scalar one = Scalar::one(alg->field());
  std::vector<PBWMonomial> round;
  if (alg->rank() <= 3) {
    round = pool;
  } else {
    for (int k = 0; k < o.samples; ++k) round.push_back(pool[rng() % pool.size()]);
  }
  int bad_round = 0;
  std::string first;
  for (const auto& m : round) {
    Element back = alg->pbw_expand(alg->monomial_op(m));
    if (!(back == alg->monomial(m, one))) {
      if (!bad_round) first = alg->monomial_str(m);
      ++bad_round;
    }
  }
  add_check(r.cases, "pbw_roundtrip", alg->rank() <= 3 ? "exhaustive" : "sampled", bad_round == 0,
            std::to_string(round.size()) + " monomials" + (first.empty() ? "" : "; first failure " + first));
  int bad_prod = 0;
  first.clear();
  for (int k = 0; k < o.samples; ++k) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    try {
      alg->multiply(alg->monomial(a, one), alg->monomial(b, one));
    } catch (const Error& e) {
      if (!bad_prod) first = alg->monomial_str(a) + " * " + alg->monomial_str(b) + ": " + e.what();
      ++bad_prod;
    }
  }
  add_check(r.cases, "pbw_closure", "sampled", bad_prod == 0,
            std::to_string(o.samples) + " products" + (first.empty() ? "" : "; " + first));
  int triples = std::max(100, o.samples / 10), bad_assoc = 0;
  first.clear();
  for (int k = 0; k < triples; ++k) {
    Element a = alg->monomial(pool[rng() % pool.size()], one);
    Element b = alg->monomial(pool[rng() % pool.size()], one);
    Element d = alg->monomial(pool[rng() % pool.size()], one);
    if (!(alg->multiply(alg->multiply(a, b), d) == alg->multiply(a, alg->multiply(b, d)))) {
      if (!bad_assoc) first = a.str() + " ; " + b.str() + " ; " + d.str();
      ++bad_assoc;
    }
  }
  add_check(r.cases, "pbw_associativity", "sampled", bad_assoc == 0,
            std::to_string(triples) + " triples" + (first.empty() ? "" : "; " + first));
  r.normalise();
  return r;
}

Report run_decompose(const Config& c, const RunOptions& o) {
  Report r = make_report("decompose", c, o);
  const Partition& part = need_partition(c);
  AlgebraPtr alg = c.algebra();
  DecompositionRecord rec = full_decompose(alg, part, o.samples, o.seed);
  r.cases = std::move(rec.cases);
  json images = json::object();
  for (const auto& [g, im] : rec.generator_images) images[g] = im;
  r.extra = {{"matrix_size", rec.matrix_size},
             {"profiles", rec.profiles},
             {"corner", rec.corner},
             {"factor_sizes", rec.factor_sizes},
             {"factor_orbit_sizes", rec.factor_orbit_sizes},
             {"generator_images", images}};
  r.normalise();
  return r;
}

Report run_typed(const Config& c, const RunOptions& o) {
  Report r = make_report("typed", c, o);
  if (c.group != Group::B) bad("group", "type D suites need a B-orbit");
  AlgebraPtr alg = c.algebra();
  append(r.cases, verify_w_relations(alg), "W:");
  append(r.cases, involution_checks(alg, std::max(1, o.samples / 4), o.seed));
  append(r.cases, semidirect_check(alg, o.samples, o.seed));
  if (c.partition && c.partition->d > 1)
    append(r.cases, decompose_D(alg, *c.partition, c.Lambda, std::max(1, o.samples / 4), o.seed), "decompose_D:");
  r.normalise();
  return r;
}

Report run_cyclo(const Config& c, const RunOptions& o) {
  Report r = make_report("cyclo", c, o);
  if (!c.Lambda) bad("Lambda", "the cyclo suite needs a cyclotomic weight");
  AlgebraPtr alg = c.algebra();
  if (alg->zero_params()) append(r.cases, cyclo_identity_checks(*alg, *c.Lambda));
  if (c.partition) {
    CycloReport cr = cyclo_transport(alg, *c.partition, *c.Lambda);
    append(r.cases, std::move(cr.cases));
    r.extra = {{"quotient_is_zero", cr.quotient_is_zero}};
    if (cr.quotient_is_zero) r.extra["zero_component"] = cr.zero_component + 1;
  }
  r.normalise();
  return r;
}

Report run_orbits(const Config& c, const RunOptions& o) {
  Report r = make_report("orbits", c, o);
  Partition part = c.partition ? *c.partition : Partition::trivial(c.quiver);
  int n = static_cast<int>(c.orbit_seed.size());
  for (int k = 0; k <= n; ++k) append(r.cases, orbit_bijection_check(c.quiver, part, k, c.group));
  r.normalise();
  return r;
}

Report run_classify(const ClassifyRequest& req) {
  Report r;
  r.suite = "classify";
  Field f = Field::prime(req.characteristic);
  Scalar q(f, req.q);
  r.params = {{"char", req.characteristic}, {"q", req.q}, {"mode", req.mode == HeckeMode::B ? "B" : "D"}};
  if (req.mode == HeckeMode::B) r.params["p"] = req.p;
  json cases = json::array();
  for (long x : req.xs) {
    Scalar xs(f, x);
    MoritaCase m = req.mode == HeckeMode::B ? classify_morita_B(xs, q, Scalar(f, req.p)) : classify_morita_D(xs, q);
    add_check(r.cases, std::string("case_") + m.label, "x=" + std::to_string(x), true, m.str());
    cases.push_back({{"x", x},
                     {"case", std::string(1, m.label)},
                     {"sign", m.sign},
                     {"exponent", m.exponent},
                     {"p_power", m.p_power},
                     {"b_equivalent_to_a", m.b_equivalent_to_a},
                     {"c_reduces", m.c_reduces}});
  }
  r.extra = {{"classification", cases}};
  r.normalise();
  return r;
}

}  // namespace qha
