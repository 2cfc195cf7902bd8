// Acceptance driver: one PASS/FAIL line per criterion, details above it.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "qha/suites.hpp"

using namespace qha;
using nlohmann::json;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void fail(std::string s) { failures.push_back(std::move(s)); }
  void note(std::string s) { notes.push_back(std::move(s)); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void absorb(const Report& r, const std::string& label) {
    int bad = r.failures();
    note(label + ": " + std::to_string(r.cases.size()) + " cases, " + std::to_string(bad) + " failed");
    for (const auto& c : r.cases)
      if (!c.pass) fail(label + ": " + c.relation + " @ " + c.tuple + " " + c.detail);
  }
};

std::string config_path(const std::string& name) { return std::string(QHA_CONFIG_DIR) + "/" + name + ".json"; }

Config load(const std::string& name) { return load_config(config_path(name)); }

// Same descriptor, different orbit seed or extra keys.
Config variant(const std::string& name, const json& patch) {
  json j = load(name).echo;
  j.merge_patch(patch);
  return parse_config(j);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::set<std::string> branches_of(const Report& r, const std::string& prefix) {
  std::set<std::string> out;
  for (const auto& c : r.cases)
    if (c.relation.rfind(prefix, 0) == 0) out.insert(c.branch);
  return out;
}

// ------------------------------------------------------------ criterion 1

Outcome relation_families() {
  Outcome o;
  RunOptions opt;
  struct Family {
    std::string label;
    std::vector<Config> configs;
  };
  std::vector<Family> families;
  families.push_back({"type A path n=3", {load("typeA_path")}});
  families.push_back({"type B zero, no fixed points",
                      {load("typeB_zero_n2"), variant("typeB_zero_n2", {{"orbit_seed", {"a", "a", "c"}}})}});
  families.push_back({"type B zero, fixed point",
                      {variant("typeB_zero_fixed_n3", {{"orbit_seed", {"a", "c"}}}), load("typeB_zero_fixed_n3")}});
  families.push_back({"type B gamma n=2", {load("typeB_gamma_n2")}});
  families.push_back(
      {"type B mixed gamma", {load("typeB_mixed_n3"), variant("typeB_mixed_n3", {{"orbit_seed", {"a", "a", "c"}}})}});
  for (const auto& fam : families) {
    auto t0 = std::chrono::steady_clock::now();
    std::set<std::string> braid4;
    for (const auto& c : fam.configs) {
      Report r = run_relations(c, opt);
      o.absorb(r, fam.label + " [" + tuple_str(c.quiver, c.orbit_seed) + "]");
      for (const auto& b : branches_of(r, "braid4")) braid4.insert(b.substr(0, b.find(",theta")));
    }
    double s = seconds_since(t0);
    o.note(fam.label + " took " + fmt_seconds(s));
    o.expect(s < 60, fam.label + " exceeded 60 s");
    if (fam.label == "type B mixed gamma") {
      for (const char* need : {"g1=0,g2=0", "g1=0,g2!=0", "g1!=0,g2=0", "g1!=0,g2!=0"})
        o.expect(braid4.count(need) == 1, std::string("braid4 branch not reached: ") + need);
      o.note("braid4 gamma branches reached: " + std::to_string(braid4.size()));
    }
    if (fam.label == "type B gamma n=2") {
      const Config& c = fam.configs.front();
      bool nonzero = false;
      for (const auto& g : c.params.gamma) nonzero = nonzero || !g.is_zero();
      o.expect(nonzero, "gamma family has no nonzero gamma");
    }
  }
  return o;
}

// ------------------------------------------------------------ criteria 2, 3

std::vector<Config> pbw_families() {
  return {load("typeA_path"), load("typeB_zero_n2"), load("typeB_zero_fixed_n3"), load("typeB_gamma_n2"),
          load("typeB_mixed_n3")};
}

Config rank_four() { return variant("typeB_zero_n2", {{"orbit_seed", {"a", "a", "c", "d"}}}); }

const CheckCase* find_case(const Report& r, const std::string& name) {
  for (const auto& c : r.cases)
    if (c.relation == name) return &c;
  return nullptr;
}

std::map<std::string, Report> pbw_cache;

const Report& pbw_report(const Config& c, int samples) {
  std::string key = c.echo.dump() + "#" + std::to_string(samples);
  auto it = pbw_cache.find(key);
  if (it != pbw_cache.end()) return it->second;
  RunOptions opt;
  opt.samples = samples;
  opt.seed = 7;
  return pbw_cache.emplace(key, run_pbw(c, opt)).first->second;
}

Outcome pbw_roundtrip() {
  Outcome o;
  for (const auto& c : pbw_families()) {
    const Report& r = pbw_report(c, 1000);
    const CheckCase* cs = find_case(r, "pbw_roundtrip");
    std::string label = "round-trip [" + tuple_str(c.quiver, c.orbit_seed) + "]";
    o.expect(cs && cs->pass && cs->tuple == "exhaustive", label + (cs ? " " + cs->detail : " missing"));
    if (cs) o.note(label + ": " + cs->tuple + ", " + cs->detail);
  }
  Config c4 = rank_four();
  const Report& r = pbw_report(c4, 500);
  const CheckCase* cs = find_case(r, "pbw_roundtrip");
  o.expect(cs && cs->pass && cs->tuple == "sampled", "n=4 round-trip");
  if (cs) o.note("round-trip n=4 [" + tuple_str(c4.quiver, c4.orbit_seed) + "]: " + cs->detail);
  return o;
}

Outcome pbw_closure() {
  Outcome o;
  for (const auto& c : pbw_families()) {
    const Report& r = pbw_report(c, 1000);
    std::string label = "[" + tuple_str(c.quiver, c.orbit_seed) + "]";
    for (const char* name : {"pbw_closure", "pbw_associativity"}) {
      const CheckCase* cs = find_case(r, name);
      o.expect(cs && cs->pass, label + " " + name + (cs ? " " + cs->detail : " missing"));
      if (cs) o.note(label + " " + name + ": " + cs->detail);
    }
  }
  return o;
}

// ------------------------------------------------------------ criterion 4

// Word lengths by breadth-first search on the Cayley graph.
std::map<SignedPerm, int> bfs_lengths(int n) {
  std::map<SignedPerm, int> dist;
  SignedPerm id(n);
  dist[id] = 0;
  std::queue<SignedPerm> todo;
  todo.push(id);
  while (!todo.empty()) {
    SignedPerm w = todo.front();
    todo.pop();
    for (int a = 0; a < n; ++a) {
      SignedPerm v = w * SignedPerm::generator(n, a);
      if (dist.emplace(v, dist[w] + 1).second) todo.push(v);
    }
  }
  return dist;
}

std::vector<long> poincare_product(int n) {
  // prod (1 - t^{2i}) / (1 - t) = prod (1 + t + ... + t^{2i-1})
  std::vector<long> p{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next(p.size() + 2 * i - 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k)
      for (int e = 0; e < 2 * i; ++e) next[k + e] += p[k];
    p = std::move(next);
  }
  return p;
}

Outcome coxeter_layer() {
  Outcome o;
  std::map<int, std::map<SignedPerm, int>> lengths;
  for (int n = 1; n <= 4; ++n) {
    auto& dist = lengths[n];
    dist = bfs_lengths(n);
    // normal forms r^(n) ... r^(1), built from the coset words directly
    std::vector<Word> words{Word{}};
    for (int i = n; i >= 1; --i) {
      std::vector<Word> next;
      for (const Word& w : words)
        for (int a = 1; a <= i; ++a)
          for (int eps = 0; eps <= 1; ++eps) {
            Word u = w;
            Word c = coset_word(i, a, eps);
            u.insert(u.end(), c.begin(), c.end());
            next.push_back(std::move(u));
          }
      words = std::move(next);
    }
    std::set<SignedPerm> distinct;
    int unreduced = 0;
    for (const Word& w : words) {
      SignedPerm g = SignedPerm::from_word(n, w);
      distinct.insert(g);
      if (static_cast<int>(w.size()) != dist.at(g)) ++unreduced;
    }
    long expected = 1;
    for (int i = 1; i <= n; ++i) expected *= 2 * i;
    o.expect(static_cast<long>(distinct.size()) == expected, "n=" + std::to_string(n) + ": distinct count");
    o.expect(static_cast<long>(dist.size()) == expected, "n=" + std::to_string(n) + ": Cayley graph size");
    o.expect(unreduced == 0, "n=" + std::to_string(n) + ": unreduced normal forms " + std::to_string(unreduced));
    auto group = enumerate_group(n);
    o.expect(std::set<SignedPerm>(group.begin(), group.end()) == distinct,
             "n=" + std::to_string(n) + ": enumerate_group differs");
    std::vector<long> gf(n * n + 1, 0);
    int bad_len = 0;
    for (const auto& [g, l] : dist) {
      if (length(g) != l) ++bad_len;
      if (static_cast<int>(canonical_word(g).size()) != l || SignedPerm::from_word(n, canonical_word(g)) != g)
        ++bad_len;
      ++gf.at(l);
    }
    o.expect(bad_len == 0, "n=" + std::to_string(n) + ": length or canonical word disagrees with BFS");
    o.expect(gf == poincare_product(n), "n=" + std::to_string(n) + ": length generating function");
    o.note("n=" + std::to_string(n) + ": " + std::to_string(distinct.size()) + " elements, max length " +
           std::to_string(gf.size() - 1));
  }
  int pairs = 0, bad = 0;
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 4; ++n2) {
      const auto& l1 = lengths[n1];
      const auto& l2 = lengths[n2];
      const auto& ln = lengths[n1 + n2];
      // lengths add over the images in B_n; a later block's sign change costs more than 1 there
      for (const auto& [u, lu] : l1)
        for (const auto& [v, lv] : l2) {
          ++pairs;
          SignedPerm big = embed_blocks({u, v});
          SignedPerm ubar = embed_blocks({u, SignedPerm(n2)}), vbar = embed_blocks({SignedPerm(n1), v});
          Word wu = embed_word(canonical_word(u), 0);
          Word wv = embed_word(canonical_word(v), n1);
          Word w = wu;
          w.insert(w.end(), wv.begin(), wv.end());
          bool ok = ubar * vbar == big && ln.at(big) == ln.at(ubar) + ln.at(vbar) &&
                    static_cast<int>(wu.size()) == ln.at(ubar) && static_cast<int>(wv.size()) == ln.at(vbar) &&
                    static_cast<int>(w.size()) == ln.at(big) && SignedPerm::from_word(n1 + n2, w) == big;
          if (lu != static_cast<int>(canonical_word(u).size()) || lv != static_cast<int>(canonical_word(v).size()))
            ok = false;
          if (!ok) ++bad;
        }
    }
  o.expect(bad == 0, "embed_blocks: " + std::to_string(bad) + " pairs not length-additive");
  o.note("embed_blocks: " + std::to_string(pairs) + " pairs checked");
  return o;
}

// ------------------------------------------------------------ criterion 5

Outcome decomposition() {
  Outcome o;
  RunOptions opt;
  std::vector<std::pair<std::string, Config>> cases{
      {"A n=2", variant("decompose_A", {{"orbit_seed", {"a", "c"}}})},
      {"A n=3", load("decompose_A")},
      {"B n=2", load("decompose_B")},
      {"B n=3", variant("decompose_B", {{"orbit_seed", {"a", "b", "c"}}})},
  };
  for (const auto& [label, c] : cases) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = run_decompose(c, opt);
    o.absorb(r, "decompose " + label);
    o.note("decompose " + label + " took " + fmt_seconds(seconds_since(t0)) + ", matrix size " +
           r.extra.value("matrix_size", json(0)).dump());
    for (const char* need : {"phit_psit", "psit_e(t)_phit", "multinomial", "theta_eta_inverse", "rho_roundtrip_tensor"}) {
      bool seen = false;
      for (const auto& cs : r.cases) seen = seen || cs.relation.find(need) != std::string::npos;
      o.expect(seen, "decompose " + label + ": no " + need + " check ran");
    }
  }
  return o;
}

// ------------------------------------------------------------ criterion 6

Outcome cyclotomic() {
  Outcome o;
  RunOptions opt;
  int zero_flagged = 0;
  std::vector<std::pair<std::string, Config>> cases{
      {"A n=3", load("decompose_A")},
      {"B n=2", load("decompose_B")},
      {"B n=2 other weight", variant("decompose_B", {{"Lambda", {{"a", 2}, {"c", 1}, {"d", 1}}}})},
      {"B n=3", load("typed_n3")},
      {"B n=3 zero component", load("cyclo_zero_component")},
  };
  for (const auto& [label, c] : cases) {
    Report r = run_cyclo(c, opt);
    o.absorb(r, "cyclo " + label);
    bool zero = r.extra.value("quotient_is_zero", false);
    if (zero) ++zero_flagged;
    if (label.find("zero component") != std::string::npos) o.expect(zero, label + ": quotient-is-zero flag not set");
  }
  o.expect(zero_flagged >= 1, "no zero component exercised");
  return o;
}

// ------------------------------------------------------------ criterion 7

Outcome type_d() {
  Outcome o;
  RunOptions opt;
  std::map<std::string, std::set<std::string>> seen;
  for (const char* name : {"decompose_B", "typed_n3"}) {
    auto t0 = std::chrono::steady_clock::now();
    Config c = load(name);
    Report r = run_typed(c, opt);
    o.absorb(r, std::string("typed ") + name);
    o.note(std::string("typed ") + name + " took " + fmt_seconds(seconds_since(t0)));
    for (const char* rel : {"W:psi0_y1D", "W:psi0squareD", "W:braid3D"})
      for (const auto& b : branches_of(r, rel)) seen[rel].insert(b);
    for (const char* need : {"iota_involutive", "pi_involutive", "semidirect", "decompose_D:rho_iota_commute",
                             "decompose_D:xi_conjugation"}) {
      bool hit = false;
      for (const auto& cs : r.cases) hit = hit || cs.relation.find(need) != std::string::npos;
      o.expect(hit, std::string(name) + ": no " + need + " check ran");
    }
    const CheckCase* sd = nullptr;
    for (const auto& cs : r.cases)
      if (cs.relation.find("semidirect") != std::string::npos) sd = &cs;
    if (sd) o.note(std::string(name) + " semidirect: " + sd->tuple);
  }
  for (const char* rel : {"W:psi0_y1D", "W:psi0squareD", "W:braid3D"}) {
    o.expect(seen[rel].size() >= 2, std::string(rel) + " did not reach both branches");
    std::string bs;
    for (const auto& b : seen[rel]) bs += " " + b;
    o.note(std::string(rel) + " branches:" + bs);
  }
  return o;
}

// ------------------------------------------------------------ criterion 8

struct PowerSets {
  std::set<std::uint64_t> even, odd;  // ±q^{2Z}, ±q^{2Z+1}
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

PowerSets power_sets(std::uint64_t q, std::uint64_t p) {
  PowerSets s;
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < 2 * p; ++k) {
    auto& dst = k % 2 ? s.odd : s.even;
    dst.insert(x);
    dst.insert((p - x) % p);
    x = mulmod(x, q, p);
  }
  return s;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t b = 1; b < p; ++b)
    if (mulmod(a, b, p) == 1) return b;
  return 0;
}

std::uint64_t order_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = a, k = 1;
  while (x != 1) x = mulmod(x, a, p), ++k;
  return k;
}

std::uint64_t residue_of(long v, std::uint64_t p) {
  long m = v % static_cast<long>(p);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p) : m);
}

// x = sign * p^pp * q^e in F_p
bool reconstructs(const MoritaCase& m, std::uint64_t x, std::uint64_t q, std::uint64_t pp, std::uint64_t p) {
  std::uint64_t v = 1;
  std::uint64_t qb = m.exponent >= 0 ? q : inverse_mod(q, p);
  for (long k = 0; k < std::labs(m.exponent); ++k) v = mulmod(v, qb, p);
  if (m.p_power == 1) v = mulmod(v, pp, p);
  if (m.p_power == -1) v = mulmod(v, inverse_mod(pp, p), p);
  if (m.sign < 0) v = (p - v) % p;
  return v == x;
}

Outcome morita() {
  Outcome o;
  for (std::uint64_t ch : {17u, 13u}) {
    Field f = Field::prime(ch);
    int triples = 0, bad = 0, flag_hits = 0;
    std::set<char> labels;
    for (std::uint64_t q = 2; q < ch; ++q) {
      if (mulmod(q, q, ch) == 1) continue;
      PowerSets s = power_sets(q, ch);
      bool odd_order = order_mod(mulmod(q, q, ch), ch) % 2 == 1;
      for (std::uint64_t x = 1; x < ch; ++x) {
        char want_d = s.even.count(x) ? 'a' : s.odd.count(x) ? 'b' : 'c';
        MoritaCase md = classify_morita_D(Scalar::residue(f, x), Scalar::residue(f, q));
        bool ok = md.label == want_d && md.b_equivalent_to_a == odd_order;
        if (md.label != 'c') ok = ok && reconstructs(md, x, q, 1, ch);
        // the flag means odd powers collapse into even ones
        ok = ok && (odd_order == (s.odd == s.even));
        if (!ok && bad++ < 5) o.fail("D: q=" + std::to_string(q) + " x=" + std::to_string(x) + " got " + md.str());
        ++triples;
        flag_hits += odd_order;
        for (std::uint64_t p = 2; p < ch; ++p) {
          if (mulmod(p, p, ch) == 1) continue;
          std::uint64_t pinv = inverse_mod(p, ch);
          char want = want_d;
          if (want == 'c') {
            bool in_c = false;
            for (std::uint64_t y : s.even) in_c = in_c || mulmod(y, p, ch) == x || mulmod(y, pinv, ch) == x;
            want = in_c ? 'c' : 'd';
          }
          bool reduces = false;
          for (std::uint64_t y = 1, k = 0; k < ch; ++k, y = mulmod(y, mulmod(q, q, ch), ch))
            reduces = reduces || y == mulmod(p, p, ch);
          MoritaCase mb = classify_morita_B(Scalar::residue(f, x), Scalar::residue(f, q), Scalar::residue(f, p));
          bool okb = mb.label == want && mb.c_reduces == reduces && mb.b_equivalent_to_a == odd_order;
          if (mb.label != 'd') okb = okb && reconstructs(mb, x, q, p, ch);
          if (!okb && bad++ < 5)
            o.fail("B: q=" + std::to_string(q) + " p=" + std::to_string(p) + " x=" + std::to_string(x) + " got " +
                   mb.str());
          ++triples;
          labels.insert(mb.label);
        }
      }
    }
    std::string ls(labels.begin(), labels.end());
    o.note("F_" + std::to_string(ch) + ": " + std::to_string(triples) + " triples, labels " + ls + ", " +
           std::to_string(bad) + " disagreements, odd-order flag on " + std::to_string(flag_hits) + " (q,x)");
    o.expect(triples >= 20, "F_" + std::to_string(ch) + ": too few triples");
    o.expect(bad == 0, "F_" + std::to_string(ch) + ": classifier disagrees with oracle");
  }
  // the CLI example
  Field f17 = Field::prime(17);
  o.expect(classify_morita_B(Scalar(f17, 3), Scalar(f17, 2), Scalar(f17, 3)).label == 'c',
           "classify char 17 q=2 p=3 x=3 is not case c");
  return o;
}

// ------------------------------------------------------------ criterion 9

Outcome determinism() {
  Outcome o;
  RunOptions opt;
  opt.seed = 11;
  using Runner = std::function<Report(const Config&, const RunOptions&)>;
  std::vector<std::tuple<std::string, std::string, Runner>> suites{
      {"validate", "decompose_B", run_validate},   {"relations", "typeB_mixed_n3", run_relations},
      {"pbw", "typeB_zero_fixed_n3", run_pbw},     {"decompose", "decompose_B", run_decompose},
      {"typed", "decompose_B", run_typed},         {"cyclo", "cyclo_zero_component", run_cyclo},
      {"orbits", "decompose_A", run_orbits},
  };
  for (const auto& [suite, cfg, run] : suites) {
    std::string a = run(load(cfg), opt).to_json().dump(2);
    std::string b = run(load(cfg), opt).to_json().dump(2);
    o.expect(a == b, suite + " on " + cfg + ": reports differ between runs");
    o.note(suite + " on " + cfg + ": " + std::to_string(a.size()) + " bytes");
  }
  RunOptions par = opt;
  par.workers = 4;
  std::string seq = run_relations(load("typeB_zero_fixed_n3"), opt).to_json().dump(2);
  std::string conc = run_relations(load("typeB_zero_fixed_n3"), par).to_json().dump(2);
  o.expect(seq == conc, "relations: 4 workers differ from 1 worker");
  ClassifyRequest req{17, 2, 3, {1, 2, 3, 4, 5}, HeckeMode::B};
  o.expect(run_classify(req).to_json().dump() == run_classify(req).to_json().dump(), "classify differs");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation suites", relation_families}, {"PBW round-trip", pbw_roundtrip},
      {"spanning and closure", pbw_closure},  {"Coxeter layer", coxeter_layer},
      {"decomposition A/B", decomposition},   {"cyclotomic transport", cyclotomic},
      {"type D", type_d},                     {"Morita classifiers", morita},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& [title, run] = criteria[k];
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    for (const auto& n : o.notes) std::printf("  [%zu] %s\n", k + 1, n.c_str());
    for (const auto& f : o.failures) std::printf("  [%zu] FAILED %s\n", k + 1, f.c_str());
    bool pass = o.failures.empty();
    failed += !pass;
    std::printf("criterion %zu (%s): %s  [%s]\n", k + 1, title.c_str(), pass ? "PASS" : "FAIL",
                fmt_seconds(seconds_since(t0)).c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
