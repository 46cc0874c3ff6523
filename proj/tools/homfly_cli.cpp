#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "homfly/json_io.hpp"
#include "homfly/selftest.hpp"

// Exit codes: 0 success, 1 usage or invalid parameters, 2 a mathematical
// check failed (violation finding or reference mismatch), 3 internal error.

namespace {

using namespace homfly;

struct Options {
  int r = 1;
  int k = 1;
  int l = 1;
  std::string colors;
  std::string sizes;
  std::string cache;
  int caps = 0;
  int max_cells = 6;
  bool json = false;
  bool force = false;
  bool corrupt = false;
};

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size() || v < 0) throw std::invalid_argument("bad size list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty size list");
  return out;
}

// sizes per component plus the total cap used by the series truncation
std::pair<std::vector<int>, long> resolve_sizes(const Options& o) {
  if (!o.sizes.empty()) {
    auto sz = parse_sizes(o.sizes);
    if (static_cast<int>(sz.size()) != o.l)
      throw std::invalid_argument("--sizes: need one entry per component");
    return {sz, -1};
  }
  if (o.caps < 1) throw std::invalid_argument("need --caps or --sizes");
  return {std::vector<int>(o.l, o.caps), o.l > 1 ? o.caps : -1};
}

long total_of(const std::vector<int>& sizes) {
  long t = 0;
  for (int v : sizes) t += v;
  return t;
}

void apply_cache(const Options& o) {
  if (!o.cache.empty()) setenv("HOMFLY_CHAR_CACHE", o.cache.c_str(), 1);
}

std::string pow_str(const char* var, const Rat& e) {
  if (e == 0) return "";
  return std::string(var) + "^{" + rat_to_string(e) + "} ";
}

// one invariant term as "- 2 t^{3/2} s*_(2,1)"
std::string term_str(const SStarTerm& t, bool with_v) {
  const auto& tm = t.mono.terms().at(0);
  Rat c = tm.c;
  std::string s = c < 0 ? "- " : "+ ";
  if (c < 0) c = -c;
  if (c != 1) s += rat_to_string(c) + " ";
  s += pow_str("t", tm.et);
  if (with_v) s += pow_str("v", tm.ev);
  return s + "s*_(" + partition_to_string(t.lam) + ")";
}

void print_invariant(const ColoredInvariant& inv) {
  bool uniform_v = true;
  for (const auto& t : inv.terms)
    if (t.mono.terms().at(0).ev != inv.terms.at(0).mono.terms().at(0).ev) uniform_v = false;
  std::printf("W(T(%d,%d); colors %s) =", inv.link.r * inv.link.l, inv.link.k * inv.link.l,
              tuple_to_string(inv.colors).c_str());
  if (uniform_v && !inv.terms.empty()) {
    Rat ev = inv.terms.at(0).mono.terms().at(0).ev;
    if (ev != 0) std::printf(" %s*", pow_str("v", ev).c_str());
    std::printf("\n");
    for (const auto& t : inv.terms) std::printf("  %s\n", term_str(t, false).c_str());
  } else {
    std::printf("\n");
    for (const auto& t : inv.terms) std::printf("  %s\n", term_str(t, true).c_str());
  }
}

int cmd_torus(const Options& o) {
  apply_cache(o);
  TorusLinkSpec s{o.r, o.k, o.l};
  validate_spec(s);
  PartitionTuple colors =
      o.colors.empty() ? PartitionTuple(o.l, Partition{1}) : tuple_from_string(o.colors);
  long cells = 0;
  for (const auto& mu : colors) cells += weight(mu);
  if (!o.force && s.r * cells > 12)
    throw std::invalid_argument("r * total color size > 12; pass --force to run anyway");
  ColoredInvariant inv = colored_homfly_torus(s, colors);
  if (o.json) {
    std::printf("%s\n", json_of(inv).dump(2).c_str());
    return 0;
  }
  print_invariant(inv);
  std::printf("value = %s\n", inv.value().str().c_str());
  bool all_boxes = true;
  for (const auto& mu : colors)
    if (mu != Partition{1}) all_boxes = false;
  if (all_boxes) std::printf("P = %s\n", homfly_polynomial(s).str().c_str());
  return 0;
}

int cmd_lmv(const Options& o) {
  apply_cache(o);
  TorusLinkSpec s{o.r, o.k, o.l};
  validate_spec(s);
  auto [sizes, tcap] = resolve_sizes(o);
  if (!o.force && s.r * total_of(sizes) > 9)
    throw std::invalid_argument("r * total size cap > 9; pass --force to run anyway");
  LmvResult res = lmv_run(s, sizes, tcap);
  if (o.corrupt && !res.fhat.empty()) {
    // test hook: break one value, rerun the checks, demonstrate findings
    res.fhat.begin()->second += RationalFunction::over_brackets(
        ExactLaurent::one(), {{Var::t, 1}, {Var::t, 1}, {Var::t, 1}});
    res.bps.clear();
    res.findings.clear();
    for (const auto& [mu, f] : res.fhat) extract_bps(mu, f, s.l, res.bps, res.findings);
  }
  if (o.json) {
    std::printf("%s\n", json_of(res).dump(2).c_str());
    return res.verified() ? 0 : 2;
  }
  std::printf("T(%d,%d) connected invariants, component caps", s.r * s.l, s.k * s.l);
  for (int v : sizes) std::printf(" %d", v);
  std::printf(", total cap %ld\n", res.total_cap);
  for (const auto& [mu, f] : res.f)
    std::printf("f_(%s) = %s\n", tuple_to_string(mu).c_str(), f.str().c_str());
  for (const auto& [mu, f] : res.fhat)
    std::printf("fhat_(%s) = %s\n", tuple_to_string(mu).c_str(), f.str().c_str());
  std::printf("integer table:\n");
  for (const auto& e : res.bps)
    std::printf("  colors (%s)  g=%ld  Q=%s  N=%s\n", tuple_to_string(e.mu).c_str(), e.g,
                rat_to_string(e.q).c_str(), rat_to_string(e.n).c_str());
  if (res.verified()) {
    std::printf("findings: none\n");
    return 0;
  }
  for (const auto& f : res.findings)
    std::printf("finding: %s at %s: %s\n", f.kind.c_str(), f.where.c_str(), f.detail.c_str());
  return 2;
}

std::string u_str(const ExactLaurent& p) {
  std::string s;
  auto terms = p.terms();
  std::reverse(terms.begin(), terms.end());
  for (const auto& tm : terms) {
    Rat c = tm.c;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit = c == 1 && tm.et != 0;
    if (!unit) s += rat_to_string(c);
    if (tm.et != 0) {
      if (!unit) s += " ";
      s += "u";
      if (tm.et != 1) s += "^{" + rat_to_string(tm.et) + "}";
    }
  }
  return s.empty() ? "0" : s;
}

int cmd_gtable(const Options& o) {
  apply_cache(o);
  TorusLinkSpec s{o.r, o.k, o.l};
  validate_spec(s);
  if (s.k < 1) throw std::invalid_argument("g-table needs k >= 1");
  auto [sizes, tcap] = resolve_sizes(o);
  if (!o.force && s.r * total_of(sizes) > 9)
    throw std::invalid_argument("r * total size cap > 9; pass --force to run anyway");
  GTable table = extract_g(s, sizes, tcap);
  if (o.json) {
    std::printf("%s\n", json_of(table).dump(2).c_str());
    return table.verified() ? 0 : 2;
  }
  std::printf("T(%d,%d) one-variable table, component caps", s.r * s.l, s.k * s.l);
  for (int v : sizes) std::printf(" %d", v);
  std::printf(", total cap %ld\n", table.total_cap);
  for (const auto& [cols, row] : table.g)
    for (const auto& [lam, gu] : row)
      std::printf("  g_(%s)^(%s) = %s\n", tuple_to_string(cols).c_str(),
                  partition_to_string(lam).c_str(), u_str(gu).c_str());
  std::printf("integral: %s  palindromic: %s\n", table.integral ? "yes" : "no",
              table.palindromic ? "yes" : "no");
  if (table.verified()) {
    std::printf("findings: none\n");
    return 0;
  }
  for (const auto& f : table.findings)
    std::printf("finding: %s at %s: %s\n", f.kind.c_str(), f.where.c_str(), f.detail.c_str());
  return 2;
}

Json json_of_report(const SelfTestReport& rep, const char* kind, Json extra) {
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"name", r.name}, {"pass", r.pass}, {"witness", r.witness}});
  Json out = {{"schema", kSchema}, {"kind", kind}, {"rows", rows}, {"all_pass", rep.all_pass()}};
  out.update(extra);
  return out;
}

int finish_report(const SelfTestReport& rep, const Options& o, const char* kind, Json extra) {
  if (o.json) {
    std::printf("%s\n", json_of_report(rep, kind, std::move(extra)).dump(2).c_str());
    return rep.all_pass() ? 0 : 2;
  }
  size_t passed = 0;
  for (const auto& r : rep.rows) {
    if (r.pass) {
      ++passed;
      std::printf("PASS %s\n", r.name.c_str());
    } else if (r.witness.empty()) {
      std::printf("FAIL %s\n", r.name.c_str());
    } else {
      std::printf("FAIL %s [%s]\n", r.name.c_str(), r.witness.c_str());
    }
  }
  std::printf("%zu/%zu checks passed\n", passed, rep.rows.size());
  return rep.all_pass() ? 0 : 2;
}

int cmd_oracle(const Options& o) {
  apply_cache(o);
  if (o.max_cells < 1) throw std::invalid_argument("--max-cells must be >= 1");
  if (!o.force && o.max_cells > 6)
    throw std::invalid_argument("--max-cells > 6 is slow; pass --force to run anyway");
  return finish_report(oracle_report(o.max_cells), o, "oracle",
                       {{"max_cells", o.max_cells}});
}

int cmd_selftest(const Options& o) {
  apply_cache(o);
  return finish_report(run_selftest(), o, "selftest", Json::object());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact colored invariants of torus links"};
  app.require_subcommand(1);
  Options o;

  auto add_link = [&o](CLI::App* c) {
    c->add_option("-r", o.r, "strand parameter of one component curve")->capture_default_str();
    c->add_option("-k", o.k, "winding parameter; the link is T(r*l, k*l)")->capture_default_str();
    c->add_option("-l", o.l, "number of components")->capture_default_str();
  };
  auto add_common = [&o](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable output");
    c->add_flag("--force", o.force, "lift the desk-scale size guards");
    c->add_option("--cache", o.cache, "character cache path (else HOMFLY_CHAR_CACHE)");
  };
  auto add_sizes = [&o](CLI::App* c) {
    c->add_option("--sizes", o.sizes, "per-component color size caps, comma separated");
    c->add_option("--caps", o.caps, "uniform size cap; for links also the total cap");
  };

  CLI::App* torus = app.add_subcommand("torus", "one colored invariant in the s*-basis");
  add_link(torus);
  torus->add_option("--colors", o.colors, "one partition per component, '|' separated");
  add_common(torus);

  CLI::App* lmv = app.add_subcommand("lmv", "connected invariants and their integer table");
  add_link(lmv);
  add_sizes(lmv);
  add_common(lmv);
  lmv->add_flag("--corrupt-internal", o.corrupt)->group("");

  CLI::App* gtable = app.add_subcommand("g-table", "solved one-variable table and its flags");
  add_link(gtable);
  add_sizes(gtable);
  add_common(gtable);

  CLI::App* oracle = app.add_subcommand("oracle", "independent matrix evaluation cross-check");
  oracle->add_option("--max-cells", o.max_cells, "largest cabled size to sweep")
      ->capture_default_str();
  add_common(oracle);

  CLI::App* selftest = app.add_subcommand("selftest", "reproduce the reference tables");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (torus->parsed()) return cmd_torus(o);
    if (lmv->parsed()) return cmd_lmv(o);
    if (gtable->parsed()) return cmd_gtable(o);
    if (oracle->parsed()) return cmd_oracle(o);
    return cmd_selftest(o);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
