// ekrlab: constructions, closed forms, exact search and verification for
// intersecting families that contain every k-subset of [n].

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ekrlab/family.hpp"
#include "ekrlab/kneser.hpp"
#include "ekrlab/search.hpp"
#include "ekrlab/verify.hpp"

using namespace ekrlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParams = 2;
constexpr int kExitBudget = 3;

struct Output {
  std::string format = "json";
  std::string path;
  bool no_stats = false;
};

struct BudgetFlags {
  std::optional<std::uint64_t> nodes;
  std::optional<double> seconds;

  Budget make() const {
    Budget b = Budget::from_env();
    if (nodes) b.node_limit = *nodes;
    if (seconds) b.time_limit = std::chrono::milliseconds(static_cast<long long>(*seconds * 1000.0));
    return b;
  }
};

Json stats_json(const SearchStats& s) { return Json{{"nodes", s.nodes}, {"seconds", s.seconds}}; }

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(std::ostream& out, const std::vector<Json>& rows) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [key, value] : rows.front().items()) keys.push_back(key);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row.at(keys[i])) : "");
    }
    out << "\n";
  }
}

void write_text(std::ostream& out, const Json& doc, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      write_text(out, value, indent + "  ");
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

// Emits documents; `rows` is the table used for CSV.
void emit(const Output& o, const std::vector<Json>& docs, const std::vector<Json>& rows) {
  std::ofstream file;
  if (!o.path.empty()) {
    file.open(o.path);
    if (!file) throw ParamError("cannot open output file " + o.path);
  }
  std::ostream& out = o.path.empty() ? std::cout : file;
  if (o.format == "csv") {
    write_csv(out, rows);
    return;
  }
  for (Json d : docs) {
    if (o.no_stats) d.erase("stats");
    if (o.format == "text") {
      write_text(out, d);
      if (docs.size() > 1) out << "\n";
    } else {
      out << d.dump(docs.size() > 1 ? -1 : 2) << "\n";
    }
  }
}

void emit(const Output& o, const Json& doc) {
  Json row = Json::object();
  for (const auto& [key, value] : doc.items()) {
    if (key != "stats" && !value.is_object() && !(value.is_array() && !value.empty() && value.front().is_array())) row[key] = value;
  }
  emit(o, {doc}, {row});
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParamError("bad element '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParamError("bad element list '" + s + "'");
    }
  }
  return out;
}

Family load_family(const std::string& path, std::optional<int> m, std::optional<int> k) {
  if (path == "-") return read_family(std::cin, m, k);
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open family file " + path);
  return read_family(in, m, k);
}

Json labels_json(const std::vector<Label>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l.name());
  return out;
}

int cmd_h(const Output& o, int m, int n, int k) {
  const Params p = Params::make(m, n, k);
  emit(o, Json{{"m", m}, {"n", n}, {"k", k}, {"h", h_value(p)}, {"summands", h_summands(p)}});
  return kExitOk;
}

int cmd_alpha(const Output& o, int m, int n, int k, bool enumerate, bool orbit, const Budget& budget) {
  const Params p = Params::make(m, n, k);
  const SearchOutcome r = enumerate ? enumerate_max_mnk(p, orbit ? EnumerationMode::orbit : EnumerationMode::full, budget)
                                    : alpha_mnk(p, budget);
  const std::uint64_t h = h_value(p);
  Json doc{{"m", m}, {"n", n}, {"k", k}, {"alpha", r.alpha}, {"h", h}, {"equal", r.alpha == h}, {"proved", r.proved}};
  doc["witness"] = family_json(r.witness);
  bool complete = r.proved;
  if (r.maxima) {
    complete = complete && r.maxima_complete;
    Json classes = Json::object();
    Json families = Json::array();
    std::map<std::string, std::uint64_t> counts;
    for (const auto& mf : *r.maxima) {
      std::set<std::string> kinds;
      for (const auto& l : mf.labels) kinds.insert(kind_name(l.kind));
      for (const auto& kind : kinds) counts[kind] += mf.orbit_size;
      families.push_back({{"members", family_json(mf.family)}, {"labels", labels_json(mf.labels)}, {"orbit_size", mf.orbit_size}});
    }
    for (const auto& [kind, count] : counts) classes[kind] = count;
    doc["mode"] = orbit ? "orbit" : "full";
    doc["complete"] = r.maxima_complete;
    doc["max_family_count"] = r.maximum_count;
    doc["classes"] = classes;
    doc["families"] = families;
  }
  doc["stats"] = stats_json(r.stats);
  emit(o, doc);
  return complete ? kExitOk : kExitBudget;
}

int cmd_build(const std::string& kind, const Output& o, std::optional<int> m, std::optional<int> n, std::optional<int> k,
              std::optional<int> t, const std::string& a, const std::string& x, bool header) {
  auto need = [&kind](const std::optional<int>& v, const char* flag) {
    if (!v) throw ParamError("build " + kind + " needs --" + flag);
    return *v;
  };
  Family f(1, 1);
  if (kind == "ht") {
    const Params p = Params::make(need(m, "m"), need(n, "n"), need(k, "k"));
    f = build_H_t(p, need(t, "t"));
  } else if (kind == "m1") {
    if (a.empty()) throw ParamError("build m1 needs --a");
    f = build_M1(need(m, "m"), need(k, "k"), SubsetCode::of(need(m, "m"), parse_list(a)), need(t, "t"));
  } else {
    if (x.empty()) throw ParamError("build m2 needs --x");
    f = build_M2(need(m, "m"), need(k, "k"), SubsetCode::of(need(m, "m"), parse_list(x)));
  }
  if (o.path.empty()) {
    write_family(std::cout, f, header);
  } else {
    std::ofstream out(o.path);
    if (!out) throw ParamError("cannot open output file " + o.path);
    write_family(out, f, header);
  }
  return kExitOk;
}

int cmd_check(const Output& o, const std::string& path, int m, int n, int k) {
  const Params p = Params::make(m, n, k);
  const Family f = load_family(path, m, k);
  Json doc{{"m", m}, {"n", n}, {"k", k}, {"size", f.size()}};
  const auto pair = disjoint_pair(f);
  const Family base = base_family(p);
  std::optional<Mask> missing;
  for (Mask b : base.members()) {
    if (!f.contains(b)) {
      missing = b;
      break;
    }
  }
  std::optional<Mask> short_trace;
  for (Mask s : f.members()) {
    if (cardinality(s & p.inner()) < p.trace_min()) {
      short_trace = s;
      break;
    }
  }
  const bool valid = is_mnk_family(f, p);
  doc["valid"] = valid;
  doc["intersecting"] = !pair.has_value();
  if (pair) doc["disjoint_pair"] = sets_json({pair->first, pair->second});
  doc["contains_base"] = !missing.has_value();
  if (missing) doc["missing_base_member"] = elements(*missing);
  doc["trace_ok"] = !short_trace.has_value();
  if (short_trace) doc["short_trace_member"] = elements(*short_trace);
  doc["h"] = h_value(p);
  if (valid) {
    const auto labels = classify_family(f, p);
    doc["labels"] = labels_json(labels);
    for (const auto& l : labels) {
      if (l.kind == LabelKind::hybrid_2k2) doc["fstar"] = sets_json(l.trace_family);
    }
  }
  emit(o, doc);
  return valid ? kExitOk : kExitVerifyFail;
}

struct VerifyArgs {
  std::string claim;
  std::optional<int> m, n, k, x, a, b, c, d, n1, k1, n2, k2, m_lo, m_hi;
  std::string preset = "desk";
  int count = 100;
};

int cmd_verify(const Output& o, const VerifyArgs& v, const Budget& budget) {
  auto need = [&](const std::optional<int>& val, const char* flag) {
    if (!val) throw ParamError("verify " + v.claim + " needs --" + flag);
    return *val;
  };
  std::vector<Verdict> verdicts;
  const std::string& c = v.claim;
  if (c == "all") {
    if (v.preset != "desk") throw ParamError("unknown preset '" + v.preset + "'");
    verdicts = desk_suite(budget);
  } else if (c == "ekr") {
    verdicts.push_back(verify_ekr(need(v.m, "m"), need(v.k, "k"), budget));
  } else if (c == "hm") {
    verdicts.push_back(verify_hm(need(v.m, "m"), need(v.k, "k"), budget));
  } else if (c == "m2k") {
    verdicts.push_back(verify_m_equals_2k(need(v.k, "k"), need(v.n, "n"), budget));
  } else if (c == "n2k1") {
    verdicts.push_back(verify_n_2k_minus_1(need(v.m, "m"), need(v.k, "k"), budget));
  } else if (c == "n2k2") {
    verdicts.push_back(verify_n_2k_minus_2(need(v.m, "m"), need(v.k, "k"), budget));
  } else if (c == "n2k3") {
    verdicts.push_back(verify_n_2k_minus_3(need(v.m, "m"), need(v.k, "k"), budget));
  } else if (c == "zhang") {
    verdicts.push_back(verify_zhang(need(v.n1, "n1"), need(v.k1, "k1"), need(v.n2, "n2"), need(v.k2, "k2"), budget));
  } else if (c == "xfm") {
    verdicts.push_back(verify_xfm(need(v.x, "x"), need(v.a, "a"), need(v.b, "b")));
  } else if (c == "fuf") {
    verdicts.push_back(verify_fuf(need(v.n, "n"), need(v.k, "k"), need(v.c, "c"), need(v.d, "d"), need(v.m_lo, "m-lo"),
                                  need(v.m_hi, "m-hi"), budget));
  } else if (c == "theorem11") {
    verdicts.push_back(verify_theorem11(need(v.n, "n"), need(v.k, "k"), need(v.m_lo, "m-lo"), need(v.m_hi, "m-hi"), budget));
  } else if (c == "solver") {
    verdicts.push_back(verify_solver_oracle(v.count, budget));
  } else {
    throw ParamError("unknown claim '" + c + "'");
  }

  std::vector<Json> docs;
  std::vector<Json> rows;
  bool failed = false;
  bool unproved = false;
  for (const auto& verdict : verdicts) {
    docs.push_back(verdict.to_json(!o.no_stats));
    rows.push_back({{"claim", verdict.claim}, {"params", verdict.params}, {"pass", verdict.pass}, {"proved", verdict.proved}});
    failed = failed || (verdict.proved && !verdict.pass);
    unproved = unproved || !verdict.proved;
  }
  // Sweeps flatten into their per-m rows.
  if (o.format == "csv" && verdicts.size() == 1 && verdicts.front().computed.contains("rows") &&
      !verdicts.front().computed["rows"].empty()) {
    rows.clear();
    for (const auto& row : verdicts.front().computed["rows"]) rows.push_back(row);
  }
  emit(o, docs, rows);
  if (failed) return kExitVerifyFail;
  return unproved ? kExitBudget : kExitOk;
}

int cmd_kneser(const Output& o, int n, int k, const Budget& budget) {
  const KneserGraph g = kneser(n, k);
  const IntersectionGraph ig = to_graph(g);
  const MisResult r = max_independent_set(ig, budget);
  emit(o, Json{{"n", n}, {"k", k}, {"vertices", g.size()}, {"edges", ig.edge_count()},
               {"degree", g.size() ? ig.degree(0) : 0}, {"alpha", r.alpha}, {"alpha_formula", alpha_kneser_formula(n, k)},
               {"proved", r.proved}, {"stats", stats_json(r.stats)}});
  return r.proved ? kExitOk : kExitBudget;
}

int cmd_product(const Output& o, int n1, int k1, int n2, int k2, const Budget& budget) {
  const KneserGraph g = kneser(n1, k1);
  const KneserGraph h = kneser(n2, k2);
  const ProductGraph gh = product(g, h);
  const IntersectionGraph ig = to_graph(gh);
  const MisResult r = max_independent_set(ig, budget);
  const std::uint64_t fa = alpha_kneser_formula(n1, k1) * h.size();
  const std::uint64_t fb = g.size() * alpha_kneser_formula(n2, k2);
  Json doc{{"n1", n1}, {"k1", k1}, {"n2", n2}, {"k2", k2}, {"vertices", gh.size()}, {"edges", ig.edge_count()},
           {"alpha", r.alpha}, {"alpha_formula", std::max(fa, fb)}, {"proved", r.proved}};
  if (k1 >= 1 && k2 >= 1) doc["closed_form"] = alpha_product_formula(n1, k1, n2, k2);
  doc["stats"] = stats_json(r.stats);
  emit(o, doc);
  return r.proved ? kExitOk : kExitBudget;
}

int cmd_xfm(const Output& o, int x, int a, int b) {
  const CrossIntersectingOutcome c = cross_intersecting_max(x, a, b);
  emit(o, Json{{"x", x}, {"a", a}, {"b", b}, {"max_sum", c.max_sum}, {"bound", c.bound}, {"exhaustive", c.exhaustive},
               {"a_family", sets_json(c.a_family)}, {"b_family", sets_json(c.b_family)}});
  return kExitOk;
}

int cmd_fuf(const Output& o, int n, int k, int c, int d, int m_lo, int m_hi, const Budget& budget) {
  if (m_lo > m_hi) throw ParamError("empty sweep");
  std::vector<Json> rows;
  SearchStats total;
  bool complete = true;
  for (int m = m_lo; m <= m_hi && complete; ++m) {
    const TwoLayerOutcome t = two_layer_max(n, k, c, d, m, budget);
    total.nodes += t.search.stats.nodes;
    total.seconds += t.search.stats.seconds;
    complete = t.search.proved && t.search.maxima_complete;
    rows.push_back({{"m", m}, {"alpha", t.search.alpha}, {"star_value", t.star_value}, {"equals_star", t.equals_star},
                    {"common_element", t.all_common}, {"common_element_in_n", t.all_common_in_n},
                    {"maximum_count", t.search.maximum_count}, {"proved", complete}});
  }
  Json doc{{"n", n}, {"k", k}, {"c", c}, {"d", d}, {"threshold", fuf_threshold(n, k, d)}, {"rows", rows},
           {"stats", stats_json(total)}};
  emit(o, {doc}, rows);
  return complete ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for intersecting families containing every k-subset of [n]"};
  app.require_subcommand(1);
  Output out;
  BudgetFlags budget;
  app.add_option("--format", out.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", out.path, "write to this file instead of stdout");
  app.add_flag("--no-stats", out.no_stats, "omit the stats block");
  app.add_option("--node-limit", budget.nodes, "search node budget");
  app.add_option("--time-limit", budget.seconds, "search time budget in seconds (overrides EKRLAB_BUDGET_SECS)");
  app.fallthrough();

  int m = 0, n = 0, k = 0;
  auto* h = app.add_subcommand("h", "h(m,n,k) and its per-layer summands");
  h->add_option("--m", m)->required();
  h->add_option("--n", n)->required();
  h->add_option("--k", k)->required();

  bool enumerate = false, orbit = false;
  auto* alpha = app.add_subcommand("alpha", "exact alpha(m,n,k), optionally with all maximum families");
  alpha->add_option("--m", m)->required();
  alpha->add_option("--n", n)->required();
  alpha->add_option("--k", k)->required();
  alpha->add_flag("--enumerate", enumerate, "list every maximum family");
  alpha->add_flag("--orbit", orbit, "list orbit representatives instead (implies --enumerate)");

  std::string kind, a_list, x_list;
  std::optional<int> om, on, ok, ot;
  auto* build = app.add_subcommand("build", "write a constructed family (ht, m1, m2)");
  build->add_option("kind", kind)->required()->check(CLI::IsMember({"ht", "m1", "m2"}));
  build->add_option("--m", om);
  build->add_option("--n", on);
  build->add_option("--k", ok);
  build->add_option("--t", ot);
  build->add_option("--a", a_list, "comma-separated set A for m1");
  build->add_option("--x", x_list, "comma-separated set X for m2");
  bool header = false;
  build->add_flag("--header", header, "start the file with a '# m= k=' line");

  std::string file;
  auto* check = app.add_subcommand("check", "validate and classify a family file ('-' reads stdin)");
  check->add_option("file", file)->required();
  check->add_option("--m", m)->required();
  check->add_option("--n", n)->required();
  check->add_option("--k", k)->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a checker: ekr hm m2k n2k1 n2k2 n2k3 zhang xfm fuf theorem11 solver all");
  verify->add_option("claim", va.claim)->required();
  for (auto [flag, slot] : std::vector<std::pair<const char*, std::optional<int>*>>{
           {"--m", &va.m}, {"--n", &va.n}, {"--k", &va.k}, {"--x", &va.x}, {"--a", &va.a}, {"--b", &va.b},
           {"--c", &va.c}, {"--d", &va.d}, {"--n1", &va.n1}, {"--k1", &va.k1}, {"--n2", &va.n2}, {"--k2", &va.k2},
           {"--m-lo", &va.m_lo}, {"--m-hi", &va.m_hi}}) {
    verify->add_option(flag, *slot);
  }
  verify->add_option("--preset", va.preset, "suite preset for 'all'");
  verify->add_option("--count", va.count, "graph count for 'solver'");

  auto* kn = app.add_subcommand("kneser", "Kneser graph statistics and alpha");
  kn->add_option("--n", n)->required();
  kn->add_option("--k", k)->required();

  int n1 = 0, k1 = 0, n2 = 0, k2 = 0;
  auto* prod = app.add_subcommand("product", "alpha of a product of two Kneser graphs");
  prod->add_option("--n1", n1)->required();
  prod->add_option("--k1", k1)->required();
  prod->add_option("--n2", n2)->required();
  prod->add_option("--k2", k2)->required();

  int x = 0, a = 0, b = 0;
  auto* xfm = app.add_subcommand("xfm", "maximum |A|+|B| over cross-intersecting pairs");
  xfm->add_option("--x", x)->required();
  xfm->add_option("--a", a)->required();
  xfm->add_option("--b", b)->required();

  int c = 0, d = 0, m_lo = 0, m_hi = 0;
  auto* fuf = app.add_subcommand("fuf", "two-layer maxima over a sweep of m");
  fuf->add_option("--n", n)->required();
  fuf->add_option("--k", k)->required();
  fuf->add_option("--c", c)->required();
  fuf->add_option("--d", d)->required();
  fuf->add_option("--m-lo", m_lo)->required();
  fuf->add_option("--m-hi", m_hi)->required();

  auto* thr = app.add_subcommand("threshold", "the explicit two-layer threshold on m");
  thr->add_option("--n", n)->required();
  thr->add_option("--k", k)->required();
  thr->add_option("--d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParams;
  }

  try {
    const Budget bud = budget.make();
    if (*h) return cmd_h(out, m, n, k);
    if (*alpha) return cmd_alpha(out, m, n, k, enumerate || orbit, orbit, bud);
    if (*build) return cmd_build(kind, out, om, on, ok, ot, a_list, x_list, header);
    if (*check) return cmd_check(out, file, m, n, k);
    if (*verify) return cmd_verify(out, va, bud);
    if (*kn) return cmd_kneser(out, n, k, bud);
    if (*prod) return cmd_product(out, n1, k1, n2, k2, bud);
    if (*xfm) return cmd_xfm(out, x, a, b);
    if (*fuf) return cmd_fuf(out, n, k, c, d, m_lo, m_hi, bud);
    if (*thr) {
      emit(out, Json{{"n", n}, {"k", k}, {"d", d}, {"threshold", fuf_threshold(n, k, d)}});
      return kExitOk;
    }
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  }
  return kExitParams;
}
