// vint: vertex integrity / component order connectivity toolkit.
//
// Subcommands: solve, verify, params, gen (alias: reduce), bench.
// Exit codes: 0 ok/yes, 1 no/reject, 2 input error, 3 resource limit,
// 4 internal invariant failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "../src/graph.hpp"
#include "../src/ml_solver.hpp"
#include "../src/mw_solver.hpp"
#include "../src/oracle.hpp"
#include "../src/params.hpp"
#include "../src/reductions.hpp"
#include "../src/vc_solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using vint::Graph;
using vint::ProblemMode;
using vint::Solution;
using vint::Vertex;
using vint::Weight;

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

ProblemMode mode_of(const std::string& problem) {
  if (problem == "vi" || problem == "coc") return ProblemMode::uvi();
  if (problem == "wvi") return ProblemMode::wvi();
  if (problem == "swvi") return ProblemMode::swvi();
  if (problem == "swcoc") return ProblemMode::swcoc();
  throw std::invalid_argument("unknown problem '" + problem + "'");
}

bool is_coc_problem(const std::string& problem) {
  return problem == "coc" || problem == "swcoc";
}

json one_indexed(const std::vector<Vertex>& vs) {
  json arr = json::array();
  for (Vertex v : vs) arr.push_back(v + 1);
  return arr;
}

std::vector<Vertex> parse_vertex_list(const std::string& text, int n) {
  std::vector<Vertex> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    long long id = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad vertex id '" + tok + "'");
    if (id < 1 || id > n) throw std::invalid_argument("vertex id " + tok + " out of range");
    out.push_back(Vertex(id - 1));
  }
  return out;
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    out.push_back(std::stoll(tok, &pos));
    if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
  }
  return out;
}

// "1-2,2-3" -> 0-based bin pairs
std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bin pair '" + tok + "' must look like i-j");
    int i = std::stoi(tok.substr(0, dash));
    int j = std::stoi(tok.substr(dash + 1));
    if (i < 1 || j < 1) throw std::invalid_argument("bins are 1-indexed");
    out.push_back({i - 1, j - 1});
  }
  return out;
}

uint64_t rng_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw std::logic_error("rng_below: zero bound");
  uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph random_graph(int n, double p, uint64_t seed, Weight max_weight) {
  if (n < 0) throw std::invalid_argument("random graph: n must be >= 0");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random graph: p must be in [0,1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      double r = double(rng() >> 11) * (1.0 / 9007199254740992.0);
      if (r < p) g.add_edge(u, v);
    }
  if (max_weight > 1)
    for (Vertex v = 0; v < n; ++v) g.set_weight(v, 1 + Weight(rng_below(rng, uint64_t(max_weight))));
  return g;
}

// Structural parameters, each independently best-effort (null when the
// exact computation is out of reach for this size).
json params_report(const Graph& g, bool attempt_expensive) {
  json out;
  out["n"] = g.n();
  out["m"] = g.m();
  out["fes"] = vint::feedback_edge_number(g);
  out["x"] = int64_t(vint::high_degree_set(g).size());
  out["vc"] = nullptr;
  out["mw"] = nullptr;
  if (attempt_expensive) {
    try {
      out["vc"] = int64_t(vint::vertex_cover_exact(g).size());
    } catch (const vint::resource_limit_error&) {
    }
    if (g.n() <= 400) {
      try {
        out["mw"] = vint::modular_width(vint::modular_decomposition(g));
      } catch (const vint::resource_limit_error&) {
      }
    }
  }
  return out;
}

Graph unit_copy(const Graph& g) {
  Graph u(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    u.set_label(v, g.label(v));
    for (Vertex w : g.neighbors(v))
      if (w > v) u.add_edge(v, w);
  }
  return u;
}

// ---------------------------------------------------------------- solve --

struct SolveArgs {
  std::string input;
  std::string algo = "auto";
  std::string problem = "vi";
  int64_t ell = 0;
  bool has_ell = false;
  int64_t k = 0;
  bool has_k = false;
};

std::string pick_auto_algo(const Graph& g, const std::string& problem, bool has_k) {
  if (g.n() <= 20) return "oracle";
  struct Cand {
    std::string name;
    int64_t param;
  };
  std::vector<Cand> cands;
  const bool unit = g.unit_weights();
  if (problem == "vi" || problem == "wvi") {
    try {
      int64_t vc = int64_t(vint::vertex_cover_exact(g).size());
      if (vc <= 25) cands.push_back({"vc", vc});
    } catch (const vint::resource_limit_error&) {
    }
  }
  if (problem == "vi" || (problem == "coc" && unit)) {
    int64_t x = int64_t(vint::high_degree_set(g).size());
    if (x <= (problem == "vi" ? 20 : 25)) cands.push_back({"ml", x});
  }
  if ((problem == "vi" || problem == "wvi") && g.n() <= 400) {
    try {
      int64_t mw = vint::modular_width(vint::modular_decomposition(g));
      if (mw <= 20) cands.push_back({"mw", mw});
    } catch (const vint::resource_limit_error&) {
    }
  }
  std::string best;
  int64_t best_param = std::numeric_limits<int64_t>::max();
  for (const auto& c : cands)
    if (c.param < best_param) {
      best_param = c.param;
      best = c.name;
    }
  if (!best.empty()) return best;
  if (has_k && !is_coc_problem(problem)) return "natural";
  throw vint::resource_limit_error("no solver applicable to this instance within limits");
}

int cmd_solve(const SolveArgs& a) {
  Graph g = vint::parse_graph_file(a.input);
  ProblemMode mode = mode_of(a.problem);
  const bool coc = is_coc_problem(a.problem);
  if (coc && !a.has_ell) throw std::invalid_argument("--ell is required for coc/swcoc");
  if (!coc && a.has_ell) throw std::invalid_argument("--ell only applies to coc/swcoc");
  if (coc && a.ell < 1) throw std::invalid_argument("--ell must be >= 1");

  std::string algo = a.algo;
  if (algo == "auto") algo = pick_auto_algo(g, a.problem, a.has_k);

  json report;
  report["problem"] = a.problem;
  if (coc) report["ell"] = a.ell;

  int64_t nodes = 0;
  std::optional<Solution> sol;               // vi-family result
  std::optional<vint::CocResult> coc_res;    // coc-family result
  bool natural_no = false;

  auto t0 = std::chrono::steady_clock::now();
  if (algo == "oracle") {
    if (coc) {
      Weight cap = mode.separator_cost == vint::CostKind::Count ? Weight(g.n()) : g.total_weight();
      coc_res = vint::coc_exact(g, a.ell, mode, cap);
    } else {
      sol = vint::vi_exact(g, mode);
    }
  } else if (algo == "natural") {
    if (coc) throw std::invalid_argument("algo natural solves integrity problems only");
    if (!a.has_k) throw std::invalid_argument("algo natural needs a target --k");
    vint::NaturalStats st;
    sol = vint::vi_natural(g, a.k, mode, 50'000'000, &st);
    nodes = st.nodes;
    if (!sol) natural_no = true;
  } else if (algo == "vc") {
    if (a.problem != "vi" && a.problem != "wvi")
      throw std::invalid_argument("algo vc supports problems vi and wvi");
    auto cover = vint::vertex_cover_exact(g);
    if (a.problem == "vi") {
      vint::VcStats st;
      sol = vint::uvi_vc(g, cover, &st);
      nodes = st.branch_nodes;
    } else {
      sol = vint::wvi_vc(g, cover);
    }
  } else if (algo == "ml") {
    if (a.problem == "vi") {
      vint::MlStats st;
      sol = vint::uvi_ml(g, &st);
      nodes = st.pipelines;
    } else if (a.problem == "coc") {
      if (!g.unit_weights()) throw std::invalid_argument("algo ml needs unit weights");
      vint::MlStats st;
      coc_res = vint::coc_ml(g, a.ell, -1, &st);
      nodes = st.pipelines;
    } else {
      throw std::invalid_argument("algo ml supports problems vi and coc");
    }
  } else if (algo == "mw") {
    if (a.problem != "vi" && a.problem != "wvi")
      throw std::invalid_argument("algo mw supports problems vi and wvi");
    sol = vint::wvi_mw(a.problem == "vi" ? unit_copy(g) : g);
  } else {
    throw std::invalid_argument("unknown algo '" + algo + "'");
  }
  double ms = ms_since(t0);

  report["algorithm"] = algo;
  if (natural_no) {
    report["answer"] = "no";
    report["k"] = a.k;
    report["nodes_expanded"] = nodes;
    report["time_ms"] = ms;
    std::cout << report.dump(2) << "\n";
    return 1;
  }

  Weight value = 0;
  std::vector<Vertex> sep;
  Weight max_comp = 0;
  size_t ncomp = 0;
  if (coc) {
    if (!coc_res) throw std::logic_error("coc solver returned no separator without a cap");
    sep = coc_res->separator;
    value = coc_res->p;
    Solution ev = vint::evaluate(g, sep, mode);
    max_comp = ev.max_component_cost;
    ncomp = ev.components.size();
  } else {
    sep = sol->separator;
    value = sol->total;
    max_comp = sol->max_component_cost;
    ncomp = sol->components.size();
  }

  report["value"] = value;
  report["separator"] = one_indexed(sep);
  report["max_component"] = max_comp;
  report["components_count"] = ncomp;
  report["nodes_expanded"] = nodes;
  report["params"] = params_report(g, g.n() <= 64);
  report["time_ms"] = ms;

  int code = 0;
  if (a.has_k) {
    bool yes = value <= a.k;
    report["answer"] = yes ? "yes" : "no";
    report["k"] = a.k;
    code = yes ? 0 : 1;
  }
  std::cout << report.dump(2) << "\n";
  return code;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const std::string& input, const std::string& sep_text, const std::string& problem,
               int64_t claim, int64_t ell, bool has_ell) {
  Graph g = vint::parse_graph_file(input);
  ProblemMode mode = mode_of(problem);
  const bool coc = is_coc_problem(problem);
  if (coc && !has_ell) throw std::invalid_argument("--ell is required for coc/swcoc");
  std::vector<Vertex> sep = parse_vertex_list(sep_text, g.n());
  Solution ev = vint::evaluate(g, sep, mode);

  json report;
  report["problem"] = problem;
  report["separator"] = one_indexed(ev.separator);
  report["separator_cost"] = ev.separator_cost;
  report["max_component"] = ev.max_component_cost;
  report["claim"] = claim;
  bool ok;
  if (coc) {
    report["ell"] = ell;
    ok = ev.max_component_cost <= ell && ev.separator_cost <= claim;
  } else {
    report["total"] = ev.total;
    ok = ev.total <= claim;
  }
  report["verified"] = ok;
  std::cout << report.dump(2) << "\n";
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ gen --

struct GenArgs {
  std::string kind;
  std::string input;     // source graph for graph-to-graph reductions
  std::string out;
  std::string items;     // rubp
  std::string pairs;     // rubp
  int64_t k = 0;
  bool has_k = false;
  int64_t d = 1;
  int64_t ell = 1;
  int64_t p = 0;
  int64_t n = 10;
  double prob = 0.5;
  uint64_t seed = 1;
  int64_t max_weight = 1;
};

void write_instance(const std::string& path, const Graph& g, json& sidecar) {
  if (g.n() <= 10'000) {
    json labels = json::object();
    for (Vertex v = 0; v < g.n(); ++v)
      if (!g.label(v).empty()) labels[std::to_string(v + 1)] = g.label(v);
    sidecar["labels"] = labels;
  }
  std::ofstream gout(path);
  if (!gout) throw std::invalid_argument("cannot write '" + path + "'");
  vint::write_graph(gout, g);
  gout.close();
  std::ofstream jout(path + ".json");
  if (!jout) throw std::invalid_argument("cannot write '" + path + ".json'");
  jout << sidecar.dump(2) << "\n";
}

int cmd_gen(const GenArgs& a) {
  if (a.out.empty()) throw std::invalid_argument("--out is required");
  json sidecar;
  sidecar["kind"] = a.kind;

  if (a.kind == "random") {
    Graph g = random_graph(int(a.n), a.prob, a.seed, a.max_weight);
    sidecar["seed"] = a.seed;
    sidecar["params"] = {{"n", g.n()}, {"m", g.m()}, {"p", a.prob}, {"max_weight", a.max_weight}};
    if (g.n() <= 20) {
      ProblemMode mode = g.unit_weights() ? ProblemMode::uvi() : ProblemMode::wvi();
      Solution s = vint::vi_exact(g, mode);
      sidecar["truth"] = {{g.unit_weights() ? "vi" : "wvi", s.total},
                          {"separator", one_indexed(s.separator)}};
    } else {
      sidecar["truth"] = nullptr;
    }
    write_instance(a.out, g, sidecar);
  } else if (a.kind == "bdd-to-coc") {
    vint::BddInstance src;
    src.graph = vint::parse_graph_file(a.input);
    src.k = a.k;
    src.d = a.d;
    vint::CocInstance tgt = vint::bdd_to_coc(src);
    sidecar["params"] = {{"ell", tgt.ell}, {"p", tgt.p}, {"n", tgt.graph.n()}, {"m", tgt.graph.m()}};
    sidecar["source"] = {{"n", src.graph.n()}, {"m", src.graph.m()}, {"k", src.k}, {"d", src.d}};
    if (src.graph.n() <= 16) {
      auto wit = vint::bdd_solve(src);
      sidecar["truth"] = wit ? "yes" : "no";
      if (wit) sidecar["witness"] = one_indexed(*wit);
    } else {
      sidecar["truth"] = nullptr;
    }
    write_instance(a.out, tgt.graph, sidecar);
  } else if (a.kind == "rubp-to-swcoc") {
    vint::RubpInstance src;
    src.items = parse_int_list(a.items);
    src.allowed = parse_pair_list(a.pairs);
    if (!a.has_k) throw std::invalid_argument("--k (bin count) is required for rubp-to-swcoc");
    src.k = int(a.k);
    vint::SwcocInstance tgt = vint::rubp_to_swcoc(src);
    sidecar["params"] = {{"ell", tgt.ell}, {"p", tgt.p}, {"n", tgt.graph.n()}, {"m", tgt.graph.m()}};
    json bins = json::array();
    for (auto [i, j] : src.allowed) bins.push_back({i + 1, j + 1});
    sidecar["source"] = {{"items", src.items}, {"bins", bins}, {"k", src.k}};
    auto asg = vint::rubp_solve(src);
    sidecar["truth"] = asg ? "yes" : "no";
    if (asg) {
      json raw = json::array();
      for (int b : *asg) raw.push_back(b + 1);
      sidecar["witness"] = raw;
    }
    write_instance(a.out, tgt.graph, sidecar);
  } else if (a.kind == "swcoc-to-swvi") {
    vint::SwcocInstance src;
    src.graph = vint::parse_graph_file(a.input);
    src.ell = a.ell;
    src.p = a.p;
    vint::SwviInstance tgt = vint::swcoc_to_swvi(src);
    sidecar["params"] = {{"k", tgt.k}, {"n", tgt.graph.n()}, {"m", tgt.graph.m()}};
    sidecar["source"] = {{"n", src.graph.n()}, {"m", src.graph.m()}, {"ell", src.ell}, {"p", src.p}};
    if (src.graph.n() <= 20) {
      auto r = vint::coc_exact(src.graph, src.ell, ProblemMode::swcoc(), src.p);
      sidecar["truth"] = r ? "yes" : "no";
    } else {
      sidecar["truth"] = nullptr;
    }
    write_instance(a.out, tgt.graph, sidecar);
  } else if (a.kind == "swvi-to-uvi") {
    vint::SwviInstance src;
    src.graph = vint::parse_graph_file(a.input);
    if (!a.has_k) throw std::invalid_argument("--k is required for swvi-to-uvi");
    src.k = a.k;
    vint::UviInstance tgt = vint::swvi_to_uvi(src);
    sidecar["params"] = {{"k", tgt.k}, {"n", tgt.graph.n()}, {"m", tgt.graph.m()}};
    sidecar["source"] = {{"n", src.graph.n()}, {"m", src.graph.m()}, {"k", src.k}};
    if (src.graph.n() <= 20) {
      Solution s = vint::vi_exact(src.graph, ProblemMode::swvi());
      sidecar["truth"] = s.total <= src.k ? "yes" : "no";
    } else {
      sidecar["truth"] = nullptr;
    }
    write_instance(a.out, tgt.graph, sidecar);
  } else {
    throw std::invalid_argument("unknown kind '" + a.kind + "'");
  }
  std::cout << sidecar.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- bench --

struct BenchInstance {
  std::string name;
  Graph graph;
};

std::vector<BenchInstance> parse_suite(const std::string& spec) {
  std::vector<BenchInstance> out;
  if (spec.empty() || spec == "none") return out;
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "paths" || head == "cycles") {
    auto dots = rest.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("suite '" + head + "' wants a range like 4..12");
    int lo = std::stoi(rest.substr(0, dots));
    int hi = std::stoi(rest.substr(dots + 2));
    if (lo < 1 || hi < lo || hi > 100'000) throw std::invalid_argument("bad suite range");
    for (int n = lo; n <= hi; ++n) {
      Graph g(n);
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      if (head == "cycles") {
        if (n < 3) throw std::invalid_argument("cycles need n >= 3");
        g.add_edge(n - 1, 0);
      }
      out.push_back({(head == "paths" ? "path_" : "cycle_") + std::to_string(n), std::move(g)});
    }
    return out;
  }
  if (head == "random") {
    int64_t count = 10, n = 10;
    double p = 0.5;
    uint64_t seed = 1;
    std::stringstream ss(rest);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad suite option '" + kv + "'");
      std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "count") count = std::stoll(val);
      else if (key == "n") n = std::stoll(val);
      else if (key == "p") p = std::stod(val);
      else if (key == "seed") seed = std::stoull(val);
      else throw std::invalid_argument("unknown suite option '" + key + "'");
    }
    if (count < 0 || count > 100'000 || n < 0 || n > 100'000)
      throw std::invalid_argument("bad suite size");
    for (int64_t i = 0; i < count; ++i)
      out.push_back({"random_" + std::to_string(i) + "_n" + std::to_string(n),
                     random_graph(int(n), p, seed + uint64_t(i), 1)});
    return out;
  }
  throw std::invalid_argument("unknown suite '" + head + "'");
}

int cmd_bench(const std::vector<std::string>& suites, const std::string& algos_text, int reps,
              const std::string& out_path) {
  if (reps < 1) throw std::invalid_argument("--reps must be >= 1");
  std::vector<BenchInstance> instances;
  for (const auto& s : suites)
    for (auto& inst : parse_suite(s)) instances.push_back(std::move(inst));
  std::vector<std::string> algos;
  {
    std::stringstream ss(algos_text);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) algos.push_back(tok);
  }
  if (algos.empty()) throw std::invalid_argument("no algorithms requested");

  std::ostringstream csv;
  csv << "instance,algo,value,nodes_expanded,time_ms\n";
  for (const auto& inst : instances) {
    const Graph& g = inst.graph;
    std::optional<Weight> reference;
    if (g.n() <= 20) reference = vint::vi_exact(g, ProblemMode::uvi()).total;
    for (const auto& algo : algos) {
      Weight value = 0;
      int64_t nodes = 0;
      double best_ms = std::numeric_limits<double>::infinity();
      bool ran = false;
      try {
        for (int r = 0; r < reps; ++r) {
          nodes = 0;
          auto t0 = std::chrono::steady_clock::now();
          if (algo == "oracle") {
            value = vint::vi_exact(g, ProblemMode::uvi()).total;
          } else if (algo == "vc") {
            vint::VcStats st;
            value = vint::uvi_vc(g, vint::vertex_cover_exact(g), &st).total;
            nodes = st.branch_nodes;
          } else if (algo == "ml") {
            vint::MlStats st;
            value = vint::uvi_ml(g, &st).total;
            nodes = st.pipelines;
          } else if (algo == "mw") {
            value = vint::wvi_mw(unit_copy(g)).total;
          } else if (algo == "natural") {
            if (!reference) continue;  // needs a target; skip when unknown
            vint::NaturalStats st;
            auto s = vint::vi_natural(g, *reference, ProblemMode::uvi(), 50'000'000, &st);
            if (!s) throw std::logic_error("vi_natural rejected the oracle optimum");
            value = s->total;
            nodes = st.nodes;
          } else {
            throw std::invalid_argument("unknown algo '" + algo + "'");
          }
          best_ms = std::min(best_ms, ms_since(t0));
          ran = true;
        }
      } catch (const vint::resource_limit_error&) {
        continue;  // algo not applicable at this size; no row
      }
      if (!ran) continue;
      if (reference && value != *reference) {
        std::cerr << "bench: " << inst.name << " " << algo << " returned " << value
                  << " but the oracle says " << *reference << "\n";
        return 1;
      }
      csv << inst.name << "," << algo << "," << value << "," << nodes << "," << best_ms << "\n";
    }
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
    f << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex integrity and component order connectivity toolkit"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("input", sa.input, "graph file")->required();
  solve->add_option("--algo", sa.algo, "auto|oracle|natural|vc|ml|mw");
  solve->add_option("--problem", sa.problem, "vi|wvi|swvi|coc|swcoc");
  auto* solve_ell = solve->add_option("--ell", sa.ell, "component bound (coc/swcoc)");
  auto* solve_k = solve->add_option("--k", sa.k, "decision target");

  std::string v_input, v_sep, v_problem = "vi";
  int64_t v_claim = 0, v_ell = 0;
  auto* verify = app.add_subcommand("verify", "check a separator against a claimed value");
  verify->add_option("input", v_input, "graph file")->required();
  verify->add_option("--sep", v_sep, "comma-separated 1-indexed separator (may be empty)");
  verify->add_option("--problem", v_problem, "vi|wvi|swvi|coc|swcoc");
  verify->add_option("--claim", v_claim, "claimed value")->required();
  auto* verify_ell = verify->add_option("--ell", v_ell, "component bound (coc/swcoc)");

  std::string p_input;
  auto* params = app.add_subcommand("params", "report structural parameters");
  params->add_option("input", p_input, "graph file")->required();

  GenArgs ga;
  auto add_gen_options = [&](CLI::App* cmd) -> CLI::Option* {
    cmd->add_option("--kind", ga.kind, "random|bdd-to-coc|rubp-to-swcoc|swcoc-to-swvi|swvi-to-uvi")
        ->required();
    cmd->add_option("--in", ga.input, "source graph file");
    cmd->add_option("--out", ga.out, "output path (sidecar goes to <out>.json)")->required();
    cmd->add_option("--items", ga.items, "item sizes, e.g. 2,2,4");
    cmd->add_option("--pairs", ga.pairs, "allowed bins per item, e.g. 1-2,1-2,1-2");
    cmd->add_option("--d", ga.d, "degree bound");
    cmd->add_option("--ell", ga.ell, "component bound");
    cmd->add_option("--p", ga.p, "deletion budget");
    cmd->add_option("--n", ga.n, "random: vertex count");
    cmd->add_option("--prob", ga.prob, "random: edge probability");
    cmd->add_option("--seed", ga.seed, "random: seed");
    cmd->add_option("--max-weight", ga.max_weight, "random: weights drawn from [1, max]");
    return cmd->add_option("--k", ga.k, "budget / bin count");
  };
  auto* gen = app.add_subcommand("gen", "generate or reduce an instance");
  auto* gen_k = add_gen_options(gen);
  auto* reduce = app.add_subcommand("reduce", "alias of gen");
  auto* reduce_k = add_gen_options(reduce);

  std::vector<std::string> b_suites;
  std::string b_algos = "oracle,vc,ml,mw";
  std::string b_out = "-";
  int b_reps = 1;
  auto* bench = app.add_subcommand("bench", "run a suite and emit csv");
  bench->add_option("--suite", b_suites, "paths:A..B | cycles:A..B | random:count=..,n=..,p=..,seed=.. | none")
      ->required();
  bench->add_option("--algos", b_algos, "comma list of algorithms");
  bench->add_option("--reps", b_reps, "repetitions per row");
  bench->add_option("--out", b_out, "csv path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      sa.has_ell = solve_ell->count() > 0;
      sa.has_k = solve_k->count() > 0;
      return cmd_solve(sa);
    }
    if (verify->parsed())
      return cmd_verify(v_input, v_sep, v_problem, v_claim, v_ell, verify_ell->count() > 0);
    if (params->parsed()) {
      Graph g = vint::parse_graph_file(p_input);
      std::cout << params_report(g, true).dump(2) << "\n";
      return 0;
    }
    if (gen->parsed() || reduce->parsed()) {
      ga.has_k = gen_k->count() > 0 || reduce_k->count() > 0;
      return cmd_gen(ga);
    }
    if (bench->parsed()) return cmd_bench(b_suites, b_algos, b_reps, b_out);
  } catch (const vint::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const vint::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
