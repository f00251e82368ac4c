#include "neumaier_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "neumaier/cayley.hpp"
#include "neumaier/charsums.hpp"
#include "neumaier/error.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/quadratic.hpp"

namespace neumaier::cli {

namespace {

using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "-";
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ',';
      s += cell(x);
    }
    return s;
  }
  return v.dump();
}

void emit(std::ostream& out, const std::string& format, const std::string& command, const json& inputs,
          const Table& t) {
  if (format == "tsv") {
    out << "# " << command;
    for (const auto& [k, v] : inputs.items()) out << ' ' << k << '=' << cell(v);
    out << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << cell(row[i]);
      out << '\n';
    }
    return;
  }
  out << json{{"record", "inputs"}, {"command", command}, {"inputs", inputs}}.dump() << '\n';
  for (const auto& row : t.rows) {
    json obj{{"record", command}};
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    out << obj.dump() << '\n';
  }
}

struct Common {
  std::string format = "tsv";
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"tsv", "jsonl"}));
  sub->add_option("--threads", c.threads, "Worker threads (default: NEUMAIER_THREADS or all cores)")
      ->check(CLI::Range(1u, 1024u));
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<u64> parse_u64_list(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::vector<u64> out;
  for (const auto& tok : split_ws(text)) {
    std::size_t pos = 0;
    u64 v = 0;
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok[0] == '-') throw InputError("expected a non-negative integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> read_data_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, '\t')) out.push_back(cur);
  return out;
}

json reason_ids(const feasibility::Verdict& v) {
  json ids = json::array();
  for (const auto& r : v.reasons) ids.push_back(r.id);
  return ids;
}

int report_diff(const GoldenDiff& diff, const std::string& path, std::ostream& err) {
  if (diff.empty()) {
    err << "golden: " << path << ": match\n";
    return kOk;
  }
  err << "golden: " << path << ": " << diff.lines.size() << " difference(s)\n";
  for (const auto& l : diff.lines) err << "  " << l << '\n';
  return kVerificationFailed;
}

// --- subcommands -----------------------------------------------------------

struct FeasibleArgs {
  Common common;
  long long max_v = 64;
  std::string golden;
};

int cmd_feasible(const FeasibleArgs& a, std::ostream& out, std::ostream& err) {
  const auto rows = feasibility::enumerate_feasible(a.max_v);
  Table t{{"v", "k", "lambda", "e", "s", "status", "reasons", "exists", "flag"}, {}};
  for (const auto& r : rows) {
    const auto& p = r.params;
    t.rows.push_back({p.v, p.k, p.lambda, p.e, p.s, std::string(feasibility::to_string(r.verdict.status)),
                      reason_ids(r.verdict), exists_column(r), flag_column(r)});
  }
  emit(out, a.common.format, "feasible", json{{"max_v", a.max_v}}, t);
  if (!a.golden.empty()) return report_diff(compare_table1(rows, a.golden), a.golden, err);
  return kOk;
}

struct CountArgs {
  Common common;
  u64 p = 0, q = 0, a = 0;
  std::string method = "all";
};

int cmd_count(const CountArgs& c, std::ostream& out, std::ostream&) {
  json direct, jacobi, closed, branch;
  std::vector<std::size_t> values;
  if (c.method == "direct" || c.method == "all") {
    values.push_back(charsums::count_direct(c.p, c.q, c.a));
    direct = values.back();
  }
  if (c.method == "jacobi" || c.method == "all") {
    values.push_back(charsums::count_jacobi(c.p, c.q, c.a));
    jacobi = values.back();
  }
  if (c.method == "closed" || c.method == "all") {
    if (auto cf = charsums::count_closed(c.p, c.q, c.a)) {
      values.push_back(cf->value);
      closed = cf->value;
      branch = cf->branch;
    } else if (c.method == "closed") {
      throw InputError("no closed form applies to this (p, q, a)");
    }
  }
  const bool agree = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
  Table t{{"p", "q", "a", "direct", "jacobi", "closed", "branch", "agree"}, {}};
  t.rows.push_back({c.p, c.q, c.a, direct, jacobi, closed, branch, agree});
  emit(out, c.common.format, "count", json{{"p", c.p}, {"q", c.q}, {"a", c.a}, {"method", c.method}}, t);
  return agree ? kOk : kVerificationFailed;
}

struct ConstructArgs {
  Common common;
  u64 q = 0, p = 0, a = 0;
  std::string perms_file;
  std::string out_file;
};

int cmd_construct(const ConstructArgs& c, std::ostream& out, std::ostream&) {
  const Workers workers(c.common.threads);
  cayley::Construction built = [&] {
    if (c.perms_file.empty()) return cayley::construct_neumaier(c.q, c.p, c.a);
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& line : read_data_lines(c.perms_file)) perms.push_back(cayley::parse_permutation(line, c.p));
    return cayley::construct_neumaier(c.q, c.p, c.a, perms);
  }();
  const bool verified = graph::verify_neumaier(built.fused.graph, built.params, built.witness, workers);
  const auto strict = cayley::strictness_check(built.fusion, built.fused.graph, workers);
  if (!c.out_file.empty()) graph::write_graph_file(c.out_file, built.fused.graph);
  const auto& P = built.params;
  Table t{{"q", "p", "a", "t", "v", "k", "lambda", "e", "s", "witness", "verified", "strict", "strict_basis"}, {}};
  t.rows.push_back({c.q, c.p, c.a, built.t, P.v, P.k, P.lambda, P.e, P.s, json(built.witness.members), verified,
                    strict.strict, std::string(cayley::to_string(strict.basis))});
  json inputs{{"q", c.q}, {"p", c.p}, {"a", c.a}};
  if (!c.perms_file.empty()) inputs["perms"] = c.perms_file;
  emit(out, c.common.format, "construct", inputs, t);
  return verified ? kOk : kVerificationFailed;
}

struct VerifyArgs {
  Common common;
  std::string graph_file;
  std::string params;
  std::string witness;
  std::string witness_file;
};

int cmd_verify(const VerifyArgs& c, std::ostream& out, std::ostream&) {
  const Workers workers(c.common.threads);
  const auto g = graph::read_graph_file(c.graph_file);
  const auto pv = parse_u64_list(c.params);
  if (pv.size() != 5) throw InputError("--params needs five values v,k,lambda,e,s");
  const feasibility::NeumaierParams params{static_cast<feasibility::Int>(pv[0]), static_cast<feasibility::Int>(pv[1]),
                                           static_cast<feasibility::Int>(pv[2]), static_cast<feasibility::Int>(pv[3]),
                                           static_cast<feasibility::Int>(pv[4])};
  std::string witness_text = c.witness;
  if (!c.witness_file.empty()) {
    for (const auto& line : read_data_lines(c.witness_file)) witness_text += " " + line;
  }
  graph::VertexSubset witness{{}, graph::SubsetKind::Clique};
  for (u64 v : parse_u64_list(witness_text)) witness.members.push_back(v);
  const bool neumaier = graph::verify_neumaier(g, params, witness, workers);
  const bool strict = neumaier && graph::is_strictly_neumaier(g, params, witness, workers);
  Table t{{"v", "k", "lambda", "e", "s", "neumaier", "strict"}, {}};
  t.rows.push_back({params.v, params.k, params.lambda, params.e, params.s, neumaier, strict});
  emit(out, c.common.format, "verify", json{{"graph", c.graph_file}, {"params", c.params}}, t);
  return neumaier ? kOk : kVerificationFailed;
}

struct SearchArgs {
  Common common;
  u64 q = 0;
  u64 max_p = 0;
  u64 verify_cap = 0;
  std::string golden;
};

int cmd_search(const SearchArgs& c, std::ostream& out, std::ostream& err) {
  const Workers workers(c.common.threads);
  const auto result = search::search_triples(c.q, c.max_p, workers);
  if (!result.note.empty()) err << "note: " << result.note << '\n';
  Table t{{"q", "p", "a", "t", "v", "k", "lambda", "s", "method"}, {}};
  if (c.verify_cap > 0) {
    t.columns.push_back("verified");
    t.columns.push_back("strict");
  }
  bool all_ok = true;
  for (const auto& r : result.rows) {
    std::vector<json> row{r.q, r.p, r.a, r.t, r.params.v, r.params.k, r.params.lambda, r.params.s, r.method};
    if (c.verify_cap > 0) {
      if (static_cast<u64>(r.params.v) <= c.verify_cap) {
        const auto built = cayley::construct_neumaier(r.q, r.p, r.a);
        const bool ok = graph::verify_neumaier(built.fused.graph, built.params, built.witness, workers);
        const bool strict = ok && graph::is_strictly_neumaier(built.fused.graph, built.params, built.witness, workers);
        all_ok = all_ok && ok && built.params == r.params;
        row.push_back(ok);
        row.push_back(strict);
      } else {
        row.push_back(nullptr);
        row.push_back(nullptr);
      }
    }
    t.rows.push_back(std::move(row));
  }
  json inputs{{"q", c.q}, {"max_p", c.max_p}};
  if (c.verify_cap > 0) inputs["verify_graphs"] = c.verify_cap;
  emit(out, c.common.format, "search", inputs, t);
  int code = all_ok ? kOk : kVerificationFailed;
  if (!c.golden.empty()) code = std::max(code, report_diff(compare_search(result.rows, c.q, c.golden), c.golden, err));
  return code;
}

struct ScanArgs {
  Common common;
  std::string ring = "gauss";
  std::string cls;
  u64 modulus = 0;
  u64 max_norm = 0;
  bool assemble = false;
  u64 q = 0;
};

int cmd_scan(const ScanArgs& c, std::ostream& out, std::ostream&) {
  const auto ring = c.ring == "gauss" ? quadratic::Ring::Gaussian : quadratic::Ring::Eisenstein;
  const auto z = quadratic::parse_element(ring, c.cls);
  const auto hits = quadratic::scan_quadratic_primes(ring, z, c.modulus, c.max_norm);
  const u64 q = c.q != 0 ? c.q : (ring == quadratic::Ring::Gaussian ? 5 : 7);
  Table t{{"c", "d", "p"}, {}};
  if (c.assemble) {
    for (const char* col : {"q", "alpha", "beta", "a", "a_canonical", "x", "y", "predicted", "branch", "congruent"}) {
      t.columns.push_back(col);
    }
  }
  bool all_ok = true;
  for (const auto& h : hits) {
    std::vector<json> row{h.pi.c, h.pi.d, h.p};
    if (c.assemble) {
      if (ring == quadratic::Ring::Gaussian && q != 5) throw InputError("Gaussian assembly is defined for q = 5 only");
      const auto as = ring == quadratic::Ring::Gaussian ? quadratic::assemble_from_gaussian(h.pi)
                                                         : quadratic::assemble_from_eisenstein(h.pi, q);
      const bool congruent = (as.predicted + 2) % as.q == 0;
      all_ok = all_ok && congruent;
      for (json v : {json(as.q), json(as.alpha), json(as.beta), json(as.a), json(as.a_canonical), json(as.x),
                     json(as.y), json(as.predicted), json(as.branch), json(congruent)}) {
        row.push_back(std::move(v));
      }
    }
    t.rows.push_back(std::move(row));
  }
  json inputs{{"ring", c.ring}, {"class", z.to_string()}, {"mod", c.modulus}, {"max_norm", c.max_norm}};
  if (c.assemble) inputs["q"] = q;
  emit(out, c.common.format, "scan", inputs, t);
  return all_ok ? kOk : kVerificationFailed;
}

struct ConicArgs {
  Common common;
  u64 q = 0;
  std::string check;
};

int cmd_conic(const ConicArgs& c, std::ostream& out, std::ostream&) {
  const auto sol = quadratic::conic_solve(c.q);
  Table t{{"q", "z1", "z2", "source", "parity", "mod_three", "coprime", "target", "ok"}, {}};
  auto add = [&](long long z1, long long z2, const char* source) {
    const auto chk = quadratic::check_conic_solution(c.q, z1, z2);
    t.rows.push_back({c.q, z1, z2, source, chk.parity, chk.mod_three, chk.coprime, chk.target, chk.all()});
    return chk.all();
  };
  bool ok = add(static_cast<long long>(sol.z1), static_cast<long long>(sol.z2), "solver");
  if (!c.check.empty()) {
    std::string text = c.check;
    std::replace(text.begin(), text.end(), ',', ' ');
    const auto parts = split_ws(text);
    if (parts.size() != 2) throw InputError("--check needs 'z1,z2'");
    try {
      ok = add(std::stoll(parts[0]), std::stoll(parts[1]), "given") && ok;
    } catch (const std::logic_error&) {
      throw InputError("--check needs two integers");
    }
  }
  emit(out, c.common.format, "conic", json{{"q", c.q}}, t);
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("NEUMAIER_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string exists_column(const feasibility::FeasibleRow& row) {
  if (row.verdict.status != feasibility::Status::Open) return "no";
  return std::string(feasibility::existence_annotation(row.params));
}

std::string flag_column(const feasibility::FeasibleRow& row) {
  if (row.verdict.reasons.empty()) return "-";
  const auto& id = row.verdict.reasons.front().id;
  return id.substr(0, id.find('.'));
}

GoldenDiff compare_table1(const std::vector<feasibility::FeasibleRow>& rows, const std::string& golden_path) {
  using Key = std::array<long long, 5>;
  std::map<Key, std::pair<std::string, std::string>> golden, produced;
  const auto lines = read_data_lines(golden_path);
  if (lines.empty() || split_tabs(lines[0]).at(0) != "v") throw InputError(golden_path + ": missing header");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_tabs(lines[i]);
    if (f.size() != 7) throw InputError(golden_path + ": malformed row '" + lines[i] + "'");
    Key k{};
    try {
      for (int j = 0; j < 5; ++j) k[j] = std::stoll(f[j]);
    } catch (const std::logic_error&) {
      throw InputError(golden_path + ": malformed row '" + lines[i] + "'");
    }
    golden[k] = {f[5], f[6]};
  }
  for (const auto& r : rows) {
    produced[{r.params.v, r.params.k, r.params.lambda, r.params.e, r.params.s}] = {exists_column(r), flag_column(r)};
  }
  auto name = [](const Key& k) {
    return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ";" +
           std::to_string(k[3]) + "," + std::to_string(k[4]) + ")";
  };
  GoldenDiff diff;
  for (const auto& [k, g] : golden) {
    auto it = produced.find(k);
    if (it == produced.end()) {
      diff.lines.push_back("missing " + name(k));
    } else if (it->second != g) {
      diff.lines.push_back("mismatch " + name(k) + ": golden " + g.first + "/" + g.second + ", produced " +
                           it->second.first + "/" + it->second.second);
    }
  }
  for (const auto& [k, p] : produced) {
    if (!golden.count(k)) diff.lines.push_back("unexpected " + name(k));
  }
  return diff;
}

std::vector<GoldenSearchRow> read_search_golden(const std::string& golden_path) {
  const auto lines = read_data_lines(golden_path);
  if (lines.empty() || split_tabs(lines[0]).at(0) != "q") throw InputError(golden_path + ": missing header");
  std::vector<GoldenSearchRow> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_tabs(lines[i]);
    if (f.size() != 9) throw InputError(golden_path + ": malformed row '" + lines[i] + "'");
    GoldenSearchRow r{};
    try {
      std::array<u64*, 8> dst{&r.q, &r.p, &r.a, &r.t, &r.v, &r.k, &r.lambda, &r.s};
      for (int j = 0; j < 8; ++j) *dst[j] = std::stoull(f[j]);
    } catch (const std::logic_error&) {
      throw InputError(golden_path + ": malformed row '" + lines[i] + "'");
    }
    r.source = f[8];
    out.push_back(r);
  }
  return out;
}

GoldenDiff compare_search(const std::vector<search::SearchRow>& rows, std::uint64_t q, const std::string& golden_path) {
  using Key = std::pair<u64, u64>;
  using Val = std::array<u64, 5>;
  std::map<Key, Val> golden, produced;
  std::map<Key, u64> printed_a;
  for (const auto& g : read_search_golden(golden_path)) {
    if (g.q != q) continue;
    const Key k{g.p, search::canonical_a(g.a, g.p * g.q)};
    golden[k] = {g.t, g.v, g.k, g.lambda, g.s};
    printed_a[k] = g.a;
  }
  for (const auto& r : rows) {
    if (r.q != q) continue;
    produced[{r.p, search::canonical_a(r.a, r.p * r.q)}] = {r.t, static_cast<u64>(r.params.v),
                                                            static_cast<u64>(r.params.k),
                                                            static_cast<u64>(r.params.lambda),
                                                            static_cast<u64>(r.params.s)};
  }
  auto name = [&](const Key& k, u64 a) {
    return "q=" + std::to_string(q) + " p=" + std::to_string(k.first) + " a=" + std::to_string(a);
  };
  auto vals = [](const Val& v) {
    return "t=" + std::to_string(v[0]) + " v=" + std::to_string(v[1]) + " k=" + std::to_string(v[2]) +
           " lambda=" + std::to_string(v[3]) + " s=" + std::to_string(v[4]);
  };
  GoldenDiff diff;
  for (const auto& [k, g] : golden) {
    auto it = produced.find(k);
    if (it == produced.end()) {
      diff.lines.push_back("missing " + name(k, printed_a[k]) + " " + vals(g));
    } else if (it->second != g) {
      diff.lines.push_back("mismatch " + name(k, printed_a[k]) + ": golden " + vals(g) + ", produced " +
                           vals(it->second));
    }
  }
  for (const auto& [k, p] : produced) {
    if (!golden.count(k)) diff.lines.push_back("unexpected " + name(k, k.second) + " " + vals(p));
  }
  return diff;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feasibility, construction and counting tools for Neumaier graphs", "neumaier"};
  app.require_subcommand(1);
  const unsigned threads = default_threads();

  FeasibleArgs feasible;
  feasible.common.threads = threads;
  auto* f = app.add_subcommand("feasible", "Enumerate feasible parameter sets up to --max-v");
  add_common(f, feasible.common);
  f->add_option("--max-v", feasible.max_v, "Largest vertex count")->required()->check(CLI::Range(5LL, 2000LL));
  f->add_option("--golden", feasible.golden, "Compare with a table1-style golden file");

  CountArgs count;
  count.common.threads = threads;
  auto* c = app.add_subcommand("count", "Compute |S ∩ (S+1)| for S = S_pq(a)");
  add_common(c, count.common);
  c->add_option("--p", count.p)->required();
  c->add_option("--q", count.q)->required();
  c->add_option("--a", count.a)->required();
  c->add_option("--method", count.method)->check(CLI::IsMember({"direct", "jacobi", "closed", "all"}));

  ConstructArgs construct;
  construct.common.threads = threads;
  auto* k = app.add_subcommand("construct", "Build and verify the fused Neumaier graph for (q, p, a)");
  add_common(k, construct.common);
  k->add_option("--q", construct.q)->required();
  k->add_option("--p", construct.p)->required();
  k->add_option("--a", construct.a)->required();
  k->add_option("--perms", construct.perms_file, "File with t-1 block permutations, one per line");
  k->add_option("--out", construct.out_file, "Write the fused graph to this file");
  k->add_option("--report", construct.common.format, "Alias of --format")->check(CLI::IsMember({"tsv", "jsonl"}));

  VerifyArgs verify;
  verify.common.threads = threads;
  auto* v = app.add_subcommand("verify", "Check a graph file against claimed Neumaier parameters");
  add_common(v, verify.common);
  v->add_option("--graph", verify.graph_file)->required();
  v->add_option("--params", verify.params, "v,k,lambda,e,s")->required();
  auto* w1 = v->add_option("--witness", verify.witness, "Clique vertices, space or comma separated");
  auto* w2 = v->add_option("--witness-file", verify.witness_file);
  w1->excludes(w2);

  SearchArgs srch;
  srch.common.threads = threads;
  auto* s = app.add_subcommand("search", "Search primes p <= --max-p for admissible (p, a)");
  add_common(s, srch.common);
  s->add_option("--q", srch.q)->required();
  s->add_option("--max-p", srch.max_p)->required()->check(CLI::Range(u64{3}, u64{100000000}));
  s->add_option("--verify-graphs", srch.verify_cap, "Build and verify graphs with at most this many vertices");
  s->add_option("--golden", srch.golden, "Compare with a table2-style golden file");

  ScanArgs scan;
  scan.common.threads = threads;
  auto* sc = app.add_subcommand("scan", "Primes of prime norm in a congruence class");
  add_common(sc, scan.common);
  sc->add_option("--ring", scan.ring)->check(CLI::IsMember({"gauss", "eisen"}));
  sc->add_option("--class", scan.cls, "Class representative, e.g. 5+6i or 3+10z")->required();
  sc->add_option("--mod", scan.modulus)->required()->check(CLI::PositiveNumber);
  sc->add_option("--max-norm", scan.max_norm)->required()->check(CLI::PositiveNumber);
  sc->add_flag("--assemble", scan.assemble, "Assemble (p, a) and the predicted count for every hit");
  sc->add_option("--q", scan.q, "Target q for Eisenstein assembly (default 7)");

  ConicArgs conic;
  conic.common.threads = threads;
  auto* co = app.add_subcommand("conic", "Solve the conic conditions for q");
  add_common(co, conic.common);
  co->add_option("--q", conic.q)->required();
  co->add_option("--check", conic.check, "Also check a given solution 'z1,z2'");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (f->parsed()) code = cmd_feasible(feasible, out, err);
    else if (c->parsed()) code = cmd_count(count, out, err);
    else if (k->parsed()) code = cmd_construct(construct, out, err);
    else if (v->parsed()) code = cmd_verify(verify, out, err);
    else if (s->parsed()) code = cmd_search(srch, out, err);
    else if (sc->parsed()) code = cmd_scan(scan, out, err);
    else if (co->parsed()) code = cmd_conic(conic, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "time: " << secs << " s\n";
  return code;
}

}  // namespace neumaier::cli
