// Batch command-line front end: exact computations in the alcove model,
// canonical-basis combinatorics, cells, tilting characters and quotient
// rings, emitted as JSON (CSV and SVG where it makes sense).

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiltcell/cells.hpp"
#include "tiltcell/errors.hpp"
#include "tiltcell/svg.hpp"
#include "tiltcell/tilting.hpp"

using namespace tiltcell;
using json = nlohmann::ordered_json;

namespace {

struct Job {
  std::string type;
  long long l = 0;  // 0 = not set
  int L = 0;        // 0 = not set
  std::string cache_dir;
  std::string out;
  std::string format = "json";
  std::string cell = "subregular";
  std::string mode;  // "at" or "below"; default depends on the command
};

void write_output(const Job& job, const std::string& content) {
  if (job.out.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream f(job.out, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write to '" + job.out + "'");
  f << content;
}

void emit_json(const Job& job, json& doc) { write_output(job, doc.dump(2) + "\n"); }

struct Env {
  RootSystem rs;
  std::optional<AffineGroup> g;
  std::optional<KLContext> kl;
  std::optional<CharTable> chars;
  std::optional<TiltingContext> tc;

  // level_free: the command only consumes the Coxeter structure, so a
  // missing --l defaults to h+1
  explicit Env(const Job& job, bool needs_group, bool level_free = false)
      : rs(build_root_system(CartanDatum::parse(job.type))) {
    if (!needs_group) return;
    long long l = job.l;
    if (l == 0 && level_free) l = rs.coxeter_number + 1;
    if (l == 0) throw ConfigError("--l is required for this command");
    g.emplace(rs, l);
    if (auto warn = g->level_hypothesis_warning())
      std::fprintf(stderr, "warning: %s\n", warn->c_str());
    kl.emplace(*g, job.cache_dir);
    chars.emplace(rs);
    tc.emplace(*g, *kl, *chars);
  }
};

Vec parse_weight(const RootSystem& rs, const std::vector<long long>& flat, size_t which,
                 size_t total) {
  size_t n = rs.datum.rank;
  if (flat.size() != total * n)
    throw ConfigError("expected " + std::to_string(total * n) + " weight coordinates (" +
                      std::to_string(total) + " weight(s) of rank " + std::to_string(n) + ")");
  return Vec(flat.begin() + which * n, flat.begin() + (which + 1) * n);
}

int resolve_cell(const CellPartition& part, const std::string& name) {
  if (name == "andersen") return part.e_cell();
  if (name == "subregular") return subregular_cell(part);
  if (name.rfind("cell:", 0) == 0) {
    int c = 0;
    try {
      c = std::stoi(name.substr(5));
    } catch (...) {
      throw ConfigError("cannot parse '" + name + "'");
    }
    if (c < 0 || c >= static_cast<int>(part.cells.size()))
      throw ConfigError("cell index out of range at this truncation");
    return c;
  }
  throw ConfigError("unknown cell '" + name + "' (use andersen, subregular or cell:<k>)");
}

json header(const Job& job, const char* command) {
  json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["type"] = job.type;
  if (job.l) doc["l"] = job.l;
  return doc;
}

void cmd_roots(const Job& job) {
  Env env(job, false);
  const RootSystem& rs = env.rs;
  json doc = header(job, "roots");
  doc["rank"] = rs.datum.rank;
  json cartan = json::array();
  for (int i = 0; i < rs.datum.rank; ++i) {
    json row = json::array();
    for (int j = 0; j < rs.datum.rank; ++j) row.push_back(rs.datum.at(i, j));
    cartan.push_back(row);
  }
  doc["cartan"] = cartan;
  doc["rho"] = json(rs.rho);
  doc["coxeter_number"] = rs.coxeter_number;
  doc["weyl_group_order"] = rs.wf.size();
  json roots = json::array();
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    json entry;
    entry["root"] = json(rs.positive_roots[r]);
    entry["weight_coords"] = json(rs.positive_roots_wc[r]);
    entry["coroot"] = json(rs.coroots[r]);
    entry["norm2"] = rs.root_norm2[r];
    roots.push_back(entry);
  }
  doc["positive_roots"] = roots;
  doc["highest_short_root"] = rs.highest_short_root;
  emit_json(job, doc);
}

void cmd_char(const Job& job, const std::vector<long long>& coords) {
  Env env(job, false);
  CharTable chars(env.rs);
  Vec lambda = parse_weight(env.rs, coords, 0, 1);
  if (!is_dominant(lambda)) throw ConfigError("weight must be dominant");
  json doc = header(job, "char");
  doc["weight"] = json(lambda);
  doc["dim"] = chars.weyl_dim(lambda);
  std::map<Vec, long long> sorted;
  for (const auto& [w, m] : chars.weight_multiplicities(lambda)) sorted[w] = m;
  json mults = json::array();
  for (const auto& [w, m] : sorted) mults.push_back({{"weight", json(w)}, {"mult", m}});
  doc["multiplicities"] = mults;
  emit_json(job, doc);
}

void cmd_tensor(const Job& job, const std::vector<long long>& coords) {
  Env env(job, false);
  CharTable chars(env.rs);
  Vec a = parse_weight(env.rs, coords, 0, 2), b = parse_weight(env.rs, coords, 1, 2);
  if (!is_dominant(a) || !is_dominant(b)) throw ConfigError("weights must be dominant");
  json doc = header(job, "tensor");
  doc["lhs"] = json(a);
  doc["rhs"] = json(b);
  json factors = json::array();
  for (const auto& [nu, m] : tensor_weyl_factors(chars, a, b))
    factors.push_back({{"weight", json(nu)}, {"mult", m}});
  doc["factors"] = factors;
  emit_json(job, doc);
}

void cmd_alcoves(const Job& job) {
  Env env(job, true, true);
  int L = job.L ? job.L : 6;
  auto ball = env.g->ball(L);
  if (job.format == "svg") {
    std::vector<int> cls(ball.size(), 0);
    write_output(job, svg_alcoves(*env.g, ball, cls, {"ball"}));
    return;
  }
  json doc = header(job, "alcoves");
  doc["L"] = L;
  json elems = json::array();
  for (const auto& w : ball) {
    json e;
    e["word"] = json(w.word);
    e["length"] = w.length();
    json mat = json::array();
    const Mat& m = env.rs.wf.matrix(env.g->finite_part(w.elem));
    for (int i = 0; i < env.rs.datum.rank; ++i) {
      json row = json::array();
      for (int j = 0; j < env.rs.datum.rank; ++j) row.push_back(m[i * env.rs.datum.rank + j]);
      mat.push_back(row);
    }
    e["finite_part"] = mat;
    e["translation"] = json(w.elem.t);
    elems.push_back(e);
  }
  doc["elements"] = elems;
  emit_json(job, doc);
}

void cmd_klbasis(const Job& job, const std::vector<int>& word, bool format_given) {
  Env env(job, true, true);
  std::vector<AffineElement> targets;
  if (!word.empty()) {
    AffineElement x = env.g->from_word(word);
    if (!env.g->is_min_rep(x) || env.g->length(x) != static_cast<long long>(word.size()))
      throw ConfigError("--word is not a reduced word of a minimal representative");
    targets.push_back(x);
  } else {
    int L = job.L ? job.L : 6;
    for (const auto& w : env.g->ball(L)) targets.push_back(w.elem);
  }
  // the stable text form is the default; JSON on explicit request
  if (format_given && job.format == "json") {
    json doc = header(job, "klbasis");
    json elems = json::array();
    for (const auto& x : targets) {
      json e;
      e["x"] = json(env.g->lexmin_word(x));
      std::vector<std::pair<WfRep, Laurent>> sorted;
      for (const auto& [y, p] : env.kl->kl_element(x)) sorted.push_back({env.g->rep(y), p});
      std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.first.length() != b.first.length() ? a.first.length() > b.first.length()
                                                    : a.first.word < b.first.word;
      });
      json terms = json::array();
      for (const auto& [y, p] : sorted) {
        json coeffs = json::array();
        for (const auto& [exp, c] : p.terms()) coeffs.push_back({{"exp", exp}, {"coeff", c}});
        terms.push_back({{"y", json(y.word)}, {"poly", coeffs}});
      }
      e["terms"] = terms;
      elems.push_back(e);
    }
    doc["elements"] = elems;
    emit_json(job, doc);
    return;
  }
  std::string text;
  for (const auto& x : targets) text += env.kl->format_element(x) + "\n";
  write_output(job, text);
}

void cmd_cells(const Job& job) {
  Env env(job, true, true);
  int L = job.L ? job.L : 12;
  CellPartition part = cell_partition_checked(*env.kl, L);
  if (job.format == "svg") {
    std::vector<int> cls(part.ball.size());
    std::vector<std::string> names;
    for (size_t c = 0; c < part.cells.size(); ++c)
      names.push_back("cell " + std::to_string(c) + " (" +
                      std::to_string(part.cells[c].size()) + ")");
    for (size_t i = 0; i < part.ball.size(); ++i) cls[i] = part.cell_of[i];
    write_output(job, svg_alcoves(*env.g, part.ball, cls, names));
    return;
  }
  json doc = header(job, "cells");
  doc["L"] = L;
  doc["stable"] = true;  // the checked partition would have failed otherwise
  json cells = json::array();
  for (size_t c = 0; c < part.cells.size(); ++c) {
    json entry;
    entry["id"] = c;
    entry["size"] = part.cells[c].size();
    json members = json::array();
    for (int i : part.cells[c]) members.push_back(json(part.ball[i].word));
    entry["elements"] = members;
    cells.push_back(entry);
  }
  doc["cells"] = cells;
  json edges = json::array();
  for (size_t c = 0; c < part.cell_edges.size(); ++c)
    for (int d : part.cell_edges[c]) edges.push_back({c, d});
  doc["edges"] = edges;
  emit_json(job, doc);
}

void cmd_tilting_char(const Job& job, const std::vector<long long>& coords) {
  Env env(job, true);
  Vec mu = parse_weight(env.rs, coords, 0, 1);
  if (!is_dominant(mu)) throw ConfigError("weight must be dominant");
  const TiltingChar& t = env.tc->tilting_indecomposable(mu);
  json doc = header(job, "tilting-char");
  doc["weight"] = json(mu);
  doc["block"] = json(t.block);
  doc["w_long"] = json(env.tc->longest_rep(mu).word);
  json factors = json::array();
  for (const auto& [nu, m] : t.factors)
    factors.push_back({{"weight", json(nu)}, {"mult", m}});
  doc["factors"] = factors;
  emit_json(job, doc);
}

void cmd_decompose(const Job& job, const std::vector<long long>& coords) {
  Env env(job, true);
  Vec a = parse_weight(env.rs, coords, 0, 2), b = parse_weight(env.rs, coords, 1, 2);
  if (!is_dominant(a) || !is_dominant(b)) throw ConfigError("weights must be dominant");
  json doc = header(job, "decompose");
  doc["lhs"] = json(a);
  doc["rhs"] = json(b);
  std::map<Vec, long long> summands;
  for (const auto& block_char : env.tc->tensor_product(env.tc->tilting_indecomposable(a),
                                                       env.tc->tilting_indecomposable(b)))
    for (const auto& [nu, k] : env.tc->peel_decompose(block_char)) summands[nu] += k;
  json arr = json::array();
  for (const auto& [nu, k] : summands) arr.push_back({{"weight", json(nu)}, {"mult", k}});
  doc["summands"] = arr;
  emit_json(job, doc);
}

void cmd_ideal_check(const Job& job, const std::vector<long long>& coords) {
  Env env(job, true);
  Vec mu = parse_weight(env.rs, coords, 0, 1);
  if (!is_dominant(mu)) throw ConfigError("weight must be dominant");
  int L = job.L ? job.L : 12;
  CellPartition part = cell_partition_checked(*env.kl, L);
  int cell = resolve_cell(part, job.cell);
  bool strict = job.mode.empty() ? false : job.mode == "below";
  bool member = ideal_membership_at(*env.tc, mu, part, cell, strict);
  json doc = header(job, "ideal-check");
  doc["L"] = L;
  doc["weight"] = json(mu);
  doc["cell"] = job.cell;
  doc["mode"] = strict ? "below" : "at";
  doc["w_long"] = json(env.tc->longest_rep(mu).word);
  doc["member"] = member;
  emit_json(job, doc);
}

void cmd_quotient_ring(const Job& job, bool radical_only) {
  Env env(job, true);
  int L = job.L ? job.L : 14;
  CellPartition part = cell_partition_checked(*env.kl, L);
  int cell = resolve_cell(part, job.cell);
  bool strict = job.mode.empty() ? true : job.mode == "below";
  IdealSpec spec = make_ideal_spec(part, job.cell, cell, strict);
  QuotientRing ring = quotient_ring(*env.tc, spec);
  RadicalInfo rad = radical(ring);

  if (job.format == "csv" && !radical_only) {
    std::string csv = "lambda,mu,nu,c\n";
    auto wstr = [](const Vec& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
      return s;
    };
    for (int i = 0; i < ring.dim(); ++i)
      for (int j = 0; j < ring.dim(); ++j)
        for (int k = 0; k < ring.dim(); ++k)
          if (ring.cval(i, j, k))
            csv += "\"" + wstr(ring.basis[i]) + "\",\"" + wstr(ring.basis[j]) + "\",\"" +
                   wstr(ring.basis[k]) + "\"," + std::to_string(ring.cval(i, j, k)) + "\n";
    write_output(job, csv);
    return;
  }

  json doc = header(job, radical_only ? "radical" : "quotient-ring");
  doc["L"] = L;
  doc["cell"] = job.cell;
  doc["mode"] = strict ? "below" : "at";
  doc["dim"] = ring.dim();
  if (!radical_only) {
    json basis = json::array();
    for (const auto& b : ring.basis) basis.push_back(json(b));
    doc["basis"] = basis;
    doc["unit"] = ring.unit;
    json table = json::array();
    for (int i = 0; i < ring.dim(); ++i)
      for (int j = 0; j < ring.dim(); ++j)
        for (int k = 0; k < ring.dim(); ++k)
          if (ring.cval(i, j, k)) table.push_back({i, j, k, ring.cval(i, j, k)});
    doc["table"] = table;
  }
  doc["radical_dim"] = rad.dim;
  json rbasis = json::array();
  for (const auto& vec : rad.basis) {
    json row = json::array();
    for (const auto& x : vec) row.push_back(x.str());
    rbasis.push_back(row);
  }
  doc["radical_basis"] = rbasis;
  emit_json(job, doc);
}

void cmd_cache(const Job& job, const std::string& action) {
  if (job.cache_dir.empty())
    throw ConfigError("cache command needs --cache-dir or TILTCELL_CACHE");
  Env env(job, true, true);
  json doc = header(job, "cache");
  doc["action"] = action;
  if (action == "list") {
    doc["files"] = env.kl->cache_list();
  } else if (action == "clear") {
    doc["removed"] = env.kl->cache_clear();
  } else if (action == "verify") {
    auto report = env.kl->cache_verify();
    doc["checked"] = report.checked;
    doc["evicted"] = report.evicted;
  } else {
    throw ConfigError("unknown cache action '" + action + "' (list, clear, verify)");
  }
  emit_json(job, doc);
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  std::vector<long long> coords;
  std::vector<int> word;
  std::string cache_action = "list";

  CLI::App app{"exact alcove-model combinatorics: canonical bases, cells, tilting "
               "characters and quotient rings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--type", job.type, "Cartan type, e.g. A1, B2, G2")->required();
  app.add_option("--l", job.l, "level (must exceed the Coxeter number)");
  app.add_option("--L", job.L, "length truncation for cell computations");
  app.add_option("--cache-dir", job.cache_dir, "canonical-basis disk cache directory");
  app.add_option("--out", job.out, "write output to a file instead of stdout");
  app.add_option("--format", job.format, "json, csv or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--cell", job.cell, "andersen, subregular or cell:<k>");
  app.add_option("--mode", job.mode, "ideal flavor: at (<=) or below (<)")
      ->check(CLI::IsMember({"at", "below"}));

  auto* roots = app.add_subcommand("roots", "root system data");
  auto* chr = app.add_subcommand("char", "weight multiplicities of a Weyl character");
  chr->add_option("coords", coords, "weight coordinates")->expected(-1);
  auto* tensor = app.add_subcommand("tensor", "Weyl factors of a tensor product");
  tensor->add_option("coords", coords, "two weights, coordinates concatenated")->expected(-1);
  auto* alcoves = app.add_subcommand("alcoves", "dominant alcoves up to a length");
  auto* klb = app.add_subcommand("klbasis", "canonical basis elements");
  klb->add_option("--word", word, "reduced word of one element (0 = affine generator)");
  auto* cells_cmd = app.add_subcommand("cells", "right cells of the truncated ball");
  auto* tchar = app.add_subcommand("tilting-char", "Weyl factors of an indecomposable tilting");
  tchar->add_option("coords", coords, "weight coordinates")->expected(-1);
  auto* dec = app.add_subcommand("decompose", "indecomposable summands of a tensor product");
  dec->add_option("coords", coords, "two weights, coordinates concatenated")->expected(-1);
  auto* ideal = app.add_subcommand("ideal-check", "membership in a cell-indexed tensor ideal");
  ideal->add_option("coords", coords, "weight coordinates")->expected(-1);
  auto* qring = app.add_subcommand("quotient-ring", "quotient ring past a cell ideal");
  auto* rad = app.add_subcommand("radical", "radical of the quotient ring");
  auto* cache = app.add_subcommand("cache", "disk cache administration");
  cache->add_option("action", cache_action, "list, clear or verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    json err;
    err["schema"] = 1;
    err["error"] = {{"kind", "config"}, {"message", e.what()}};
    std::fputs((err.dump(2) + "\n").c_str(), stdout);
    return 2;
  }

  if (job.cache_dir.empty())
    if (const char* envdir = std::getenv("TILTCELL_CACHE")) job.cache_dir = envdir;

  try {
    if (roots->parsed()) cmd_roots(job);
    if (chr->parsed()) cmd_char(job, coords);
    if (tensor->parsed()) cmd_tensor(job, coords);
    if (alcoves->parsed()) cmd_alcoves(job);
    if (klb->parsed()) cmd_klbasis(job, word, app.count("--format") > 0);
    if (cells_cmd->parsed()) cmd_cells(job);
    if (tchar->parsed()) cmd_tilting_char(job, coords);
    if (dec->parsed()) cmd_decompose(job, coords);
    if (ideal->parsed()) cmd_ideal_check(job, coords);
    if (qring->parsed()) cmd_quotient_ring(job, false);
    if (rad->parsed()) cmd_quotient_ring(job, true);
    if (cache->parsed()) cmd_cache(job, cache_action);
  } catch (const ConfigError& e) {
    json err;
    err["schema"] = 1;
    err["error"] = {{"kind", "config"}, {"message", e.what()}};
    std::fputs((err.dump(2) + "\n").c_str(), stdout);
    return 2;
  } catch (const TruncationError& e) {
    json err;
    err["schema"] = 1;
    err["error"] = {{"kind", "inconclusive-truncation"}, {"message", e.what()}};
    std::fputs((err.dump(2) + "\n").c_str(), stdout);
    return 3;
  } catch (const std::exception& e) {
    json err;
    err["schema"] = 1;
    err["error"] = {{"kind", "invariant"}, {"message", e.what()}};
    std::fputs((err.dump(2) + "\n").c_str(), stdout);
    return 4;
  }
  return 0;
}
