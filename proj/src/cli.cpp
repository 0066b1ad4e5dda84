#include "ghz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghz/family.hpp"
#include "ghz/genuine.hpp"
#include "ghz/jsonio.hpp"
#include "ghz/lhv.hpp"
#include "ghz/oracle.hpp"
#include "ghz/search.hpp"
#include "ghz/table.hpp"
#include "ghz/weyl.hpp"

namespace ghz {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapacity = 3;

// ---------------------------------------------------------------- helpers

std::string phase_string(PhaseExp phase, Dimension dim) {
  const int s = phase.s;
  const int d = dim.d;
  if (s == 0) return "+1";
  if (s == d) return "-1";
  if (2 * s == d) return "+i";
  if (2 * s == 3 * d) return "-i";
  if (s % 2 == 0) return "omega^" + std::to_string(s / 2);
  return "tau^" + std::to_string(s);
}

std::string product_equation(const ParadoxTable& t, PhaseExp phase) {
  std::string s;
  for (int r = 0; r < t.row_count(); ++r) {
    if (r) s += " ";
    s += "V_" + std::to_string(r);
  }
  s += " = " + phase_string(phase, t.dim);
  return s;
}

std::string subset_string(const std::vector<int>& subset) {
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i] + 1);
  }
  return s + "}";
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": \"" + item + "\" is not an integer");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected N or LO..HI, got \"" + text + "\"");
  }
}

// A positional that is either a catalog name or a path to a JSON document.
ParadoxTable resolve_table(const std::string& arg) {
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return catalog_table(arg);
  std::ifstream probe(arg);
  if (!probe)
    throw std::invalid_argument("\"" + arg +
                                "\" is neither a catalog entry nor a readable file; catalog "
                                "entries are listed by `generate catalog --list`");
  return load_table_document(arg).table;
}

std::optional<ExpectedBlock> resolve_expected(const std::string& arg) {
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return std::nullopt;
  std::ifstream probe(arg);
  if (!probe) return std::nullopt;
  const ExpectedBlock exp = load_table_document(arg).expected;
  if (exp.empty()) return std::nullopt;
  return exp;
}

int snap_phase_exponent(Cx value, Dimension dim, double tol = 1e-8) {
  const double angle = std::arg(value);
  long long s = std::llround(angle * dim.d / std::numbers::pi);
  s = ((s % (2LL * dim.d)) + 2LL * dim.d) % (2LL * dim.d);
  const Cx snapped(std::cos(std::numbers::pi * static_cast<double>(s) / dim.d),
                   std::sin(std::numbers::pi * static_cast<double>(s) / dim.d));
  if (std::abs(value - snapped) > tol)
    throw std::invalid_argument("eigenvalue is not a 2d-th root of unity");
  return static_cast<int>(s);
}

json verdict_to_json(const ParadoxTable& t, const Verdict& v) {
  json j;
  j["is_paradox"] = v.is_paradox;
  j["commuting"] = v.commuting;
  j["scalar_product"] = v.scalar_product;
  if (v.quantum_phase) {
    j["phase_exp"] = v.quantum_phase->s;
    j["phase"] = phase_string(*v.quantum_phase, t.dim);
  }
  j["classical_forced"] = v.classical_forced;
  if (!v.failure_witness.empty()) j["failure_witness"] = v.failure_witness;
  return j;
}

json table_to_json_value(const ParadoxTable& t) {
  return json::parse(table_document_to_json(t));
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::string target;
  bool oracle = false;
  bool genuine = false;
  bool lhv = false;
  bool json_out = false;
  std::string profile;  // comma-separated GHZ phase exponents
  long long capacity = 0;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const ParadoxTable t = resolve_table(f.target);
  const auto expected = resolve_expected(f.target);
  OracleOptions opts;
  opts.capacity = f.capacity;

  bool all_pass = true;
  json report;
  std::ostringstream text;

  const Verdict v = verify(t);
  all_pass = all_pass && v.is_paradox;
  text << render_table(t);
  text << "verdict: " << (v.is_paradox ? "PARADOX" : "not a paradox") << "\n";
  text << "  lines commute: " << (v.commuting ? "yes" : "no") << "\n";
  if (v.scalar_product && v.quantum_phase) {
    text << "  product: " << product_equation(t, *v.quantum_phase) << "\n";
  } else {
    text << "  product: not a scalar\n";
  }
  text << "  classical forcing: "
       << (v.classical_forced ? "every column forces the value product to +1" : "fails") << "\n";
  if (!v.failure_witness.empty()) text << "  witness: " << v.failure_witness << "\n";
  report["table"] = table_to_json_value(t);
  report["verdict"] = verdict_to_json(t, v);

  if (expected && expected->phase_exp) {
    const bool match = v.quantum_phase && v.quantum_phase->s == *expected->phase_exp;
    all_pass = all_pass && match;
    text << "  expected phase_exp " << *expected->phase_exp << ": "
         << (match ? "matches" : "MISMATCH") << "\n";
    report["expected_phase_matches"] = match;
  }

  if (f.oracle) {
    const Verdict ov = oracle_verify(t, opts);
    const bool agree = ov.is_paradox == v.is_paradox && ov.commuting == v.commuting &&
                       ov.scalar_product == v.scalar_product &&
                       ov.classical_forced == v.classical_forced &&
                       (!ov.quantum_phase == !v.quantum_phase) &&
                       (!ov.quantum_phase || ov.quantum_phase->s == v.quantum_phase->s);
    all_pass = all_pass && agree && ov.is_paradox;
    const long long n = checked_total_dimension(t.dim, t.parties, opts);
    text << "oracle (N=" << n << "): " << (ov.is_paradox ? "paradox confirmed" : "not a paradox")
         << (agree ? ", agrees with the symbolic verdict" : ", DISAGREES with the symbolic verdict")
         << "\n";
    report["oracle"] = verdict_to_json(t, ov);
    report["oracle"]["agrees"] = agree;
  }

  if (f.genuine) {
    const PartiteReport pr = v.is_paradox ? check_multipartite(t) : PartiteReport{};
    const DimensionReport dr = check_dimensional(t);
    const bool genuine_both = v.is_paradox && pr.genuine && dr.genuine;
    all_pass = all_pass && genuine_both;

    if (!v.is_paradox) {
      text << "genuineness: skipped (not a paradox)\n";
    } else {
      text << "genuinely " << t.parties << "-partite: " << (pr.genuine ? "yes" : "no");
      if (!pr.reducing_subsets.empty()) {
        text << "  (reducing subsets:";
        for (const auto& s : pr.reducing_subsets) text << " " << subset_string(s);
        text << ")";
      }
      text << "\n";
      if (!pr.commuting_complements.empty()) {
        text << "  commuting restrictions:";
        for (const auto& s : pr.commuting_complements) text << " " << subset_string(s);
        text << "\n";
      }
      if (pr.genuine_rows_any) {
        text << "  stable under line sub-multisets: " << (*pr.genuine_rows_any ? "yes" : "no");
        if (!*pr.genuine_rows_any && pr.rows_any_witness) {
          text << "  (parties " << subset_string(pr.rows_any_witness->first) << ", lines";
          for (int r : pr.rows_any_witness->second) text << " " << (r + 1);
          text << ")";
        }
        text << "\n";
      }
      text << "genuinely " << t.dim.d << "-dimensional: " << (dr.genuine ? "yes" : "no")
           << "  (per-column min dim:";
      for (int mdim : dr.per_column_min_dim) text << " " << mdim;
      text << ")\n";
      if (!dr.genuine) {
        const int got = *std::max_element(dr.per_column_min_dim.begin(),
                                          dr.per_column_min_dim.end());
        text << "  only " << got << "-dimensional\n";
      }

      json jg;
      jg["multipartite"] = pr.genuine;
      jg["rows_fixed"] = pr.genuine_rows_fixed;
      if (pr.genuine_rows_any) jg["rows_any"] = *pr.genuine_rows_any;
      json subs = json::array();
      for (const auto& s : pr.reducing_subsets) {
        json js = json::array();
        for (int p : s) js.push_back(p + 1);
        subs.push_back(std::move(js));
      }
      jg["reducing_subsets"] = std::move(subs);
      json comms = json::array();
      for (const auto& s : pr.commuting_complements) {
        json js = json::array();
        for (int p : s) js.push_back(p + 1);
        comms.push_back(std::move(js));
      }
      jg["commuting_complements"] = std::move(comms);
      jg["dimensional"] = dr.genuine;
      jg["per_column_min_dim"] = dr.per_column_min_dim;
      report["genuineness"] = std::move(jg);
    }
  }

  if (f.lhv) {
    const auto targets = ks_targets(t);
    if (!targets) {
      all_pass = false;
      text << "LHV: no state-independent target pattern (the product is not a scalar with an "
              "even phase exponent)\n";
      report["lhv"] = {{"available", false}};
    } else {
      const AssignmentSystem sys = build_system(t, *targets);
      const LhvResult res = solve_or_refute(sys);
      all_pass = all_pass && !res.solvable;
      text << "LHV system (" << sys.coeffs.size() << " congruences, " << sys.variables.size()
           << " variables mod " << t.dim.d << "):\n";
      for (size_t r = 0; r < sys.coeffs.size(); ++r) {
        text << "    " << equation_string(sys, static_cast<int>(r)) << "\n";
      }
      if (res.solvable) {
        text << "LHV: SOLVABLE — a noncontextual assignment exists\n";
      } else {
        text << "LHV: infeasible — " << render_certificate(sys, *res.refutation) << "\n";
      }
      json jl;
      jl["available"] = true;
      jl["solvable"] = res.solvable;
      if (res.refutation) {
        jl["certificate_weights"] = res.refutation->y;
        jl["certificate_target"] = res.refutation->combined_target;
      }
      if (res.solvable) jl["assignment"] = res.assignment;
      report["lhv"] = std::move(jl);
    }
  }

  if (!f.profile.empty()) {
    const std::vector<int> profile = parse_int_list(f.profile, "--profile");
    const StateVector psi = ghz_state(t.dim, t.parties, profile, opts);
    bool all_eigen = true;
    std::vector<int> exps;
    for (int r = 0; r < t.row_count(); ++r) {
      const auto lambda = row_eigenvalue_on(t, r, psi, opts.tol_eigen);
      if (!lambda) {
        all_eigen = false;
        break;
      }
      exps.push_back(snap_phase_exponent(*lambda, t.dim));
    }
    all_pass = all_pass && all_eigen;
    if (all_eigen) {
      text << "GHZ state (profile " << f.profile << "): joint eigenstate; eigenvalues:";
      for (int s : exps) text << " " << phase_string(make_phase(s, t.dim), t.dim);
      text << "\n";
      report["state"] = {{"profile", profile}, {"joint_eigenstate", true}};
      report["state"]["eigenvalue_exps"] = exps;
      if (expected && expected->eigenvalues) {
        std::vector<int> omega_exps;
        bool representable = true;
        for (int s : exps) {
          if (s % 2 != 0) representable = false;
          omega_exps.push_back(mod_reduce(s / 2, t.dim.d));
        }
        const bool match = representable && omega_exps == *expected->eigenvalues;
        all_pass = all_pass && match;
        text << "  expected eigenvalues: " << (match ? "match" : "MISMATCH") << "\n";
        report["state"]["expected_eigenvalues_match"] = match;
      }
    } else {
      text << "GHZ state (profile " << f.profile << "): NOT a joint eigenstate\n";
      report["state"] = {{"profile", profile}, {"joint_eigenstate", false}};
    }
  }

  report["all_checks_pass"] = all_pass;
  if (f.json_out) {
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
    out << (all_pass ? "all requested checks pass" : "SOME REQUESTED CHECKS FAILED") << "\n";
  }
  return all_pass ? kExitPass : kExitClaimFailed;
}

// ---------------------------------------------------------------- generate

int emit_table(const ParadoxTable& t, const std::string& out_path, bool show,
               std::ostream& out) {
  ExpectedBlock expected;
  if (const auto phase = quantum_product(t)) expected.phase_exp = phase->s;
  if (show) out << render_table(t);
  if (!out_path.empty()) {
    save_table_document(out_path, t, expected);
  } else if (!show) {
    out << table_document_to_json(t, expected);
  }
  return kExitPass;
}

// ---------------------------------------------------------------- search

int cmd_search(const SearchSpec& spec, const std::string& jsonl_path, std::ostream& out) {
  const SearchOutcome outcome = run_search(spec);

  std::ofstream jsonl;
  if (!jsonl_path.empty()) {
    jsonl.open(jsonl_path);
    if (!jsonl) throw std::invalid_argument("cannot open " + jsonl_path + " for writing");
  }

  if (spec.mode == SearchSpec::Mode::exhaustive) {
    out << "# exhaustive mode covers duplicate-free tables of single-base words only\n";
  }
  long long genuine_count = 0;
  std::vector<const SearchResult*> violations;
  for (size_t i = 0; i < outcome.results.size(); ++i) {
    const SearchResult& res = outcome.results[i];
    const bool genuine = res.genuine_multipartite && res.genuine_dimensional;
    if (res.verdict.is_paradox && genuine) ++genuine_count;
    if (res.verdict.is_paradox && genuine &&
        !(res.table.dim.d % 2 == 0 && res.table.dim.d < res.table.parties)) {
      violations.push_back(&res);
    }
    out << "[" << (i + 1) << "] "
        << (res.table.label.empty() ? canonical_form(res.table) : res.table.label) << "  d="
        << res.table.dim.d << " M=" << res.table.parties << " lines=" << res.table.row_count();
    if (res.verdict.quantum_phase) {
      out << " product=" << phase_string(*res.verdict.quantum_phase, res.table.dim);
    }
    out << (res.verdict.is_paradox ? " paradox" : " no-paradox");
    if (res.verdict.is_paradox) {
      out << (genuine ? " genuine" : " non-genuine");
    }
    out << "\n";

    if (jsonl.is_open()) {
      json line;
      line["table"] = table_to_json_value(res.table);
      line["verdict"] = verdict_to_json(res.table, res.verdict);
      line["genuine_multipartite"] = res.genuine_multipartite;
      line["genuine_dimensional"] = res.genuine_dimensional;
      if (res.params) {
        line["params"] = {{"d", res.params->dim.d}, {"parties", res.params->parties},
                          {"n", res.params->n},     {"p", res.params->p},
                          {"q", res.params->q},     {"a", res.params->a},
                          {"b", res.params->b},     {"c", res.params->c}};
      }
      jsonl << line.dump() << "\n";
    }
  }

  out << "summary: " << outcome.candidates_examined << " candidates examined, "
      << outcome.paradoxes_found << " paradoxes found, " << outcome.results.size()
      << " emitted (" << genuine_count << " genuine)\n";
  if (violations.empty()) {
    out << "conjecture (d even and d < M over genuine paradoxes): consistent within searched "
           "bounds\n";
  } else {
    out << "conjecture (d even and d < M over genuine paradoxes): VIOLATED by:\n";
    for (const SearchResult* res : violations) {
      out << render_table(res->table);
      if (res->verdict.quantum_phase) {
        out << "  product: " << product_equation(res->table, *res->verdict.quantum_phase)
            << "\n";
      }
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------- eigenbasis

int cmd_eigenbasis(const std::string& target, bool vectors, bool json_out, long long capacity,
                   std::ostream& out) {
  const ParadoxTable t = resolve_table(target);
  OracleOptions opts;
  opts.capacity = capacity;
  const JointBasis basis = joint_eigenbasis(t, opts);

  // Group vectors by their eigenvalue exponent tuples.
  std::map<std::vector<int>, std::vector<size_t>> groups;
  for (size_t v = 0; v < basis.vectors.size(); ++v) {
    std::vector<int> key;
    key.reserve(basis.eigenvalues[v].size());
    for (const Cx lambda : basis.eigenvalues[v]) {
      key.push_back(snap_phase_exponent(lambda, t.dim));
    }
    groups[key].push_back(v);
  }

  if (json_out) {
    json j;
    j["table"] = table_to_json_value(t);
    json pats = json::array();
    for (const auto& [key, members] : groups) {
      json p;
      p["eigenvalue_exps"] = key;
      p["multiplicity"] = members.size();
      if (vectors) {
        json vecs = json::array();
        for (size_t v : members) {
          json vec = json::array();
          for (long long i = 0; i < basis.vectors[v].size(); ++i) {
            vec.push_back({basis.vectors[v][i].real(), basis.vectors[v][i].imag()});
          }
          vecs.push_back(std::move(vec));
        }
        p["vectors"] = std::move(vecs);
      }
      pats.push_back(std::move(p));
    }
    j["patterns"] = std::move(pats);
    out << j.dump(2) << "\n";
    return kExitPass;
  }

  out << render_table(t);
  out << "joint eigenbasis: " << basis.vectors.size() << " vectors, " << groups.size()
      << " distinct eigenvalue patterns (phases as powers of tau):\n";
  for (const auto& [key, members] : groups) {
    out << "  (";
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) out << ",";
      out << phase_string(make_phase(key[i], t.dim), t.dim);
    }
    out << ")  multiplicity " << members.size() << "\n";
    if (vectors) {
      for (size_t v : members) {
        out << "    [";
        for (long long i = 0; i < basis.vectors[v].size(); ++i) {
          if (i) out << ", ";
          const Cx a = basis.vectors[v][i];
          std::ostringstream comp;
          comp.precision(6);
          comp << a.real();
          if (std::abs(a.imag()) > 1e-12) comp << (a.imag() > 0 ? "+" : "") << a.imag() << "i";
          out << comp.str();
        }
        out << "]\n";
      }
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------- project

std::vector<std::vector<StateVector>> parse_spans_document(const std::string& path, int parties,
                                                           int d) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": JSON syntax error: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("spans") || !doc["spans"].is_array())
    throw std::invalid_argument(path + ": expected an object with a \"spans\" array");
  for (const auto& [key, value] : doc.items()) {
    if (key != "schema_version" && key != "spans")
      throw std::invalid_argument(path + ": unknown member \"" + key + "\"");
  }
  if (static_cast<int>(doc["spans"].size()) != parties)
    throw std::invalid_argument(path + ": need one span per party");

  std::vector<std::vector<StateVector>> spans(parties);
  for (int j = 0; j < parties; ++j) {
    const json& jspan = doc["spans"][j];
    if (!jspan.is_array() || jspan.empty())
      throw std::invalid_argument(path + ": spans[" + std::to_string(j) +
                                  "] must be a nonempty array of vectors");
    for (const auto& jvec : jspan) {
      if (!jvec.is_array() || static_cast<int>(jvec.size()) != d)
        throw std::invalid_argument(path + ": each span vector must have d components");
      StateVector v(d);
      for (int i = 0; i < d; ++i) {
        const json& comp = jvec[i];
        if (comp.is_number()) {
          v[i] = Cx(comp.get<double>(), 0.0);
        } else if (comp.is_array() && comp.size() == 2 && comp[0].is_number() &&
                   comp[1].is_number()) {
          v[i] = Cx(comp[0].get<double>(), comp[1].get<double>());
        } else {
          throw std::invalid_argument(path +
                                      ": components must be numbers or [re, im] pairs");
        }
      }
      spans[j].push_back(std::move(v));
    }
  }
  return spans;
}

std::vector<std::vector<StateVector>> parse_span_all(const std::string& text, int parties,
                                                     int d) {
  std::vector<StateVector> span;
  std::stringstream ss(text);
  std::string vec_text;
  while (std::getline(ss, vec_text, ';')) {
    std::vector<double> comps;
    std::stringstream vs(vec_text);
    std::string comp;
    while (std::getline(vs, comp, ',')) {
      try {
        size_t pos = 0;
        comps.push_back(std::stod(comp, &pos));
        if (pos != comp.size()) throw std::invalid_argument(comp);
      } catch (const std::exception&) {
        throw std::invalid_argument("--span-all: \"" + comp + "\" is not a number");
      }
    }
    if (static_cast<int>(comps.size()) != d)
      throw std::invalid_argument("--span-all: each vector needs exactly d components");
    StateVector v(d);
    for (int i = 0; i < d; ++i) v[i] = Cx(comps[i], 0.0);
    span.push_back(std::move(v));
  }
  if (span.empty()) throw std::invalid_argument("--span-all: no vectors given");
  return std::vector<std::vector<StateVector>>(parties, span);
}

int cmd_project(const std::string& target, const std::string& spans_path,
                const std::string& span_all, bool json_out, long long capacity,
                std::ostream& out) {
  const ParadoxTable t = resolve_table(target);
  OracleOptions opts;
  opts.capacity = capacity;

  std::vector<std::vector<StateVector>> spans;
  if (!spans_path.empty()) {
    spans = parse_spans_document(spans_path, t.parties, t.dim.d);
  } else if (!span_all.empty()) {
    spans = parse_span_all(span_all, t.parties, t.dim.d);
  } else {
    throw std::invalid_argument("project: need --spans FILE or --span-all VECTORS");
  }

  const Verdict v = project_and_verify(t, spans, opts);

  std::vector<int> dims;
  dims.reserve(spans.size());
  for (const auto& span : spans) dims.push_back(static_cast<int>(span.size()));

  if (json_out) {
    json j;
    j["table"] = table_to_json_value(t);
    j["compressed_dims"] = dims;
    j["verdict"] = verdict_to_json(t, v);
    out << j.dump(2) << "\n";
  } else {
    out << render_table(t);
    out << "compressed per-party dimensions:";
    for (int dd : dims) out << " " << dd;
    out << "\n";
    out << "compressed verdict: " << (v.is_paradox ? "PARADOX" : "not a paradox") << "\n";
    if (v.scalar_product && v.quantum_phase) {
      out << "  product: " << product_equation(t, *v.quantum_phase) << "\n";
    }
    if (!v.failure_witness.empty()) out << "  witness: " << v.failure_witness << "\n";
  }
  return v.is_paradox ? kExitPass : kExitClaimFailed;
}

}  // namespace

// -------------------------------------------------------------- dispatcher

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ghzkit — construct, verify, and search GHZ paradoxes for qudits"};
  app.require_subcommand(1);

  // ---- verify
  VerifyFlags vf;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a table (catalog name or JSON file)");
  verify_cmd->add_option("table", vf.target, "catalog name or JSON document path")->required();
  verify_cmd->add_flag("--oracle", vf.oracle, "cross-check with the dense matrix oracle");
  verify_cmd->add_flag("--genuine", vf.genuine, "add multipartite and dimensional genuineness");
  verify_cmd->add_flag("--lhv", vf.lhv, "add the local-hidden-variable infeasibility check");
  verify_cmd->add_flag("--json", vf.json_out, "emit a JSON report");
  verify_cmd->add_option("--profile", vf.profile,
                         "GHZ phase profile (comma-separated tau exponents, one per level); "
                         "checks the state is a joint eigenstate");
  verify_cmd->add_option("--capacity", vf.capacity, "override the total-dimension bound");

  // ---- generate
  CLI::App* generate_cmd = app.add_subcommand("generate", "build tables");
  generate_cmd->require_subcommand(1);

  struct {
    int d = 0, m = 0, n = 1, q = 0, a = 1, b = 0, c = 1;
    std::string out_path;
    bool show = false;
  } gf;
  CLI::App* family_cmd = generate_cmd->add_subcommand("family", "cyclic family from parameters");
  family_cmd->add_option("--d", gf.d, "qudit dimension")->required();
  family_cmd->add_option("--M,--parties", gf.m, "number of parties")->required();
  family_cmd->add_option("--n", gf.n, "X^b segment length (default 1)");
  family_cmd->add_option("--q", gf.q, "identity segment length (default 0)");
  family_cmd->add_option("--a", gf.a, "line-0 exponent (default 1)");
  family_cmd->add_option("--b", gf.b, "X exponent in shifted lines (default d-1)");
  family_cmd->add_option("--c", gf.c, "Y exponent in shifted lines (default 1)");
  family_cmd->add_option("--out", gf.out_path, "write the JSON document here");
  family_cmd->add_flag("--show", gf.show, "print the fixed-width grid");

  struct {
    int d = 0;
    std::string out_path;
    bool show = false;
  } ge;
  CLI::App* evenm_cmd = generate_cmd->add_subcommand("even-m", "even-party construction (M = d+2)");
  evenm_cmd->add_option("--d", ge.d, "qudit dimension (must be even)")->required();
  evenm_cmd->add_option("--out", ge.out_path, "write the JSON document here");
  evenm_cmd->add_flag("--show", ge.show, "print the fixed-width grid");

  struct {
    std::string name;
    std::string out_path;
    bool show = false;
    bool list = false;
  } gc;
  CLI::App* catalog_cmd = generate_cmd->add_subcommand("catalog", "built-in tables");
  catalog_cmd->add_option("name", gc.name, "catalog entry name");
  catalog_cmd->add_option("--out", gc.out_path, "write the JSON document here");
  catalog_cmd->add_flag("--show", gc.show, "print the fixed-width grid");
  catalog_cmd->add_flag("--list", gc.list, "list catalog names");

  // ---- search
  struct {
    std::string mode = "family";
    std::string d_range = "2..4";
    std::string m_range = "3..5";
    int max_rows = 0;
    bool genuine_only = false;
    bool all = false;
    std::string jsonl_path;
    long long capacity = 0;
  } sf;
  CLI::App* search_cmd = app.add_subcommand("search", "systematic paradox search");
  search_cmd->add_option("--mode", sf.mode, "family | exhaustive (default family)")
      ->check(CLI::IsMember({"family", "exhaustive"}));
  search_cmd->add_option("--d", sf.d_range, "dimension or range LO..HI (default 2..4)");
  search_cmd->add_option("--M", sf.m_range, "party count or range LO..HI (default 3..5)");
  search_cmd->add_option("--maxrows", sf.max_rows, "exhaustive: cap on lines (default M+2)");
  search_cmd->add_flag("--genuine-only", sf.genuine_only, "keep only genuine paradoxes");
  search_cmd->add_flag("--all", sf.all, "also emit candidates that are not paradoxes");
  search_cmd->add_option("--jsonl", sf.jsonl_path, "write one JSON result per line here");
  search_cmd->add_option("--capacity", sf.capacity, "override the total-dimension bound");

  // ---- eigenbasis
  struct {
    std::string target;
    bool vectors = false;
    bool json_out = false;
    long long capacity = 0;
  } ef;
  CLI::App* eigen_cmd =
      app.add_subcommand("eigenbasis", "joint eigenbasis of a commuting table");
  eigen_cmd->add_option("table", ef.target, "catalog name or JSON document path")->required();
  eigen_cmd->add_flag("--vectors", ef.vectors, "print the basis vectors themselves");
  eigen_cmd->add_flag("--json", ef.json_out, "emit a JSON report");
  eigen_cmd->add_option("--capacity", ef.capacity, "override the total-dimension bound");

  // ---- project
  struct {
    std::string target;
    std::string spans_path;
    std::string span_all;
    bool json_out = false;
    long long capacity = 0;
  } pf;
  CLI::App* project_cmd =
      app.add_subcommand("project", "re-verify after compressing each party to a subspace");
  project_cmd->add_option("table", pf.target, "catalog name or JSON document path")->required();
  project_cmd->add_option("--spans", pf.spans_path,
                          "JSON file: {\"schema_version\":\"1\",\"spans\":[[vec,...],...]}");
  project_cmd->add_option("--span-all", pf.span_all,
                          "same span for every party: vectors 'a,b,..;c,d,..' (real components)");
  project_cmd->add_flag("--json", pf.json_out, "emit a JSON report");
  project_cmd->add_option("--capacity", pf.capacity, "override the total-dimension bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(vf, out);

    if (family_cmd->parsed()) {
      const int b = gf.b > 0 ? gf.b : gf.d - 1;
      const FamilyParams fp = family_params(gf.d, gf.m, gf.n, gf.q, gf.a, b, gf.c);
      const FamilyCheck check = validate_params(fp);
      if (!check.ok) {
        err << "invalid family parameters; violated conditions:";
        for (const std::string& name : check.violated) err << " " << name;
        err << "\n";
        return kExitInputError;
      }
      return emit_table(generate(fp), gf.out_path, gf.show, out);
    }
    if (evenm_cmd->parsed()) {
      return emit_table(generate_even_m(Dimension{ge.d}), ge.out_path, ge.show, out);
    }
    if (catalog_cmd->parsed()) {
      if (gc.list) {
        for (const std::string& name : catalog_names()) out << name << "\n";
        return kExitPass;
      }
      if (gc.name.empty())
        throw std::invalid_argument("generate catalog: need a name or --list");
      return emit_table(catalog_table(gc.name), gc.out_path, gc.show, out);
    }

    if (search_cmd->parsed()) {
      SearchSpec spec;
      spec.mode = sf.mode == "exhaustive" ? SearchSpec::Mode::exhaustive
                                          : SearchSpec::Mode::family;
      std::tie(spec.d_lo, spec.d_hi) = parse_range(sf.d_range, "--d");
      std::tie(spec.m_lo, spec.m_hi) = parse_range(sf.m_range, "--M");
      spec.max_rows = sf.max_rows;
      spec.genuine_only = sf.genuine_only;
      spec.include_non_paradox = sf.all;
      spec.capacity = sf.capacity;
      return cmd_search(spec, sf.jsonl_path, out);
    }

    if (eigen_cmd->parsed()) {
      return cmd_eigenbasis(ef.target, ef.vectors, ef.json_out, ef.capacity, out);
    }
    if (project_cmd->parsed()) {
      return cmd_project(pf.target, pf.spans_path, pf.span_all, pf.json_out, pf.capacity, out);
    }
  } catch (const capacity_error& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  err << "error: no subcommand\n";
  return kExitInputError;
}

}  // namespace ghz
