// ringlab -- change-ringing mathematics from the command line.
//
//   ringlab gen sjt --n 4
//   ringlab gen plain-hunt --bells 5
//   ringlab gen grandsire --bells 7 --comp touch.json
//   ringlab validate method.json --ruleset ringers
//   ringlab search hamiltonian --group S4 --gens "(1 2 3);(1 2 3 4)"
//   ringlab search longest --scheme plain-bob-6
//   ringlab prove rankin --group A6 --gens "(3 4 6 7 5);(2 4 7)(3 6 5)"
//   ringlab prove feasibility --scheme grandsire-7
//   ringlab prove parity-audit --scheme grandsire-7 --steps 50 --seed 7
//
// Exit codes: 0 pass/found/conclusive, 1 negative/inconclusive, 2 usage,
// 3 budget exhausted.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/files.hpp"
#include "ringlab/leads.hpp"
#include "ringlab/method.hpp"
#include "ringlab/notation.hpp"
#include "ringlab/qset.hpp"
#include "ringlab/rules.hpp"
#include "ringlab/search.hpp"

using json = nlohmann::ordered_json;
using namespace ringlab;

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RINGLAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000ull;
}

// "(1 2 3);(1 2 3 4)" -> perms; degree defaults to the largest point named
std::vector<Perm> parse_gens(const std::string& text, int degree) {
  if (degree == 0) {
    int maxpt = 0;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        int v = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + (text[i++] - '0');
        maxpt = std::max(maxpt, v);
      } else {
        ++i;
      }
    }
    degree = maxpt;
  }
  if (degree < 1) throw error("syntax-error", "cannot infer degree");
  std::vector<Perm> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_cycles(part, degree));
  }
  if (out.empty()) throw error("syntax-error", "no generators given");
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Check the generated group is the one named: Sk (order k!), Ak (order k!/2,
// all generators even), or "closure" (whatever they generate).
std::shared_ptr<const GroupTable> build_group(const std::string& spec,
                                              const std::vector<Perm>& gens) {
  auto table = std::make_shared<GroupTable>(closure(gens));
  if (spec == "closure" || spec.empty()) return table;
  if (spec.size() < 2 || (spec[0] != 'S' && spec[0] != 'A'))
    throw error("generation-error", "group must be Sk, Ak or 'closure'");
  int k = std::stoi(spec.substr(1));
  long long want = spec[0] == 'S' ? factorial(k) : factorial(k) / 2;
  if (spec[0] == 'A')
    for (const Perm& g : gens)
      if (!is_even(g))
        throw error("generation-error",
                    "odd generator cannot lie in " + spec);
  if (table->size() != want)
    throw error("generation-error",
                "generators produce a group of order " +
                    std::to_string(table->size()) + ", but " + spec +
                    " has order " + std::to_string(want));
  return table;
}

void emit_method(const Method& m, const std::string& format,
                 const std::string& name) {
  if (format == "json") {
    write_method_file(std::cout, MethodFile::from_method(m, name));
    return;
  }
  for (const Row& r : m.rows) {
    if (format == "csv") {
      for (int i = 1; i <= r.size(); ++i) {
        if (i > 1) std::cout << ',';
        std::cout << r.bell_at(i);
      }
      std::cout << '\n';
    } else {
      std::cout << format_row(r) << '\n';
    }
  }
}

json report_to_json(const ValidationReport& rep) {
  json j;
  j["ruleset"] = rep.ruleset == Ruleset::motel ? "motel" : "ringers";
  j["passed"] = rep.passed;
  j["is_extent"] = rep.is_extent;
  json v = json::array();
  for (const auto& viol : rep.violations) {
    json e;
    e["rule"] = viol.rule;
    e["row"] = viol.row_index;
    e["what"] = viol.what;
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

std::string leads_string(const std::vector<char>& leads) {
  std::string s;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    if (i) s += ',';
    s += leads[i];
  }
  return s;
}

// csv: one header line of keys, one line of values; arrays joined with ';'
void emit_verdict(const json& j, const std::string& format,
                  const std::string& text_line) {
  if (format == "text") {
    std::cout << text_line << '\n';
  } else if (format == "csv") {
    std::string keys, values;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!keys.empty()) {
        keys += ',';
        values += ',';
      }
      keys += it.key();
      if (it->is_array()) {
        std::string joined;
        for (const auto& e : *it) {
          if (!joined.empty()) joined += ';';
          joined += e.is_string() ? e.get<std::string>() : e.dump();
        }
        values += '"' + joined + '"';
      } else if (it->is_string()) {
        values += '"' + it->get<std::string>() + '"';
      } else {
        values += it->dump();
      }
    }
    std::cout << keys << '\n' << values << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int cmd_gen(const std::string& what, int n, const std::string& comp_path,
            const std::string& format) {
  Method m;
  std::string name;
  if (what == "sjt") {
    // stream: 10!+1 rows should not sit in memory
    name = "sjt-" + std::to_string(n);
    if (format == "json") {
      std::cout << "{\n  \"stage\": " << n << ",\n  \"name\": \"" << name
                << "\",\n  \"start_row\": \"" << format_row(Row::rounds(n))
                << "\",\n  \"transitions\": [";
      bool first = true;
      sjt_stream(
          n, [](const Row&) {},
          [&](const Perm& t) {
            std::cout << (first ? "\n    \"" : ",\n    \"")
                      << format_cycles(t) << '"';
            first = false;
          });
      std::cout << (first ? "]\n}\n" : "\n  ]\n}\n");
      return 0;
    }
    char sep = format == "csv" ? ',' : ' ';
    sjt_stream(
        n,
        [&](const Row& r) {
          for (int i = 1; i <= r.size(); ++i) {
            if (i > 1) std::cout << sep;
            std::cout << r.bell_at(i);
          }
          std::cout << '\n';
        },
        [](const Perm&) {});
    return 0;
  } else if (what == "plain-hunt") {
    m = plain_hunt(n);
    name = "plain-hunt-" + std::to_string(n);
  } else {
    if (what == "ccdd" && n == 0) n = 5;
    LeadScheme s = lead_scheme(what + "-" + std::to_string(n));
    if (comp_path.empty()) {
      m = plain_course(s);
      name = s.id() + "-plain-course";
    } else {
      std::ifstream in(comp_path);
      if (!in) throw error("format-error", "cannot open " + comp_path);
      CompositionFile comp = read_composition_file(in);
      if (comp.scheme != s.id())
        throw error("composition-error", "composition is for " + comp.scheme +
                                             ", not " + s.id());
      m = expand_leads(s, comp.leads);
      name = s.id() + "-touch";
    }
  }
  emit_method(m, format, name);
  return 0;
}

int cmd_validate(const std::string& path, const std::string& ruleset_name,
                 const std::string& format) {
  Ruleset ruleset =
      ruleset_name == "motel" ? Ruleset::motel : Ruleset::ringers;
  std::ifstream in(path);
  if (!in) throw error("format-error", "cannot open " + path);
  Method m;
  // A method file is JSON; anything else is a row list, one row per line,
  // with the transitions recovered from consecutive rows.
  char c = static_cast<char>(in.peek());
  if (c == '{') {
    m = read_method_file(in).to_method();
  } else {
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      rows.push_back(parse_row(line));
    }
    if (rows.empty()) throw error("row-error", "no rows in " + path);
    std::vector<Perm> word;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      if (rows[i + 1].size() != rows[i].size())
        throw error("row-error", "row lengths differ");
      // bell at position p of row i sits at position q of row i+1: p -> q
      std::vector<std::uint8_t> img(rows[i].size());
      std::vector<int> where(rows[i].size() + 1, 0);
      for (int q = 1; q <= rows[i + 1].size(); ++q)
        where[rows[i + 1].bell_at(q)] = q;
      for (int p = 1; p <= rows[i].size(); ++p)
        img[p - 1] = static_cast<std::uint8_t>(where[rows[i].bell_at(p)] - 1);
      word.push_back(Perm::from_images(std::move(img)));
    }
    m = Method::from_transitions(rows[0].size(), rows[0], std::move(word));
  }
  ValidationReport rep = validate(m, ruleset);
  if (format == "text") {
    std::cout << (rep.passed ? "passed" : "failed") << " ("
              << rep.violations.size() << " violations)"
              << (rep.is_extent ? ", extent" : "") << '\n';
    for (const auto& v : rep.violations)
      std::cout << "rule " << v.rule << " at row " << v.row_index << ": "
                << v.what << '\n';
  } else {
    std::cout << report_to_json(rep).dump(2) << '\n';
  }
  return rep.passed ? 0 : 1;
}

int cmd_search_hamiltonian(const std::string& group_spec,
                           const std::string& gens_text, int degree,
                           std::uint64_t budget, int workers,
                           const std::string& format) {
  std::vector<Perm> gens = parse_gens(gens_text, degree);
  auto table = build_group(group_spec, gens);
  CayleyGraph graph(table, gens);
  SearchOptions opts;
  opts.budget = budget;
  opts.workers = workers;
  HamiltonianResult res = hamiltonian_cycle(graph, opts);
  json j;
  j["status"] = res.status == SearchStatus::found      ? "found"
                : res.status == SearchStatus::none     ? "none"
                                                       : "exhausted";
  if (res.status == SearchStatus::found)
    j["word"] = word_to_string(res.word);
  j["order"] = table->size();
  j["expansions"] = res.stats.expansions;
  j["elapsed"] = res.stats.seconds;
  emit_verdict(j, format, j["status"].get<std::string>());
  if (res.status == SearchStatus::found) return 0;
  return res.status == SearchStatus::none ? 1 : 3;
}

int cmd_search_longest(const std::string& scheme_id,
                       const std::string& group_spec,
                       const std::string& gens_text, int degree,
                       std::uint64_t budget, int workers,
                       const std::string& format) {
  json j;
  bool optimal = false;
  if (!scheme_id.empty()) {
    LeadScheme s = lead_scheme(scheme_id);
    SearchOptions opts;
    opts.budget = budget;
    opts.workers = workers;
    MethodChainResult res = longest_method_chain(s, opts);
    j["scheme"] = s.id();
    j["length"] = res.leads;
    j["optimal"] = res.optimal;
    j["leads"] = leads_string(res.labels);
    j["rows"] = res.leads * s.lead_length();
    j["expansions"] = res.stats.expansions;
    j["elapsed"] = res.stats.seconds;
    optimal = res.optimal;
  } else {
    std::vector<Perm> gens = parse_gens(gens_text, degree);
    auto table = build_group(group_spec, gens);
    CayleyGraph graph(table, gens);
    SearchOptions opts;
    opts.budget = budget;
    opts.workers = workers;
    LongestResult res = longest_cycle(graph, opts);
    j["length"] = res.best.length();
    j["optimal"] = res.optimal;
    j["word"] = word_to_string(res.best.labels);
    j["expansions"] = res.stats.expansions;
    j["elapsed"] = res.stats.seconds;
    optimal = res.optimal;
  }
  emit_verdict(j, format,
               "length " + j["length"].dump() + (optimal ? " (optimal)" : ""));
  return optimal ? 0 : 3;
}

int cmd_prove_rankin(const std::string& group_spec,
                     const std::string& gens_text, int degree,
                     const std::string& format) {
  std::vector<Perm> gens = parse_gens(gens_text, degree);
  if (gens.size() != 2)
    throw error("generation-error", "rankin needs exactly two generators");
  auto table = build_group(group_spec, gens);
  RankinVerdict v = rankin_oracle(*table, gens[0], gens[1]);
  json j;
  j["verdict"] = v.impossible ? "impossible" : "inconclusive";
  j["order_gamma"] = v.order_gamma;
  j["index_x"] = v.index_x;
  j["index_y"] = v.index_y;
  emit_verdict(j, format, j["verdict"].get<std::string>());
  return v.impossible ? 0 : 1;
}

int cmd_prove_feasibility(const std::string& scheme_id, std::uint64_t budget,
                          const std::string& format) {
  LeadScheme s = lead_scheme(scheme_id);
  FeasibilityOptions opts;
  opts.budget = budget;
  FeasibilityVerdict v = extent_feasibility(s, opts);
  json j;
  j["scheme"] = s.id();
  j["verdict"] = v.kind == FeasibilityKind::possible     ? "possible"
                 : v.kind == FeasibilityKind::impossible ? "impossible"
                                                         : "unknown";
  j["test"] = v.test;
  j["bound_leads"] = v.bound_leads;
  j["bound_rows"] = v.bound_rows;
  if (!v.witness.empty()) j["witness"] = leads_string(v.witness);
  if (v.test == "rankin") {
    j["order_gamma"] = v.rankin.order_gamma;
    j["index_p"] = v.rankin.index_p;
    j["index_b"] = v.rankin.index_b;
  }
  emit_verdict(j, format,
               j["verdict"].get<std::string>() + " (" + v.test + ")");
  return v.kind == FeasibilityKind::unknown ? 1 : 0;
}

int cmd_prove_parity_audit(const std::string& scheme_id,
                           const std::string& group_spec,
                           const std::string& gens_text, int degree, int steps,
                           std::uint64_t seed, const std::string& format) {
  std::shared_ptr<const GroupTable> table;
  Perm p, b;
  if (!scheme_id.empty()) {
    LeadScheme s = lead_scheme(scheme_id);
    if (!s.has_bob())
      throw error("scheme-error", s.id() + " has no bob lead");
    p = s.P;
    b = s.step_bob;
    table = std::make_shared<GroupTable>(closure({p, b}));
  } else {
    std::vector<Perm> gens = parse_gens(gens_text, degree);
    if (gens.size() != 2)
      throw error("generation-error", "parity-audit needs two generators");
    p = gens[0];
    b = gens[1];
    table = build_group(group_spec, gens);
  }
  // the trace itself is the only randomized input; searches stay seedless
  auto sys = QsetSystem(table, p, b);
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  std::vector<int> trace;
  std::uniform_int_distribution<int> pick(0, sys.coset_count() - 1);
  for (int i = 0; i < steps; ++i) trace.push_back(pick(rng));
  AuditReport rep = parity_audit(table, p, b, trace);
  json j;
  j["start_chains"] = rep.start_chains;
  j["final_chains"] = rep.final_chains;
  j["qset_size"] = rep.period;
  j["steps"] = static_cast<int>(rep.steps.size());
  j["parity_law_held"] = rep.parity_law_held;
  j["lemma6_held"] = rep.lemma6_held;
  j["count_law_held"] = rep.count_law_held;
  j["conclusion"] = rep.conclusion;
  json counts = json::array();
  for (const auto& st : rep.steps) counts.push_back(st.chains_after);
  j["chain_counts"] = counts;
  emit_verdict(j, format,
               rep.parity_law_held ? "parity law held" : "PARITY VIOLATED");
  return rep.parity_law_held && rep.lemma6_held && rep.count_law_held ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"change-ringing permutation laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a method's rows");
  std::string gen_what;
  int gen_n = 0;
  std::string gen_comp;
  std::string gen_format = "text";
  gen->add_option("method", gen_what,
                  "sjt | plain-hunt | plain-bob | grandsire | ccdd")
      ->required();
  gen->add_option("--n", gen_n, "number of objects (sjt)");
  gen->add_option("--bells", gen_n, "stage");
  gen->add_option("--comp", gen_comp, "composition file (JSON)");
  gen->add_option("--format", gen_format, "text | json | csv");

  // validate
  auto* val = app.add_subcommand("validate", "check a method against rules");
  std::string val_path, val_ruleset = "ringers", val_format = "json";
  val->add_option("path", val_path, "method JSON or row-per-line text")
      ->required();
  val->add_option("--ruleset", val_ruleset, "motel | ringers");
  val->add_option("--format", val_format, "json | text");

  // search
  auto* search = app.add_subcommand("search", "hamiltonian / longest cycles");
  search->require_subcommand(1);
  std::string s_group = "closure", s_gens, s_scheme;
  int s_degree = 0, s_workers = 1;
  std::uint64_t s_budget = default_budget();
  std::string s_format = "json";
  auto* ham = search->add_subcommand("hamiltonian", "full unicursal search");
  ham->add_option("--group", s_group, "Sk | Ak | closure");
  ham->add_option("--gens", s_gens, "semicolon-separated cycle strings")
      ->required();
  ham->add_option("--degree", s_degree, "degree (default: largest point)");
  ham->add_option("--budget", s_budget, "node-expansion budget")
      ->check(CLI::PositiveNumber);
  ham->add_option("--workers", s_workers, "parallel workers");
  ham->add_option("--format", s_format, "json | text");
  auto* longest = search->add_subcommand("longest", "longest simple cycle");
  longest->add_option("--scheme", s_scheme,
                      "lead scheme id (method-valid chain search)");
  longest->add_option("--group", s_group, "Sk | Ak | closure");
  longest->add_option("--gens", s_gens, "semicolon-separated cycle strings");
  longest->add_option("--degree", s_degree, "degree");
  longest->add_option("--budget", s_budget, "node-expansion budget")
      ->check(CLI::PositiveNumber);
  longest->add_option("--workers", s_workers, "parallel workers");
  longest->add_option("--format", s_format, "json | text");

  // prove
  auto* prove = app.add_subcommand("prove", "oracles and audits");
  prove->require_subcommand(1);
  std::string p_group = "closure", p_gens, p_scheme;
  int p_degree = 0, p_steps = 50;
  std::uint64_t p_seed = 1, p_budget = default_budget();
  std::string p_format = "json";
  auto* rankin = prove->add_subcommand("rankin", "Rankin impossibility oracle");
  rankin->add_option("--group", p_group, "Sk | Ak | closure");
  rankin->add_option("--gens", p_gens, "two cycle strings, ';'-separated")
      ->required();
  rankin->add_option("--degree", p_degree, "degree");
  rankin->add_option("--format", p_format, "json | text");
  auto* feas = prove->add_subcommand("feasibility", "extent feasibility");
  feas->add_option("--scheme", p_scheme, "lead scheme id")->required();
  feas->add_option("--budget", p_budget, "search budget")
      ->check(CLI::PositiveNumber);
  feas->add_option("--format", p_format, "json | text");
  auto* audit = prove->add_subcommand("parity-audit",
                                      "Q-set rearrangement parity audit");
  audit->add_option("--scheme", p_scheme, "lead scheme id");
  audit->add_option("--group", p_group, "Sk | Ak | closure");
  audit->add_option("--gens", p_gens, "two cycle strings, ';'-separated");
  audit->add_option("--degree", p_degree, "degree");
  audit->add_option("--steps", p_steps, "number of random rearrangements");
  audit->add_option("--seed", p_seed, "trace RNG seed");
  audit->add_option("--format", p_format, "json | text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_what, gen_n, gen_comp, gen_format);
    if (val->parsed()) return cmd_validate(val_path, val_ruleset, val_format);
    if (search->parsed()) {
      if (ham->parsed())
        return cmd_search_hamiltonian(s_group, s_gens, s_degree, s_budget,
                                      s_workers, s_format);
      return cmd_search_longest(s_scheme, s_group, s_gens, s_degree, s_budget,
                                s_workers, s_format);
    }
    if (prove->parsed()) {
      if (rankin->parsed())
        return cmd_prove_rankin(p_group, p_gens, p_degree, p_format);
      if (feas->parsed())
        return cmd_prove_feasibility(p_scheme, p_budget, p_format);
      return cmd_prove_parity_audit(p_scheme, p_group, p_gens, p_degree,
                                    p_steps, p_seed, p_format);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
