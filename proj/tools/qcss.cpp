// Copyright 2026 The qcss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 usage or schema
// error, 3 invalid input or capability limit, 4 internal construction
// failure, 5 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcss/bounds.hpp"
#include "qcss/codec.hpp"
#include "qcss/codes.hpp"
#include "qcss/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qcss;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;
constexpr int kExitCheckFailed = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Output sink: stdout by default, or a file.
struct Sink {
  std::optional<std::ofstream> file;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.emplace(path);
      if (!*file) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& out() { return file ? *file : std::cout; }
};

std::vector<std::string> matrix_lines(const BinaryMatrix& m) {
  std::vector<std::string> out;
  for (const BitWord& r : m.rows()) out.push_back(r.str());
  return out;
}

LinearCode load_code(const std::string& name, const std::string& generator,
                     const std::string& check) {
  const int given = !name.empty() + !generator.empty() + !check.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --name, --generator, --check");
  }
  if (!name.empty()) {
    const auto c = zoo::find_code(name);
    if (!c) throw UsageError("unknown code name: " + name);
    return *c;
  }
  const std::string& path = generator.empty() ? check : generator;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read matrix file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const BinaryMatrix m = BinaryMatrix::parse(ss.str());
  return generator.empty() ? LinearCode::from_check(m)
                           : LinearCode::from_generator(m);
}

CssTriple load_triple(const std::string& scheme) {
  if (scheme == "steane" || scheme == "n7") return zoo::steane_triple();
  if (scheme == "n3") return zoo::three_qubit_triple();
  throw UsageError("unknown scheme (use steane or n3): " + scheme);
}

json code_json(const LinearCode& c) {
  return json{{"n", c.n()},
              {"k", c.k()},
              {"d", c.min_distance()},
              {"generator", matrix_lines(c.generator())},
              {"check", matrix_lines(c.check())}};
}

void emit_json(Sink& sink, const json& j) { sink.out() << j.dump(2) << "\n"; }

// "start:stop:count" inclusive grid, or a comma list of values.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  const auto colon = std::count(text.begin(), text.end(), ':');
  try {
    if (colon == 2) {
      const auto c1 = text.find(':');
      const auto c2 = text.find(':', c1 + 1);
      const double start = std::stod(text.substr(0, c1));
      const double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
      const int count = std::stoi(text.substr(c2 + 1));
      if (count < 1) throw UsageError("grid count must be >= 1");
      for (int i = 0; i < count; ++i) {
        out.push_back(count == 1 ? start
                                 : start + (stop - start) * i / (count - 1));
      }
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed grid: " + text);
  }
  if (out.empty()) throw UsageError("empty grid: " + text);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed integer list: " + text);
  }
  return out;
}

void state_csv(Sink& sink, const QuantumState& s, double tol) {
  auto& out = sink.out();
  out << "basis_index,word,re,im\n";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Amplitude a = s.amp(i);
    if (std::abs(a) <= tol) continue;
    out << i << ","
        << BitWord(static_cast<std::uint32_t>(i), s.total_qubits()).str()
        << "," << fmt(a.real()) << "," << fmt(a.imag()) << "\n";
  }
}

// ---- command implementations -------------------------------------------

int cmd_code_inspect(Sink& sink, const LinearCode& c) {
  emit_json(sink, code_json(c));
  return 0;
}

int cmd_code_css(Sink& sink, const std::string& scheme) {
  const CssTriple t = load_triple(scheme);
  const Encoder enc = build_encoder(t);
  json j{{"n", t.n()},
         {"logical_count", t.logical_count},
         {"d1", t.d1()},
         {"d2", t.d2()},
         {"c_plus", code_json(t.c_plus)},
         {"c", code_json(t.c)},
         {"c_perp", code_json(t.c_perp)},
         {"extra_rows", matrix_lines(t.extra_rows)},
         {"logical_positions", enc.logical_positions}};
  std::vector<std::string> offsets;
  for (const BitWord& o : enc.offsets) offsets.push_back(o.str());
  j["offsets"] = offsets;
  emit_json(sink, j);
  return 0;
}

int cmd_code_search(Sink& sink, int n, int k, int d, std::uint64_t seed,
                    int max_attempts) {
  const auto t = search_weakly_self_dual(n, k, d, seed, max_attempts);
  if (!t) {
    emit_json(sink, json{{"found", false},
                         {"n", n},
                         {"logical_count", k},
                         {"d_target", d},
                         {"seed", seed},
                         {"max_attempts", max_attempts}});
    return 0;
  }
  json j{{"found", true},
         {"n", t->n()},
         {"logical_count", t->logical_count},
         {"d1", t->d1()},
         {"d2", t->d2()},
         {"c_plus_generator", matrix_lines(t->c_plus.generator())},
         {"extra_rows", matrix_lines(t->extra_rows)}};
  emit_json(sink, j);
  return 0;
}

int cmd_state_dump(Sink& sink, const LinearCode& c, int basis, double tol) {
  QuantumState s = state_from_words(c.codewords());
  if (basis == 2) {
    std::vector<int> all(static_cast<std::size_t>(c.n()));
    for (int q = 0; q < c.n(); ++q) all[static_cast<std::size_t>(q)] = q;
    s = basis2_transform(s, all);
  }
  state_csv(sink, s, tol);
  return 0;
}

int cmd_state_support(Sink& sink, const LinearCode& c, double tol) {
  const QuantumState s = state_from_words(c.codewords());
  json words = json::array();
  for (const BitWord& w : support_in_basis2(s, tol)) words.push_back(w.str());
  emit_json(sink, json{{"n", c.n()}, {"tol", tol}, {"support", words}});
  return 0;
}

int cmd_codec_encode(Sink& sink, const std::string& scheme, double a_re,
                     double a_im, double b_re, double b_im, double tol) {
  const CssTriple t = load_triple(scheme);
  if (t.logical_count != 1) {
    throw UsageError("encode takes one logical qubit for this command");
  }
  const QuantumState s =
      encode(t, {Amplitude(a_re, a_im), Amplitude(b_re, b_im)});
  state_csv(sink, s, tol);
  return 0;
}

int cmd_codec_correct(Sink& sink, const std::string& scheme, int flip_qubit,
                      int flip_basis, const std::string& style_name) {
  const CssTriple t = load_triple(scheme);
  const Basis basis = flip_basis == 2 ? Basis::two : Basis::one;
  const CorrectorStyle style = style_name == "ancilla"
                                   ? CorrectorStyle::ancilla
                                   : CorrectorStyle::in_place;
  const Corrector corr = build_corrector(t, basis, style);
  const QuantumState clean = encode(t, {Amplitude(0.6), Amplitude(0.8)}, 0,
                                    corr.circuit.n_ancilla);
  QuantumState bad = clean;
  if (flip_qubit >= 0) {
    if (flip_qubit >= t.n()) throw UsageError("flip qubit outside the block");
    if (basis == Basis::two) {
      bad.apply_phase(flip_qubit, 1.0, -1.0);
    } else {
      bad.apply_not(flip_qubit);
    }
  }
  const auto branches = run_circuit(corr.circuit, bad);
  const auto outcomes = correction_outcomes(corr, branches);
  json syndromes = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    syndromes.push_back(json{{"weight", outcomes[i].weight},
                             {"syndrome", outcomes[i].syndrome.str()},
                             {"correction", outcomes[i].correction.str()}});
  }
  double fidelity = 0;
  for (const Branch& b : branches) {
    const double f = b.state.fidelity(clean);
    fidelity += b.weight * f * f;
  }
  emit_json(sink, json{{"scheme", scheme},
                       {"basis", flip_basis},
                       {"style", style_name},
                       {"flip_qubit", flip_qubit},
                       {"fidelity", fidelity},
                       {"syndromes", syndromes}});
  return 0;
}

int cmd_codec_theorem6(Sink& sink, const std::string& scheme,
                       const std::string& affected, std::uint64_t seed,
                       const std::string& style_name) {
  const CssTriple t = load_triple(scheme);
  const auto qubits = parse_int_list(affected);
  const CorrectorStyle style = style_name == "ancilla"
                                   ? CorrectorStyle::ancilla
                                   : CorrectorStyle::in_place;
  const DefectionSpec defect = DefectionSpec::random(qubits, seed);
  const RecoveryResult r =
      run_theorem6_recovery(t, {Amplitude(0.6), Amplitude(0.8)}, defect,
                            style);
  emit_json(sink, json{{"scheme", scheme},
                       {"affected", qubits},
                       {"seed", seed},
                       {"style", style_name},
                       {"fidelity", r.fidelity},
                       {"purity", r.purity}});
  return 0;
}

int cmd_alpha_sweep(Sink& sink, const std::string& sweep_scheme,
                    const std::string& eps_grid, double phi0, double phi1,
                    double phi2) {
  const auto grid = parse_grid(eps_grid);
  auto& out = sink.out();
  out << "eps,alpha_re,alpha_im,closed_form_re,closed_form_im\n";
  for (double eps : grid) {
    AlphaResult r = sweep_scheme == "n3-entangle"
                        ? run_purity_amplification(eps, eps, eps,
                                                   Amplitude(0.6),
                                                   Amplitude(0.8))
                        : run_phase_error_experiment(phi0, phi1, phi2, eps,
                                                     Amplitude(0.6),
                                                     Amplitude(0.8));
    out << fmt(eps) << "," << fmt(r.alpha.real()) << ","
        << fmt(r.alpha.imag()) << "," << fmt(r.alpha_closed_form.real())
        << "," << fmt(r.alpha_closed_form.imag()) << "\n";
  }
  return 0;
}

int cmd_bounds_curves(Sink& sink, const std::string& grid_text) {
  const auto rows = emit_rate_curves(parse_grid(grid_text));
  auto& out = sink.out();
  out << "d_over_n,upper,lower,classical\n";
  for (const auto& r : rows) {
    out << fmt(r.d_over_n) << "," << fmt(r.upper) << "," << fmt(r.lower)
        << "," << fmt(r.classical) << "\n";
  }
  return 0;
}

int cmd_bounds_survival(Sink& sink, long long n, double p, int d,
                        long long t) {
  const SurvivalReport r = survival(n, p, d, t);
  emit_json(sink, json{{"n", r.n},
                       {"p", r.p},
                       {"d", r.d},
                       {"T", r.t},
                       {"x", r.x},
                       {"mu", r.mu},
                       {"sigma", r.sigma},
                       {"f_exact", r.f_exact},
                       {"one_minus_f_exact", r.one_minus_f_exact},
                       {"f_erf", r.f_erf},
                       {"one_minus_f_erf", r.one_minus_f_erf},
                       {"p_exact", r.p_exact},
                       {"p_erf", r.p_erf}});
  return 0;
}

int cmd_bounds_threshold(Sink& sink) {
  const auto [lower, upper] = threshold_summary();
  emit_json(sink,
            json{{"achievable_below", lower}, {"impossible_above", upper}});
  return 0;
}

int cmd_reproduce(Sink& sink) {
  const auto results = qcss::verify::run_all_checks();
  auto& out = sink.out();
  int failures = 0;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    out << (r.pass ? "[PASS] " : "[FAIL] ") << index << " " << r.name << ": "
        << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  out << (static_cast<int>(results.size()) - failures) << "/"
      << results.size() << " checks passed\n";
  return failures == 0 ? 0 : kExitCheckFailed;
}

int run_manifest(const std::string& path);

// Shared by the direct subcommands and manifest dispatch.
struct Args {
  std::string name, generator, check;
  std::string scheme = "steane";
  std::string sweep_scheme = "n3-phase";
  std::string style = "in-place";
  std::string grid;
  std::string affected;
  std::string output;
  double tol = 1e-8;
  double a_re = 0.6, a_im = 0.0, b_re = 0.8, b_im = 0.0;
  double phi0 = 1.0, phi1 = 1.0, phi2 = 1.0;
  double p = 0.0;
  int basis = 1;
  int flip_qubit = -1;
  int n = 0, k = 1, d = 3;
  long long big_n = 0, big_t = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int max_attempts = 100000;
};

int dispatch(const std::string& command, const Args& a) {
  Sink sink(a.output);
  if (command == "code-inspect") {
    return cmd_code_inspect(sink, load_code(a.name, a.generator, a.check));
  }
  if (command == "code-dual") {
    return cmd_code_inspect(sink,
                            load_code(a.name, a.generator, a.check).dual());
  }
  if (command == "code-distance") {
    const LinearCode c = load_code(a.name, a.generator, a.check);
    emit_json(sink,
              json{{"n", c.n()}, {"k", c.k()}, {"d", c.min_distance()}});
    return 0;
  }
  if (command == "code-css") return cmd_code_css(sink, a.scheme);
  if (command == "code-search") {
    if (!a.seed_given) throw UsageError("code search requires --seed");
    return cmd_code_search(sink, a.n, a.k, a.d, a.seed, a.max_attempts);
  }
  if (command == "state-dump") {
    return cmd_state_dump(sink, load_code(a.name, a.generator, a.check),
                          a.basis, a.tol);
  }
  if (command == "state-support") {
    return cmd_state_support(sink, load_code(a.name, a.generator, a.check),
                             a.tol);
  }
  if (command == "codec-encode") {
    return cmd_codec_encode(sink, a.scheme, a.a_re, a.a_im, a.b_re, a.b_im,
                            a.tol);
  }
  if (command == "codec-correct") {
    return cmd_codec_correct(sink, a.scheme, a.flip_qubit, a.basis, a.style);
  }
  if (command == "codec-theorem6") {
    if (!a.seed_given) throw UsageError("codec theorem6 requires --seed");
    return cmd_codec_theorem6(sink, a.scheme, a.affected, a.seed, a.style);
  }
  if (command == "codec-alpha-sweep") {
    return cmd_alpha_sweep(sink, a.sweep_scheme, a.grid, a.phi0, a.phi1,
                           a.phi2);
  }
  if (command == "bounds-curves") return cmd_bounds_curves(sink, a.grid);
  if (command == "bounds-survival") {
    return cmd_bounds_survival(sink, a.big_n, a.p, a.d, a.big_t);
  }
  if (command == "bounds-threshold") return cmd_bounds_threshold(sink);
  if (command == "reproduce") return cmd_reproduce(sink);
  throw UsageError("unknown command: " + command);
}

int run_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read manifest: " + path);
  json m;
  try {
    m = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!m.is_object() || !m.contains("command") ||
      !m["command"].is_string()) {
    throw UsageError("manifest needs a string field \"command\"");
  }
  Args a;
  const json params = m.value("params", json::object());
  if (!params.is_object()) {
    throw UsageError("manifest \"params\" must be an object");
  }
  try {
    a.name = params.value("name", a.name);
    a.generator = params.value("generator", a.generator);
    a.check = params.value("check", a.check);
    a.scheme = params.value("scheme", a.scheme);
    a.sweep_scheme = params.value("sweep_scheme", a.sweep_scheme);
    a.style = params.value("style", a.style);
    a.grid = params.value("grid", a.grid);
    a.affected = params.value("affected", a.affected);
    a.tol = params.value("tol", a.tol);
    a.a_re = params.value("a_re", a.a_re);
    a.a_im = params.value("a_im", a.a_im);
    a.b_re = params.value("b_re", a.b_re);
    a.b_im = params.value("b_im", a.b_im);
    a.phi0 = params.value("phi0", a.phi0);
    a.phi1 = params.value("phi1", a.phi1);
    a.phi2 = params.value("phi2", a.phi2);
    a.p = params.value("p", a.p);
    a.basis = params.value("basis", a.basis);
    a.flip_qubit = params.value("flip_qubit", a.flip_qubit);
    a.n = params.value("n", a.n);
    a.k = params.value("k", a.k);
    a.d = params.value("d", a.d);
    a.big_n = params.value("n", static_cast<long long>(a.n));
    a.big_t = params.value("T", a.big_t);
    a.max_attempts = params.value("max_attempts", a.max_attempts);
  } catch (const json::type_error& e) {
    throw UsageError(std::string("manifest parameter has wrong type: ") +
                     e.what());
  }
  if (m.contains("seed")) {
    if (!m["seed"].is_number_unsigned() && !m["seed"].is_number_integer()) {
      throw UsageError("manifest \"seed\" must be an integer");
    }
    a.seed = m["seed"].get<std::uint64_t>();
    a.seed_given = true;
  }
  a.output = m.value("output", std::string{});
  return dispatch(m["command"].get<std::string>(), a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CSS code construction, simulation and bounds"};
  app.require_subcommand(1);
  Args a;
  std::string command;
  std::string manifest_path;

  auto add_code_input = [&](CLI::App* cmd) {
    cmd->add_option("--name", a.name, "code zoo name");
    cmd->add_option("--generator", a.generator, "generator matrix file");
    cmd->add_option("--check", a.check, "check matrix file");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", a.output, "write to file instead of stdout");
  };
  auto bind = [&](CLI::App* cmd, const std::string& name) {
    cmd->callback([&command, name] { command = name; });
  };

  CLI::App* code = app.add_subcommand("code", "classical code operations");
  code->require_subcommand(1);
  for (const char* sub : {"inspect", "dual", "distance"}) {
    CLI::App* c = code->add_subcommand(sub);
    add_code_input(c);
    add_output(c);
    bind(c, std::string("code-") + sub);
  }
  {
    CLI::App* c = code->add_subcommand("css", "describe a code triple");
    c->add_option("--scheme", a.scheme, "steane or n3");
    add_output(c);
    bind(c, "code-css");
  }
  {
    CLI::App* c = code->add_subcommand("search", "random triple search");
    c->add_option("--n", a.n, "block length")->required();
    c->add_option("--k", a.k, "logical qubit count");
    c->add_option("--d", a.d, "distance target");
    c->add_option("--seed", a.seed)->required();
    c->add_option("--max-attempts", a.max_attempts);
    add_output(c);
    c->callback([&] {
      command = "code-search";
      a.seed_given = true;
    });
  }

  CLI::App* state = app.add_subcommand("state", "state inspection");
  state->require_subcommand(1);
  {
    CLI::App* c = state->add_subcommand("dump", "amplitudes of the uniform "
                                                "code superposition");
    add_code_input(c);
    c->add_option("--basis", a.basis, "1 or 2")->check(CLI::Range(1, 2));
    c->add_option("--tol", a.tol);
    add_output(c);
    bind(c, "state-dump");
  }
  {
    CLI::App* c = state->add_subcommand("support", "basis-2 support words");
    add_code_input(c);
    c->add_option("--tol", a.tol);
    add_output(c);
    bind(c, "state-support");
  }

  CLI::App* codec = app.add_subcommand("codec", "encode, correct, recover");
  codec->require_subcommand(1);
  {
    CLI::App* c = codec->add_subcommand("encode");
    c->add_option("--scheme", a.scheme, "steane or n3");
    c->add_option("--a-re", a.a_re);
    c->add_option("--a-im", a.a_im);
    c->add_option("--b-re", a.b_re);
    c->add_option("--b-im", a.b_im);
    c->add_option("--tol", a.tol);
    add_output(c);
    bind(c, "codec-encode");
  }
  {
    CLI::App* c = codec->add_subcommand("correct", "flip one qubit and "
                                                   "run a corrector");
    c->add_option("--scheme", a.scheme, "steane or n3");
    c->add_option("--flip-qubit", a.flip_qubit, "-1 for no error");
    c->add_option("--basis", a.basis, "1 or 2")->check(CLI::Range(1, 2));
    c->add_option("--style", a.style, "in-place or ancilla");
    add_output(c);
    bind(c, "codec-correct");
  }
  {
    CLI::App* c = codec->add_subcommand("theorem6", "end-to-end recovery "
                                                    "from a seeded defection");
    c->add_option("--scheme", a.scheme, "steane or n3");
    c->add_option("--affected", a.affected, "comma list of qubits")
        ->required();
    c->add_option("--seed", a.seed)->required();
    c->add_option("--style", a.style, "in-place or ancilla");
    add_output(c);
    c->callback([&] {
      command = "codec-theorem6";
      a.seed_given = true;
    });
  }
  {
    CLI::App* c = codec->add_subcommand("alpha-sweep", "coherence factor "
                                                       "over a strength grid");
    c->add_option("--scheme", a.sweep_scheme, "n3-phase or n3-entangle");
    c->add_option("--eps-grid", a.grid, "start:stop:count or comma list")
        ->required();
    c->add_option("--phi0", a.phi0);
    c->add_option("--phi1", a.phi1);
    c->add_option("--phi2", a.phi2);
    add_output(c);
    bind(c, "codec-alpha-sweep");
  }

  CLI::App* bounds = app.add_subcommand("bounds", "rate and survival bounds");
  bounds->require_subcommand(1);
  {
    CLI::App* c = bounds->add_subcommand("curves");
    c->add_option("--grid", a.grid, "start:stop:count or comma list")
        ->required();
    add_output(c);
    bind(c, "bounds-curves");
  }
  {
    CLI::App* c = bounds->add_subcommand("survival");
    c->add_option("--n", a.big_n)->required();
    c->add_option("--p", a.p)->required();
    c->add_option("--d", a.d)->required();
    c->add_option("--T", a.big_t)->required();
    add_output(c);
    bind(c, "bounds-survival");
  }
  {
    CLI::App* c = bounds->add_subcommand("threshold");
    add_output(c);
    bind(c, "bounds-threshold");
  }

  {
    CLI::App* c = app.add_subcommand("reproduce", "run the verification "
                                                  "battery");
    c->add_flag("--all", "run every check (the default)");
    add_output(c);
    bind(c, "reproduce");
  }
  {
    CLI::App* c = app.add_subcommand("run", "execute a JSON manifest");
    c->add_option("--manifest", manifest_path)->required();
    bind(c, "manifest");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (command == "manifest") return run_manifest(manifest_path);
    return dispatch(command, a);
  } catch (const UsageError& e) {
    std::cerr << "error (usage): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (invalid input): " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "error (construction): " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
