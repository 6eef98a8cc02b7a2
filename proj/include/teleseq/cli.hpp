#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "teleseq/serialize.hpp"
#include "teleseq/teleseq.hpp"

// Single-binary command surface. Sequences travel as comma-separated
// base-10 integers; --json switches every subcommand to a machine-readable
// report with stable field names and all integers as decimal strings.
// Exit codes: 0 success, 1 domain error (named after the failing module
// check), 2 usage error.

namespace teleseq::cli {

inline constexpr std::size_t kDefaultAperyPrintCap = 10000;

// The uniform machine-readable report: input echo, operation name,
// operation-specific result payload, diagnostics. Field names are stable.
struct CliReport {
  std::string operation;
  json input = json::object();
  json result = json::object();
  std::vector<std::string> diagnostics;

  json to_json() const {
    return json{{"operation", operation},
                {"input", input},
                {"result", result},
                {"diagnostics", diagnostics}};
  }
};

namespace detail {

inline std::vector<Int> parse_int_list(const std::string& text,
                                       const char* what) {
  if (text.empty()) return {};
  try {
    Sequence parsed = Sequence::parse(text);
    return parsed.terms();
  } catch (const Error&) {
    throw Error("ParseError", std::string("malformed ") + what +
                                  ": expected comma-separated integers");
  }
}

inline Int parse_int(const std::string& text, const char* what) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("ParseError",
                std::string("malformed ") + what + ": expected an integer");
  }
  return Int(text);
}

inline std::size_t parse_index(const std::string& text, const char* what) {
  Int n = parse_int(text, what);
  if (n < 1 || n > Int(1u << 30)) {
    throw Error("ParseError",
                std::string(what) + " index out of range: " + n.str());
  }
  return static_cast<std::size_t>(n);
}

inline std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].str();
  }
  return out;
}

// Normalizes the head for profile-dependent subcommands, recording the
// swap as a diagnostic.
inline Sequence normalized_input(const Sequence& g, CliReport& report) {
  Sequence n = normalize_head(g);
  if (!(n == g)) {
    report.diagnostics.push_back("head normalized: " + g.str() + " -> " +
                                 n.str());
  }
  return n;
}

inline void emit(const CliReport& report, bool as_json, std::ostream& out,
                 const std::string& text) {
  if (as_json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << text;
    for (const std::string& d : report.diagnostics) {
      out << "note: " << d << "\n";
    }
  }
}

inline int run_analyze(const std::string& seq_text, bool as_json,
                       std::size_t apery_cap, std::ostream& out) {
  CliReport report;
  report.operation = "analyze";
  report.input = json{{"sequence", seq_text}};
  Sequence g = normalized_input(Sequence::parse(seq_text), report);

  GcdProfile p = gcd_profile(g);
  TelescopyResult tele = is_telescopic_witness(g);
  std::optional<ZDecomposition> zd;
  if (tele.telescopic) zd = z_decompose(g);
  Sequence generators = minimal_generators(g);
  bool minimal = is_minimal_bf(g);

  json result;
  result["sequence"] = to_json(g);
  result["k"] = g.size();
  result["gcd"] = to_json(p.gcd);
  result["d"] = to_json(p.d);
  result["c"] = to_json(p.c);
  result["telescopic"] = tele.telescopic;
  result["witness"] = tele.telescopic ? json(nullptr) : json(tele.witness);
  result["z"] = zd ? to_json(*zd) : json(nullptr);
  result["minimal"] = minimal;
  result["minimal_generators"] = to_json(generators);
  result["embedding_dimension"] = generators.size();

  std::ostringstream text;
  text << "sequence: " << g.str() << "\n";
  text << "k: " << g.size() << "\n";
  text << "gcd: " << p.gcd.str() << "\n";
  text << "d: " << join(p.d) << "\n";
  text << "c: " << join(p.c) << "\n";
  if (zd) {
    text << "telescopic: yes\n";
    text << "z: " << join(zd->z) << "\n";
  } else {
    text << "telescopic: no (witness j=" << tele.witness << ")\n";
  }
  text << "minimal: " << (minimal ? "yes" : "no") << "\n";
  text << "minimal_generators: " << generators.str() << "\n";
  text << "embedding_dimension: " << generators.size() << "\n";

  if (p.gcd == 1) {
    Int frobenius, genus;
    std::vector<Int> apery;
    std::string method;
    if (tele.telescopic && g.term(1) <= Int(kDefaultAperyCap)) {
      frobenius = frobenius_closed(g);
      genus = genus_closed(g);
      apery = apery_closed(g);
      method = "closed-form";
    } else {
      MonoidSummary s = gaps(g);
      frobenius = s.frobenius;
      genus = s.genus;
      apery = apery_bf(g, g.term(1));
      std::sort(apery.begin(), apery.end());
      method = "brute-force";
    }
    bool truncated = apery.size() > apery_cap;
    if (truncated) apery.resize(apery_cap);
    json semigroup;
    semigroup["frobenius"] = to_json(frobenius);
    semigroup["genus"] = to_json(genus);
    semigroup["apery"] = json{{"t", to_json(g.term(1))},
                              {"values", to_json(apery)},
                              {"truncated", truncated},
                              {"method", method}};
    result["semigroup"] = semigroup;
    text << "frobenius: " << frobenius.str() << "\n";
    text << "genus: " << genus.str() << "\n";
    text << "apery (t=" << g.term(1).str() << ", " << method
         << "): " << join(apery) << (truncated ? " [truncated]" : "") << "\n";
  } else {
    result["semigroup"] = nullptr;
  }

  report.result = std::move(result);
  emit(report, as_json, out, text.str());
  return 0;
}

inline int run_minimize(const std::string& seq_text, bool as_json,
                        std::ostream& out) {
  CliReport report;
  report.operation = "minimize";
  report.input = json{{"sequence", seq_text}};
  Sequence g = normalized_input(Sequence::parse(seq_text), report);
  auto [reduced, trace] = minimize_telescopic(g);

  report.result = json{{"sequence", to_json(reduced)},
                       {"trace", to_json(trace)},
                       {"steps", trace.size()}};

  std::ostringstream text;
  text << reduced.str() << "\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const ReductionStep& step = trace[i];
    text << "step " << (i + 1) << ": case "
         << (step.witness.which == RedundancyWitness::Case::One ? "1" : "2")
         << " n=" << step.witness.n;
    if (step.witness.m) text << " m=" << *step.witness.m;
    text << ": " << step.before.str() << " -> " << step.after.str() << "\n";
  }
  emit(report, as_json, out, text.str());
  return 0;
}

inline int run_construct(const std::string& d_text, const std::string& c_text,
                         const std::string& z_text, bool require_minimal,
                         bool as_json, std::ostream& out) {
  CliReport report;
  report.operation = "construct";
  report.input = json{{"d", d_text}, {"c", c_text}, {"z", z_text}};

  ConstructionRequest req;
  req.d = parse_int(d_text, "--d");
  req.c = parse_int_list(c_text, "--c");
  req.z = parse_int_list(z_text, "--z");
  // tolerate a z list that echoes z_1 = d in front
  if (req.z.size() == req.c.size() + 1 && !req.z.empty() &&
      req.z.front() == req.d) {
    req.z.erase(req.z.begin());
    report.diagnostics.push_back("leading z_1 = d dropped from --z");
  }
  if (req.z.size() != req.c.size()) {
    throw Error("ParseError",
                "--z must list z_2..z_k (one entry per c-value)");
  }

  Sequence g = build(req);
  MinimalityCheck check = validate_minimal(req);
  if (require_minimal && !check.minimal) {
    throw Error("NotMinimal",
                "constructed sequence is not minimal: " + check.violation);
  }

  report.result = json{{"sequence", to_json(g)},
                       {"minimal", check.minimal},
                       {"violation", check.minimal ? json(nullptr)
                                                   : json(check.violation)}};
  std::ostringstream text;
  text << g.str() << "\n";
  text << "minimal: " << (check.minimal ? "yes" : "no")
       << (check.minimal ? "" : " (" + check.violation + ")") << "\n";
  emit(report, as_json, out, text.str());
  return 0;
}

inline int run_family(const std::string& geometric,
                      const std::string& supersymmetric,
                      const std::string& compound, bool as_json,
                      std::ostream& out) {
  CliReport report;
  report.operation = "family";
  FamilySpec spec = GeometricFamily{1, 1, 1};
  if (!geometric.empty()) {
    report.input = json{{"geometric", geometric}};
    std::vector<Int> parts = parse_int_list(geometric, "--geometric");
    if (parts.size() != 3 || parts[2] < 1 || parts[2] > Int(1u << 20)) {
      throw Error("ParseError", "--geometric expects a,b,k");
    }
    spec = GeometricFamily{parts[0], parts[1],
                           static_cast<std::size_t>(parts[2])};
  } else if (!supersymmetric.empty()) {
    report.input = json{{"supersymmetric", supersymmetric}};
    spec = SupersymmetricFamily{parse_int_list(supersymmetric,
                                               "--supersymmetric")};
  } else if (!compound.empty()) {
    report.input = json{{"compound", compound}};
    std::size_t semi = compound.find(';');
    if (semi == std::string::npos) {
      throw Error("ParseError", "--compound expects ALIST;BLIST");
    }
    spec = CompoundFamily{
        parse_int_list(compound.substr(0, semi), "--compound a-list"),
        parse_int_list(compound.substr(semi + 1), "--compound b-list")};
  } else {
    throw Error("ParseError",
                "family needs one of --geometric, --supersymmetric, "
                "--compound");
  }

  Sequence g = family(spec);
  report.result = json{{"sequence", to_json(g)}};
  emit(report, as_json, out, g.str() + "\n");
  return 0;
}

inline int run_transform(const std::string& seq_text,
                         const std::string& program_file,
                         const std::string& rho_arg,
                         const std::string& tau_arg,
                         const std::string& pi_arg, bool with_trace,
                         bool as_json, std::ostream& out) {
  CliReport report;
  report.operation = "transform";
  report.input = json{{"sequence", seq_text}};
  Sequence g = Sequence::parse(seq_text);

  TransformProgram prog;
  int chosen = (!program_file.empty()) + (!rho_arg.empty()) +
               (!tau_arg.empty()) + (!pi_arg.empty());
  if (chosen != 1) {
    throw Error("ParseError",
                "transform needs exactly one of --program, --rho, --tau, "
                "--pi");
  }
  if (!program_file.empty()) {
    std::ifstream in(program_file);
    if (!in) {
      throw Error("ParseError", "cannot open program file " + program_file);
    }
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) {
      throw Error("ParseError", "program file is not valid JSON");
    }
    prog = program_from_json(j);
    report.input["program"] = program_file;
  } else if (!rho_arg.empty()) {
    prog.steps.push_back(RhoStep{parse_index(rho_arg, "--rho")});
    report.input["rho"] = rho_arg;
  } else if (!pi_arg.empty()) {
    prog.steps.push_back(PiStep{parse_index(pi_arg, "--pi")});
    report.input["pi"] = pi_arg;
  } else {
    std::vector<Int> parts = parse_int_list(tau_arg, "--tau");
    if (parts.size() != 2) {
      throw Error("ParseError", "--tau expects G,M");
    }
    prog.steps.push_back(TauStep{parts[0], parts[1]});
    report.input["tau"] = tau_arg;
  }

  std::ostringstream text;
  if (with_trace) {
    std::vector<Sequence> trace = apply_program_trace(g, prog);
    json jtrace = json::array();
    for (const Sequence& s : trace) jtrace.push_back(to_json(s));
    report.result = json{{"sequence", to_json(trace.back())},
                         {"trace", jtrace}};
    text << trace.back().str() << "\n";
    for (const Sequence& s : trace) text << "  " << s.str() << "\n";
  } else {
    Sequence result = apply_program(g, prog);
    report.result =
        json{{"sequence", to_json(result)}, {"trace", json(nullptr)}};
    text << result.str() << "\n";
  }
  emit(report, as_json, out, text.str());
  return 0;
}

inline int run_morph(const std::string& from_text, const std::string& to_text,
                     bool as_json, std::ostream& out) {
  CliReport report;
  report.operation = "morph";
  report.input = json{{"source", from_text}, {"target", to_text}};
  Sequence g = Sequence::parse(from_text);
  Sequence h = Sequence::parse(to_text);
  TransformProgram prog = morph(g, h);
  report.result = json{{"program", to_json(prog)},
                       {"source_gcd", to_json(prog.source_gcd)}};
  emit(report, as_json, out, to_json(prog).dump() + "\n");
  return 0;
}

inline int run_verify(const std::string& seq_text, const std::string& poly,
                      const std::string& t_text, bool as_json,
                      std::ostream& out) {
  CliReport report;
  report.operation = "verify";
  report.input = json{{"sequence", seq_text},
                      {"poly", poly},
                      {"t", t_text.empty() ? json(nullptr) : json(t_text)}};
  Sequence g = normalized_input(Sequence::parse(seq_text), report);
  IntPolynomial f = IntPolynomial::parse(poly);
  Int t = t_text.empty() ? g.term(1) : parse_int(t_text, "--t");

  MonoidSummary s = gaps(g);  // requires gcd 1; errors propagate
  std::vector<Int> bf = apery_bf(g, g.term(1));
  std::sort(bf.begin(), bf.end());

  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;
  checks.push_back({"apery", apery_closed(g) == bf, ""});
  Int fc = frobenius_closed(g);
  checks.push_back({"frobenius", fc == s.frobenius,
                    fc.str() + " vs " + s.frobenius.str()});
  Int gc = genus_closed(g);
  checks.push_back({"genus", gc == s.genus, gc.str() + " vs " + s.genus.str()});
  checks.push_back({"symmetry", fc == 2 * gc - 1, ""});
  auto [t_lhs, t_rhs] = tuenter_check(g, t, f);
  checks.push_back(
      {"tuenter", t_lhs == t_rhs, t_lhs.str() + " vs " + t_rhs.str()});
  auto [e_lhs, e_rhs] = gap_identity_check(g, f);
  checks.push_back(
      {"gap_identity", e_lhs == e_rhs, e_lhs.str() + " vs " + e_rhs.str()});

  bool all_pass = true;
  json jchecks = json::array();
  std::ostringstream text;
  for (const Check& c : checks) {
    all_pass = all_pass && c.pass;
    jchecks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    text << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) text << " (" << c.detail << ")";
    text << "\n";
  }
  report.result = json{{"checks", jchecks}, {"all_pass", all_pass}};
  emit(report, as_json, out, text.str());
  return all_pass ? 0 : 1;
}

inline int run_enumerate(const std::string& d_text, const std::string& c_text,
                         const std::string& bound_text, bool minimal_only,
                         std::size_t limit, bool as_json, std::ostream& out) {
  CliReport report;
  report.operation = "enumerate";
  report.input = json{{"d", d_text},
                      {"c", c_text},
                      {"z_bound", bound_text},
                      {"minimal_only", minimal_only},
                      {"limit", limit}};
  Int d = parse_int(d_text, "--d");
  std::vector<Int> c = parse_int_list(c_text, "--c");
  Int bound = parse_int(bound_text, "--z-bound");

  TelescopicEnumerator en(d, c, bound, minimal_only);
  std::vector<Sequence> found = en.collect(limit);

  json jseqs = json::array();
  std::ostringstream text;
  for (const Sequence& s : found) {
    jseqs.push_back(to_json(s));
    text << s.str() << "\n";
  }
  report.result = json{{"sequences", jseqs}, {"count", found.size()}};
  emit(report, as_json, out, text.str());
  return 0;
}

}  // namespace detail

// Parses argv (program name excluded) and executes one subcommand.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact-integer calculus of telescopic sequences and free "
               "numerical semigroups"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string seq_text, seq2_text;
  std::string d_text, c_text, z_text, bound_text;
  std::string geometric, supersymmetric, compound;
  std::string program_file, rho_arg, tau_arg, pi_arg;
  std::string poly = "0,1", t_text;
  bool require_minimal = false, minimal_only = false, with_trace = false;
  std::size_t apery_cap = kDefaultAperyPrintCap;
  std::size_t limit = 0;

  auto* analyze = app.add_subcommand(
      "analyze", "gcd profile, telescopy, minimality, semigroup data");
  analyze->add_option("sequence", seq_text, "comma-separated terms")
      ->required();
  analyze->add_flag("--json", as_json, "machine-readable output");
  analyze->add_option("--apery-cap", apery_cap,
                      "max Apery values to print (default 10000)");

  auto* minimize = app.add_subcommand(
      "minimize", "reduce a telescopic sequence to a minimal one");
  minimize->add_option("sequence", seq_text, "comma-separated terms")
      ->required();
  minimize->add_flag("--json", as_json, "machine-readable output");

  auto* construct = app.add_subcommand(
      "construct", "build a telescopic sequence from d, c, z data");
  construct->add_option("--d", d_text, "gcd of the sequence")->required();
  construct->add_option("--c", c_text, "c-values c_2..c_k");
  construct->add_option("--z", z_text, "z-values z_2..z_k");
  construct->add_flag("--require-minimal", require_minimal,
                      "fail unless the result is minimal");
  construct->add_flag("--json", as_json, "machine-readable output");

  auto* fam = app.add_subcommand("family",
                                 "geometric, supersymmetric or compound "
                                 "telescopic sequences");
  fam->add_option("--geometric", geometric, "a,b,k");
  fam->add_option("--supersymmetric", supersymmetric,
                  "pairwise coprime a_1,..,a_k");
  fam->add_option("--compound", compound, "a-list;b-list");
  fam->add_flag("--json", as_json, "machine-readable output");

  auto* transform = app.add_subcommand(
      "transform", "apply one step or a JSON program file");
  transform->add_option("sequence", seq_text, "comma-separated terms")
      ->required();
  transform->add_option("--program", program_file, "JSON step-array file");
  transform->add_option("--rho", rho_arg, "contract at index N");
  transform->add_option("--tau", tau_arg, "glue G,M");
  transform->add_option("--pi", pi_arg, "delete term N");
  transform->add_flag("--trace", with_trace, "print every intermediate");
  transform->add_flag("--json", as_json, "machine-readable output");

  auto* morph_cmd = app.add_subcommand(
      "morph", "program mapping one telescopic sequence to another");
  morph_cmd->add_option("source", seq_text, "comma-separated terms")
      ->required();
  morph_cmd->add_option("target", seq2_text, "comma-separated terms")
      ->required();
  morph_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand(
      "verify", "cross-check closed forms against the brute-force oracles");
  verify->add_option("sequence", seq_text, "comma-separated terms")
      ->required();
  verify->add_option("--poly", poly,
                     "polynomial coefficients, constant first (default 0,1)");
  verify->add_option("--t", t_text, "Apery reference element (default g_1)");
  verify->add_flag("--json", as_json, "machine-readable output");

  auto* enumerate = app.add_subcommand(
      "enumerate", "all telescopic sequences with given d, c and z-bound");
  enumerate->add_option("--d", d_text, "gcd of the sequences")->required();
  enumerate->add_option("--c", c_text, "c-values c_2..c_k");
  enumerate->add_option("--z-bound", bound_text, "upper bound for z-values")
      ->required();
  enumerate->add_flag("--minimal-only", minimal_only,
                      "emit only minimal sequences");
  enumerate->add_option("--limit", limit, "stop after N sequences");
  enumerate->add_flag("--json", as_json, "machine-readable output");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      return detail::run_analyze(seq_text, as_json, apery_cap, out);
    }
    if (minimize->parsed()) {
      return detail::run_minimize(seq_text, as_json, out);
    }
    if (construct->parsed()) {
      return detail::run_construct(d_text, c_text, z_text, require_minimal,
                                   as_json, out);
    }
    if (fam->parsed()) {
      return detail::run_family(geometric, supersymmetric, compound, as_json,
                                out);
    }
    if (transform->parsed()) {
      return detail::run_transform(seq_text, program_file, rho_arg, tau_arg,
                                   pi_arg, with_trace, as_json, out);
    }
    if (morph_cmd->parsed()) {
      return detail::run_morph(seq_text, seq2_text, as_json, out);
    }
    if (verify->parsed()) {
      return detail::run_verify(seq_text, poly, t_text, as_json, out);
    }
    if (enumerate->parsed()) {
      return detail::run_enumerate(d_text, c_text, bound_text, minimal_only,
                                   limit, as_json, out);
    }
  } catch (const Error& e) {
    if (as_json) {
      json report{{"error", json{{"name", e.name()}, {"message", e.what()}}}};
      out << report.dump(2) << "\n";
    }
    err << e.name() << ": " << e.what() << "\n";
    return e.name() == "ParseError" ? 2 : 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace teleseq::cli
