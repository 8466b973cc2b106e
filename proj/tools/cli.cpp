#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "ptri/engine.hpp"
#include "ptri/error.hpp"
#include "ptri/format.hpp"
#include "ptri/laws.hpp"
#include "ptri/operators.hpp"
#include "ptri/prob_oracle.hpp"
#include "ptri/rule_lang.hpp"

namespace ptri::cli {

namespace {

// Thrown by subcommand handlers; carries the exit status.
struct Exit {
  int code;
};

[[noreturn]] void input_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  throw Exit{kInputError};
}

Interval interval_arg(std::ostream& err, const std::string& text) {
  try {
    return parse_interval(text);
  } catch (const Error& e) {
    input_error(err, "bad interval '" + text + "': " + e.what());
  }
}

std::string read_file(std::ostream& err, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error(err, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load_program(std::ostream& err, const std::string& path) {
  const std::string text = read_file(err, path);
  try {
    return parse_program(text);
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) err << path << ":" << to_string(d) << "\n";
    throw Exit{kInputError};
  }
}

EngineConfig load_config(std::ostream& err, const std::vector<std::string>& settings) {
  EngineConfig cfg;
  for (const auto& s : settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) input_error(err, "--config expects key=value, got '" + s + "'");
    try {
      set_config_option(cfg, s.substr(0, eq), s.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      input_error(err, e.what());
    }
  }
  return cfg;
}

// Runs f, turning engine failures into exit status 3.
template <class F>
void semantic(std::ostream& err, F&& f) {
  try {
    f();
  } catch (const IndecisionError& e) {
    err << "indecision at " << (e.atom().empty() ? "?" : e.atom()) << ": " << e.what() << "\n";
    throw Exit{kSemanticError};
  } catch (const InconsistentError& e) {
    err << "inconsistent evidence at " << (e.atom().empty() ? "?" : e.atom()) << ": " << e.what()
        << "\n";
    throw Exit{kSemanticError};
  } catch (const NonConvergenceError& e) {
    err << "no convergence at " << e.atom() << ": " << e.what() << "\n";
    throw Exit{kSemanticError};
  } catch (const StratificationError& e) {
    err << "stratification: " << e.what() << "\n";
    throw Exit{kSemanticError};
  }
}

void cmd_compare(std::ostream& out, std::ostream& err, const std::string& ord, const std::string& xs,
                 const std::string& ys) {
  const Interval x = interval_arg(err, xs);
  const Interval y = interval_arg(err, ys);
  Ordering o = Ordering::Truth;
  if (ord == "tp") {
    o = Ordering::TruthPreorder;
  } else if (ord == "kp") {
    o = Ordering::KnowledgePreorder;
  } else if (ord == "k") {
    o = Ordering::Knowledge;
  }
  out << to_string(compare(o, x, y)) << "\n";
  if (o == Ordering::TruthPreorder || o == Ordering::KnowledgePreorder) {
    out << "x: midpoint=" << format_number(x.midpoint()) << " width=" << format_number(x.width()) << "\n";
    out << "y: midpoint=" << format_number(y.midpoint()) << " width=" << format_number(y.width()) << "\n";
  }
}

void cmd_run(std::ostream& out, std::ostream& err, const std::string& path, bool json,
             const std::vector<std::string>& settings) {
  const EngineConfig cfg = load_config(err, settings);
  const Program p = load_program(err, path);
  Valuation v;
  semantic(err, [&] { v = solve(p, cfg); });
  if (json) {
    out << format_valuation_json(v) << "\n";
  } else {
    out << format_valuation_text(v);
  }
}

void cmd_closure(std::ostream& out, std::ostream& err, const std::string& path, const std::string& atom_text,
                 const std::vector<std::string>& settings) {
  const EngineConfig cfg = load_config(err, settings);
  const Program p = load_program(err, path);
  Atom q;
  try {
    q = parse_atom(atom_text);
  } catch (const ParseError& e) {
    input_error(err, "bad atom '" + atom_text + "': " + e.what());
  }
  semantic(err, [&] {
    const Valuation v = solve(p, cfg);
    Interval pos = Interval::unknown();
    Interval neg = Interval::unknown();
    try {
      pos = cl_plus(p, v, q, cfg);
      neg = cl_minus(p, v, q, cfg);
    } catch (const InconsistentError& e) {
      throw InconsistentError(e.what(), q.text());
    }
    out << "cl+: " << to_string(pos) << "\n";
    out << "cl-: " << to_string(neg) << "\n";
    try {
      out << "combined: " << to_string(combine_evidence(pos, neg, cfg.epsilon)) << "\n";
    } catch (const IndecisionError& e) {
      throw IndecisionError(e.what(), e.tied(), q.text());
    }
  });
}

void cmd_oracle(std::ostream& out, std::ostream& err, const std::string& xs, const std::string& ys,
                std::uint64_t mc, std::uint64_t seed) {
  const Interval x = interval_arg(err, xs);
  const Interval y = interval_arg(err, ys);
  const StochasticVerdict s = stochastic_compare(x, y);
  out << "p_leq=" << format_number(s.p_leq) << "\n";
  out << "p_geq=" << format_number(s.p_geq) << "\n";
  out << "order=" << to_string(s.order) << "\n";
  out << "theorem1=" << (verify_theorem1(x, y) ? "OK" : "MISMATCH") << "\n";
  if (mc > 0) {
    out << "p_leq_mc=" << format_number(prob_leq_mc(x, y, mc, seed)) << " n=" << mc << " seed=" << seed
        << " rng=" << kMonteCarloGenerator << "\n";
  }
}

void cmd_laws(std::ostream& out, std::ostream& err, double step) {
  if (!(step > 0.0 && step <= 0.5)) input_error(err, "--step must lie in (0, 0.5], got " + format_number(step));
  const auto results = run_law_suite(step);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failed = 0;
  const LawResult* first = nullptr;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << r.name
        << "  checked=" << r.checked << " failed=" << r.failed << "\n";
    if (!r.ok()) {
      ++failed;
      if (!first) first = &r;
    }
  }
  out << "laws: " << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed
      << " failed (grid " << interval_grid(step).size() << " intervals)\n";
  if (first) {
    err << "counterexample for " << first->name << ": " << first->counterexample.value_or("?") << "\n";
    throw Exit{kLawFailure};
  }
}

void cmd_apply(std::ostream& out, std::ostream& err, const std::string& op_name, const std::string& xs,
               const std::optional<std::string>& ys) {
  const auto id = parse_operator_id(op_name);
  if (!id) input_error(err, "unknown operator '" + op_name + "'");
  const Interval x = interval_arg(err, xs);
  if (!is_binary(*id)) {
    if (ys) input_error(err, op_name + " takes one interval");
    out << to_string(negate_standard(x)) << "\n";
    return;
  }
  if (!ys) input_error(err, op_name + " takes two intervals");
  const Interval y = interval_arg(err, *ys);
  if (*id == OperatorId::IMin) {
    out << to_string(r_implicator_min(x, y)) << "\n";
  } else if (*id == OperatorId::IPr) {
    out << to_string(r_implicator_pr(x, y)) << "\n";
  } else {
    out << to_string(binary_operator(*id)(x, y)) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval truth values under the preorder-based triangle"};
  app.name("ptri");
  app.require_subcommand(1);

  std::string ord, x, y, path, atom, op;
  std::vector<std::string> settings;
  std::optional<std::string> second;
  bool json = false;
  std::uint64_t mc = 0;
  std::uint64_t seed = 1;
  double step = 0.05;

  auto* compare = app.add_subcommand("compare", "Compare two intervals under t, k, tp or kp");
  compare->add_option("ordering", ord, "t, k, tp or kp")->required()->check(CLI::IsMember({"t", "k", "tp", "kp"}));
  compare->add_option("x", x)->required();
  compare->add_option("y", y)->required();

  auto* run_cmd = app.add_subcommand("run", "Evaluate a rule program and print the belief set");
  run_cmd->add_option("program", path, ".pre file")->required();
  run_cmd->add_flag("--json", json, "Emit a JSON object");
  run_cmd->add_option("--config", settings, "Engine setting key=value (repeatable)");

  auto* closure = app.add_subcommand("closure", "Show cl+, cl- and their combination for one atom");
  closure->add_option("program", path, ".pre file")->required();
  closure->add_option("atom", atom)->required();
  closure->add_option("--config", settings, "Engine setting key=value (repeatable)");

  auto* oracle = app.add_subcommand("oracle", "Probability that a uniform draw from x is <= one from y");
  oracle->add_option("x", x)->required();
  oracle->add_option("y", y)->required();
  oracle->add_option("--mc", mc, "Monte Carlo samples (0 = off)");
  oracle->add_option("--seed", seed, "Monte Carlo seed");

  auto* laws = app.add_subcommand("laws", "Check the algebraic laws over an interval grid");
  laws->add_option("--step", step, "Grid step in (0, 0.5]");

  auto* apply = app.add_subcommand("apply", "Apply an operator: neg x | <binary op> x y");
  apply->add_option("operator", op)->required();
  apply->add_option("x", x)->required();
  apply->add_option("y", second);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*compare) {
      cmd_compare(out, err, ord, x, y);
    } else if (*run_cmd) {
      cmd_run(out, err, path, json, settings);
    } else if (*closure) {
      cmd_closure(out, err, path, atom, settings);
    } else if (*oracle) {
      cmd_oracle(out, err, x, y, mc, seed);
    } else if (*laws) {
      cmd_laws(out, err, step);
    } else if (*apply) {
      cmd_apply(out, err, op, x, second);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kOk;
}

}  // namespace ptri::cli
