#include "parabolica_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "parabolica/corpus.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/report.hpp"
#include "parabolica/svg.hpp"
#include "parabolica/text.hpp"

namespace parabolica::cli {

namespace {

struct InputError {
  std::string message;
};

struct Common {
  std::string input;
  std::string expr;
  std::optional<std::uint64_t> seed;
  int grid = TopologyOptions{}.grid;
};

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "File holding the polynomial (text, '#' starts a comment)");
  cmd->add_option("-e,--expr", c.expr, "Polynomial given inline");
  cmd->add_option("--seed", c.seed, "Sampling seed (default: $PARABOLICA_SEED or built in)");
  cmd->add_option("--grid", c.grid, "Grid cells per axis for curve tracing")->check(CLI::Range(16, 20000));
}

std::string read_source(const Common& c) {
  if (!c.expr.empty() && !c.input.empty()) throw InputError{"give either an input file or --expr, not both"};
  if (!c.expr.empty()) return c.expr;
  if (c.input.empty()) throw InputError{"no input: pass a file or --expr"};
  std::ifstream file(c.input);
  if (!file) throw InputError{"cannot read '" + c.input + "'"};
  std::string text, line;
  while (std::getline(file, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line + "\n";
  }
  return text;
}

ReportOptions options_for(const Common& c) {
  ReportOptions o;
  o.topology.grid = c.grid;
  if (c.seed) {
    o.topology.seed = *c.seed;
  } else if (const char* env = std::getenv("PARABOLICA_SEED")) {
    try {
      o.topology.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError{std::string("PARABOLICA_SEED is not an unsigned integer: ") + env};
    }
  }
  return o;
}

bool write_text(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::vector<std::string> split_layers(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

void print_verdicts(const StructureReport& r, std::ostream& out) {
  out << std::left << std::setw(18) << "polynomial" << std::right << r.input << "  (degree " << r.degree << ")\n";
  for (const auto& f : r.refusals) out << std::left << std::setw(18) << "refused" << std::right << f.stage << ": " << f.reason << "\n";
  const auto& id = r.identity;
  if (id.evaluated) {
    out << std::left << std::setw(18) << "identity" << std::right << (id.pass ? "PASS" : "FAIL") << "  lhs " << format_half(id.lhs) << "  rhs "
        << format_half(id.rhs) << "  (chi " << id.chi << ", P_i " << r.P_i << ", P_e " << r.P_e << ", B"
        << id.epsilon << ")\n";
  } else {
    out << std::left << std::setw(18) << "identity" << std::right << "skipped  " << id.refusal << "\n";
  }
  for (const auto& b : r.bounds) {
    out << std::left << std::setw(18) << b.name << std::right;
    if (!b.applicable) {
      out << "n/a   " << b.note << "\n";
      continue;
    }
    out << (b.pass ? "PASS" : "FAIL") << "  ";
    if (b.lower) out << to_string(*b.lower) << " <= ";
    out << format_half(b.measured) << " <= " << to_string(b.upper) << "  [" << b.formula << "]\n";
  }
}

int cmd_analyze(const Common& c, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const StructureReport r = full_report(parse_polynomial(read_source(c)), options_for(c));
  if (!write_text(out_path, to_json(r) + "\n", out, err)) return kUsage;
  return r.refusals.empty() ? kOk : kRefusal;
}

int cmd_plot(const Common& c, const std::vector<std::string>& layers, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  const PlotSpec spec = build_figure(parse_polynomial(read_source(c)), split_layers(layers), options_for(c));
  return write_text(out_path, render_svg(spec), out, err) ? kOk : kUsage;
}

int cmd_verify(const Common& c, bool json, std::ostream& out) {
  const StructureReport r = full_report(parse_polynomial(read_source(c)), options_for(c));
  if (json) {
    out << to_json(r) << "\n";
  } else {
    print_verdicts(r, out);
  }
  if (!r.verified()) return kVerificationFailed;
  const bool any_bound = std::any_of(r.bounds.begin(), r.bounds.end(), [](const BoundCheck& b) { return b.applicable; });
  return r.identity.evaluated || any_bound ? kOk : kRefusal;
}

int cmd_corpus(const Common& c, const std::string& name, std::ostream& out) {
  std::vector<CorpusResult> results;
  const ReportOptions opts = options_for(c);
  if (name.empty()) {
    results = run_corpus(opts);
  } else {
    results.push_back(run_corpus_entry(corpus_entry(name), opts));
  }
  int failed = 0;
  for (const auto& res : results) {
    const bool ok = res.pass();
    failed += ok ? 0 : 1;
    out << (ok ? "PASS " : "FAIL ") << std::left << std::setw(22) << res.entry->name << std::right << std::fixed
        << std::setprecision(3) << std::setw(7) << res.seconds << "s  " << res.entry->polynomial << "\n";
    for (const auto& chk : res.checks) {
      out << "       " << (chk.pass ? "ok   " : "BAD  ") << std::left << std::setw(16) << chk.what << std::right
          << "expected " << chk.expected << ", got " << chk.measured << "\n";
    }
    if (!res.report.verified()) out << "       BAD  report verdict failed\n";
  }
  out << results.size() - failed << "/" << results.size() << " corpus entries pass\n";
  return failed ? kVerificationFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic curves, godrons and asymptotic-line indices of polynomial graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "parabolica 0.1.0");

  Common common;
  std::string out_path;
  std::vector<std::string> layers{"hessian,asymptotic,godrons,sphere"};
  bool json = false;
  std::string entry_name;

  auto* analyze = app.add_subcommand("analyze", "Write the full structure report as JSON");
  add_input(analyze, common);
  analyze->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* plot = app.add_subcommand("plot", "Write an SVG figure: plane view and both hemispheres");
  add_input(plot, common);
  plot->add_option("-o,--out", out_path, "Output file (default stdout)");
  plot->add_option("--layer", layers, "Comma separated: hessian, asymptotic, godrons, sphere");

  auto* verify = app.add_subcommand("verify", "Check the index identity and godron bounds");
  add_input(verify, common);
  verify->add_flag("--json", json, "Print the report instead of the verdict table");

  auto* corpus_cmd = app.add_subcommand("corpus", "Run the built-in regression corpus");
  corpus_cmd->add_option("--name", entry_name, "Run a single entry");
  corpus_cmd->add_option("--seed", common.seed, "Sampling seed");
  corpus_cmd->add_option("--grid", common.grid, "Grid cells per axis for curve tracing")->check(CLI::Range(16, 20000));

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(common, out_path, out, err);
    if (*plot) return cmd_plot(common, layers, out_path, out, err);
    if (*verify) return cmd_verify(common, json, out);
    return cmd_corpus(common, entry_name, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::kParse) return kParse;
    if (e.code() == ErrorCode::kInvalidArgument) return kUsage;
    return kRefusal;
  }
}

}  // namespace parabolica::cli
