#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "oneq/catalog.hpp"
#include "oneq/classify.hpp"
#include "oneq/errors.hpp"
#include "oneq/feasibility.hpp"
#include "oneq/simulator.hpp"
#include "oneq/witness.hpp"

namespace oneq::cli {

namespace {

namespace fs = std::filesystem;

/// Missing/unreadable/unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

fs::path ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  return fs::path(dir);
}

std::string stamp_line() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << "# generated " << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << '\n';
  return s.str();
}

struct Options {
  std::string function_path;
  std::string certificate_path;
  std::string family;
  std::optional<int> n;
  std::optional<int> c;
  std::string weights_path;
  double tol = kDefaultTolerance;
  std::string out_dir;
  bool canonical = false;
  bool total_only = false;
  bool all_support = false;
  bool stamp = false;
};

void print_trace(const Infeasibility& why, std::ostream& out) {
  out << "contradiction trace:\n";
  for (const auto& line : why.trace) out << "  " << line << '\n';
}

std::string degree_text(const std::optional<int>& d) {
  return d ? std::to_string(*d) : std::string(">cap");
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  const auto f = parse_function(read_file(o.function_path));
  const auto result = is_one_query(f);
  out << to_string(result.decision) << '\n';
  out << "degree=" << degree_text(result.degree) << '\n';
  for (const auto& note : result.notes) out << "note: " << note << '\n';
  if (result.decision == Decision::one_query) {
    out << serialize(*result.certificate);
    return kOk;
  }
  if (result.infeasibility) print_trace(*result.infeasibility, out);
  if (o.stamp) out << stamp_line();
  return kNegative;
}

int cmd_certificate(const Options& o, std::ostream& out) {
  const auto f = parse_function(read_file(o.function_path));
  const auto cs = build_constraints(f);
  const auto outcome = solve_feasibility(cs);
  if (!outcome.feasible()) {
    out << "not-one-query\n";
    print_trace(outcome.infeasibility(), out);
    return kNegative;
  }
  const auto& c = outcome.certificate();
  const auto witness = build_gram_witness(f, c);
  const auto projector = build_projector_float(witness);
  std::string cert_text = serialize(c);
  std::string dump = dump_witness(witness, projector);
  if (o.all_support) {
    std::string line = "support_union=";
    const auto support = support_union(cs);
    for (std::size_t i = 0; i < support.size(); ++i) line += (i ? "," : "") + std::to_string(support[i]);
    dump += line + '\n';
  }
  if (o.stamp) dump += stamp_line();

  if (o.out_dir.empty()) {
    out << cert_text << "---\n" << dump;
  } else {
    const auto dir = ensure_dir(o.out_dir);
    write_file(dir / "certificate.txt", cert_text);
    write_file(dir / "witness.txt", dump);
    out << "wrote " << (dir / "certificate.txt").string() << " and " << (dir / "witness.txt").string()
        << '\n';
  }
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const auto f = parse_function(read_file(o.function_path));
  const auto c = parse_certificate(read_file(o.certificate_path));
  if (f.arity() != c.arity()) {
    throw DimensionError("function has n = " + std::to_string(f.arity()) +
                         " but certificate has n = " + std::to_string(c.arity()));
  }
  const bool orthogonal = check_orthogonality(f, c);
  const auto witness = build_gram_witness(f, c, {.require_orthogonality = false});
  const auto report = run_algorithm1(f, c, build_projector_float(witness), o.tol);
  if (!orthogonal) out << "warning: certificate fails the orthogonality check\n";
  out << format_table(report) << format_lines(report);
  if (o.stamp) out << stamp_line();
  return report.all_pass() ? kOk : kNegative;
}

int cmd_degree(const Options& o, std::ostream& out) {
  const auto f = parse_function(read_file(o.function_path));
  out << "degree=" << degree_text(min_degree(f, f.arity())) << '\n';
  return kOk;
}

CatalogEntry make_entry(const Options& o) {
  if (o.family == "f1") return make_f1(o.n.value_or(4));
  if (o.family == "f2") return make_f2(o.n.value_or(5), o.c.value_or(3));
  if (o.family == "f3") {
    if (o.weights_path.empty()) throw std::invalid_argument("f3 needs --weights <certificate file>");
    const auto w = parse_certificate(read_file(o.weights_path));
    return make_f3({w.weights().begin(), w.weights().end()});
  }
  if (o.family == "f4") return make_f4();
  if (o.family == "f5") return make_f5(o.n.value_or(1));
  throw std::invalid_argument("unknown family '" + o.family + "'");
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const auto e = make_entry(o);
  const auto& f = e.function;
  const auto& c = e.certificate;

  std::ostringstream report;
  bool ok = true;
  const auto check = [&](const std::string& what, bool pass) {
    report << what << ": " << (pass ? "pass" : "FAIL") << '\n';
    ok = ok && pass;
  };
  report << "entry=" << e.name << '\n';
  report << "domain_size=" << f.domain_size() << '\n';
  for (const auto& note : e.notes) report << "note: " << note << '\n';
  check("verify_certificate", verify_certificate(f, c));
  check("check_orthogonality", check_orthogonality(f, c));

  const auto witness = build_gram_witness(f, c);
  report << "witness_rank=" << witness.rank() << '\n';
  bool exact = true;
  for (const auto& [x, v] : f.entries()) exact = exact && evaluate_g(witness, x) == (v ? 1 : 0);
  check("evaluate_g_equals_f", exact);

  const auto sim = run_algorithm1(f, c, build_projector_float(witness), o.tol);
  report << std::scientific << std::setprecision(3) << "simulation_max_deviation=" << sim.max_deviation
         << '\n';
  check("simulation", sim.all_pass());

  const auto ortho = orthonormalized_witnesses(e);
  report << "listed_witnesses_represent="
         << (ortho.represents == WitnessReading::function ? "f" : "1-f") << '\n';
  report << "raw_sum_of_squares_at_zero=" << to_fraction(raw_sum_of_squares(e, BitString(f.arity(), 0)))
         << '\n';
  if (o.stamp) report << stamp_line();

  const auto dir = ensure_dir(o.out_dir.empty() ? "." : o.out_dir);
  write_file(dir / "function.txt", serialize(f));
  write_file(dir / "certificate.txt", serialize(c));
  write_file(dir / "report.txt", report.str());
  out << report.str();
  return ok ? kOk : kNegative;
}

std::string summary_text(const SearchSummary& s) {
  std::ostringstream out;
  out << "n=" << s.n << '\n';
  out << "mode=" << (s.total_only ? "total" : "partial") << '\n';
  out << "examined=" << s.examined << '\n';
  out << "one_query_functions=" << s.one_query_functions << '\n';
  if (s.dedup) {
    out << "classes=" << s.classes << '\n';
    out << "one_query_classes=" << s.one_query_classes << '\n';
    out << "classes_without_output_negation=" << s.classes_without_negation << '\n';
    out << "one_query_classes_without_output_negation=" << s.one_query_classes_without_negation << '\n';
  }
  out << "rejected_by_degree=" << s.rejected_by_degree << '\n';
  out << "degree_filter_exceptions=" << s.degree_filter_exceptions << '\n';
  if (s.characterization_holds) {
    out << "total_characterization=" << (*s.characterization_holds ? "holds" : "VIOLATED") << '\n';
  }
  out << "[representatives]\n";
  for (std::size_t i = 0; i < s.representatives.size(); ++i) {
    const auto& r = s.representatives[i];
    out << i << ' ' << to_string(r.decision) << " degree=" << degree_text(r.degree)
        << " members=" << r.members << " table=";
    for (auto sym : table_of(r.function)) out << "*01"[sym];
    if (r.certificate) {
      out << " c=";
      for (int k = 0; k <= r.certificate->arity(); ++k) {
        out << (k ? "," : "") << to_fraction((*r.certificate)[k]);
      }
    }
    out << '\n';
  }
  return out.str();
}

int cmd_search(const Options& o, std::ostream& out) {
  if (!o.n) throw std::invalid_argument("search needs --n");
  const ScanOptions scan{.dedup = o.canonical};
  const auto summary = o.total_only ? scan_total(*o.n, scan) : scan_partial(*o.n, scan);
  std::string text = summary_text(summary);
  if (o.stamp) text += stamp_line();
  if (o.out_dir.empty()) {
    out << text;
  } else {
    const auto dir = ensure_dir(o.out_dir);
    write_file(dir / "summary.txt", text);
    std::size_t written = 0;
    for (std::size_t i = 0; i < summary.representatives.size(); ++i) {
      const auto& r = summary.representatives[i];
      if (r.decision != Decision::one_query) continue;
      const std::string stem = "rep_" + std::to_string(i);
      write_file(dir / (stem + ".fn"), serialize(r.function));
      write_file(dir / (stem + ".cert"), serialize(*r.certificate));
      ++written;
    }
    out << "wrote " << (dir / "summary.txt").string() << " and " << written
        << " one-query representatives\n";
  }
  return summary.characterization_holds.value_or(true) && summary.degree_filter_exceptions == 0
             ? kOk
             : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact one-query decision, certificates and simulation for partial Boolean functions",
               "oneq"};
  app.require_subcommand(1);
  Options o;

  const auto add_stamp = [&](CLI::App* cmd) {
    cmd->add_flag("--stamp", o.stamp, "Append a generation timestamp to reports");
  };

  auto* check = app.add_subcommand("check", "Decide whether a function is one-query");
  check->add_option("function", o.function_path, "Function file")->required();
  add_stamp(check);

  auto* certificate = app.add_subcommand("certificate", "Emit weight certificate and Gram witness");
  certificate->add_option("function", o.function_path, "Function file")->required();
  certificate->add_option("--out", o.out_dir, "Output directory");
  certificate->add_flag("--all-support", o.all_support,
                        "Also report indices that can carry positive weight");
  add_stamp(certificate);

  auto* simulate = app.add_subcommand("simulate", "Run the one-query algorithm on every domain input");
  simulate->add_option("function", o.function_path, "Function file")->required();
  simulate->add_option("certificate", o.certificate_path, "Certificate file")->required();
  simulate->add_option("--tol", o.tol, "Pass tolerance on |p_accept - f(x)|")->check(CLI::PositiveNumber);
  add_stamp(simulate);

  auto* catalog = app.add_subcommand("catalog", "Generate a named function family");
  catalog->add_option("family", o.family, "f1 | f2 | f3 | f4 | f5")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "f3", "f4", "f5"}));
  catalog->add_option("--n", o.n, "Size parameter");
  catalog->add_option("--c", o.c, "Weight level for f2");
  catalog->add_option("--weights", o.weights_path, "Certificate-format weights for f3");
  catalog->add_option("--out", o.out_dir, "Output directory (default: current directory)");
  catalog->add_option("--tol", o.tol, "Simulation tolerance")->check(CLI::PositiveNumber);
  add_stamp(catalog);

  auto* search = app.add_subcommand("search", "Exhaustively classify small functions");
  search->add_option("--n", o.n, "Number of variables")->required();
  search->add_flag("--total-only", o.total_only, "Total functions only (n <= 4)");
  search->add_flag("--canonical", o.canonical, "Group by isomorphism class");
  search->add_option("--out", o.out_dir, "Output directory");
  add_stamp(search);

  auto* degree = app.add_subcommand("degree", "Minimal agreeing multilinear degree");
  degree->add_option("function", o.function_path, "Function file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (certificate->parsed()) return cmd_certificate(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (degree->parsed()) return cmd_degree(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kEnvironment;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace oneq::cli
