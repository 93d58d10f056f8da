// SPDX-License-Identifier: Apache-2.0

#include "quandle/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quandle/affine.hpp"
#include "quandle/finite_quandle.hpp"
#include "quandle/table_io.hpp"
#include "quandle/theorem.hpp"
#include "quandle/variety.hpp"

namespace quandle::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string one_based(std::initializer_list<Index> indices) {
  std::string s = "(";
  bool first = true;
  for (Index i : indices) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::idempotence: return "idempotence";
    case Axiom::bijectivity: return "bijectivity";
    case Axiom::distributivity: return "distributivity";
  }
  return "?";
}

Table load(const std::string& path) {
  try {
    return read_table_file(path);
  } catch (const TableParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void print_axioms(std::ostream& out, const AxiomReport& r) {
  out << "idempotent: " << yes_no(r.idempotent) << '\n';
  out << "bijective columns: " << yes_no(r.bijective_columns) << '\n';
  out << "distributive: " << yes_no(r.distributive) << '\n';
  if (r.first_witness) {
    const auto& w = *r.first_witness;
    out << "witness: " << axiom_name(*r.failed_axiom) << " at " << one_based({w[0], w[1], w[2]})
        << '\n';
  }
}

std::optional<FiniteQuandle> load_quandle(const std::string& path, std::ostream& out) {
  const Table table = load(path);
  const AxiomReport report = check_axioms(table);
  if (!report.ok()) {
    print_axioms(out, report);
    return std::nullopt;
  }
  return FiniteQuandle(table);
}

void emit_table(const Table& table, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    write_table(out, table);
    return;
  }
  std::ofstream file(output);
  if (!file) throw UsageError("cannot write '" + output + "'");
  write_table(file, table);
}

// -- check ------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool medial = false;
  std::optional<std::int64_t> nquandle;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Table table = load(a.file);
  const AxiomReport report = check_axioms(table);
  print_axioms(out, report);
  bool ok = report.ok();
  if (!ok) {
    if (a.medial) out << "medial: skipped (not a quandle)\n";
    if (a.nquandle) out << "n-quandle: skipped (not a quandle)\n";
    return kPropertyFails;
  }
  const FiniteQuandle q(table);
  if (a.medial) {
    const MedialCheck m = is_medial(q);
    out << "medial: " << yes_no(m.medial);
    if (m.witness) {
      const auto& w = *m.witness;
      out << " witness " << one_based({w[0], w[1], w[2], w[3]});
    }
    out << '\n';
    ok = ok && m.medial;
  }
  if (a.nquandle) {
    const bool holds = is_n_quandle(q, *a.nquandle);
    out << "n-quandle(n=" << *a.nquandle << "): " << yes_no(holds) << '\n';
    ok = ok && holds;
  }
  return ok ? kOk : kPropertyFails;
}

// -- orbits -----------------------------------------------------------------

int cmd_orbits(const std::string& file, std::ostream& out) {
  const auto q = load_quandle(file, out);
  if (!q) return kPropertyFails;
  const Partition blocks = orbits(*q);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    out << "orbit " << k + 1 << ":";
    for (Index x : blocks[k]) out << ' ' << x + 1;
    out << '\n';
  }
  return kOk;
}

// -- reverse ----------------------------------------------------------------

int cmd_reverse(const std::string& file, std::size_t element, const std::string& output,
                std::ostream& out) {
  const auto q = load_quandle(file, out);
  if (!q) return kPropertyFails;
  if (element < 1 || element > q->size()) {
    throw UsageError("IndexOutOfRange: element " + std::to_string(element) + " not in 1.." +
                     std::to_string(q->size()));
  }
  emit_table(reverse_orbit(*q, element - 1).table(), output, out);
  return kOk;
}

// -- quotient ---------------------------------------------------------------

int cmd_quotient(const std::string& file, const std::string& variety, std::optional<std::int64_t> n,
                 const std::string& output, std::ostream& out) {
  IdentitySpec id;
  if (variety == "medial") {
    id = IdentitySpec::medial();
  } else {
    if (!n) throw UsageError("--variety nquandle requires --n");
    id = IdentitySpec::n_quandle(*n);
  }
  const auto q = load_quandle(file, out);
  if (!q) return kPropertyFails;
  const Quotient quotient = quotient_by_identity(*q, id);
  for (Index x = 0; x < q->size(); ++x) {
    out << x + 1 << " -> " << quotient.projection[x] + 1 << '\n';
  }
  emit_table(quotient.quandle.table(), output, out);
  return kOk;
}

// -- verify-paper -----------------------------------------------------------

int cmd_verify_paper(bool show_expansion, std::size_t samples, std::uint64_t seed,
                     std::ostream& out, std::ostream& err) {
  try {
    const TheoremReport report = verify_theorem({samples, seed});
    out << format_report(report, show_expansion);
    return report.total == 2 ? kOk : kPropertyFails;
  } catch (const TheoremError& e) {
    err << "verify-paper failed at stage '" << e.stage() << "': " << e.what() << '\n';
    return kPropertyFails;
  }
}

// -- demo-affine ------------------------------------------------------------

int cmd_demo_affine(const std::vector<std::string>& op_args, const std::vector<std::string>& witness,
                    bool reversed, bool inverse, std::ostream& out) {
  if (op_args.empty() == witness.empty()) throw UsageError("give exactly one of --op, --witness");
  try {
    if (!op_args.empty()) {
      const QElem a = parse_qelem(op_args[0]);
      const QElem b = parse_qelem(op_args[1]);
      const TwoOrbitQuandle q = reversed ? reversed_quandle() : TwoOrbitQuandle{};
      out << to_string(inverse ? q.op_inv(a, b) : q.op(a, b)) << '\n';
      return kOk;
    }
    const NElem x = parse_nelem(witness[0]);
    if (witness[1] != "1" && witness[1] != "2") throw ParseError("orbit must be 1 or 2");
    out << to_string(orbit_witness(x, witness[1] == "1" ? OrbitTag::one : OrbitTag::two)) << '\n';
    return kOk;
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

// -- reversal-experiment ----------------------------------------------------

struct ExperimentRow {
  Index representative = 0;
  std::size_t orbit_size = 0;
  std::size_t order = 0;
  std::size_t quotient_order = 0;
  std::string quotient_table;
};

struct FileResult {
  std::string name;
  std::string skip_reason;
  std::string table;
  std::vector<ExperimentRow> rows;
};

FileResult run_experiment_on(const fs::path& path) {
  FileResult result{path.filename().string(), {}, {}, {}};
  Table table;
  try {
    table = read_table_file(path);
  } catch (const TableParseError& e) {
    result.skip_reason = e.what();
    return result;
  }
  if (!check_axioms(table).ok()) {
    result.skip_reason = "not a quandle";
    return result;
  }
  const FiniteQuandle q(table);
  if (!is_medial(q)) {
    result.skip_reason = "not medial";
    return result;
  }
  result.table = format_table(table);
  for (const auto& block : orbits(q)) {
    const FiniteQuandle reversed = reverse_orbit(q, block.front());
    const Quotient quotient = quotient_by_identity(reversed, IdentitySpec::medial());
    result.rows.push_back({block.front(), block.size(), q.size(), quotient.quandle.size(),
                           format_table(quotient.quandle.table())});
  }
  return result;
}

int cmd_reversal_experiment(const std::string& dir, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw UsageError("not a directory: '" + dir + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<std::future<FileResult>> pending;
  for (const auto& f : files) pending.push_back(std::async(std::launch::async, run_experiment_on, f));

  out << "# medial quotient of Q^rev(x) for each orbit representative x\n";
  out << "# quotient tables are compared literally (classes ordered by smallest element),"
         " not up to isomorphism\n";
  out << "# file orbit orbit_size order reversed_quotient_order drop\n";

  // Reversed-quotient table -> inputs producing it.
  std::map<std::string, std::vector<std::pair<std::string, const FileResult*>>> by_quotient;
  std::vector<FileResult> results;
  results.reserve(pending.size());
  for (auto& p : pending) results.push_back(p.get());

  std::size_t drops = 0;
  for (const auto& r : results) {
    if (!r.skip_reason.empty()) {
      err << "warning: skipping " << r.name << ": " << r.skip_reason << '\n';
      continue;
    }
    for (const auto& row : r.rows) {
      const bool drop = row.quotient_order < row.order;
      drops += drop;
      out << r.name << ' ' << row.representative + 1 << ' ' << row.orbit_size << ' ' << row.order
          << ' ' << row.quotient_order << ' ' << yes_no(drop) << '\n';
      by_quotient[row.quotient_table].emplace_back(
          r.name + "@" + std::to_string(row.representative + 1), &r);
    }
  }

  std::vector<std::string> collisions;
  for (const auto& [quotient, sources] : by_quotient) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      for (std::size_t j = i + 1; j < sources.size(); ++j) {
        if (sources[i].second->table != sources[j].second->table) {
          collisions.push_back(sources[i].first + " " + sources[j].first);
        }
      }
    }
  }
  std::sort(collisions.begin(), collisions.end());
  out << "size drops: " << drops << '\n';
  out << "collisions: " << collisions.size() << '\n';
  for (const auto& c : collisions) out << "collision: " << c << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandles, orbit reversal and variety quotients", "quandle"};
  app.require_subcommand(1, 1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check the quandle axioms and optional identities");
  check->add_option("file", check_args.file, "quandle v1 table")->required();
  check->add_flag("--medial", check_args.medial, "Also check the medial identity");
  check->add_option("--nquandle", check_args.nquandle, "Also check beta_y^n = id");

  std::string orbits_file;
  auto* orbits_cmd = app.add_subcommand("orbits", "List the orbits");
  orbits_cmd->add_option("file", orbits_file)->required();

  std::string reverse_file, reverse_output;
  std::size_t element = 0;
  auto* reverse = app.add_subcommand("reverse", "Reverse the orbit of an element");
  reverse->add_option("file", reverse_file)->required();
  reverse->add_option("--element", element, "1-indexed element")->required();
  reverse->add_option("-o,--output", reverse_output, "Write the table here instead of stdout");

  std::string quotient_file, variety = "medial", quotient_output;
  std::optional<std::int64_t> quotient_n;
  auto* quotient = app.add_subcommand("quotient", "Quotient onto a variety");
  quotient->add_option("file", quotient_file)->required();
  quotient->add_option("--variety", variety)->check(CLI::IsMember({"medial", "nquandle"}));
  quotient->add_option("--n", quotient_n, "Exponent for --variety nquandle");
  quotient->add_option("-o,--output", quotient_output, "Write the quotient table here");

  bool show_expansion = false;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify-paper", "Verify that Q^rev(0_2)_M has two elements");
  verify->add_flag("--show-expansion", show_expansion, "Print the expansion coefficients");
  verify->add_option("--samples", samples, "Randomised samples per check");
  verify->add_option("--seed", seed, "Seed for the randomised checks");

  std::vector<std::string> op_args, witness_args;
  bool demo_reversed = false, demo_inverse = false;
  auto* demo = app.add_subcommand("demo-affine", "Evaluate the two-orbit quandle over N");
  demo->add_option("--op", op_args, "a b: print a |> b")->expected(2);
  demo->add_option("--witness", witness_args, "x i: element y with 0_i |> y = x_i")->expected(2);
  demo->add_flag("--reversed", demo_reversed, "Use Q^rev(0_2)");
  demo->add_flag("--inverse", demo_inverse, "Use the inverse operation");

  std::string corpus_dir;
  auto* experiment =
      app.add_subcommand("reversal-experiment", "Reverse and medialize every orbit of a corpus");
  experiment->add_option("dir", corpus_dir)->required();

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*check) return cmd_check(check_args, out);
    if (*orbits_cmd) return cmd_orbits(orbits_file, out);
    if (*reverse) return cmd_reverse(reverse_file, element, reverse_output, out);
    if (*quotient) return cmd_quotient(quotient_file, variety, quotient_n, quotient_output, out);
    if (*verify) return cmd_verify_paper(show_expansion, samples, seed, out, err);
    if (*demo) return cmd_demo_affine(op_args, witness_args, demo_reversed, demo_inverse, out);
    if (*experiment) return cmd_reversal_experiment(corpus_dir, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace quandle::cli
