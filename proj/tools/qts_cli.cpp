#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qts/verify.hpp"

using namespace qts;

namespace {

// Writes through f to path, or to stdout for "-".
template <class F>
void with_output(const std::string& path, F&& f) {
  if (path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  f(file);
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

int run_check(const SuiteConfig& cfg, const std::string& out_path, bool quiet) {
  const auto reports = run_suite(cfg);
  const auto doc = suite_json(cfg, reports);
  std::size_t failed = 0;
  for (const IdentityReport& r : reports) {
    if (r.passed) continue;
    ++failed;
    if (!quiet) std::cout << "FAIL " << r.identity_id << ' ' << r.index.dump() << ": " << r.witness.value_or("") << '\n';
  }
  std::cout << reports.size() - failed << '/' << reports.size() << " checks passed\n";
  if (!out_path.empty()) with_output(out_path, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiple qt-Stirling numbers and identity checks"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string check_out;
  bool quiet = false, list = false;
  int n_max = 0, part_max = -1;
  auto* check = app.add_subcommand("check", "Run the identity suite; exit status 0 iff every check passes");
  check->add_option("--n-max", n_max, "Largest ambient length")->check(CLI::PositiveNumber);
  check->add_option("--part-max", part_max, "Largest part for every n")->check(CLI::NonNegativeNumber);
  check->add_option("--identity", cfg.identities, "Restrict to these identity ids (repeatable)");
  check->add_option("--seed", cfg.seed, "Seed for the sampled argument vectors");
  check->add_option("--out", check_out, "Write the JSON report here ('-' for stdout)");
  check->add_flag("--quiet", quiet, "Only print the summary line");
  check->add_flag("--list", list, "List registered identity ids and exit");

  std::string kind = "s1", bound_text, format = "json", table_out;
  auto* table = app.add_subcommand("table", "Write every entry below a bound");
  table->add_option("--kind", kind, "s1, s2, binomial or bracket")
      ->check(CLI::IsMember({"s1", "s2", "binomial", "bracket"}));
  table->add_option("--bound", bound_text, "Bounding partition, e.g. 2,1")->required();
  table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", table_out, "Output file ('-' for stdout)")->required();

  std::string expr, q0 = "0", t0 = "0", x0 = "0";
  bool symbolic = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a quantity exactly at a rational point");
  eval->add_option("--expr", expr, "e.g. s1([2,1],[1,0]), qt_number([2,1]) or (1-q)/(1-t)")->required();
  eval->add_option("--q", q0, "Rational value of q")->required();
  eval->add_option("--t", t0, "Rational value of t")->required();
  eval->add_option("--x", x0, "Rational value of X");
  eval->add_flag("--symbolic", symbolic, "Also print the canonical symbolic value");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      if (list) {
        for (const RegisteredIdentity& r : identity_registry()) std::cout << r.id << '\t' << r.description << '\n';
        return 0;
      }
      if (n_max > 0) cfg.n_max = n_max;
      if (part_max >= 0) cfg.part_max = part_max;
      return run_check(cfg, check_out, quiet);
    }
    if (*table) {
      const Partition bound = Partition::parse(bound_text);
      with_output(table_out, [&](std::ostream& os) {
        emit_table(parse_table_kind(kind), bound, parse_table_format(format), os);
      });
      return 0;
    }
    if (*eval) {
      if (symbolic) std::cout << eval_expression(expr).str() << '\n';
      std::cout << to_string(eval_point(expr, parse_rational(q0), parse_rational(t0), parse_rational(x0))) << '\n';
      return 0;
    }
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
