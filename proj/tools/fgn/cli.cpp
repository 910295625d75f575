#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "fgn/analysis.hpp"
#include "fgn/bench.hpp"
#include "fgn/error.hpp"
#include "fgn/toeplitz.hpp"
#include "grid.hpp"

namespace fgn::cli {
namespace {

const std::map<std::string, Format> kFormats{
    {"csv", Format::Csv}, {"json", Format::Json}, {"pretty", Format::Pretty}};
const std::map<std::string, Method> kMethods{
    {"solve", Method::Solve}, {"recurrence", Method::Recurrence}, {"cramer", Method::Cramer}};
const std::map<std::string, Suite> kSuites{{"covariance", Suite::Covariance},
                                           {"conjectures", Suite::Conjectures},
                                           {"cholesky", Suite::Cholesky},
                                           {"psi", Suite::Psi},
                                           {"all", Suite::All}};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidHurst:
    case ErrorCode::InvalidArgument:
    case ErrorCode::OrderTooLarge:
    case ErrorCode::OrderTooHigh:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

struct Options {
  double hurst = 0.7;
  std::size_t n = 0;
  std::size_t n_max = 10;
  std::string method = "solve";
  std::string format;
  std::string suite = "all";
  std::string hurst_grid = "0.51:0.99:0.01";
  std::string x_grid = "0:1:0.01";
  std::string n_list = "100,500,1000,2000";
  std::size_t reps = 5;
  std::string out_file;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "csv, json or pretty")->check(CLI::IsMember(kFormats));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Projection coefficients of fractional Gaussian noise", "fgn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_file, "write data to FILE instead of stdout");

  auto* coeffs = app.add_subcommand("coeffs", "coefficients Gamma_n^k, k = 2..n");
  coeffs->add_option("--hurst", o.hurst, "Hurst index in [0, 1]")->required();
  coeffs->add_option("--n", o.n, "order n >= 2")->required()->check(CLI::Range(2, 1'000'000));
  coeffs->add_option("--method", o.method, "solve, recurrence or cramer")
      ->check(CLI::IsMember(kMethods));
  add_format(coeffs, o);

  auto* table = app.add_subcommand("table", "triangle of coefficients for n = 2..n-max");
  table->add_option("--hurst", o.hurst, "Hurst index in [0, 1]")->required();
  table->add_option("--n-max", o.n_max, "largest order")->check(CLI::Range(2, 100'000));
  table->add_option("--method", o.method, "solve, recurrence or cramer")
      ->check(CLI::IsMember(kMethods));
  add_format(table, o);

  auto* verify = app.add_subcommand("verify", "property and conjecture checks over a Hurst grid");
  verify->add_option("--suite", o.suite, "covariance, conjectures, cholesky, psi or all")
      ->check(CLI::IsMember(kSuites));
  verify->add_option("--hurst-grid", o.hurst_grid, "values and start:stop:step ranges");
  verify->add_option("--n-max", o.n_max, "largest order")->check(CLI::Range(3, 100'000));
  add_format(verify, o);

  auto* limits = app.add_subcommand("limits", "limits of the n = 3 and n = 4 rows as H -> 1");
  add_format(limits, o);

  auto* psi = app.add_subcommand("psi", "psi and eta on an x grid");
  psi->add_option("--hurst", o.hurst, "Hurst index in (1/2, 1)")->required();
  psi->add_option("--x-grid", o.x_grid, "values and start:stop:step ranges, x >= 0");
  add_format(psi, o);

  auto* bench = app.add_subcommand("bench", "timing of the three coefficient routes");
  bench->add_option("--hurst", o.hurst, "Hurst index");
  bench->add_option("--n-list", o.n_list, "orders to time");
  bench->add_option("--reps", o.reps, "timed repetitions, >= 3")->check(CLI::Range(3, 1000));
  add_format(bench, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const Format format =
      o.format.empty() ? (limits->parsed() ? Format::Pretty : Format::Csv) : kFormats.at(o.format);
  const Method method = kMethods.at(o.method);

  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open " << o.out_file << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out_file.empty() ? out : file;

  try {
    if (coeffs->parsed()) {
      write(sink, coeffs_record(HurstParam(o.hurst), o.n, method, format), format);
    } else if (table->parsed()) {
      write(sink, table_record(HurstParam(o.hurst), o.n_max, method), format);
    } else if (verify->parsed()) {
      const auto grid = parse_grid(o.hurst_grid);
      const VerifyOutcome result = verify_record(kSuites.at(o.suite), grid, o.hurst_grid, o.n_max);
      write(sink, result.record, format);
      if (result.failed) {
        err << "verify: at least one check failed\n";
        return kExitCounterexample;
      }
    } else if (limits->parsed()) {
      write(sink, limits_record(), format);
    } else if (psi->parsed()) {
      const HurstParam h(o.hurst);
      const auto xs = parse_grid(o.x_grid);
      const OutputRecord rec = psi_record(h, xs, o.x_grid);
      err << "psi: largest value on [0,1] at x=" << psi_argmax(h) << '\n';
      write(sink, rec, format);
    } else if (bench->parsed()) {
      const HurstParam h(o.hurst);
      const auto ns = parse_size_list(o.n_list);
      const OutputRecord rec = bench_record(h, ns, o.reps, o.n_list);
      write(sink, rec, format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace fgn::cli
