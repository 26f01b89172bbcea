#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "qcartan/verify/sweeps.hpp"

using namespace qcartan::verify;

namespace {

constexpr int kUsageError = 2;

struct Args {
  std::string ell, n, d, primes, theta;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::string out;
  std::string format = "json";
  bool hard = false;
  bool quiet = false;
};

SweepOptions to_options(const Args& a) {
  SweepOptions o;
  if (!a.ell.empty()) o.ell = parse_int_list(a.ell);
  if (!a.n.empty()) o.n = parse_int_list(a.n);
  if (!a.d.empty()) o.d = parse_int_list(a.d);
  if (!a.primes.empty()) {
    std::vector<long> ps;
    for (int p : parse_int_list(a.primes)) ps.push_back(p);
    o.primes = ps;
  }
  if (!a.theta.empty()) o.thetas = parse_theta_list(a.theta);
  o.seed = a.seed;
  o.hard = a.hard;
  return o;
}

void emit(const std::vector<CheckReport>& reports, const Args& a) {
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw std::runtime_error("cannot open " + a.out);
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  if (a.format == "csv") {
    os << csv_header() << '\n';
    for (const auto& r : reports) os << to_csv_row(r) << '\n';
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
  }
}

void summarize(const std::vector<CheckReport>& reports) {
  long pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.status == Status::SkippedBudget) {
      ++skipped;
    } else if (r.passed()) {
      ++pass;
    } else {
      ++fail;
      std::cerr << "FAIL " << r.task << ' ' << r.params.dump() << " status=" << to_string(r.status);
      if (!r.detail.empty()) std::cerr << " (" << r.detail << ')';
      for (const auto& f : r.failed_assertions) std::cerr << "\n  " << f;
      std::cerr << '\n';
    }
  }
  std::cerr << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Cartan invariant verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--ell", a.ell, "ell as int, range a..b / a-b, or comma list");
  app.add_option("--n", a.n, "n as int, range or list");
  app.add_option("--d", a.d, "d as int, range or list");
  app.add_option("--primes", a.primes, "primes as comma list");
  app.add_option("--theta", a.theta, "comma list of nonzero rationals a/b");
  app.add_option("--seed", a.seed, "random seed");
  app.add_option("--jobs", a.jobs, "worker threads (0 = hardware concurrency)");
  app.add_option("--out", a.out, "output path (default stdout)");
  app.add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--hard", a.hard, "raise bounds and apply a per-task time budget");
  app.add_flag("-q,--quiet", a.quiet, "no summary on stderr");

  using Builder = std::vector<Task> (*)(const SweepOptions&);
  const std::vector<std::tuple<std::string, std::string, Builder>> commands = {
      {"graded", "X vs diag(I) over Q[v,v^-1]", graded_tasks},
      {"kor", "block Cartan matrix at v=1 vs classical r-values over Z", kor_tasks},
      {"specialized", "X|theta vs diag(I|theta) over Z[1/|ab|]", specialized_tasks},
      {"local", "p-local chains over Pow_p(n)", local_tasks},
      {"cartan-blocks", "block graded Cartan matrix vs its block sum", cartan_block_tasks},
      {"conjecture", "direct sum of block Cartan matrices vs diag(r^v)", conjecture_tasks},
      {"fitting", "Fitting generators over Q[v,v^-1] and Z[1/|ab|]", fitting_tasks},
      {"props", "module property suite", property_tasks},
  };
  for (const auto& [name, help, builder] : commands) app.add_subcommand(name, help);
  app.add_subcommand("all", "every sweep above with its defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  SweepOptions opts;
  try {
    opts = to_options(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::vector<Task> tasks;
  bool local_selected = false;
  const std::string chosen = app.get_subcommands().front()->get_name();
  for (const auto& [name, help, builder] : commands)
    if (chosen == "all" || chosen == name) {
      try {
        auto ts = builder(opts);
        tasks.insert(tasks.end(), ts.begin(), ts.end());
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
      }
      local_selected = local_selected || name == "local";
    }

  RunOptions ro;
  ro.jobs = a.jobs > 0 ? a.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (a.hard) ro.budget_seconds = kHardBudgetSeconds;
  auto reports = run_tasks(tasks, ro);
  // case coverage is a property of the default (p, theta) grid
  if (local_selected && !opts.primes && !opts.thetas) reports.push_back(local_case_coverage(reports));

  try {
    emit(reports, a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (!a.quiet) summarize(reports);
  return exit_code(reports);
}
