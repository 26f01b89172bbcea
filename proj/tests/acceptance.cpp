#include <chrono>
#include <iostream>
#include <thread>

#include "qcartan/verify/sweeps.hpp"

using namespace qcartan;
using namespace qcartan::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

RunOptions pool() {
  RunOptions ro;
  ro.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return ro;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void require_all_pass(Outcome& o, const std::vector<CheckReport>& reports, size_t expected) {
  o.require(reports.size() == expected,
            "expected " + std::to_string(expected) + " reports, got " + std::to_string(reports.size()));
  size_t pass = 0;
  for (const auto& r : reports) {
    if (r.passed()) {
      ++pass;
      continue;
    }
    std::string what = "failed " + r.task + " " + r.params.dump() + " status=" + to_string(r.status);
    for (const auto& f : r.failed_assertions) what += " [" + f + "]";
    o.require(false, what);
  }
  o.notes.insert(o.notes.begin(), std::to_string(pass) + "/" + std::to_string(reports.size()) + " reports pass");
}

long sum_cases(const CheckReport& r, std::initializer_list<const char*> names) {
  long total = 0;
  for (const char* n : names) total += r.extra["cases"].value(n, 0L);
  return total;
}

template <class F>
bool criterion(int number, const std::string& title, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "criterion " << number << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  (" << secs << " s)";
  for (const auto& n : o.notes) std::cout << "\n    " << n;
  std::cout << std::endl;
  return o.ok;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  bool ok = true;

  ok &= criterion(1, "graded X vs diag(I) over Q[v,v^-1], ell 2..6, n 0..8, under 10 min", [](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    SweepOptions s;
    s.ell = range(2, 6);
    s.n = range(0, 8);
    require_all_pass(o, run_tasks(graded_tasks(s), pool()), 45);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 600, "took " + std::to_string(secs) + " s");
  });

  ok &= criterion(2, "block Cartan chains at v=1 reproduce classical r-values, ell {2,3,4,6}, n 0..7", [](Outcome& o) {
    SweepOptions s;
    s.ell = std::vector<int>{2, 3, 4, 6};
    s.n = range(0, 7);
    require_all_pass(o, run_tasks(kor_tasks(s), pool()), 32);
    auto r = check_kor(2, 3);
    o.require(r.lhs == std::vector<std::string>{"1", "2"}, "ell=2 n=3 chain is not (1,2)");
    o.require(r.extra["r_multiset"] == Json({"1", "2"}), "ell=2 n=3 r-multiset is not {1,2}");
  });

  ok &= criterion(3, "specialized chains over Z[1/|ab|], theta {1,2,1/2,3,2/3,-2}, ell 2..6, n 0..7", [](Outcome& o) {
    SweepOptions s;
    s.ell = range(2, 6);
    s.n = range(0, 7);
    s.thetas = parse_theta_list("1,2,1/2,3,2/3,-2");
    require_all_pass(o, run_tasks(specialized_tasks(s), pool()), 6 * 5 * 8);
  });

  ok &= criterion(4, "p-local chains, p {2,3,5}, theta {2,3,1/2,5,7/2} with p not dividing ab, all three cases hit",
                  [](Outcome& o) {
                    SweepOptions s;
                    auto reports = run_tasks(local_tasks(s), pool());
                    // p=2: theta 3, 5 (n 0..8); p=3: 2, 1/2, 5, 7/2 (n 0..9); p=5: 2, 3, 1/2, 7/2 (n 0..9)
                    size_t expected = 5 * (2 * 9 + 4 * 10 + 4 * 10);
                    require_all_pass(o, reports, expected);
                    auto cov = local_case_coverage(reports);
                    o.require(cov.passed(), "cases hit: " + Json(cov.lhs).dump());
                    o.notes.push_back("cases hit: " + Json(cov.lhs).dump());
                  });

  ok &= criterion(5, "block graded Cartan matrices, (ell,d) in {2,3}x{0..4} and {4}x{0..2}; Q_ell facts for ell <= 8",
                  [](Outcome& o) {
                    SweepOptions s;
                    auto reports = run_tasks(cartan_block_tasks(s), pool());
                    require_all_pass(o, reports, 13);
                    for (int ell = 1; ell <= 8; ++ell) {
                      CheckReport r;
                      q_matrix_facts(ell, r);
                      o.require(r.failed_assertions.empty() && r.assertions > 0,
                                "Q_" + std::to_string(ell) + " facts failed");
                    }
                  });

  ok &= criterion(6, "direct sum of block Cartan matrices vs diag(r^v) over Q[v,v^-1], ell {2,3}, n 0..6",
                  [](Outcome& o) {
                    SweepOptions s;
                    s.ell = std::vector<int>{2, 3};
                    s.n = range(0, 6);
                    auto reports = run_tasks(conjecture_tasks(s), pool());
                    require_all_pass(o, reports, 14);
                    for (const auto& r : reports) {
                      int ell = r.params["ell"], n = r.params["n"];
                      auto crp = parts_filtered(PartitionFilter::class_regular(ell), n).size();
                      o.require(r.lhs.size() == crp && r.rhs.size() == crp,
                                "chain length differs from class-regular count at ell=" + std::to_string(ell) +
                                    " n=" + std::to_string(n));
                    }
                  });

  ok &= criterion(7, "property suite at default bounds, zero failures within 5 min", [](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    PropertyBounds b;
    auto r = run_property_suite(1, b);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require_all_pass(o, {r}, 1);
    o.require(b.qmax >= 40, "quantum integer expansion bound below 40");
    long val = sum_cases(r, {"valuation_when_p_divides_a2_minus_b2", "valuation_with_order_t0",
                             "valuation_zero_when_p_coprime", "power_difference_valuation"});
    long snf = sum_cases(r, {"snf_integer_vs_minor_gcd", "snf_laurent_vs_minor_gcd"});
    o.require(val >= 500, "only " + std::to_string(val) + " valuation samples");
    o.require(snf >= 200, "only " + std::to_string(snf) + " snf-vs-minor-gcd matrices");
    o.require(secs <= 300, "took " + std::to_string(secs) + " s");
    o.notes.push_back(std::to_string(val) + " valuation samples, " + std::to_string(snf) + " snf oracle matrices");
    for (const auto& f : r.lhs)
      if (f.size() > 5 && f.substr(f.size() - 5) == ":fail") o.notes.push_back("property " + f);
  });

  ok &= criterion(8, "Fitting generators agree over Q[v,v^-1] and Z[1/|ab|], 10 random (ell,n), 3 thetas each",
                  [](Outcome& o) {
                    SweepOptions s;
                    auto tasks = fitting_tasks(s);
                    for (const auto& t : tasks) o.require(t.params["thetas"].size() == 3, "task without 3 thetas");
                    require_all_pass(o, run_tasks(tasks, pool()), 10);
                  });

  std::cout << (ok ? "all criteria pass" : "some criteria fail") << std::endl;
  return ok ? 0 : 1;
}
