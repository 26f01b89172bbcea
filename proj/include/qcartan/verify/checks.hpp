#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcartan/matrix.hpp"
#include "qcartan/verify/report.hpp"

namespace qcartan::verify {

/// X = M_n diag(J) M_n^-1 against diag(I) over Q[v,v^-1].
CheckReport check_graded(int ell, int n);

/// Route (i) at v = 1 over Z as an assertion; route (ii) (block Cartan matrix at v = 1 against the
/// classical r-values of ell-class regular partitions) as lhs/rhs.
CheckReport check_kor(int ell, int n);

/// X|_{v=theta} against diag(I|_{v=theta}) over Z[1/|ab|].
CheckReport check_specialized(int ell, int n, const mpq_class& theta);

/// p-local exponent chains over Pow_p(n); records which of the three valuation cases (p, theta) hits.
CheckReport check_local(int ell, int n, long p, const mpq_class& theta);

/// Block graded Cartan matrix against its block-sum description, plus facts about Q_ell (ell <= 8).
CheckReport check_cartan_blocks(int ell, int d);

/// Direct sum of block Cartan matrices over Bl_ell(n) against diag(r^v) over Q[v,v^-1].
CheckReport check_conjecture(int ell, int n);

/// Fitting generators of X and diag(I) over Q[v,v^-1] and over Z[1/|ab|] at the given thetas.
CheckReport check_fitting(int ell, int n, const std::vector<mpq_class>& thetas);

/// 1: p | a^2 - b^2; 2: not case 1 and p | a^{2 ell} - b^{2 ell}; 3: otherwise.
int local_case(long p, const mpq_class& theta, int ell);

/// Sub-assertions on Q_ell [A_ell]: upper triangular, diagonal (1, ..., 1, v^ell [ell+1]),
/// det [A_ell] = [ell+1] and det Q_ell = v^ell.
void q_matrix_facts(int ell, CheckReport& report);

/// Cheap necessary condition for det(a) / det(b) to be a unit c v^k: evaluated at v = 2, 1/2, 3.
bool det_unit_guard(const LMatrix& a, const LMatrix& b);

struct Task {
  std::string name;
  Json params;
  std::function<CheckReport()> run;
  /// Tasks sharing a family are ordered by size; once one exceeds the budget the rest are skipped.
  std::string family;
};

struct RunOptions {
  int jobs = 1;
  std::optional<double> budget_seconds;
};

/// Runs tasks on a bounded worker pool; results come back in task order.
std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, const RunOptions& opts);

}  // namespace qcartan::verify
