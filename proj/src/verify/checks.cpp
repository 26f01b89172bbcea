#include "qcartan/verify/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "qcartan/charmat.hpp"
#include "qcartan/invariants.hpp"
#include "qcartan/numtheory.hpp"
#include "qcartan/snf.hpp"

namespace qcartan::verify {

namespace {

template <class F>
CheckReport guarded(const std::string& task, Json params, F&& body) {
  CheckReport r;
  r.task = task;
  r.params = std::move(params);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const IntegralityViolation& e) {
    r.status = Status::IntegralityViolation;
    r.detail = e.what();
    r.equal = false;
  } catch (const LocalIntegralityViolation& e) {
    r.status = Status::IntegralityViolation;
    r.detail = e.what();
    r.equal = false;
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.detail = e.what();
    r.equal = false;
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::pair<long, long> split_theta(const mpq_class& theta) {
  if (theta == 0) throw std::invalid_argument("theta must be nonzero");
  if (!theta.get_num().fits_slong_p() || !theta.get_den().fits_slong_p())
    throw std::invalid_argument("theta out of range");
  return {theta.get_num().get_si(), theta.get_den().get_si()};
}

std::vector<Partition> partition_labels(const std::vector<Label>& labels) {
  std::vector<Partition> out;
  for (const auto& l : labels) out.push_back(std::get<Partition>(l));
  return out;
}

LMatrix laurent_diag(const std::vector<CycloProduct>& ps) {
  std::vector<LaurentPoly> d;
  for (const auto& p : ps) d.push_back(p.expand());
  return LMatrix::diagonal(d);
}

QMatrix value_diag(const std::vector<CycloProduct>& ps, const mpq_class& theta) {
  std::vector<mpq_class> d;
  for (const auto& p : ps) d.push_back(p.eval_at(theta));
  return QMatrix::diagonal(d);
}

LMatrix block_cartan_sum(int ell, int n) {
  std::vector<LMatrix> parts;
  for (const auto& bl : blocks(ell, n)) parts.push_back(graded_cartan_lhs(ell, bl.weight).entries);
  return direct_sum(parts);
}

bool is_power_of(mpz_class x, long base, long& k) {
  k = 0;
  if (x <= 0) return false;
  while (x != 1) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(base))) return false;
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(base));
    ++k;
  }
  return true;
}

// Pairwise coprime integers > 1 such that every input is a product of their powers.
std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& xs) {
  std::vector<mpz_class> base;
  for (auto x : xs) {
    x = abs(x);
    if (x > 1) base.push_back(x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (size_t i = 0; i < base.size() && !changed; ++i)
      for (size_t j = i + 1; j < base.size() && !changed; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        mpz_class u = base[i] / g, w = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const auto& y : {g, u, w})
          if (y > 1) base.push_back(y);
        changed = true;
      }
  }
  return base;
}

long multiplicity(mpz_class x, const mpz_class& q) {
  long e = 0;
  x = abs(x);
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    ++e;
  }
  return e;
}

}  // namespace

int local_case(long p, const mpq_class& theta, int ell) {
  auto [a, b] = split_theta(theta);
  mpz_class A = a, B = b, a2, b2;
  mpz_pow_ui(a2.get_mpz_t(), A.get_mpz_t(), 2);
  mpz_pow_ui(b2.get_mpz_t(), B.get_mpz_t(), 2);
  if (mpz_divisible_ui_p(mpz_class(a2 - b2).get_mpz_t(), static_cast<unsigned long>(p))) return 1;
  mpz_class al, bl;
  mpz_pow_ui(al.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(2 * ell));
  mpz_pow_ui(bl.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(2 * ell));
  if (mpz_divisible_ui_p(mpz_class(al - bl).get_mpz_t(), static_cast<unsigned long>(p))) return 2;
  return 3;
}

bool det_unit_guard(const LMatrix& a, const LMatrix& b) {
  if (a.rows() != b.rows()) return false;
  auto ratio = [&](const mpq_class& t) -> std::optional<mpq_class> {
    mpq_class da = determinant(specialize_entries(a, t)), db = determinant(specialize_entries(b, t));
    if (db == 0) return std::nullopt;
    return mpq_class(da / db);
  };
  auto g2 = ratio(2), gh = ratio(mpq_class(1, 2)), g3 = ratio(3);
  if (!g2 || !gh || !g3 || *g2 == 0 || *gh == 0) return false;
  // g(2) / g(1/2) = 4^k
  mpq_class q = *g2 / *gh;
  long k = 0;
  bool neg = false;
  if (q.get_den() == 1) {
    if (!is_power_of(q.get_num(), 4, k)) return false;
  } else if (q.get_num() == 1) {
    if (!is_power_of(q.get_den(), 4, k)) return false;
    neg = true;
  } else {
    return false;
  }
  long e = neg ? -k : k;
  mpq_class c = *g2 / qcartan::pow(mpq_class(2), e);
  return *g3 == c * qcartan::pow(mpq_class(3), e);
}

void q_matrix_facts(int ell, CheckReport& r) {
  const std::string tag = "Q_" + std::to_string(ell) + ": ";
  LMatrix A = quantized_cartan_A(ell), Q = Q_matrix(ell);
  LMatrix P = Q * A;
  r.check(P.is_upper_triangular(), tag + "Q[A] upper triangular");
  bool diag_ok = true;
  auto n = static_cast<size_t>(ell);
  for (size_t i = 0; i + 1 < n; ++i) diag_ok = diag_ok && P(i, i) == LaurentPoly(1L);
  diag_ok = diag_ok && P(n - 1, n - 1) == qint(ell + 1, 1).shifted(ell);
  r.check(diag_ok, tag + "diagonal (1,...,1,v^ell[ell+1])");
  r.check(determinant(A) == qint(ell + 1, 1), tag + "det [A] = [ell+1]");
  r.check(determinant(Q) == LaurentPoly::monomial(ell), tag + "det Q = v^ell");
}

CheckReport check_graded(int ell, int n) {
  return guarded("graded", Json{{"ell", ell}, {"n", n}, {"ring", "Q[v,v^-1]"}}, [&](CheckReport& r) {
    auto X = conjugated_diag(n, ell);
    std::vector<CycloProduct> I;
    for (const auto& lam : partition_labels(X.row_labels)) I.push_back(I_graded(ell, lam));
    LMatrix D = laurent_diag(I);
    r.check(det_unit_guard(X.entries, D), "det(X) = unit * prod I");
    auto L = snf(X.entries), R = snf(D);
    r.check(L.is_chain(), "lhs is a divisibility chain");
    r.check(R == snf_cyclo_diagonal(I), "rhs agrees with the factored computation");
    r.set_sides(L.serialize(), R.serialize());
  });
}

CheckReport check_kor(int ell, int n) {
  return guarded("kor", Json{{"ell", ell}, {"n", n}, {"ring", "Z"}}, [&](CheckReport& r) {
    const RingSpec Z = RingSpec::integers();
    auto X = conjugated_diag(n, ell);
    std::vector<CycloProduct> I;
    for (const auto& lam : partition_labels(X.row_labels)) I.push_back(I_graded(ell, lam));
    auto route1_lhs = snf(specialize(X.entries, 1, 1).matrix, Z);
    auto route1_rhs = snf(value_diag(I, 1), Z);
    r.check(route1_lhs == route1_rhs, "route (i): X|_{v=1} ~ diag(I|_{v=1}) over Z");

    QMatrix C1 = specialize_entries(block_cartan_sum(ell, n), 1);
    auto crp = parts_filtered(PartitionFilter::class_regular(ell), n);
    r.check(C1.rows() == crp.size(), "block Cartan size = |CRP_ell(n)|");
    std::vector<mpq_class> rv;
    std::vector<mpz_class> sorted;
    bool graded_match = true;
    for (const auto& lam : crp) {
      mpz_class x = r_classic(ell, lam);
      rv.emplace_back(x);
      sorted.push_back(x);
      graded_match = graded_match && r_graded(ell, lam).eval_at(1) == mpq_class(x);
    }
    r.check(graded_match, "r^v|_{v=1} = r for every class regular partition");
    std::sort(sorted.begin(), sorted.end());
    Json ms = Json::array();
    for (const auto& x : sorted) ms.push_back(x.get_str());
    r.extra["r_multiset"] = ms;
    auto L = snf(C1, Z), R = snf(QMatrix::diagonal(rv), Z);
    r.set_sides(L.serialize(), R.serialize());
  });
}

CheckReport check_specialized(int ell, int n, const mpq_class& theta) {
  return guarded("specialized", Json{{"ell", ell}, {"n", n}, {"theta", theta.get_str()}}, [&](CheckReport& r) {
    auto [a, b] = split_theta(theta);
    auto X = conjugated_diag(n, ell);
    auto S = specialize(X.entries, a, b);
    const RingSpec ring = RingSpec::integers_inverted(S.N);
    r.params["ring"] = ring.to_string();
    std::vector<CycloProduct> I;
    for (const auto& lam : partition_labels(X.row_labels)) I.push_back(I_graded(ell, lam));
    auto L = snf(S.matrix, ring), R = snf(value_diag(I, theta), ring);
    r.check(L.is_chain(), "lhs is a divisibility chain");
    r.set_sides(L.serialize(), R.serialize());
  });
}

CheckReport check_local(int ell, int n, long p, const mpq_class& theta) {
  Json params{{"ell", ell}, {"n", n}, {"p", p}, {"theta", theta.get_str()}, {"ring", "Z_(" + std::to_string(p) + ")"}};
  return guarded("local", params, [&](CheckReport& r) {
    auto [a, b] = split_theta(theta);
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (a % p == 0 || b % p == 0) throw std::invalid_argument("p must not divide a*b");
    int c = local_case(p, theta, ell);
    r.local_case = c;
    auto Y = conjugated_diag_local(static_cast<int>(p), n, ell, theta);
    std::vector<mpq_class> vals;
    std::vector<long> expected;
    for (const auto& lam : partition_labels(Y.row_labels)) {
      mpq_class x = I_local(ell, p, lam).eval_at(theta);
      vals.push_back(x);
      auto v = val_p(x, p);
      if (!v) throw std::logic_error("I_local vanished at theta");
      expected.push_back(*v);
    }
    std::sort(expected.begin(), expected.end());
    const RingSpec ring = RingSpec::p_local(p);
    auto L = snf(Y.entries, ring), R = snf(QMatrix::diagonal(vals), ring);
    r.check(R.exponents == expected, "rhs exponents are the sorted valuations");
    if (c == 3) {
      bool all_zero = std::all_of(L.exponents.begin(), L.exponents.end(), [](long e) { return e == 0; }) &&
                      std::all_of(expected.begin(), expected.end(), [](long e) { return e == 0; });
      r.check(all_zero, "case 3: both sides unimodular");
    }
    r.set_sides(L.serialize(), R.serialize());
  });
}

CheckReport check_cartan_blocks(int ell, int d) {
  return guarded("cartan-blocks", Json{{"ell", ell}, {"d", d}, {"ring", "Q[v,v^-1]"}}, [&](CheckReport& r) {
    auto Lc = graded_cartan_lhs(ell, d), Rc = graded_cartan_rhs(ell, d);
    r.check(Lc.size() == Rc.size(), "both sides have size |Par_{ell-1}(d)|");
    r.check(det_unit_guard(Lc.entries, Rc.entries), "determinants agree up to a unit");
    for (int l = 1; l <= 8; ++l) q_matrix_facts(l, r);
    auto L = snf(Lc.entries), R = snf(Rc.entries);
    r.set_sides(L.serialize(), R.serialize());
  });
}

CheckReport check_conjecture(int ell, int n) {
  return guarded("conjecture", Json{{"ell", ell}, {"n", n}, {"ring", "Q[v,v^-1]"}}, [&](CheckReport& r) {
    LMatrix C = block_cartan_sum(ell, n);
    auto crp = parts_filtered(PartitionFilter::class_regular(ell), n);
    std::vector<CycloProduct> rv;
    for (const auto& lam : crp) rv.push_back(r_graded(ell, lam));
    LMatrix D = laurent_diag(rv);
    r.check(C.rows() == crp.size(), "chain lengths equal |CRP_ell(n)|");
    r.check(det_unit_guard(C, D), "determinants agree up to a unit");
    auto L = snf(C), R = snf(D);
    r.check(R == snf_cyclo_diagonal(rv), "rhs agrees with the factored computation");
    r.set_sides(L.serialize(), R.serialize());
  });
}

CheckReport check_fitting(int ell, int n, const std::vector<mpq_class>& thetas) {
  Json ts = Json::array();
  for (const auto& t : thetas) ts.push_back(t.get_str());
  return guarded("fitting", Json{{"ell", ell}, {"n", n}, {"thetas", ts}}, [&](CheckReport& r) {
    auto X = conjugated_diag(n, ell);
    std::vector<CycloProduct> I;
    for (const auto& lam : partition_labels(X.row_labels)) I.push_back(I_graded(ell, lam));
    const size_t rk = I.size();
    std::vector<std::string> lhs, rhs;

    // over Q[v,v^-1]: generator of Fitt_d is the product of the first rk - d invariant factors
    auto chain = snf(X.entries);
    std::map<long, std::vector<long>> exps;
    for (const auto& P : I)
      for (auto [b, e] : P.factors()) exps[b];
    for (auto& [b, v] : exps) {
      for (const auto& P : I) v.push_back(P.exponent(b));
      std::sort(v.begin(), v.end());
    }
    for (size_t d = 0; d < rk; ++d) {
      size_t k = rk - d;
      lhs.push_back("Q[v,v^-1] d=" + std::to_string(d) + ": " + chain.laurent_product(k).normalized().to_string());
      std::map<long, long> f;
      for (const auto& [b, v] : exps) {
        long s = 0;
        for (size_t i = 0; i < k; ++i) s += v[i];
        if (s) f[b] = s;
      }
      rhs.push_back("Q[v,v^-1] d=" + std::to_string(d) + ": " + CycloProduct(f).expand().normalized().to_string());
    }

    // over Z[1/|ab|]
    for (const auto& theta : thetas) {
      auto [a, b] = split_theta(theta);
      auto S = specialize(X.entries, a, b);
      const RingSpec ring = RingSpec::integers_inverted(S.N);
      auto zc = snf(S.matrix, ring);
      std::vector<mpz_class> assoc;
      for (const auto& P : I) {
        mpq_class x = P.eval_at(theta);
        r.check(strip_primes(x.get_den(), S.N) == 1, "I(lambda)|_theta is integral over " + ring.to_string());
        assoc.push_back(strip_primes(x.get_num(), S.N));
      }
      auto base = coprime_base(assoc);
      std::vector<std::vector<long>> bexp;
      for (const auto& q : base) {
        std::vector<long> e;
        for (const auto& x : assoc) e.push_back(multiplicity(x, q));
        std::sort(e.begin(), e.end());
        bexp.push_back(std::move(e));
      }
      for (size_t d = 0; d < rk; ++d) {
        size_t k = rk - d;
        mpz_class g = 1;
        for (size_t i = 0; i < base.size(); ++i) {
          long s = 0;
          for (size_t j = 0; j < k; ++j) s += bexp[i][j];
          mpz_class t;
          mpz_pow_ui(t.get_mpz_t(), base[i].get_mpz_t(), static_cast<unsigned long>(s));
          g *= t;
        }
        const std::string tag = ring.to_string() + " theta=" + theta.get_str() + " d=" + std::to_string(d) + ": ";
        lhs.push_back(tag + zc.integer_product(k).get_str());
        rhs.push_back(tag + g.get_str());
      }
    }
    r.set_sides(std::move(lhs), std::move(rhs));
  });
}

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, const RunOptions& opts) {
  std::vector<CheckReport> out(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::set<std::string> exhausted;
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      bool skip = false;
      {
        std::lock_guard lock(mu);
        skip = !t.family.empty() && exhausted.count(t.family);
      }
      if (skip) {
        CheckReport r;
        r.task = t.name;
        r.params = t.params;
        r.status = Status::SkippedBudget;
        r.detail = "a smaller task of the same family exceeded the time budget";
        out[i] = std::move(r);
        continue;
      }
      out[i] = t.run();
      if (opts.budget_seconds && out[i].millis > static_cast<long>(*opts.budget_seconds * 1000) && !t.family.empty()) {
        std::lock_guard lock(mu);
        exhausted.insert(t.family);
      }
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace qcartan::verify
