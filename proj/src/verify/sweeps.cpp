#include "qcartan/verify/sweeps.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcartan::verify {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::string theta_str(const mpq_class& t) { return t.get_str(); }

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty list");
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw std::invalid_argument("empty item in '" + text + "'");
    auto dots = item.find("..");
    auto dash = item.find('-', 1);
    if (dots != std::string::npos) {
      int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    } else if (dash != std::string::npos) {
      int lo = to_int(item.substr(0, dash)), hi = to_int(item.substr(dash + 1));
      if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    } else {
      out.push_back(to_int(item));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<mpq_class> parse_theta_list(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty theta list");
  std::vector<mpq_class> out;
  for (const auto& item : split(text, ',')) {
    mpq_class q;
    if (item.empty() || q.set_str(item, 10) != 0) throw std::invalid_argument("not a rational: '" + item + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + item + "'");
    q.canonicalize();
    if (q == 0) throw std::invalid_argument("theta must be nonzero");
    out.push_back(q);
  }
  return out;
}

std::vector<Task> graded_tasks(const SweepOptions& o) {
  std::vector<Task> ts;
  for (int ell : o.ell.value_or(range(2, 6)))
    for (int n : o.n.value_or(range(0, o.hard ? 10 : 8)))
      ts.push_back({"graded", Json{{"ell", ell}, {"n", n}}, [=] { return check_graded(ell, n); },
                    "graded:" + std::to_string(ell)});
  return ts;
}

std::vector<Task> kor_tasks(const SweepOptions& o) {
  std::vector<Task> ts;
  for (int ell : o.ell.value_or(std::vector<int>{2, 3, 4, 6}))
    for (int n : o.n.value_or(range(0, o.hard ? 9 : 7)))
      ts.push_back({"kor", Json{{"ell", ell}, {"n", n}}, [=] { return check_kor(ell, n); }, "kor:" + std::to_string(ell)});
  return ts;
}

std::vector<Task> specialized_tasks(const SweepOptions& o) {
  std::vector<Task> ts;
  auto thetas = o.thetas.value_or(parse_theta_list("1,2,1/2,3,2/3,-2"));
  for (const auto& theta : thetas)
    for (int ell : o.ell.value_or(range(2, 6)))
      for (int n : o.n.value_or(range(0, o.hard ? 9 : 7)))
        ts.push_back({"specialized", Json{{"ell", ell}, {"n", n}, {"theta", theta_str(theta)}},
                      [=] { return check_specialized(ell, n, theta); },
                      "specialized:" + std::to_string(ell) + ":" + theta_str(theta)});
  return ts;
}

std::vector<Task> local_tasks(const SweepOptions& o) {
  std::vector<Task> ts;
  auto thetas = o.thetas.value_or(parse_theta_list("2,3,1/2,5,7/2"));
  for (long p : o.primes.value_or(std::vector<long>{2, 3, 5}))
    for (const auto& theta : thetas) {
      if (mpz_divisible_ui_p(theta.get_num().get_mpz_t(), static_cast<unsigned long>(p)) ||
          mpz_divisible_ui_p(theta.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        continue;
      int top = (p == 2 ? 8 : 9) + (o.hard ? 2 : 0);
      for (int ell : o.ell.value_or(range(2, 6)))
        for (int n : o.n.value_or(range(0, top)))
          ts.push_back({"local", Json{{"ell", ell}, {"n", n}, {"p", p}, {"theta", theta_str(theta)}},
                        [=] { return check_local(ell, n, p, theta); },
                        "local:" + std::to_string(p) + ":" + std::to_string(ell) + ":" + theta_str(theta)});
    }
  return ts;
}

std::vector<Task> cartan_block_tasks(const SweepOptions& o) {
  std::vector<std::pair<int, int>> grid;
  if (o.ell || o.d) {
    for (int ell : o.ell.value_or(std::vector<int>{2, 3}))
      for (int d : o.d.value_or(range(0, 4))) grid.emplace_back(ell, d);
  } else {
    int extra = o.hard ? 1 : 0;
    for (int ell : {2, 3})
      for (int d = 0; d <= 4 + extra; ++d) grid.emplace_back(ell, d);
    for (int d = 0; d <= 2 + extra; ++d) grid.emplace_back(4, d);
  }
  std::vector<Task> ts;
  for (auto [ell, d] : grid)
    ts.push_back({"cartan-blocks", Json{{"ell", ell}, {"d", d}}, [=] { return check_cartan_blocks(ell, d); },
                  "cartan-blocks:" + std::to_string(ell)});
  return ts;
}

std::vector<Task> conjecture_tasks(const SweepOptions& o) {
  std::vector<Task> ts;
  for (int ell : o.ell.value_or(std::vector<int>{2, 3}))
    for (int n : o.n.value_or(range(0, o.hard ? 8 : 6)))
      ts.push_back({"conjecture", Json{{"ell", ell}, {"n", n}}, [=] { return check_conjecture(ell, n); },
                    "conjecture:" + std::to_string(ell)});
  return ts;
}

std::vector<Task> fitting_tasks(const SweepOptions& o) {
  std::mt19937_64 rng(o.seed);
  auto ells = o.ell.value_or(range(2, 6));
  auto ns = o.n.value_or(range(1, 7));
  auto pool = o.thetas.value_or(parse_theta_list("2,1/2,3,2/3,-2,5,3/4,-1/3"));
  std::vector<std::pair<int, int>> pairs;
  for (int ell : ells)
    for (int n : ns) pairs.emplace_back(ell, n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  if (pairs.size() > 10) pairs.resize(10);
  std::vector<Task> ts;
  for (auto [ell, n] : pairs) {
    std::vector<mpq_class> th = pool;
    std::shuffle(th.begin(), th.end(), rng);
    if (th.size() > 3) th.resize(3);
    Json tj = Json::array();
    for (const auto& t : th) tj.push_back(theta_str(t));
    ts.push_back({"fitting", Json{{"ell", ell}, {"n", n}, {"thetas", tj}}, [=] { return check_fitting(ell, n, th); }, ""});
  }
  return ts;
}

std::vector<Task> property_tasks(const SweepOptions& o) {
  PropertyBounds b;
  if (o.hard) b = {10, 60, 1000};
  if (o.n) b.n = o.n->empty() ? 0 : o.n->back();
  auto seed = o.seed;
  return {{"props", Json{{"seed", seed}, {"n", b.n}, {"qmax", b.qmax}, {"samples", b.samples}},
           [=] { return run_property_suite(seed, b); }, ""}};
}

CheckReport local_case_coverage(const std::vector<CheckReport>& reports) {
  CheckReport r;
  r.task = "local-coverage";
  std::set<int> hit;
  Json pairs = Json::array();
  std::set<std::string> seen;
  for (const auto& rep : reports) {
    if (rep.task != "local" || !rep.local_case) continue;
    hit.insert(*rep.local_case);
    std::string key = rep.params.value("p", Json(0)).dump() + ":" + rep.params.value("theta", "") + ":" +
                      rep.params.value("ell", Json(0)).dump();
    if (seen.insert(key).second)
      pairs.push_back(Json{{"p", rep.params["p"]}, {"theta", rep.params["theta"]}, {"ell", rep.params["ell"]},
                           {"case", *rep.local_case}});
  }
  r.extra["cases_by_pair"] = pairs;
  std::vector<std::string> lhs;
  for (int c : hit) lhs.push_back("case " + std::to_string(c));
  r.set_sides(lhs, {"case 1", "case 2", "case 3"});
  return r;
}

}  // namespace qcartan::verify
