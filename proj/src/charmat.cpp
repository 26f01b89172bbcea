#include "qcartan/charmat.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "qcartan/numtheory.hpp"

namespace qcartan {

namespace {

using Caps = std::vector<int>;

// Number of ways to place parts[idx..] into bins with the given remaining capacities
// so that every bin ends exactly full. Bins with equal capacity are interchangeable.
mpz_class count_fills(const std::vector<int>& parts, size_t idx, const Caps& caps,
                      std::map<std::pair<size_t, Caps>, mpz_class>& memo) {
  if (idx == parts.size()) {
    for (int c : caps)
      if (c) return 0;
    return 1;
  }
  auto key = std::make_pair(idx, caps);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  mpz_class total = 0;
  int part = parts[idx];
  for (size_t i = 0; i < caps.size(); ++i) {
    if (caps[i] < part) continue;
    if (i > 0 && caps[i] == caps[i - 1]) continue;
    long same = std::count(caps.begin(), caps.end(), caps[i]);
    Caps next = caps;
    next[i] -= part;
    std::sort(next.begin(), next.end());
    total += same * count_fills(parts, idx + 1, next, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

LMatrix mul(const QMatrix& a, const LMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
  LMatrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += b(k, j) * a(i, k);
    }
  return c;
}

LMatrix mul(const LMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
  LMatrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

void require_integral(const LMatrix& m, const char* what) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integral())
        throw IntegralityViolation(std::string(what) + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + m(i, j).to_string() + " is not in Z[v,v^-1]");
}

std::mutex g_x_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const LabeledMatrix<LaurentPoly>>> g_x_cache;

std::mutex g_m_mutex;
std::map<int, std::shared_ptr<const LabeledMatrix<mpz_class>>> g_m_cache;
std::map<int, std::shared_ptr<const LabeledMatrix<mpq_class>>> g_minv_cache;

}  // namespace

mpz_class M_entry(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  std::map<std::pair<size_t, Caps>, mpz_class> memo;
  Caps caps = lambda.parts();
  std::sort(caps.begin(), caps.end());
  return count_fills(mu.parts(), 0, caps, memo);
}

LabeledMatrix<mpz_class> M_matrix(int n) {
  {
    std::lock_guard lock(g_m_mutex);
    if (auto it = g_m_cache.find(n); it != g_m_cache.end()) return *it->second;
  }
  const auto& par = parts_all(n);
  ZMatrix m(par.size(), par.size());
  for (size_t i = 0; i < par.size(); ++i)
    for (size_t j = 0; j < par.size(); ++j) m(i, j) = M_entry(par[i], par[j]);
  auto out = std::make_shared<const LabeledMatrix<mpz_class>>(
      LabeledMatrix<mpz_class>{as_labels(par), as_labels(par), std::move(m), "M_n"});
  std::lock_guard lock(g_m_mutex);
  g_m_cache.emplace(n, out);
  return *out;
}

LabeledMatrix<mpq_class> M_inverse(int n) {
  {
    std::lock_guard lock(g_m_mutex);
    if (auto it = g_minv_cache.find(n); it != g_minv_cache.end()) return *it->second;
  }
  auto m = M_matrix(n);
  QMatrix inv = inverse(to_rational(m.entries));
  auto out = std::make_shared<const LabeledMatrix<mpq_class>>(
      LabeledMatrix<mpq_class>{m.col_labels, m.row_labels, std::move(inv), "M_n^-1"});
  std::lock_guard lock(g_m_mutex);
  g_minv_cache.emplace(n, out);
  return *out;
}

LabeledMatrix<mpz_class> N_matrix(int p, int n) {
  auto pow = parts_filtered(PartitionFilter::pow(p), n);
  ZMatrix m(pow.size(), pow.size());
  for (size_t i = 0; i < pow.size(); ++i)
    for (size_t j = 0; j < pow.size(); ++j) m(i, j) = M_entry(pow[i], pow[j]);
  return {as_labels(pow), as_labels(pow), std::move(m), "N^(p)_n"};
}

LabeledMatrix<mpz_class> L_matrix(int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("L_matrix: p must be prime");
  const auto& par = parts_all(n);
  std::vector<PAdicSplit> splits;
  for (const auto& lam : par) splits.push_back(p_adic_split(p, lam));
  ZMatrix m(par.size(), par.size());
  for (size_t i = 0; i < par.size(); ++i)
    for (size_t j = 0; j < par.size(); ++j) {
      if (!(splits[i].nu == splits[j].nu)) continue;
      mpz_class e = 1;
      for (const auto& [idx, comp] : splits[i].family) {
        e *= M_entry(comp, splits[j].family.at(idx));
        if (e == 0) break;
      }
      m(i, j) = e;
    }
  return {as_labels(par), as_labels(par), std::move(m), "L^(p)_n"};
}

LMatrix conjugate_by(const QMatrix& P, const LMatrix& D) { return mul(mul(inverse(P), D), P); }

LabeledMatrix<LaurentPoly> conjugated_diag(int n, int ell) {
  if (ell < 2) throw std::invalid_argument("conjugated_diag: ell must be at least 2");
  {
    std::lock_guard lock(g_x_mutex);
    if (auto it = g_x_cache.find({n, ell}); it != g_x_cache.end()) return *it->second;
  }
  auto M = M_matrix(n);
  auto Minv = M_inverse(n);
  const auto& par = parts_all(n);
  size_t sz = par.size();
  std::vector<LaurentPoly> J;
  for (const auto& lam : par) J.push_back(J_graded(ell, lam).expand());
  LMatrix X(sz, sz);
  for (size_t k = 0; k < sz; ++k)
    for (size_t i = 0; i < sz; ++i) {
      if (M.entries(i, k) == 0) continue;
      for (size_t j = 0; j < sz; ++j) {
        if (Minv.entries(k, j) == 0) continue;
        X(i, j) += J[k] * (mpq_class(M.entries(i, k)) * Minv.entries(k, j));
      }
    }
  require_integral(X, "conjugated_diag");
  auto out = std::make_shared<const LabeledMatrix<LaurentPoly>>(
      LabeledMatrix<LaurentPoly>{as_labels(par), as_labels(par), std::move(X), "M_n*diag(J)*M_n^-1"});
  std::lock_guard lock(g_x_mutex);
  g_x_cache.emplace(std::make_pair(n, ell), out);
  return *out;
}

LabeledMatrix<mpq_class> conjugated_diag_local(int p, int n, int ell, const mpq_class& theta) {
  if (!is_prime(p)) throw std::invalid_argument("conjugated_diag_local: p must be prime");
  if (theta == 0 || theta.get_num() % p == 0 || theta.get_den() % p == 0)
    throw std::invalid_argument("conjugated_diag_local: theta must be a p-adic unit");
  auto N = N_matrix(p, n);
  QMatrix Nq = to_rational(N.entries);
  QMatrix Ninv = inverse(Nq);
  std::vector<mpq_class> d;
  for (const auto& l : N.row_labels) d.push_back(J_graded(ell, std::get<Partition>(l)).eval_at(theta));
  QMatrix X = Nq * QMatrix::diagonal(d) * Ninv;
  for (size_t i = 0; i < X.rows(); ++i)
    for (size_t j = 0; j < X.cols(); ++j)
      if (X(i, j).get_den() % p == 0)
        throw LocalIntegralityViolation("conjugated_diag_local: entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") = " + X(i, j).get_str() + " is not p-integral");
  return {N.row_labels, N.col_labels, std::move(X), "N*diag(J|theta)*N^-1"};
}

std::vector<std::vector<int>> mult_tuples(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SymPower sym_power(const LMatrix& A, int m) {
  if (!A.square()) throw std::invalid_argument("sym_power: matrix must be square");
  if (m < 0) throw std::invalid_argument("sym_power: negative power");
  int n = static_cast<int>(A.rows());
  SymPower out;
  out.basis = mult_tuples(m, n);
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = i;
  out.matrix = LMatrix(out.basis.size(), out.basis.size());
  for (size_t col = 0; col < out.basis.size(); ++col) {
    std::map<std::vector<int>, LaurentPoly> poly{{{}, LaurentPoly(1L)}};
    for (int jk : out.basis[col]) {
      std::map<std::vector<int>, LaurentPoly> next;
      for (const auto& [mono, c] : poly)
        for (int i = 0; i < n; ++i) {
          const auto& a = A(static_cast<size_t>(i), static_cast<size_t>(jk));
          if (a.is_zero()) continue;
          auto key = mono;
          key.insert(std::upper_bound(key.begin(), key.end(), i), i);
          next[key] += c * a;
        }
      poly = std::move(next);
    }
    for (auto& [mono, c] : poly)
      if (!c.is_zero()) out.matrix(index.at(mono), col) = std::move(c);
  }
  return out;
}

LabeledMatrix<LaurentPoly> S_d(const LMatrix& A, int d) {
  if (!A.square()) throw std::invalid_argument("S_d: matrix must be square");
  int ell = static_cast<int>(A.rows());
  const auto& mps = multipartitions(ell, d);
  std::vector<Partition> shape;
  // per multipartition: for each part size t, the colour tuple
  std::vector<std::map<int, std::vector<int>>> colours;
  for (const auto& mp : mps) {
    Partition u;
    std::map<int, std::vector<int>> cols;
    for (int c = 0; c < ell; ++c) {
      u = u + mp[static_cast<size_t>(c)];
      for (auto [t, m] : mp[static_cast<size_t>(c)].multiplicities()) cols[t].insert(cols[t].end(), m, c);
    }
    shape.push_back(u);
    colours.push_back(std::move(cols));
  }
  std::map<std::pair<int, int>, std::pair<SymPower, std::map<std::vector<int>, size_t>>> sym_cache;
  auto sym = [&](int t, int m) -> const std::pair<SymPower, std::map<std::vector<int>, size_t>>& {
    auto it = sym_cache.find({t, m});
    if (it != sym_cache.end()) return it->second;
    // row convention v_i -> sum_j a_ij v_j, i.e. transpose of Sym^m of the transpose
    SymPower sp = sym_power(A.transpose().map<LaurentPoly>([t](const LaurentPoly& f) { return f.inflate(t); }), m);
    sp.matrix = sp.matrix.transpose();
    std::map<std::vector<int>, size_t> idx;
    for (size_t i = 0; i < sp.basis.size(); ++i) idx[sp.basis[i]] = i;
    return sym_cache.emplace(std::make_pair(t, m), std::make_pair(std::move(sp), std::move(idx))).first->second;
  };
  LMatrix S(mps.size(), mps.size());
  for (size_t a = 0; a < mps.size(); ++a)
    for (size_t b = 0; b < mps.size(); ++b) {
      if (!(shape[a] == shape[b])) continue;
      LaurentPoly e(1L);
      for (auto [t, m] : shape[a].multiplicities()) {
        const auto& [sp, idx] = sym(t, m);
        e *= sp.matrix(idx.at(colours[a].at(t)), idx.at(colours[b].at(t)));
        if (e.is_zero()) break;
      }
      S(a, b) = std::move(e);
    }
  return {as_labels(mps), as_labels(mps), std::move(S), "S^d(A)"};
}

LabeledMatrix<mpz_class> M_colored(int ell, int d) {
  if (ell < 1) throw std::invalid_argument("M_colored: ell must be positive");
  const auto& mps = multipartitions(ell, d);
  ZMatrix m(mps.size(), mps.size());
  for (size_t a = 0; a < mps.size(); ++a)
    for (size_t b = 0; b < mps.size(); ++b) {
      mpz_class e = 1;
      for (size_t i = 0; i < static_cast<size_t>(ell) && e != 0; ++i) {
        if (mps[a][i].size() != mps[b][i].size()) e = 0;
        else e *= M_entry(mps[b][i], mps[a][i]);
      }
      m(a, b) = e;
    }
  return {as_labels(mps), as_labels(mps), std::move(m), "M_{ell,d}"};
}

LMatrix quantized_cartan_A(int ell) {
  if (ell < 1) throw std::invalid_argument("quantized_cartan_A: ell must be positive");
  auto n = static_cast<size_t>(ell);
  LMatrix A(n, n);
  for (size_t i = 0; i < n; ++i) {
    A(i, i) = qint(2, 1);
    if (i + 1 < n) {
      A(i, i + 1) = qint(-1, 1);
      A(i + 1, i) = qint(-1, 1);
    }
  }
  return A;
}

LMatrix Q_matrix(int ell) {
  if (ell < 1) throw std::invalid_argument("Q_matrix: ell must be positive");
  auto n = static_cast<size_t>(ell);
  LMatrix Q(n, n);
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j) {
      LaurentPoly e;
      if (j == i || j == i + 1) e = qint(i, 1).shifted(j);
      else if (j < i) e = qint(j, 1).shifted(i);
      Q(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = e;
    }
  return Q;
}

LabeledMatrix<LaurentPoly> graded_cartan_lhs(int ell, int d) {
  if (ell < 2) throw std::invalid_argument("graded_cartan_lhs: ell must be at least 2");
  auto S = S_d(quantized_cartan_A(ell - 1), d);
  auto Mc = M_colored(ell - 1, d);
  if (S.row_labels != Mc.row_labels) throw std::logic_error("graded_cartan_lhs: index order mismatch");
  QMatrix P = to_rational(Mc.entries);
  LMatrix C = conjugate_by(P, S.entries);
  require_integral(C, "graded_cartan_lhs");
  return {S.row_labels, S.col_labels, std::move(C), "M_{ell-1,d}^-1*S^d([A])*M_{ell-1,d}"};
}

LabeledMatrix<LaurentPoly> graded_cartan_rhs(int ell, int d) {
  if (ell < 2) throw std::invalid_argument("graded_cartan_rhs: ell must be at least 2");
  std::vector<LMatrix> blocks;
  std::vector<Label> labels;
  for (int s = 0; s <= d; ++s) {
    const auto& outer = multipartitions(ell - 2, d - s);
    if (outer.empty()) continue;
    auto X = conjugated_diag(s, ell);
    for (const auto& omega : outer) {
      blocks.push_back(X.entries);
      for (const auto& l : X.row_labels) {
        Multipartition mp = omega;
        mp.push_back(std::get<Partition>(l));
        labels.emplace_back(std::move(mp));
      }
    }
  }
  return {labels, labels, direct_sum(blocks), "sum_s (M_s*diag*M_s^-1)^k"};
}

}  // namespace qcartan
