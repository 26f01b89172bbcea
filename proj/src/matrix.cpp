#include "qcartan/matrix.hpp"

namespace qcartan {

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix not square");
  size_t n = m.rows();
  QMatrix a = m, inv = QMatrix::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    a.swap_rows(piv, col);
    inv.swap_rows(piv, col);
    mpq_class s = 1 / a(col, col);
    for (size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      mpq_class f = a(i, col);
      for (size_t j = 0; j < n; ++j) {
        if (a(col, j) != 0) a(i, j) -= f * a(col, j);
        if (inv(col, j) != 0) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

mpq_class determinant(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  size_t n = m.rows();
  QMatrix a = m;
  mpq_class det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      a.swap_rows(piv, col);
      det = -det;
    }
    det *= a(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      mpq_class f = a(i, col) / a(col, col);
      for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

QMatrix to_rational(const ZMatrix& m) {
  return m.map<mpq_class>([](const mpz_class& x) { return mpq_class(x); });
}

LMatrix to_laurent(const QMatrix& m) {
  return m.map<LaurentPoly>([](const mpq_class& x) { return LaurentPoly(x); });
}

LMatrix to_laurent(const ZMatrix& m) {
  return m.map<LaurentPoly>([](const mpz_class& x) { return LaurentPoly(x); });
}

QMatrix specialize_entries(const LMatrix& m, const mpq_class& theta) {
  return m.map<mpq_class>([&](const LaurentPoly& f) { return f.eval_at(theta); });
}

LMatrix bar_transpose(const LMatrix& m) {
  return m.transpose().map<LaurentPoly>([](const LaurentPoly& f) { return f.bar(); });
}

bool all_integral(const LMatrix& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integral()) return false;
  return true;
}

std::string label_string(const Label& l) {
  if (const auto* p = std::get_if<Partition>(&l)) return p->to_string();
  return to_string(std::get<Multipartition>(l));
}

std::vector<Label> as_labels(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }
std::vector<Label> as_labels(const std::vector<Multipartition>& v) { return {v.begin(), v.end()}; }

}  // namespace qcartan
