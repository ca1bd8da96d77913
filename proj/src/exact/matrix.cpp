#include "askey/exact/matrix.hpp"

#include "askey/errors.hpp"

namespace askey {

ExactScalar det(const ExactMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw NotSquare();
  for (const auto& row : m) {
    if (row.size() != n) throw NotSquare();
  }
  ExactMatrix a = m;
  ExactScalar sign(1);
  ExactScalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace askey
