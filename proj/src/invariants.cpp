#include "linklab/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace linklab {

int linking_number(const PlanarDiagram& d, const std::string& a, const std::string& b) {
  if (a == b) throw DiagramError("linking number needs two distinct components");
  if (!d.has_component(a) || !d.has_component(b)) throw DiagramError("unknown component");
  int sum = 0;
  for (const Crossing& c : d.crossings()) {
    const std::string& cu = d.component_of_arc(c.under_in);
    const std::string& co = d.component_of_arc(c.over_in);
    if ((cu == a && co == b) || (cu == b && co == a)) sum += sign_value(c.sign);
  }
  if (sum % 2 != 0) throw DiagramError("internal: odd signed crossing sum between components");
  return sum / 2;
}

std::int64_t determinant_from_seifert(const IntMatrix& v) {
  if (!v.square()) throw std::invalid_argument("Seifert matrix must be square");
  const std::int64_t det = v.plus(v.transposed()).determinant();
  return det < 0 ? -det : det;
}

namespace {

// Determinant of the polynomial matrix V - t V^T by Laplace expansion with
// memoization over column subsets; sizes here are tiny (2 * genus).
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  if (n > 20) throw std::invalid_argument("matrix too large for Alexander expansion");
  std::map<std::uint32_t, LaurentPoly> memo;
  std::function<LaurentPoly(int, std::uint32_t)> go = [&](int row,
                                                          std::uint32_t cols) -> LaurentPoly {
    if (row == n) return LaurentPoly(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    LaurentPoly acc;
    int parity = 0;
    for (int c = 0; c < n; ++c) {
      if (cols & (1u << c)) continue;
      if (!m[row][c].zero()) {
        LaurentPoly term = m[row][c] * go(row + 1, cols | (1u << c));
        acc = (parity % 2 == 0) ? acc + term : acc - term;
      }
      ++parity;
    }
    memo[cols] = acc;
    return acc;
  };
  return go(0, 0);
}

}  // namespace

LaurentPoly alexander_from_seifert(const IntMatrix& v) {
  if (!v.square()) throw std::invalid_argument("Seifert matrix must be square");
  const int n = v.rows();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = LaurentPoly(v.at(i, j)) - LaurentPoly::monomial(v.at(j, i), 1);
  return poly_det(m).normalized();
}

std::int64_t knot_determinant(const PlanarDiagram& knot) {
  return determinant_from_seifert(seifert_matrix(seifert_algorithm(knot)));
}

LaurentPoly knot_alexander(const PlanarDiagram& knot) {
  return alexander_from_seifert(seifert_matrix(seifert_algorithm(knot)));
}

std::int64_t component_determinant(const PlanarDiagram& d, const std::string& component) {
  return knot_determinant(sublink(d, {component}));
}

}  // namespace linklab
