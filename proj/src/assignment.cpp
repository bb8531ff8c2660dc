#include "stosc/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace stosc {

// Hungarian algorithm (potentials formulation) on the rectangular cost
// matrix cost = -score, O(rows^2 * cols).
std::vector<int> max_assignment(const Eigen::MatrixXd& score) {
  const int n = int(score.rows()), m = int(score.cols());
  if (n > m) throw std::invalid_argument("max_assignment: more rows than columns");
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> match(m + 1, n);  // column -> row, n = unmatched
  for (int i = 0; i < n; ++i) {
    std::vector<double> minv(m + 1, inf);
    std::vector<bool> visited(m + 1, false);
    std::vector<int> parent(m + 1, m);
    int j0 = m;  // virtual start column
    match[m] = i;
    do {
      visited[j0] = true;
      const int i0 = match[j0];
      double delta = inf;
      int j1 = -1;
      for (int j = 0; j < m; ++j) {
        if (visited[j]) continue;
        const double cur = -score(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          parent[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (visited[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != n);
    while (j0 != m) {
      const int j1 = parent[j0];
      match[j0] = match[j1];
      j0 = j1;
    }
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 0; j < m; ++j)
    if (match[j] != n) row_to_col[match[j]] = j;
  return row_to_col;
}

}  // namespace stosc
