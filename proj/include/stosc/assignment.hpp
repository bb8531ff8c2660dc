#pragma once

#include <Eigen/Dense>
#include <vector>

namespace stosc {

// Maximum-total-score assignment of rows to distinct columns of `score`
// (rows <= cols).  Returns the chosen column per row.
std::vector<int> max_assignment(const Eigen::MatrixXd& score);

}  // namespace stosc
