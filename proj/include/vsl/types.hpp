#pragma once

#include <Eigen/Dense>

namespace vsl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

} // namespace vsl
