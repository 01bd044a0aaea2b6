#pragma once

#include <Eigen/Dense>

namespace aom {

// Row-major throughout: token sequences are (rows x dim) and rows are
// touched far more often than columns.
template <class T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matf = MatX<float>;
using Matd = MatX<double>;
using Vecf = VecX<float>;
using Vecd = VecX<double>;

}  // namespace aom
