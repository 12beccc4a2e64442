// types.hpp: fixed-size matrix aliases shared across the library

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace twomode {

using Complex = std::complex<double>;

using Mat4c = Eigen::Matrix<Complex, 4, 4>;
using Vec4c = Eigen::Matrix<Complex, 4, 1>;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

inline constexpr Complex kI{0.0, 1.0};

} // namespace twomode
