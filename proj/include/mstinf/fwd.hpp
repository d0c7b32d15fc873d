#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace mstinf {

inline constexpr auto Dyn = Eigen::Dynamic;

template <typename S>
using Mat = Eigen::Matrix<S, Dyn, Dyn>;

template <typename S>
using Vec = Eigen::Matrix<S, Dyn, 1>;

/// Malformed external input: bad files, bad tables, unknown fixture names.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mstinf
