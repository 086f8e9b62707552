#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gave {

using Vector = std::vector<double>;

[[nodiscard]] double dot(std::span<const double> x, std::span<const double> y);
[[nodiscard]] double norm2(std::span<const double> x);
[[nodiscard]] double norm_inf(std::span<const double> x);

/// y <- y + alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

[[nodiscard]] Vector abs(std::span<const double> x);
[[nodiscard]] Vector subtract(std::span<const double> x, std::span<const double> y);

/// max_i |x_i - y_i|
[[nodiscard]] double distance_inf(std::span<const double> x, std::span<const double> y);

}  // namespace gave
