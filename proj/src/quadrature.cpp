#include "brt/quadrature.hpp"

#include <stdexcept>

namespace brt {

double trapezoid(std::span<const double> grid, std::span<const double> values) {
  if (grid.size() != values.size())
    throw std::invalid_argument("trapezoid: grid/value size mismatch");
  if (grid.size() < 2) return 0.0;
  KahanSum sum;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    sum.add(0.5 * (values[i] + values[i + 1]) * (grid[i + 1] - grid[i]));
  return sum.value();
}

}  // namespace brt
