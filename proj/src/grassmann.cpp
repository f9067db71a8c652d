#include "gaussdeg/grassmann.hpp"

#include "gaussdeg/errors.hpp"

#include <string>

namespace gaussdeg {

GrassmannShape::GrassmannShape(int d, int r) : d_(d), r_(r) {
  if (d < 0 || r < 0 || d > r) {
    throw ParameterError("Grassmannian G(" + std::to_string(d) + ", " + std::to_string(r) +
                         ") needs 0 <= d <= r");
  }
}

int grassmann_dim(const GrassmannShape& shape) {
  return shape.quotient_rank() * (shape.ambient_rank() - shape.quotient_rank());
}

BigInt grassmann_degree(const GrassmannShape& shape) { return syt_count_hook(shape.rectangle()); }

std::vector<PushforwardTerm> pushforward_coefficients(const GrassmannShape& shape, int k) {
  const int fibre_dim = grassmann_dim(shape);
  if (k < fibre_dim) {
    throw ParameterError("pushforward_coefficients: k = " + std::to_string(k) +
                         " is below the fibre dimension " + std::to_string(fibre_dim));
  }
  const int d = shape.quotient_rank();
  const int width = shape.ambient_rank() - d;
  std::vector<PushforwardTerm> terms;
  for (Partition& lam : enumerate_partitions(k - fibre_dim, d)) {
    BigInt coefficient = syt_count_hook(add_rectangle(lam, d, width));
    terms.push_back({std::move(lam), std::move(coefficient)});
  }
  return terms;
}

}  // namespace gaussdeg
