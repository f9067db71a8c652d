#pragma once

#include "gaussdeg/arith.hpp"
#include "gaussdeg/partition.hpp"

#include <utility>
#include <vector>

namespace gaussdeg {

/// G(d, r): rank-d quotients of an r-dimensional space (or bundle).
class GrassmannShape {
 public:
  /// Throws ParameterError unless 0 <= d <= r.
  GrassmannShape(int d, int r);

  int quotient_rank() const noexcept { return d_; }
  int ambient_rank() const noexcept { return r_; }

  /// The rectangle ((r-d)^d).
  Partition rectangle() const { return Partition::rectangle(d_, r_ - d_); }

 private:
  int d_;
  int r_;
};

/// d(r-d). G(0, r) and G(r, r) are points.
int grassmann_dim(const GrassmannShape& shape);

/// Plücker degree f^{((r-d)^d)}; 1 for the degenerate point cases.
BigInt grassmann_degree(const GrassmannShape& shape);

struct PushforwardTerm {
  Partition lambda;
  BigInt coefficient;  // f^{lambda + eps}

  friend bool operator==(const PushforwardTerm&, const PushforwardTerm&) = default;
};

/// Coefficients of pi_*(c_1(O(1))^k) on a Grassmann bundle of shape G(d, r):
/// one term per partition of k - d(r-d) with at most d parts. Shapes whose
/// Schur polynomial vanishes on the base are not filtered here.
std::vector<PushforwardTerm> pushforward_coefficients(const GrassmannShape& shape, int k);

}  // namespace gaussdeg
