#pragma once

#include "gaussdeg/arith.hpp"
#include "gaussdeg/partition.hpp"

#include <map>
#include <vector>

namespace gaussdeg {

/// v_d(P^n) in P^N with N + 1 = C(n + d, d).
class VeroneseVariety {
 public:
  /// Throws ParameterError unless n >= 1 and d >= 2 (d = 1 is all of P^N),
  /// or if N would not fit comfortably in an int.
  VeroneseVariety(int n, int d);

  int dim() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  int ambient_dim() const noexcept { return ambient_; }

 private:
  int n_;
  int d_;
  int ambient_;
};

/// Segre classes s_0 = 1, s_1, ..., s_K as integer coefficients of h^i.
/// Out-of-range indices read as 0. Sign convention: s(E) c(E^dual) = 1.
class SegreSequence {
 public:
  /// Throws ParameterError if the sequence is empty or s_0 != 1.
  explicit SegreSequence(std::vector<BigInt> coefficients);

  BigInt at(long i) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<BigInt> coefficients_;
};

/// Integrals over X of Delta_lambda(s(N)) for every partition lambda of n.
class SegreIntegralTable {
 public:
  /// Throws ParameterError if a partition of n is missing, an entry has the
  /// wrong weight, n < 1, or N < n + 1.
  SegreIntegralTable(int n, int ambient_dim, std::map<Partition, BigInt> entries);

  int dim() const noexcept { return n_; }
  int ambient_dim() const noexcept { return ambient_; }
  const std::map<Partition, BigInt>& entries() const noexcept { return entries_; }

  /// Throws ParameterError for a partition without an entry.
  const BigInt& at(const Partition& lam) const;

 private:
  int n_;
  int ambient_;
  std::map<Partition, BigInt> entries_;
};

/// s_i(N) = C(n+1, i) (d-1)^i; zero outside 0..n+1.
BigInt veronese_segre(const VeroneseVariety& v, long i);

/// s_0..s_{n+1} of the Veronese twisted normal bundle.
SegreSequence veronese_segre_sequence(const VeroneseVariety& v);

/// Jacobi-Trudi determinant det[s_{lam_i + j - i}] of size length x length,
/// evaluated with fraction-free elimination over the integers.
BigInt schur_delta_determinant(const SegreSequence& s, const Partition& lam, int length);

/// (d-1)^|lam| f^lam / |lam|! * prod_{i=1}^{length} (n+i)!/(n+i-lam_i)!,
/// with 1/k! = 0 for k < 0. Requires |lam| <= n.
BigInt schur_delta_veronese_closed(const VeroneseVariety& v, const Partition& lam, int length);

SegreIntegralTable veronese_integral_table(const VeroneseVariety& v);

}  // namespace gaussdeg
