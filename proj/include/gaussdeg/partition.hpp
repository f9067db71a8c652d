#pragma once

#include "gaussdeg/arith.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace gaussdeg {

/// A weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros. Formulas that index parts up to a fixed height ask for a
/// padded view explicitly via padded().
class Partition {
 public:
  Partition() = default;

  /// Validates ordering and non-negativity, then drops trailing zeros.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Rectangle (width^height); zero width or height gives the empty partition.
  static Partition rectangle(int height, int width);

  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based part access; 0 beyond length().
  int part(int index) const noexcept;

  /// Zero-padded copy of exactly `height` entries. Throws ParameterError when
  /// the partition has more than `height` nonzero parts.
  std::vector<int> padded(int height) const;

  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Every partition of `total` with at most `max_parts` nonzero parts, in
/// reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int total, int max_parts);

/// Adds `width` to each of the first `height` parts of `lam` (zero-padded).
/// Throws ParameterError if `lam` has more than `height` nonzero parts.
Partition add_rectangle(const Partition& lam, int height, int width);

/// f^lambda via |lam|! prod_{i<j}(l_i - l_j + j - i) / prod_i (l_i + d - i)!.
BigInt syt_count_hook(const Partition& lam);

/// Same as above but evaluated with `lam` padded to `height` rows; the value
/// does not depend on height.
BigInt syt_count_hook(const Partition& lam, int height);

inline constexpr int kDefaultBruteForceCap = 12;

/// Cap for syt_count_bruteforce: GAUSSDEG_BRUTE_CAP if set to a positive
/// integer, otherwise kDefaultBruteForceCap.
int brute_force_cap_from_env();

/// Counts standard Young tableaux by placing 1..|lam| one cell at a time.
/// Throws SizeError if |lam| > cap.
BigInt syt_count_bruteforce(const Partition& lam, int cap = kDefaultBruteForceCap);

}  // namespace gaussdeg
