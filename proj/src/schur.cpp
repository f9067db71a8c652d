#include "gaussdeg/schur.hpp"

#include "gaussdeg/errors.hpp"

#include <string>
#include <utility>

namespace gaussdeg {

namespace {

constexpr long kMaxAmbient = 1'000'000;

}  // namespace

VeroneseVariety::VeroneseVariety(int n, int d) : n_(n), d_(d), ambient_(0) {
  if (n < 1) throw ParameterError("Veronese variety needs n >= 1, got " + std::to_string(n));
  if (d < 2) throw ParameterError("Veronese variety needs d >= 2, got " + std::to_string(d));
  BigInt sections = binomial(n + d, d);
  if (sections - 1 > kMaxAmbient) {
    throw ParameterError("ambient dimension of v_" + std::to_string(d) + "(P^" +
                         std::to_string(n) + ") is too large");
  }
  ambient_ = static_cast<int>(sections - 1);
}

SegreSequence::SegreSequence(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.front() != 1) {
    throw ParameterError("Segre sequence must start with s_0 = 1");
  }
}

BigInt SegreSequence::at(long i) const {
  if (i < 0 || i >= static_cast<long>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

SegreIntegralTable::SegreIntegralTable(int n, int ambient_dim, std::map<Partition, BigInt> entries)
    : n_(n), ambient_(ambient_dim), entries_(std::move(entries)) {
  if (n < 1) throw ParameterError("integral table needs n >= 1");
  if (ambient_dim < n + 1) {
    throw ParameterError("integral table needs N >= n + 1, got N = " + std::to_string(ambient_dim));
  }
  for (const auto& [lam, value] : entries_) {
    if (lam.weight() != n) {
      throw ParameterError("integral table entry " + lam.to_string() + " does not have weight " +
                           std::to_string(n));
    }
  }
  for (const Partition& lam : enumerate_partitions(n, n)) {
    if (!entries_.contains(lam)) {
      throw ParameterError("integral table is missing partition " + lam.to_string());
    }
  }
}

const BigInt& SegreIntegralTable::at(const Partition& lam) const {
  auto it = entries_.find(lam);
  if (it == entries_.end()) throw ParameterError("no integral for partition " + lam.to_string());
  return it->second;
}

BigInt veronese_segre(const VeroneseVariety& v, long i) {
  if (i < 0) return 0;
  return binomial(v.dim() + 1, i) * power(BigInt(v.degree() - 1), static_cast<unsigned long>(i));
}

SegreSequence veronese_segre_sequence(const VeroneseVariety& v) {
  std::vector<BigInt> s;
  for (long i = 0; i <= v.dim() + 1; ++i) s.push_back(veronese_segre(v, i));
  return SegreSequence(std::move(s));
}

BigInt schur_delta_determinant(const SegreSequence& s, const Partition& lam, int length) {
  if (length < 0) throw ParameterError("schur_delta_determinant: negative length");
  const std::vector<int> l = lam.padded(length);
  const auto size = static_cast<std::size_t>(length);
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      a[i][j] = s.at(static_cast<long>(l[i]) + static_cast<long>(j) - static_cast<long>(i));
    }
  }
  // Bareiss: every division below is exact.
  BigInt sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous_pivot;
      }
    }
    previous_pivot = a[k][k];
  }
  return size == 0 ? BigInt(1) : sign * a[size - 1][size - 1];
}

BigInt schur_delta_veronese_closed(const VeroneseVariety& v, const Partition& lam, int length) {
  const int n = v.dim();
  const int weight = lam.weight();
  if (weight > n) {
    throw ParameterError("closed Schur form needs |lambda| <= n, got " + lam.to_string());
  }
  const std::vector<int> l = lam.padded(length);
  BigRat value(power(BigInt(v.degree() - 1), static_cast<unsigned long>(weight)) *
                   syt_count_hook(lam),
               factorial(weight));
  for (int i = 1; i <= length; ++i) {
    value *= BigRat(factorial(n + i)) * inverse_factorial(n + i - l[static_cast<std::size_t>(i - 1)]);
  }
  return require_integral(value, "schur_delta_veronese_closed" + lam.to_string());
}

SegreIntegralTable veronese_integral_table(const VeroneseVariety& v) {
  std::map<Partition, BigInt> entries;
  for (Partition& lam : enumerate_partitions(v.dim(), v.dim())) {
    BigInt value = schur_delta_veronese_closed(v, lam, v.dim());
    entries.emplace(std::move(lam), std::move(value));
  }
  return SegreIntegralTable(v.dim(), v.ambient_dim(), std::move(entries));
}

}  // namespace gaussdeg
