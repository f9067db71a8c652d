#include "gaussdeg/partition.hpp"

#include "gaussdeg/errors.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>

namespace gaussdeg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParameterError("partition has a negative part: " + to_string());
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw ParameterError("partition parts must be weakly decreasing: " + to_string());
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int height, int width) {
  if (height < 0 || width < 0) throw ParameterError("rectangle dimensions must be non-negative");
  return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int index) const noexcept {
  return (index >= 0 && index < length()) ? parts_[static_cast<std::size_t>(index)] : 0;
}

std::vector<int> Partition::padded(int height) const {
  if (length() > height) {
    throw ParameterError("partition " + to_string() + " does not fit in " + std::to_string(height) +
                         " rows");
  }
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(height), 0);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> columns(static_cast<std::size_t>(part(0)), 0);
  for (int row : parts_) {
    for (int j = 0; j < row; ++j) ++columns[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(columns));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> enumerate_partitions(int total, int max_parts) {
  if (total < 0 || max_parts < 0) throw ParameterError("enumerate_partitions: negative argument");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest-first choice of each part gives reverse-lexicographic order.
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      recurse(remaining - p, p);
      current.pop_back();
    }
  };
  recurse(total, total);
  return out;
}

Partition add_rectangle(const Partition& lam, int height, int width) {
  if (width < 0) throw ParameterError("add_rectangle: negative width");
  std::vector<int> parts = lam.padded(height);
  for (int& p : parts) p += width;
  return Partition(std::move(parts));
}

BigInt syt_count_hook(const Partition& lam, int height) {
  const std::vector<int> l = lam.padded(height);
  BigInt numerator = factorial(lam.weight());
  BigInt denominator = 1;
  for (int i = 0; i < height; ++i) {
    for (int j = i + 1; j < height; ++j) numerator *= l[i] - l[j] + j - i;
    denominator *= factorial(l[i] + height - 1 - i);
  }
  if (numerator % denominator != 0) {
    throw InternalError("hook formula not integral for " + lam.to_string());
  }
  return numerator / denominator;
}

BigInt syt_count_hook(const Partition& lam) { return syt_count_hook(lam, lam.length()); }

int brute_force_cap_from_env() {
  if (const char* raw = std::getenv("GAUSSDEG_BRUTE_CAP")) {
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value >= 1 && value <= 64) return static_cast<int>(value);
  }
  return kDefaultBruteForceCap;
}

BigInt syt_count_bruteforce(const Partition& lam, int cap) {
  const int total = lam.weight();
  if (total > cap) {
    throw SizeError("syt_count_bruteforce: |lambda| = " + std::to_string(total) +
                    " exceeds cap " + std::to_string(cap));
  }
  const std::vector<int>& shape = lam.parts();
  std::vector<int> filled(shape.size(), 0);
  BigInt count = 0;
  // Entry k goes at the end of row i iff the row has room and the cell above
  // is already filled; that keeps rows and columns increasing.
  std::function<void(int)> place = [&](int next) {
    if (next > total) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (filled[i] == shape[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      ++filled[i];
      place(next + 1);
      --filled[i];
    }
  };
  place(1);
  return count;
}

}  // namespace gaussdeg
