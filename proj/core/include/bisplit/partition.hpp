#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace bisplit {

/// A non-increasing tuple of positive integers. Row and column counts of a
/// point configuration are stored this way; the empty partition stands for
/// the empty configuration.
///
/// Indices in the public API are 1-based.
class Partition {
 public:
  Partition() = default;

  /// Builds from parts that must already be non-increasing and positive.
  /// Throws InvalidInput otherwise.
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Drops zeros and sorts the rest in non-increasing order.
  /// Negative entries are rejected.
  static Partition normalize(std::span<const int> raw);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int sum() const noexcept;

  /// Largest part, 0 for the empty partition.
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// 1-based access.
  int operator()(std::size_t i) const;

  /// Transpose of the Ferrers diagram: entry j counts parts >= j.
  Partition conjugate() const;

  /// 1-based indices i < length() with parts[i+1] < parts[i]. The final
  /// index is never reported.
  std::vector<std::size_t> drops() const;

  /// Entrywise max after zero-padding the shorter one.
  Partition componentwise_max(const Partition& other) const;

  /// Deletes the 1-based entry i.
  Partition remove_part(std::size_t i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace bisplit
