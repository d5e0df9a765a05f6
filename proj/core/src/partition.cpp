#include "bisplit/partition.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>

#include "bisplit/error.hpp"

namespace bisplit {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw InvalidInput("partition parts must be positive");
    if (i + 1 < parts.size() && parts[i + 1] > parts[i])
      throw InvalidInput("partition parts must be non-increasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
  validate(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate(parts_);
}

Partition Partition::normalize(std::span<const int> raw) {
  std::vector<int> parts;
  parts.reserve(raw.size());
  for (int v : raw) {
    if (v < 0) throw InvalidInput("negative entry in partition input");
    if (v > 0) parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::sum() const noexcept {
  int total = 0;
  for (int v : parts_) total += v;
  return total;
}

int Partition::operator()(std::size_t i) const {
  if (i < 1 || i > parts_.size())
    throw InvalidInput("partition index " + std::to_string(i) +
                       " out of range");
  return parts_[i - 1];
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(first()), 0);
  for (int v : parts_)
    for (int j = 0; j < v; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::vector<std::size_t> Partition::drops() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i + 1] < parts_[i]) out.push_back(i + 1);
  return out;
}

Partition Partition::componentwise_max(const Partition& other) const {
  const std::size_t n = std::max(parts_.size(), other.parts_.size());
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int a = i < parts_.size() ? parts_[i] : 0;
    const int b = i < other.parts_.size() ? other.parts_[i] : 0;
    out[i] = std::max(a, b);
  }
  return normalize(out);
}

Partition Partition::remove_part(std::size_t i) const {
  if (i < 1 || i > parts_.size())
    throw InvalidInput("remove_part: index " + std::to_string(i) +
                       " out of range");
  std::vector<int> out = parts_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return Partition(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

}  // namespace bisplit
