#pragma once

#include <string>
#include <vector>

#include "nilsec/lie_type.hpp"

namespace nilsec {

/// Weakly decreasing list of positive integers. The empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  /// Sorts nothing: throws SizeError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Accepts any order; drops zeros.
  static Partition from_unsorted(std::vector<int> parts);
  /// "3,2,2,1", "2^4,1^3", optionally wrapped in brackets.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const;
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Exponent form: "2^4,1^3"; empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

Partition transpose(const Partition& p);
bool is_very_even(const Partition& p);

/// Prefix-sum dominance; throws SizeError if totals differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// (l1-1, ..., lp-1) with zero parts dropped.
Partition erase_column(const Partition& p);

/// Parity rule of the orthogonal/symplectic/linear families, independent of any LieType.
enum class PartitionKind { Linear, Symplectic, Orthogonal };
bool is_admissible(PartitionKind kind, const Partition& p);

/// Throws SizeError if p.total() != type.N(); exceptional types throw UnsupportedError.
bool is_admissible(const LieType& type, const Partition& p);
PartitionKind partition_kind(const LieType& type);

/// rank of a matrix of Jordan type p: N - (number of parts).
int matrix_rank(const LieType& type, const Partition& p);

/// All partitions of n in lexicographically increasing order ((1^n) first).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> admissible_partitions(PartitionKind kind, int n);

/// sum of squares of the transpose parts.
long sum_transpose_squares(const Partition& p);

}  // namespace nilsec
