#pragma once

#include <string>

namespace nilsec {

enum class Series { A, B, C, D, E6, E7, E8, F4, G2 };

/// A simple Lie algebra given by its Cartan type.
/// Classical bounds: A n>=1, B n>=3, C n>=2, D n>=4.
class LieType {
 public:
  LieType(Series series, int rank);

  static LieType sl(int N);
  static LieType sp(int N);  // N = 2n
  static LieType so(int N);

  /// "sl9", "sp8", "so11", "E7", "F4", also Cartan notation "A8", "C4", "B5", "D4".
  static LieType parse(const std::string& text);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  bool is_classical() const;
  bool is_exceptional() const { return !is_classical(); }

  /// Size of the defining representation; throws for exceptional types.
  int N() const;

  int dim() const;
  int dim_borel() const { return (dim() + rank_) / 2; }
  int num_positive_roots() const { return (dim() - rank_) / 2; }

  /// "sl9", "sp8", "so11", "E7".
  std::string name() const;
  /// "A8", "C4", "B5", "E7".
  std::string cartan_name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Series series_;
  int rank_;
};

inline int dim_algebra(const LieType& t) { return t.dim(); }
inline int dim_borel(const LieType& t) { return t.dim_borel(); }

}  // namespace nilsec
