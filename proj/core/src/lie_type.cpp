#include "nilsec/lie_type.hpp"

#include "nilsec/errors.hpp"

#include <cctype>
#include <charconv>

namespace nilsec {

namespace {

int fixed_rank(Series s) {
  switch (s) {
    case Series::E6: return 6;
    case Series::E7: return 7;
    case Series::E8: return 8;
    case Series::F4: return 4;
    case Series::G2: return 2;
    default: return 0;
  }
}

int parse_positive(const std::string& digits, const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || v <= 0)
    throw ParseError("bad algebra name '" + text + "'");
  return v;
}

}  // namespace

LieType::LieType(Series series, int rank) : series_(series), rank_(rank) {
  const char* why = nullptr;
  switch (series) {
    case Series::A: if (rank < 1) why = "A_n needs n>=1"; break;
    case Series::B: if (rank < 3) why = "B_n needs n>=3 (so_N with N>=7)"; break;
    case Series::C: if (rank < 2) why = "C_n needs n>=2"; break;
    case Series::D: if (rank < 4) why = "D_n needs n>=4 (so_N with N>=7)"; break;
    default:
      if (rank != fixed_rank(series)) why = "exceptional rank is fixed";
  }
  if (why) throw InvalidTypeError(std::string(why) + ", got rank " + std::to_string(rank));
}

LieType LieType::sl(int N) { return LieType(Series::A, N - 1); }

LieType LieType::sp(int N) {
  if (N % 2 != 0) throw InvalidTypeError("sp_N needs even N, got " + std::to_string(N));
  return LieType(Series::C, N / 2);
}

LieType LieType::so(int N) {
  return N % 2 ? LieType(Series::B, (N - 1) / 2) : LieType(Series::D, N / 2);
}

LieType LieType::parse(const std::string& text) {
  if (text == "E6") return LieType(Series::E6, 6);
  if (text == "E7") return LieType(Series::E7, 7);
  if (text == "E8") return LieType(Series::E8, 8);
  if (text == "F4") return LieType(Series::F4, 4);
  if (text == "G2") return LieType(Series::G2, 2);
  if (text.size() > 2 && text[0] == 's') {
    std::string prefix = text.substr(0, 2);
    int N = parse_positive(text.substr(2), text);
    if (prefix == "sl") {
      if (N < 2) throw InvalidTypeError("sl_N needs N>=2");
      return sl(N);
    }
    if (prefix == "sp") return sp(N);
    if (prefix == "so") return so(N);
  }
  if (text.size() > 1) {
    int n = parse_positive(text.substr(1), text);
    switch (text[0]) {
      case 'A': return LieType(Series::A, n);
      case 'B': return LieType(Series::B, n);
      case 'C': return LieType(Series::C, n);
      case 'D': return LieType(Series::D, n);
      default: break;
    }
  }
  throw ParseError("unknown algebra '" + text + "'");
}

bool LieType::is_classical() const {
  return series_ == Series::A || series_ == Series::B || series_ == Series::C ||
         series_ == Series::D;
}

int LieType::N() const {
  switch (series_) {
    case Series::A: return rank_ + 1;
    case Series::B: return 2 * rank_ + 1;
    case Series::C:
    case Series::D: return 2 * rank_;
    default: throw UnsupportedError(cartan_name() + " has no defining size N");
  }
}

int LieType::dim() const {
  const int n = rank_;
  switch (series_) {
    case Series::A: return n * (n + 2);
    case Series::B:
    case Series::C: return n * (2 * n + 1);
    case Series::D: return n * (2 * n - 1);
    case Series::E6: return 78;
    case Series::E7: return 133;
    case Series::E8: return 248;
    case Series::F4: return 52;
    case Series::G2: return 14;
  }
  return 0;
}

std::string LieType::name() const {
  switch (series_) {
    case Series::A: return "sl" + std::to_string(N());
    case Series::C: return "sp" + std::to_string(N());
    case Series::B:
    case Series::D: return "so" + std::to_string(N());
    default: return cartan_name();
  }
}

std::string LieType::cartan_name() const {
  switch (series_) {
    case Series::A: return "A" + std::to_string(rank_);
    case Series::B: return "B" + std::to_string(rank_);
    case Series::C: return "C" + std::to_string(rank_);
    case Series::D: return "D" + std::to_string(rank_);
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
    case Series::F4: return "F4";
    case Series::G2: return "G2";
  }
  return "?";
}

}  // namespace nilsec
