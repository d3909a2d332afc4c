#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mfim {

/// Non-negative exact fraction. Kept unreduced; comparisons cross-multiply.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Parses a plain decimal such as "0.7", "1", "33.25" exactly.
  /// At most 9 fractional digits. Throws ParamError otherwise.
  static Ratio parse_decimal(std::string_view text);

  /// Decimal rendering rounded half-up to `digits` fractional digits.
  std::string to_decimal(int digits = 6) const;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(Ratio a, Ratio b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator<(Ratio a, Ratio b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator>=(Ratio a, Ratio b) { return !(a < b); }
  friend bool operator<=(Ratio a, Ratio b) { return !(b < a); }
  friend bool operator>(Ratio a, Ratio b) { return b < a; }
};

inline constexpr std::size_t kDefaultPoolCap = 10'000'000;

/// Thresholds shared by every miner. Support is always an absolute
/// count; the percent form is converted with a ceiling, minimum 1.
/// Thresholds are inclusive (support >= count, confidence >= min).
struct MiningParams {
  std::uint64_t min_support_count = 1;
  Ratio min_confidence{0, 1};
  std::size_t pool_cap = kDefaultPoolCap;

  /// ceil(percent / 100 * n_transactions), at least 1.
  /// `percent` must lie in (0, 100].
  static std::uint64_t count_from_percent(Ratio percent, std::size_t n_transactions);

  /// Accepts "N" (absolute) or "P%" (percent of n_transactions).
  static std::uint64_t parse_min_support(std::string_view text, std::size_t n_transactions);

  /// Throws ParamError unless min_support_count >= 1, confidence in [0,1]
  /// and pool_cap >= 1.
  void validate() const;
};

}  // namespace mfim
