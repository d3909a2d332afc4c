#include "mfim/params.hpp"

#include <charconv>

#include "mfim/errors.hpp"

namespace mfim {
namespace {

std::uint64_t parse_digits(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParamError("'" + std::string(whole) + "' is not a non-negative decimal number");
  }
  return v;
}

}  // namespace

Ratio Ratio::parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Ratio{parse_digits(text, text), 1};
  const auto int_part = text.substr(0, dot);
  const auto frac_part = text.substr(dot + 1);
  if (frac_part.size() > 9) throw ParamError("'" + std::string(text) + "' has too many decimals");
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::uint64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
  const std::uint64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
  if (int_part.empty() && frac_part.empty()) parse_digits("", text);
  if (whole > (UINT64_MAX - frac) / den) throw ParamError("'" + std::string(text) + "' is too large");
  return Ratio{whole * den + frac, den};
}

std::string Ratio::to_decimal(int digits) const {
  unsigned __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const unsigned __int128 scaled = (static_cast<unsigned __int128>(num) * scale * 2 + den) / (2 * static_cast<unsigned __int128>(den));
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

std::uint64_t MiningParams::count_from_percent(Ratio percent, std::size_t n_transactions) {
  if (percent.num == 0 || percent > Ratio{100, 1}) {
    throw ParamError("minimum support percent must lie in (0, 100]");
  }
  const unsigned __int128 top = static_cast<unsigned __int128>(percent.num) * n_transactions;
  const unsigned __int128 bottom = static_cast<unsigned __int128>(percent.den) * 100;
  const auto count = static_cast<std::uint64_t>((top + bottom - 1) / bottom);
  return count == 0 ? 1 : count;
}

std::uint64_t MiningParams::parse_min_support(std::string_view text, std::size_t n_transactions) {
  if (!text.empty() && text.back() == '%') {
    return count_from_percent(Ratio::parse_decimal(text.substr(0, text.size() - 1)), n_transactions);
  }
  const std::uint64_t n = parse_digits(text, text);
  if (n == 0) throw ParamError("minimum support count must be at least 1");
  return n;
}

void MiningParams::validate() const {
  if (min_support_count < 1) throw ParamError("minimum support count must be at least 1");
  if (min_confidence.den == 0 || min_confidence > Ratio{1, 1}) {
    throw ParamError("minimum confidence must lie in [0, 1]");
  }
  if (pool_cap < 1) throw ParamError("pool cap must be at least 1");
}

}  // namespace mfim
