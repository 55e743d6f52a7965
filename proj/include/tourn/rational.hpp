#pragma once

// Exact fractions for thresholds such as c = 1/5 or lambda = 1/5.
// Comparisons cross-multiply in 128-bit arithmetic, so no verdict depends on
// rounding or on how the fraction was written ("1/5" == "2/10").

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <charconv>

#include "tourn/error.hpp"

namespace tourn {

class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {  // NOLINT
    if (den_ == 0) throw InvalidArgument("ratio with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  /// Parses "p/q" or a plain integer "p".
  static Ratio parse(std::string_view s) {
    auto parse_int = [&](std::string_view part) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
        throw InvalidArgument("malformed fraction '" + std::string(s) + "'");
      return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Ratio(parse_int(s));
    return Ratio(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Ratio&, const Ratio&) = default;
  friend constexpr auto operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  /// count <= ratio * total, exactly.
  constexpr bool bounds(std::int64_t count, std::int64_t total) const {
    return static_cast<__int128>(count) * den_ <= static_cast<__int128>(num_) * total;
  }
  /// count >= ratio * total, exactly.
  constexpr bool reached_by(std::int64_t count, std::int64_t total) const {
    return static_cast<__int128>(count) * den_ >= static_cast<__int128>(num_) * total;
  }
  /// floor(ratio * total) for nonnegative operands.
  constexpr std::int64_t floor_times(std::int64_t total) const {
    return static_cast<std::int64_t>(static_cast<__int128>(num_) * total / den_);
  }
  /// ceil(ratio * total) for nonnegative operands.
  constexpr std::int64_t ceil_times(std::int64_t total) const {
    return static_cast<std::int64_t>((static_cast<__int128>(num_) * total + den_ - 1) / den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tourn
