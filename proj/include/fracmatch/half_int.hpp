#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace fracmatch {

/// Exact non-negative half-integer, stored as a count of halves.
///
/// Fractional matching numbers are always multiples of 1/2, so every value
/// the library produces fits in this type without rounding.
class HalfInt {
public:
	constexpr HalfInt() = default;

	static constexpr HalfInt from_units(std::int64_t units) { return HalfInt(units); }
	static constexpr HalfInt from_whole(std::int64_t whole) { return HalfInt(2 * whole); }

	/// Number of halves; the represented value is units() / 2.
	constexpr std::int64_t units() const { return units_; }
	constexpr bool is_integral() const { return units_ % 2 == 0; }

	constexpr HalfInt operator+(HalfInt o) const { return HalfInt(units_ + o.units_); }
	constexpr HalfInt operator-(HalfInt o) const { return HalfInt(units_ - o.units_); }
	constexpr HalfInt &operator+=(HalfInt o) {
		units_ += o.units_;
		return *this;
	}

	constexpr auto operator<=>(const HalfInt &) const = default;

	/// Decimal rendering: "3", "7.5", "-0.5".
	std::string to_string() const;

private:
	constexpr explicit HalfInt(std::int64_t units) : units_(units) {}

	std::int64_t units_ = 0;
};

inline std::ostream &operator<<(std::ostream &os, HalfInt h) { return os << h.to_string(); }

/// Parses "7", "7.5" or "15/2" into a half-integer; throws ParseError otherwise.
HalfInt parse_half_int(const std::string &text);

} // namespace fracmatch
