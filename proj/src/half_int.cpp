#include "fracmatch/half_int.hpp"

#include <charconv>

#include "fracmatch/errors.hpp"

namespace fracmatch {

std::string HalfInt::to_string() const {
	const std::int64_t whole = units_ / 2;
	if (units_ % 2 == 0) return std::to_string(whole);
	if (units_ < 0 && whole == 0) return "-0.5";
	return std::to_string(whole) + ".5";
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string &original) {
	std::int64_t value = 0;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
		throw ParseError("not a half-integer: '" + original + "'");
	return value;
}

} // namespace

HalfInt parse_half_int(const std::string &text) {
	std::string_view s(text);
	if (auto slash = s.find('/'); slash != std::string_view::npos) {
		const std::int64_t num = parse_int(s.substr(0, slash), text);
		const std::int64_t den = parse_int(s.substr(slash + 1), text);
		if (den == 1) return HalfInt::from_whole(num);
		if (den == 2) return HalfInt::from_units(num);
		throw ParseError("not a half-integer: '" + text + "'");
	}
	if (auto dot = s.find('.'); dot != std::string_view::npos) {
		const std::string_view frac = s.substr(dot + 1);
		const std::int64_t whole = parse_int(s.substr(0, dot), text);
		const bool negative = !s.empty() && s.front() == '-';
		if (frac == "5") return HalfInt::from_units(2 * whole + (negative ? -1 : 1));
		if (frac == "0") return HalfInt::from_whole(whole);
		throw ParseError("not a half-integer: '" + text + "'");
	}
	return HalfInt::from_whole(parse_int(s, text));
}

} // namespace fracmatch
