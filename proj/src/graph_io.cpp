#include "fracmatch/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <set>

#include "fracmatch/errors.hpp"

namespace fracmatch {

namespace {

constexpr int kBias = 63;

int sextet(char c) {
	const int value = static_cast<unsigned char>(c) - kBias;
	if (value < 0 || value > 63)
		throw ParseError(std::string("graph6 byte out of range: ") + std::to_string(int(c)));
	return value;
}

std::string_view trim(std::string_view s) {
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
	return s;
}

} // namespace

Graph parse_graph6(std::string_view text) {
	if (text.empty()) throw ParseError("empty graph6 string");
	std::size_t pos = 0;
	int n = 0;
	if (text[0] == '~') {
		if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6 order too large");
		if (text.size() < 4) throw ParseError("truncated graph6 header");
		n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
		if (n <= 62) throw ParseError("non-canonical long graph6 header");
		pos = 4;
	} else {
		n = sextet(text[0]);
		pos = 1;
	}
	if (n > Graph::kMaxOrder) throw ParseError("graph6 order " + std::to_string(n) + " exceeds 64");

	const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
	const std::size_t body = (bits + 5) / 6;
	if (text.size() - pos < body) throw ParseError("truncated graph6 body");
	if (text.size() - pos > body) throw ParseError("trailing characters after graph6 body");

	Graph g(n);
	std::size_t k = 0;
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u, ++k) {
			const int byte = sextet(text[pos + k / 6]);
			if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
		}
	if (bits % 6 != 0) {
		const int last = sextet(text[pos + body - 1]);
		const int pad_mask = (1 << (6 - bits % 6)) - 1;
		if (last & pad_mask) throw ParseError("non-zero padding bits in graph6 body");
	}
	return g;
}

std::string emit_graph6(const Graph &g) {
	const int n = g.order();
	std::string out;
	if (n <= 62) {
		out.push_back(static_cast<char>(n + kBias));
	} else {
		out.push_back('~');
		out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
		out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
		out.push_back(static_cast<char>((n & 63) + kBias));
	}
	int acc = 0;
	int filled = 0;
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u) {
			acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
			if (++filled == 6) {
				out.push_back(static_cast<char>(acc + kBias));
				acc = 0;
				filled = 0;
			}
		}
	if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
	return out;
}

Graph parse_edgelist(std::string_view text) {
	std::vector<long> tokens;
	std::size_t i = 0;
	while (i < text.size()) {
		if (std::isspace(static_cast<unsigned char>(text[i]))) {
			++i;
			continue;
		}
		long value = 0;
		auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
		if (ec != std::errc() || (ptr != text.data() + text.size() &&
		                          !std::isspace(static_cast<unsigned char>(*ptr))))
			throw ParseError("edge list: bad token at offset " + std::to_string(i));
		tokens.push_back(value);
		i = static_cast<std::size_t>(ptr - text.data());
	}
	if (tokens.empty()) throw ParseError("edge list: missing order");
	if (tokens[0] < 0 || tokens[0] > Graph::kMaxOrder)
		throw ParseError("edge list: order " + std::to_string(tokens[0]) + " outside [0, 64]");
	if (tokens.size() % 2 == 0) throw ParseError("edge list: dangling endpoint");
	const int n = static_cast<int>(tokens[0]);
	Graph g(n);
	std::set<std::pair<long, long>> seen;
	for (std::size_t k = 1; k < tokens.size(); k += 2) {
		long u = tokens[k], v = tokens[k + 1];
		if (u < 0 || v < 0 || u >= n || v >= n)
			throw ParseError("edge list: endpoint out of range in " + std::to_string(u) + " " +
			                 std::to_string(v));
		if (u == v) throw ParseError("edge list: loop at " + std::to_string(u));
		if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
			throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
		g.add_edge(static_cast<int>(u), static_cast<int>(v));
	}
	return g;
}

std::string emit_edgelist(const Graph &g) {
	std::string out = std::to_string(g.order()) + "\n";
	for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
	return out;
}

std::vector<Graph> read_graph6_stream(std::istream &in) {
	std::vector<Graph> out;
	std::string line;
	bool first = true;
	while (std::getline(in, line)) {
		std::string_view view = trim(line);
		if (first && view.starts_with(">>graph6<<")) view.remove_prefix(10);
		first = false;
		if (view.empty()) continue;
		out.push_back(parse_graph6(view));
	}
	return out;
}

Graph parse_graph_auto(std::string_view text) {
	std::string_view body = trim(text);
	if (body.empty()) throw ParseError("empty graph input");
	if (std::isdigit(static_cast<unsigned char>(body.front()))) return parse_edgelist(body);
	if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
	const auto eol = body.find('\n');
	if (eol != std::string_view::npos && !trim(body.substr(eol)).empty())
		throw ParseError("expected a single graph6 line");
	return parse_graph6(trim(body.substr(0, eol)));
}

} // namespace fracmatch
