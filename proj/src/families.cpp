#include "fracmatch/families.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"

namespace fracmatch {

namespace {

constexpr std::array<std::pair<FamilyTag, const char *>, 12> kTagNames{{
    {FamilyTag::None, "None"},
    {FamilyTag::StarUnion, "StarUnion"},
    {FamilyTag::TriangleUnion, "TriangleUnion"},
    {FamilyTag::Sandwich_2K2_K4, "Sandwich_2K2_K4"},
    {FamilyTag::Sandwich_2K2_K2pq, "Sandwich_2K2_K2pq"},
    {FamilyTag::C5Union_in_K5, "C5Union_in_K5"},
    {FamilyTag::C3K2Union_in_K5, "C3K2Union_in_K5"},
    {FamilyTag::C3K2Union_in_H, "C3K2Union_in_H"},
    {FamilyTag::K2pql, "K2pql"},
    {FamilyTag::BistarInK2n2, "BistarInK2n2"},
    {FamilyTag::EmptyGraph, "EmptyGraph"},
    {FamilyTag::CompleteGraph, "CompleteGraph"},
}};

VertexSet non_isolated(const Graph &g) { return g.vertices() - isolated_vertices(g); }

/// Every edge of g has an endpoint in {u, v}.
bool covers_all_edges(const Graph &g, int u, int v) {
	VertexSet pair{u, v};
	for (int w : (g.vertices() - pair).members())
		if (!g.neighbours(w).is_subset_of(pair)) return false;
	return true;
}

/// Smallest (u, v), u < v, covering every edge, restricted by adjacency when asked.
std::optional<Edge> covering_pair(const Graph &g, std::optional<bool> adjacent) {
	for (int u = 0; u < g.order(); ++u)
		for (int v = u + 1; v < g.order(); ++v) {
			if (adjacent && g.adjacent(u, v) != *adjacent) continue;
			if (covers_all_edges(g, u, v)) return Edge{u, v};
		}
	return std::nullopt;
}

bool is_triangle(const Graph &g, int a, int b, int c) {
	return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
}

bool has_five_cycle(const Graph &g, std::vector<int> five) {
	// Fix five[0] as the start; each 5-cycle appears twice among the 24 orders.
	std::sort(five.begin() + 1, five.end());
	do {
		bool ok = true;
		for (std::size_t k = 0; k < 5 && ok; ++k) ok = g.adjacent(five[k], five[(k + 1) % 5]);
		if (ok) return true;
	} while (std::next_permutation(five.begin() + 1, five.end()));
	return false;
}

bool has_triangle_plus_edge(const Graph &g, const std::vector<int> &five) {
	for (int a = 0; a < 5; ++a)
		for (int b = a + 1; b < 5; ++b)
			for (int c = b + 1; c < 5; ++c) {
				if (!is_triangle(g, five[a], five[b], five[c])) continue;
				std::vector<int> rest;
				for (int k = 0; k < 5; ++k)
					if (k != a && k != b && k != c) rest.push_back(five[k]);
				if (g.adjacent(rest[0], rest[1])) return true;
			}
	return false;
}

struct HubPattern {
	int hub;
	VertexSet triangle;
};

/// c with a triangle Q ∌ c holding every edge that avoids c, plus a c-edge leaving Q.
std::optional<HubPattern> h_pattern(const Graph &g) {
	for (int c = 0; c < g.order(); ++c) {
		VertexSet touched;
		for (int w : (g.vertices() - VertexSet{c}).members())
			if (!(g.neighbours(w) - VertexSet{c}).empty()) touched.insert(w);
		if (touched.size() != 3) continue;
		const auto q = touched.members();
		if (!is_triangle(g, q[0], q[1], q[2])) continue;
		if (!(g.neighbours(c) - touched).empty()) return HubPattern{c, touched};
	}
	return std::nullopt;
}

FamilyLabel pair_label(FamilyTag tag, const Graph &g, int u, int v) {
	const VertexSet nu = g.neighbours(u) - VertexSet{v};
	const VertexSet nv = g.neighbours(v) - VertexSet{u};
	int p = (nu - nv).size(), q = (nv - nu).size();
	const int l = (nu & nv).size();
	if (p < q) std::swap(p, q);
	return {tag, {{"p", p}, {"q", q}, {"l", l}, {"adjacent", g.adjacent(u, v) ? 1 : 0}}, false};
}

int count_degree(const Graph &g, int degree) {
	int count = 0;
	for (int v = 0; v < g.order(); ++v)
		if (g.degree(v) == degree) ++count;
	return count;
}

} // namespace

std::string tag_name(FamilyTag tag) {
	for (auto [t, name] : kTagNames)
		if (t == tag) return name;
	return "None";
}

FamilyTag parse_tag(const std::string &name) {
	for (auto [t, text] : kTagNames)
		if (name == text) return t;
	throw ParseError("unknown family tag '" + name + "'");
}

int FamilyLabel::param(const std::string &name) const {
	for (const auto &[key, value] : params)
		if (key == name) return value;
	throw PreconditionError("family label has no parameter '" + name + "'");
}

std::string FamilyLabel::to_string() const {
	std::string out = (complemented ? "~" : "") + tag_name(tag);
	if (!params.empty()) {
		out += "(";
		for (std::size_t i = 0; i < params.size(); ++i)
			out += (i ? ";" : "") + params[i].first + "=" + std::to_string(params[i].second);
		out += ")";
	}
	return out;
}

HalfInt family_alpha(FamilyTag tag) {
	switch (tag) {
	case FamilyTag::StarUnion: return HalfInt::from_units(2);
	case FamilyTag::TriangleUnion: return HalfInt::from_units(3);
	case FamilyTag::Sandwich_2K2_K4:
	case FamilyTag::Sandwich_2K2_K2pq:
	case FamilyTag::K2pql:
	case FamilyTag::BistarInK2n2: return HalfInt::from_units(4);
	case FamilyTag::C5Union_in_K5:
	case FamilyTag::C3K2Union_in_K5:
	case FamilyTag::C3K2Union_in_H: return HalfInt::from_units(5);
	default: return HalfInt();
	}
}

FamilyLabel classify_small_alpha(const Graph &g) {
	const VertexSet active = non_isolated(g);
	const auto m = static_cast<int>(g.edge_count());
	if (m == 0) return {};
	const int a = active.size();

	for (int c : active.members())
		if (g.degree(c) == a - 1 && m == a - 1) return {FamilyTag::StarUnion, {{"k", a - 1}}, false};
	if (a == 3 && m == 3) return {FamilyTag::TriangleUnion, {}, false};

	const bool two_independent = has_two_independent_edges(g);
	if (a == 4 && two_independent) return {FamilyTag::Sandwich_2K2_K4, {}, false};
	if (two_independent)
		if (auto pair = covering_pair(g, std::nullopt))
			return pair_label(FamilyTag::Sandwich_2K2_K2pq, g, pair->first, pair->second);

	if (a == 5) {
		const auto five = active.members();
		if (has_five_cycle(g, five)) return {FamilyTag::C5Union_in_K5, {}, false};
		if (has_triangle_plus_edge(g, five)) return {FamilyTag::C3K2Union_in_K5, {}, false};
	}
	if (auto h = h_pattern(g))
		return {FamilyTag::C3K2Union_in_H,
		        {{"hub", h->hub}, {"outside", (g.neighbours(h->hub) - h->triangle).size()}},
		        false};
	return {};
}

std::string bound_name(BoundKind kind) {
	switch (kind) {
	case BoundKind::HalfOrder: return "half_order";
	case BoundKind::Nonempty: return "nonempty";
	case BoundKind::IsolateFree: return "isolate_free";
	}
	return "?";
}

namespace {

FamilyLabel equality_family_one_side(const Graph &g, BoundKind which) {
	const int n = g.order();
	const auto m = g.edge_count();
	switch (which) {
	case BoundKind::HalfOrder:
		if (m == 0) return {FamilyTag::EmptyGraph, {}, false};
		if (m == static_cast<std::size_t>(n) * (n - 1) / 2) return {FamilyTag::CompleteGraph, {}, false};
		return {};
	case BoundKind::Nonempty:
		if (n >= 2 && m == static_cast<std::size_t>(n - 1) && count_degree(g, n - 1) >= 1)
			return {FamilyTag::StarUnion, {{"k", n - 1}}, false};
		return {};
	case BoundKind::IsolateFree: {
		if (!is_isolate_free(g) || n < 4) return {};
		if (auto pair = covering_pair(g, true)) {
			const auto [u, v] = *pair;
			const VertexSet nu = g.neighbours(u) - VertexSet{v};
			const VertexSet nv = g.neighbours(v) - VertexSet{u};
			if (!(nu - nv).empty() && !(nv - nu).empty()) return pair_label(FamilyTag::K2pql, g, u, v);
		}
		if (auto pair = covering_pair(g, false); pair && has_two_independent_edges(g)) {
			const auto [a, b] = *pair;
			return {FamilyTag::BistarInK2n2,
			        {{"m", g.degree(a)}, {"common", (g.neighbours(a) & g.neighbours(b)).size()}},
			        false};
		}
		return {};
	}
	}
	return {};
}

} // namespace

FamilyLabel classify_equality_family(const Graph &g, BoundKind which) {
	if (FamilyLabel direct = equality_family_one_side(g, which); direct.tag != FamilyTag::None)
		return direct;
	FamilyLabel flipped = equality_family_one_side(complement(g), which);
	if (flipped.tag != FamilyTag::None) flipped.complemented = true;
	return flipped;
}

bool is_double_hub(const Graph &g) {
	const int n = g.order();
	if (n < 4 || g.edge_count() != static_cast<std::size_t>(2 * n - 3)) return false;
	return count_degree(g, n - 1) == 2 && count_degree(g, 2) == n - 2;
}

std::string clause_name(SmallAlphaClause clause) {
	switch (clause) {
	case SmallAlphaClause::AlphaOne: return "alpha_one";
	case SmallAlphaClause::AlphaThreeHalves: return "alpha_three_halves";
	case SmallAlphaClause::AlphaTwoGeneral: return "alpha_two_general";
	case SmallAlphaClause::AlphaTwoDoubleHub: return "alpha_two_double_hub";
	case SmallAlphaClause::AlphaFiveHalves: return "alpha_five_halves";
	}
	return "?";
}

SmallAlphaReport small_alpha_ng(const Graph &g) {
	const int n = g.order();
	SmallAlphaReport r;
	r.alpha_g = alpha_prime(g);
	const Graph gc = complement(g);

	int threshold = 0;
	std::int64_t bound_units = 0;
	switch (r.alpha_g.units()) {
	case 2:
		r.clause = SmallAlphaClause::AlphaOne;
		threshold = 4;
		bound_units = n + 1;
		break;
	case 3:
		r.clause = SmallAlphaClause::AlphaThreeHalves;
		threshold = 6;
		bound_units = n + 3;
		r.clause_is_equality = true;
		break;
	case 4:
		if (is_double_hub(g)) {
			r.clause = SmallAlphaClause::AlphaTwoDoubleHub;
			threshold = 4;
			bound_units = n + 2;
			r.clause_is_equality = true;
		} else {
			r.clause = SmallAlphaClause::AlphaTwoGeneral;
			threshold = 8;
			bound_units = n + 3;
		}
		break;
	case 5:
		r.clause = SmallAlphaClause::AlphaFiveHalves;
		threshold = 7;
		bound_units = n + 4;
		break;
	default:
		throw PreconditionError("small-alpha clauses need alpha' in {1, 3/2, 2, 5/2}, got " +
		                        r.alpha_g.to_string());
	}
	if (n < threshold)
		throw PreconditionError(clause_name(r.clause) + " needs n >= " + std::to_string(threshold) +
		                        ", got " + std::to_string(n));

	r.alpha_gc = alpha_prime(gc);
	r.sum = r.alpha_g + r.alpha_gc;
	r.clause_bound = HalfInt::from_units(bound_units);
	r.at_bound = r.sum == r.clause_bound;
	r.clause_holds = r.clause_is_equality ? r.at_bound : r.sum >= r.clause_bound;
	r.single_dominating_vertex = count_degree(g, n - 1) == 1;
	if (!r.clause_is_equality) r.equality_criterion_agrees = r.at_bound == r.single_dominating_vertex;

	const auto units = r.alpha_g.units();
	r.complement_claim_applies = (units == 4 || units == 5) && is_isolate_free(gc) && n >= 10;
	if (r.complement_claim_applies) r.complement_claim_holds = r.alpha_gc == HalfInt::from_units(n);
	return r;
}

} // namespace fracmatch
