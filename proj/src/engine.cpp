#include "fracmatch/engine.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "fracmatch/errors.hpp"

namespace fracmatch {

int isolated_after_removal(const Graph &g, VertexSet s) {
	int count = 0;
	const std::uint64_t keep = ~s.bits();
	for (int v = 0; v < g.order(); ++v)
		if (!s.contains(v) && (g.neighbours(v).bits() & keep) == 0) ++count;
	return count;
}

BergeWitness berge_deficiency_exhaustive(const Graph &g) {
	const int n = g.order();
	if (n > kExhaustiveBergeLimit)
		throw PreconditionError("exhaustive deficiency limited to order " +
		                        std::to_string(kExhaustiveBergeLimit));
	std::array<std::uint64_t, Graph::kMaxOrder> rows{};
	for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = g.neighbours(v).bits();

	BergeWitness best{VertexSet(), isolated_after_removal(g, VertexSet())};
	const std::uint64_t limit = std::uint64_t{1} << n;
	for (std::uint64_t s = 1; s < limit; ++s) {
		const int removed = std::popcount(s);
		int isolated = 0;
		for (std::uint64_t rest = ~s & (limit - 1); rest != 0; rest &= rest - 1) {
			const int v = std::countr_zero(rest);
			if ((rows[static_cast<std::size_t>(v)] & ~s) == 0) ++isolated;
		}
		if (isolated - removed > best.deficiency) best = {VertexSet(s), isolated - removed};
	}
	return best;
}

BergeWitness berge_deficiency_konig(const Graph &g) {
	const BipartiteMatching m = max_bipartite_matching(double_cover(g));
	const VertexSet s = m.cover_left & m.cover_right;
	BergeWitness w{s, isolated_after_removal(g, s) - s.size()};
	if (w.deficiency != g.order() - m.size)
		throw InternalError("König-derived deficiency " + std::to_string(w.deficiency) +
		                    " disagrees with double-cover matching size " + std::to_string(m.size));
	return w;
}

BergeWitness berge_deficiency(const Graph &g, int exhaustive_limit) {
	if (g.order() <= std::min(exhaustive_limit, kExhaustiveBergeLimit))
		return berge_deficiency_exhaustive(g);
	return berge_deficiency_konig(g);
}

HalfInt alpha_prime(const Graph &g) {
	return HalfInt::from_units(max_bipartite_matching(double_cover(g)).size);
}

FractionalMatching extract_fm(const Graph &g) {
	const BipartiteMatching m = max_bipartite_matching(double_cover(g));
	FractionalMatching f(g);
	for (int u = 0; u < g.order(); ++u) {
		const int v = m.left_mate[static_cast<std::size_t>(u)];
		if (v >= 0) f.set_units(u, v, f.units(u, v) + 1);
	}
	return f;
}

bool is_fractional_perfect(const FractionalMatching &f) {
	for (int v = 0; v < f.order(); ++v)
		if (f.load(v) != 2) return false;
	return true;
}

namespace {

/// Components of the 1/2-edge subgraph. Every vertex meets at most two
/// 1/2-edges in a feasible matching, so components are paths or cycles.
struct HalfComponent {
	std::vector<int> walk; ///< vertices in traversal order
	bool is_cycle = false;
};

std::vector<HalfComponent> half_components(const FractionalMatching &f) {
	const int n = f.order();
	std::vector<std::vector<int>> half(static_cast<std::size_t>(n));
	for (auto [u, v] : f.edges_with_units(1)) {
		half[static_cast<std::size_t>(u)].push_back(v);
		half[static_cast<std::size_t>(v)].push_back(u);
	}
	std::vector<bool> seen(static_cast<std::size_t>(n), false);
	std::vector<HalfComponent> out;

	auto walk_from = [&](int start) {
		HalfComponent c;
		int prev = -1, cur = start;
		while (true) {
			c.walk.push_back(cur);
			seen[static_cast<std::size_t>(cur)] = true;
			int next = -1;
			for (int w : half[static_cast<std::size_t>(cur)])
				if (w != prev && !seen[static_cast<std::size_t>(w)]) {
					next = w;
					break;
				}
			if (next < 0) {
				c.is_cycle = c.walk.size() >= 3 &&
				             std::ranges::count(half[static_cast<std::size_t>(cur)], start) > 0;
				break;
			}
			prev = cur;
			cur = next;
		}
		return c;
	};

	// Paths first, started from their smaller endpoint.
	for (int v = 0; v < n; ++v)
		if (!seen[static_cast<std::size_t>(v)] && half[static_cast<std::size_t>(v)].size() == 1)
			out.push_back(walk_from(v));
	for (int v = 0; v < n; ++v)
		if (!seen[static_cast<std::size_t>(v)] && !half[static_cast<std::size_t>(v)].empty())
			out.push_back(walk_from(v));
	return out;
}

/// Sets the consecutive edges of `walk` to 1, 0, 1, 0, ...
void alternate(FractionalMatching &f, const std::vector<int> &walk) {
	for (std::size_t i = 0; i + 1 < walk.size(); ++i) f.set_units(walk[i], walk[i + 1], i % 2 == 0 ? 2 : 0);
}

/// Re-alternates every path and even cycle of 1/2-edges. Returns true if anything changed.
bool realternate_half_support(FractionalMatching &f) {
	bool changed = false;
	for (const HalfComponent &c : half_components(f)) {
		const std::size_t vertices = c.walk.size();
		if (c.is_cycle) {
			if (vertices % 2 == 1) continue;
			std::vector<int> closed = c.walk;
			closed.push_back(c.walk.front());
			alternate(f, closed);
		} else {
			if ((vertices - 1) % 2 == 1)
				throw InternalError("1/2-path with an odd number of edges in an optimal matching");
			alternate(f, c.walk);
		}
		changed = true;
	}
	return changed;
}

/// Vertices of `cycle` other than `cut`, in cycle order starting after `cut`.
std::vector<int> cycle_without(const std::vector<int> &cycle, int cut) {
	const auto pos = static_cast<std::size_t>(std::ranges::find(cycle, cut) - cycle.begin());
	std::vector<int> out;
	for (std::size_t k = 1; k < cycle.size(); ++k) out.push_back(cycle[(pos + k) % cycle.size()]);
	return out;
}

/// Looks for c1 - a1 = b1 - ... - c2 where c1, c2 lie on distinct 1/2-cycles,
/// "=" are 1-edges and "-" are 0-edges; applies the exchange if found.
bool merge_cycles(const Graph &g, FractionalMatching &f) {
	const int n = g.order();
	std::vector<HalfComponent> cycles = half_components(f);
	std::vector<int> cycle_of(static_cast<std::size_t>(n), -1);
	for (std::size_t i = 0; i < cycles.size(); ++i)
		for (int v : cycles[i].walk) cycle_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

	for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
		std::vector<int> parent(static_cast<std::size_t>(n), -2);
		std::vector<int> queue;
		for (int v : cycles[ci].walk) {
			parent[static_cast<std::size_t>(v)] = -1;
			queue.push_back(v);
		}
		for (std::size_t head = 0; head < queue.size(); ++head) {
			const int x = queue[head];
			for (int y : g.neighbours(x).members()) {
				if (f.units(x, y) != 0 || parent[static_cast<std::size_t>(y)] != -2) continue;
				const int other = cycle_of[static_cast<std::size_t>(y)];
				if (other >= 0 && other != static_cast<int>(ci)) {
					std::vector<int> route{y};
					for (int w = x; w >= 0; w = parent[static_cast<std::size_t>(w)]) route.push_back(w);
					std::ranges::reverse(route);
					const int c1 = route.front();
					const int c2 = route.back();
					auto clear_cycle = [&](const std::vector<int> &walk) {
						for (std::size_t k = 0; k < walk.size(); ++k)
							f.set_units(walk[k], walk[(k + 1) % walk.size()], 0);
					};
					clear_cycle(cycles[ci].walk);
					clear_cycle(cycles[static_cast<std::size_t>(other)].walk);
					for (std::size_t k = 0; k + 1 < route.size(); ++k)
						f.set_units(route[k], route[k + 1], k % 2 == 0 ? 2 : 0);
					alternate(f, cycle_without(cycles[ci].walk, c1));
					alternate(f, cycle_without(cycles[static_cast<std::size_t>(other)].walk, c2));
					return true;
				}
				const int z = f.full_partner(y);
				if (z < 0 || parent[static_cast<std::size_t>(z)] != -2) continue;
				parent[static_cast<std::size_t>(y)] = x;
				parent[static_cast<std::size_t>(z)] = y;
				queue.push_back(z);
			}
		}
	}
	return false;
}

} // namespace

FractionalMatching canonicalize_fm(const Graph &g, const FractionalMatching &f) {
	if (!(f.host() == g)) throw PreconditionError("fractional matching belongs to another graph");
	if (const std::string bad = f.violation(); !bad.empty())
		throw NotOptimalError("infeasible fractional matching: " + bad);
	const HalfInt optimum = alpha_prime(g);
	if (f.value() != optimum)
		throw NotOptimalError("fractional matching has value " + f.value().to_string() +
		                      " but alpha' = " + optimum.to_string());

	FractionalMatching h = f;
	while (realternate_half_support(h) || merge_cycles(g, h)) {
	}
	if (h.value() != optimum || !h.is_valid())
		throw InternalError("canonicalization changed the value or broke feasibility");
	if (!inspect_structure(h).all())
		throw InternalError("canonical fractional matching lacks optimal structure");
	return h;
}

FractionalMatching optimal_fm(const Graph &g) { return canonicalize_fm(g, extract_fm(g)); }

OptimalStructure inspect_structure(const FractionalMatching &f) {
	OptimalStructure out;
	VertexSet on_cycle;
	for (const HalfComponent &c : half_components(f)) {
		if (!c.is_cycle || c.walk.size() % 2 == 0) out.half_edges_form_odd_cycles = false;
		for (int v : c.walk) on_cycle.insert(v);
	}
	// A 1/2-edge must not share a vertex with a 1-edge.
	for (int v : on_cycle.members())
		if (f.full_partner(v) >= 0) out.half_edges_form_odd_cycles = false;

	const Graph &g = f.host();
	const VertexSet unweighted = f.unweighted();
	const VertexSet full = f.full_vertices();
	for (int u : unweighted.members()) {
		const VertexSet nb = g.neighbours(u);
		if (!(nb & unweighted).empty()) out.unweighted_independent = false;
		if (!nb.is_subset_of(full)) out.unweighted_only_next_to_full = false;
		if (!(nb & on_cycle).empty()) out.cycles_avoid_unweighted = false;
	}
	return out;
}

namespace {

class ExhaustiveSearch {
public:
	explicit ExhaustiveSearch(const Graph &g) : edges_(g.edges()), n_(g.order()) {
		capacity_.assign(static_cast<std::size_t>(n_), 2);
	}

	int run() {
		descend(0, 0, 2 * n_);
		return best_;
	}

private:
	void descend(std::size_t k, int value, int spare_capacity) {
		if (best_ == n_) return;
		const int remaining_edges = static_cast<int>(edges_.size() - k);
		if (value + std::min(2 * remaining_edges, spare_capacity / 2) <= best_) return;
		if (k == edges_.size()) {
			best_ = value;
			return;
		}
		auto [u, v] = edges_[k];
		int &cu = capacity_[static_cast<std::size_t>(u)];
		int &cv = capacity_[static_cast<std::size_t>(v)];
		for (int w = std::min(cu, cv); w >= 0; --w) {
			cu -= w;
			cv -= w;
			descend(k + 1, value + w, spare_capacity - 2 * w);
			cu += w;
			cv += w;
		}
	}

	std::vector<Edge> edges_;
	int n_;
	std::vector<int> capacity_;
	int best_ = 0;
};

} // namespace

HalfInt oracle_alpha_exhaustive(const Graph &g) {
	if (g.edge_count() > kOracleEdgeLimit)
		throw PreconditionError("exhaustive oracle limited to " + std::to_string(kOracleEdgeLimit) +
		                        " edges");
	return HalfInt::from_units(ExhaustiveSearch(g).run());
}

} // namespace fracmatch
