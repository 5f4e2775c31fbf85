#pragma once

// Brute-force references used only by the tests. None of them touches the
// library's matching, cover or rewrite code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace oracle {

using fracmatch::Graph;
using fracmatch::HalfInt;

/// Maximum matching of the double cover by DP over sets of used right copies.
inline int double_cover_matching(const Graph &g) {
	const int n = g.order();
	std::vector<int> best(std::size_t{1} << n, -1);
	best[0] = 0;
	int top = 0;
	for (int u = 0; u < n; ++u) {
		std::vector<int> next = best;
		for (std::uint32_t used = 0; used < (1U << n); ++used) {
			if (best[used] < 0) continue;
			for (int v = 0; v < n; ++v)
				if (g.adjacent(u, v) && !((used >> v) & 1U)) {
					int &slot = next[used | (1U << v)];
					slot = std::max(slot, best[used] + 1);
				}
		}
		best = std::move(next);
	}
	for (int b : best) top = std::max(top, b);
	return top;
}

inline HalfInt alpha_dp(const Graph &g) { return HalfInt::from_units(double_cover_matching(g)); }

/// max over S of (isolated vertices of G - S) - |S|.
inline int berge_deficiency(const Graph &g) {
	const int n = g.order();
	int best = 0;
	for (std::uint32_t s = 0; s < (1U << n); ++s) {
		int isolated = 0;
		for (int v = 0; v < n; ++v) {
			if ((s >> v) & 1U) continue;
			bool alone = true;
			for (int w = 0; w < n; ++w)
				if (!((s >> w) & 1U) && g.adjacent(v, w)) alone = false;
			isolated += alone;
		}
		best = std::max(best, isolated - std::popcount(s));
	}
	return best;
}

/// Largest total over all edge weightings in {0, 1/2, 1} with load <= 1 everywhere.
inline HalfInt alpha_weights(const Graph &g) {
	const auto edges = g.edges();
	std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
	int best = 0;
	auto go = [&](auto &&self, std::size_t i, int total) -> void {
		if (i == edges.size()) {
			best = std::max(best, total);
			return;
		}
		const auto [u, v] = edges[i];
		for (int w = 0; w <= 2; ++w) {
			if (load[static_cast<std::size_t>(u)] + w > 2 || load[static_cast<std::size_t>(v)] + w > 2) break;
			load[static_cast<std::size_t>(u)] += w;
			load[static_cast<std::size_t>(v)] += w;
			self(self, i + 1, total + w);
			load[static_cast<std::size_t>(u)] -= w;
			load[static_cast<std::size_t>(v)] -= w;
		}
	};
	go(go, 0, 0);
	return HalfInt::from_units(best);
}

/// Is there a relabeling π of g with lower ⊆ π(g) ⊆ upper (all of order n)?
inline bool sandwiched(const Graph &g, const Graph &lower, const Graph &upper) {
	const int n = g.order();
	std::vector<int> perm(static_cast<std::size_t>(n));
	std::iota(perm.begin(), perm.end(), 0);
	const auto edges = g.edges();
	do {
		Graph h(n);
		for (const auto &[u, v] : edges) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
		if (fracmatch::is_spanning_subgraph_of(lower, h) && fracmatch::is_spanning_subgraph_of(h, upper)) return true;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return false;
}

inline bool isomorphic(const Graph &g, const Graph &h) {
	return g.edge_count() == h.edge_count() && sandwiched(g, h, h);
}

inline Graph on(int n, std::initializer_list<fracmatch::Edge> edges) { return Graph(n, std::vector(edges)); }

inline Graph clique_on(int n, int k) {
	Graph g(n);
	for (int u = 0; u < k; ++u)
		for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
	return g;
}

} // namespace oracle
