#pragma once

#include <string>

#include "fracmatch/bipartite.hpp"
#include "fracmatch/fractional.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace fracmatch {

/// A vertex set S together with its deficiency i(G-S) - |S|, where i counts
/// isolated vertices. The maximum deficiency d gives alpha'(G) = (n - d) / 2.
struct BergeWitness {
	VertexSet s_set;
	int deficiency = 0;
};

/// Number of isolated vertices of G - S.
int isolated_after_removal(const Graph &g, VertexSet s);

/// Largest order for which berge_deficiency enumerates all subsets.
inline constexpr int kExhaustiveBergeLimit = 24;

/// Maximum-deficiency witness. Enumerates every S when n <= exhaustive_limit
/// (first maximizer in ascending mask order); otherwise reads S off a König
/// cover of the double cover.
BergeWitness berge_deficiency(const Graph &g, int exhaustive_limit = kExhaustiveBergeLimit);
BergeWitness berge_deficiency_exhaustive(const Graph &g);
/// S = vertices whose both copies lie in the König cover of the double cover.
BergeWitness berge_deficiency_konig(const Graph &g);

/// Fractional matching number: half the maximum matching size of the double cover.
HalfInt alpha_prime(const Graph &g);

/// Some optimal half-integral fractional matching: f(uv) = (x(u_L v_R) + x(v_L u_R)) / 2
/// for a maximum double-cover matching x.
FractionalMatching extract_fm(const Graph &g);

/// Rewrites an optimal fractional matching until
///   - the 1/2-edges form vertex-disjoint odd cycles (paths and even cycles
///     are re-alternated into 1-edges),
///   - no alternating path through 1-edges joins two distinct 1/2-cycles
///     (such a path lets both cycles dissolve into 1-edges).
/// Every rewrite keeps the value and strictly increases the number of 1-edges.
/// Throws NotOptimalError if f is infeasible or its value is below alpha'(g).
FractionalMatching canonicalize_fm(const Graph &g, const FractionalMatching &f);

/// canonicalize_fm(g, extract_fm(g)).
FractionalMatching optimal_fm(const Graph &g);

/// f(v) = 1 at every vertex.
bool is_fractional_perfect(const FractionalMatching &f);

/// Largest edge count accepted by oracle_alpha_exhaustive.
inline constexpr std::size_t kOracleEdgeLimit = 14;

/// Maximum of f(G) over every assignment f: E -> {0, 1/2, 1}, by branch and
/// bound. Independent of the matching machinery; throws PreconditionError
/// above kOracleEdgeLimit edges.
HalfInt oracle_alpha_exhaustive(const Graph &g);

/// Structural facts an optimal fractional matching is expected to satisfy.
struct OptimalStructure {
	bool half_edges_form_odd_cycles = true;
	bool unweighted_independent = true;
	bool unweighted_only_next_to_full = true;
	bool cycles_avoid_unweighted = true;

	bool all() const {
		return half_edges_form_odd_cycles && unweighted_independent &&
		       unweighted_only_next_to_full && cycles_avoid_unweighted;
	}
};

OptimalStructure inspect_structure(const FractionalMatching &f);

} // namespace fracmatch
