#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace fracmatch {

enum class FamilyTag {
	None,
	StarUnion,         ///< K_{1,k} ∪ (n-1-k)K1                         alpha' = 1
	TriangleUnion,     ///< C3 ∪ (n-3)K1                                alpha' = 3/2
	Sandwich_2K2_K4,   ///< 2K2 ∪ (n-4)K1 ⊆ G ⊆ K4 ∪ (n-4)K1            alpha' = 2
	Sandwich_2K2_K2pq, ///< 2K2 ∪ (n-4)K1 ⊆ G ⊆ K2(0,0;n-2)             alpha' = 2
	C5Union_in_K5,     ///< C5 ∪ (n-5)K1 ⊆ G ⊆ K5 ∪ (n-5)K1             alpha' = 5/2
	C3K2Union_in_K5,   ///< C3 ∪ K2 ∪ (n-5)K1 ⊆ G ⊆ K5 ∪ (n-5)K1        alpha' = 5/2
	C3K2Union_in_H,    ///< C3 ∪ K2 ∪ (n-5)K1 ⊆ G ⊆ K4 + pendants at one vertex
	K2pql,             ///< K2(p,q;l), p >= q >= 1
	BistarInK2n2,      ///< K_{1,m} ∪ K_{1,n-2-m} ⊆ G ⊆ K_{2,n-2}
	EmptyGraph,
	CompleteGraph,
};

/// Stable identifier used in CSV/JSON reports, e.g. "Sandwich_2K2_K4".
std::string tag_name(FamilyTag tag);
FamilyTag parse_tag(const std::string &name);

struct FamilyLabel {
	FamilyTag tag = FamilyTag::None;
	/// Named parameters in a fixed order per tag (k; p,q,l; m,common; ...).
	std::vector<std::pair<std::string, int>> params;
	/// The family was recognized on the complement rather than on g.
	bool complemented = false;

	int param(const std::string &name) const;
	/// e.g. "K2pql(p=14;q=13;l=1)" or "~StarUnion(k=29)" when complemented.
	/// No commas, so labels drop straight into CSV cells.
	std::string to_string() const;
	bool operator==(const FamilyLabel &) const = default;
};

/// The small fractional-matching-number family of g, recognized structurally:
///   StarUnion         one non-trivial component, a star with k >= 1 leaves
///   TriangleUnion     exactly three non-isolated vertices, forming a triangle
///   Sandwich_2K2_K4   exactly four non-isolated vertices carrying two independent edges
///   Sandwich_2K2_K2pq two vertices u, v meet every edge, and two independent edges exist
///                     (u, v need not be adjacent; params p, q, l, adjacent)
///   C5Union_in_K5     exactly five non-isolated vertices containing a 5-cycle
///   C3K2Union_in_K5   exactly five non-isolated vertices containing a triangle plus a disjoint edge
///   C3K2Union_in_H    a vertex c and a triangle Q ∌ c such that every edge
///                     avoiding c lies in Q, and c has a neighbour outside Q
/// The first matching rule wins. Returns None for every other graph.
FamilyLabel classify_small_alpha(const Graph &g);

/// The value alpha' takes on each family above (0 for None).
HalfInt family_alpha(FamilyTag tag);

/// Which bound on alpha'(G) + alpha'(complement) a family classification refers to.
enum class BoundKind {
	HalfOrder,   ///< >= n/2, every n >= 2
	Nonempty,    ///< >= (n+1)/2, G and complement nonempty, n >= 28
	IsolateFree, ///< >= (n+4)/2, G and complement isolate-free, n >= 28
};

std::string bound_name(BoundKind kind);

/// Extremal family of the given bound containing g or its complement:
///   HalfOrder   -> EmptyGraph / CompleteGraph
///   Nonempty    -> StarUnion with k = n-1 (the spanning star)
///   IsolateFree -> K2pql (adjacent u, v covering every edge, each with a
///                  private neighbour, no isolated vertex) or BistarInK2n2
///                  (non-adjacent a, b covering every edge, no isolated
///                  vertex, two independent edges)
FamilyLabel classify_equality_family(const Graph &g, BoundKind which);

/// Which small-alpha clause applies to a graph.
enum class SmallAlphaClause {
	AlphaOne,          ///< alpha' = 1,   n >= 4: sum >= (n+1)/2
	AlphaThreeHalves,  ///< alpha' = 3/2, n >= 6: sum  = (n+3)/2
	AlphaTwoGeneral,   ///< alpha' = 2 not ≅ K2(0,0;l), n >= 8: sum >= (n+3)/2
	AlphaTwoDoubleHub, ///< G ≅ K2(0,0;l), l >= 2: sum = (n+2)/2
	AlphaFiveHalves,   ///< alpha' = 5/2, n >= 7: sum >= n/2 + 2
};

std::string clause_name(SmallAlphaClause clause);

struct SmallAlphaReport {
	HalfInt alpha_g, alpha_gc, sum;
	SmallAlphaClause clause{};
	HalfInt clause_bound;
	bool clause_is_equality = false; ///< clause asserts '=' rather than '>='
	bool clause_holds = false;
	/// sum == clause_bound
	bool at_bound = false;
	/// Exactly one vertex of degree n-1.
	bool single_dominating_vertex = false;
	/// For the '>=' clauses: at_bound agrees with single_dominating_vertex.
	/// Always true for the '=' clauses.
	bool equality_criterion_agrees = true;

	/// alpha' ∈ {2, 5/2}, complement isolate-free and n >= 10.
	bool complement_claim_applies = false;
	/// alpha'(complement) == n/2 when the claim applies.
	bool complement_claim_holds = true;
};

/// Evaluates alpha'(G) + alpha'(complement) against the small-alpha clause
/// matching g. Throws PreconditionError when alpha'(g) ∉ {1, 3/2, 2, 5/2} or
/// n is below the clause's threshold.
SmallAlphaReport small_alpha_ng(const Graph &g);

/// G ≅ K2(0,0;n-2): two adjacent vertices joined to everything, nothing else.
bool is_double_hub(const Graph &g);

} // namespace fracmatch
