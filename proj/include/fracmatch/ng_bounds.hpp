#pragma once

#include "fracmatch/families.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace fracmatch {

/// Order from which the nonempty and isolate-free sum bounds are claimed.
inline constexpr int kLargeOrder = 28;

struct BoundCheck {
	HalfInt bound;
	bool applies = false;   ///< hypotheses hold
	bool satisfied = false; ///< sum >= bound (evaluated even when not applicable)
	bool equality = false;  ///< sum == bound
};

/// alpha'(G) + alpha'(complement) against the three lower bounds
///   half_order   n/2       for n >= 2
///   nonempty     (n+1)/2   G, complement nonempty, n >= 28
///   isolate_free (n+4)/2   G, complement isolate-free, n >= 28
struct BoundReport {
	int n = 0;
	HalfInt alpha_g, alpha_gc, sum;
	bool g_nonempty = false, gc_nonempty = false;
	bool g_isolate_free = false, gc_isolate_free = false;
	bool large_order = false;

	BoundCheck half_order, nonempty, isolate_free;

	/// Extremal family of the strongest applicable bound (None unless it is tight).
	FamilyLabel equality_family;
	/// Strongest applicable bound is tight iff g or its complement is in that bound's family.
	bool family_matches = true;

	const BoundCheck &check(BoundKind kind) const;
	/// isolate_free if it applies, else nonempty if it applies, else half_order.
	BoundKind strongest() const;
	bool any_violation() const;
};

/// Throws PreconditionError for n < 2.
BoundReport ng_sum(const Graph &g);

} // namespace fracmatch
