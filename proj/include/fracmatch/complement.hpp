#pragma once

#include <string>

#include "fracmatch/fractional.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"
#include "fracmatch/partition.hpp"

namespace fracmatch {

/// Which lower bound on alpha'(complement) a construction targets.
enum class ComplementConstruction {
	Basic,       ///< t <= n/4:                               (n - s) / 2
	IsolateFree, ///< t <= n/4, s >= 1, G and complement isolate-free: (n - s + 1) / 2
	Balanced,    ///< t <= n/4, s = t >= 3, both isolate-free: (n - s + 2) / 2
	/// t just above n/4 (see nearquarter_applies): (n - t) / 2, hence n/4 + 3 for n >= 28.
	NearQuarterHalf,  ///< t = floor(n/4) + 1/2 (n mod 4 ∈ {0,1}) or floor(n/4) + 3/2 (n mod 4 ∈ {2,3})
	NearQuarterWhole, ///< t = floor(n/4) + 1
};

std::string construction_name(ComplementConstruction c);

/// Which branch of a construction produced the matching.
struct CaseDescriptor {
	ComplementConstruction construction = ComplementConstruction::Basic;
	/// Branch key, e.g. "residual=1", "neighbour=V12", "pair_in_V11", "p>=2".
	std::string branch;
	/// Complement vertices left over for the final edge / cycle step.
	int residual = -1;
	/// Part holding the complement neighbour chosen first (isolate-free variant), else empty.
	std::string neighbour_part;
	/// Number of 1-edges inside V12 - X (near-quarter construction), else -1.
	int p_count = -1;
	/// Lower bound the branch guarantees, rounded up to a half-integer.
	HalfInt claimed;
	/// Bound the construction as a whole promises: claimed for the t <= n/4
	/// constructions, n/4 + 3 (rounded up) for the near-quarter one.
	HalfInt target;
	/// The branch's structure was missing below the large-order threshold and
	/// an optimal matching of the complement was used instead.
	bool fallback = false;

	std::string to_string() const;
};

struct ComplementResult {
	/// Matching on complement(g).
	FractionalMatching fm;
	CaseDescriptor info;
	/// fm.value() >= info.claimed
	bool meets_claim = false;
	/// fm.value() >= info.target
	bool meets_target = false;
};

/// Builds a fractional matching of the complement from a good partition p of g,
/// following the case analysis for the given construction. Throws
/// PreconditionError when the construction's hypotheses fail and InternalError
/// when a structural fact the argument relies on is missing.
ComplementResult construct_complement_fm(const Graph &g, const GoodPartition &p,
                                         ComplementConstruction which);

/// The near-quarter construction: requires 2t ∈ {2q+1, 2q+2} when n mod 4 ∈ {0,1}
/// and 2t ∈ {2q+2, 2q+3} when n mod 4 ∈ {2,3}, with q = floor(n/4), and
/// n >= 28 unless `require_large_order` is false. Below n = 28 a
/// branch whose order-dependent structure is missing falls back to an optimal
/// matching and sets info.fallback; so does the p >= 2 branch at any order
/// when its two 1-edges lack an end outside the chosen V21 neighbourhoods.
ComplementResult construct_complement_fm_nearquarter(const Graph &g, const GoodPartition &p,
                                                     bool require_large_order = true);

/// Does the near-quarter hypothesis on (n, t) hold?
bool nearquarter_applies(int n, HalfInt t);

} // namespace fracmatch
