#pragma once

#include <string>
#include <vector>

#include "fracmatch/fractional.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace fracmatch {

/// Good partition V = (V11 ∪ V12) ∪ (V21 ∪ V22) built from an optimal
/// fractional matching f:
///   V1 = {v : f(v) > 0}, V2 = unweighted vertices,
///   s  = maximum number of independent G-edges between V1 and V2,
///   V11 / V21 = the V1 / V2 endpoints of one such maximum set (`pairing`),
///   X  = the full neighbours of the V11 vertices.
struct GoodPartition {
	VertexSet v11, v12, v21, v22, x;
	int s = 0;
	HalfInt t;
	FractionalMatching fm;
	/// s pairwise disjoint edges (V11 vertex, V21 vertex), ascending by the V11 end.
	std::vector<Edge> pairing;

	VertexSet v1() const { return v11 | v12; }
	VertexSet v2() const { return v21 | v22; }
	/// V21 vertex paired with u ∈ V11, or -1.
	int paired_with(int u) const;
};

/// Per-property verdicts for a partition.
struct PartitionReport {
	/// Partition invariants: parts disjoint and covering, sizes |V11| = |V21| = s = |X|,
	/// |V1| = 2t, pairing valid and maximum, f fractional perfect on V1 with its
	/// 1/2-edges on odd cycles, V2 independent, X the full partners of V11.
	bool structure = true;
	std::string structure_issue;

	bool one_edges_avoid_common_v2 = true; ///< 1-edge uv: V2 ∩ N(u) ∩ N(v) = ∅
	bool v11_edges_carry_zero = true;      ///< G-edges inside V11 have f = 0
	bool v11_all_full = true;              ///< every V11 vertex is full
	bool x_independent = true;             ///< checked only when s >= 2
	bool no_v2_x_edges = true;

	bool properties() const {
		return one_edges_avoid_common_v2 && v11_edges_carry_zero && v11_all_full && x_independent &&
		       no_v2_x_edges;
	}
	bool all() const { return structure && properties(); }
};

/// Partition read directly off `fm`, without any repair.
GoodPartition build_partition(const Graph &g, const FractionalMatching &fm);

PartitionReport verify_partition(const Graph &g, const GoodPartition &p);

/// Drives `p` to a partition that passes verify_partition.
///
/// A non-canonical matching (1/2-paths, even 1/2-cycles, mergeable cycles) is
/// canonicalized and the partition rebuilt; that raises the 1-edge count.
/// Every other failing property corresponds to an exchange that would raise
/// f(G) above alpha'(G): the exchange is carried out, checked for feasibility,
/// and reported as an InternalError naming the rule.
/// Throws NotOptimalError when p.fm is not optimal to begin with.
GoodPartition repair(const Graph &g, GoodPartition p);

/// repair(g, build_partition(g, extract_fm(g))).
GoodPartition good_partition(const Graph &g);

/// JSON text listing the parts, X, s, t, the pairing and the 1/2- and 1-edges.
std::string dump_partition(const GoodPartition &p);
/// Inverse of dump_partition for the graph the partition was built on.
GoodPartition parse_partition_dump(const Graph &g, const std::string &text);

} // namespace fracmatch
