#pragma once

#include <string>
#include <vector>

#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace fracmatch {

/// Half-integral fractional matching: every edge carries 0, 1 or 2 halves.
///
/// Mutation does not enforce feasibility so that rewrites can pass through
/// intermediate states; call violation() / is_valid() to check.
class FractionalMatching {
public:
	FractionalMatching() = default;
	explicit FractionalMatching(const Graph &host);

	const Graph &host() const { return host_; }
	int order() const { return host_.order(); }

	/// Weight of uv in halves (0 for non-edges).
	int units(int u, int v) const { return units_[index(u, v)]; }
	/// Throws PreconditionError if uv is not a host edge or units is not in {0,1,2}.
	void set_units(int u, int v, int units);

	/// f(v) in halves.
	int load(int v) const;
	HalfInt value() const;
	int one_edge_count() const;
	/// Edges carrying exactly `units` halves, (u < v) ascending.
	std::vector<Edge> edges_with_units(int units) const;

	/// Vertices with f(v) > 0.
	VertexSet support() const;
	/// Vertices with f(v) = 0.
	VertexSet unweighted() const;
	/// Vertices incident to a 1-edge.
	VertexSet full_vertices() const;
	/// The other end of v's 1-edge, or -1.
	int full_partner(int v) const;

	/// Empty string when feasible, otherwise a description of the first violation.
	std::string violation() const;
	bool is_valid() const { return violation().empty(); }

	bool operator==(const FractionalMatching &o) const {
		return host_ == o.host_ && units_ == o.units_;
	}

private:
	std::size_t index(int u, int v) const {
		return static_cast<std::size_t>(u) * static_cast<std::size_t>(host_.order()) +
		       static_cast<std::size_t>(v);
	}

	Graph host_;
	std::vector<unsigned char> units_;
};

} // namespace fracmatch
