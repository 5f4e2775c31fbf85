#pragma once

#include <cstdint>
#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch {

/// Bipartite graph with at most 64 vertices per side; left vertex u keeps
/// its right neighbourhood as a bit row.
class BipartiteGraph {
public:
	BipartiteGraph(int left_size, int right_size);

	int left_size() const { return left_; }
	int right_size() const { return right_; }

	void add_edge(int left, int right);
	bool adjacent(int left, int right) const { return (rows_[left] >> right) & 1U; }
	VertexSet right_neighbours(int left) const { return VertexSet(rows_[left]); }
	std::size_t edge_count() const;

private:
	int left_;
	int right_;
	std::vector<std::uint64_t> rows_;
};

struct BipartiteMatching {
	std::vector<int> left_mate;  ///< -1 when unmatched
	std::vector<int> right_mate; ///< -1 when unmatched
	int size = 0;
	/// König cover: every edge has an endpoint in it and |cover| == size.
	VertexSet cover_left;
	VertexSet cover_right;
};

/// Maximum matching by augmenting paths. Left vertices are processed in
/// ascending order and each search tries right neighbours in ascending order,
/// so the result depends only on the labeling.
BipartiteMatching max_bipartite_matching(const BipartiteGraph &b);

/// L and R are copies of V; u_L ~ v_R iff uv is an edge of g.
BipartiteGraph double_cover(const Graph &g);

/// Bipartite graph between the ordered lists `left` and `right` of g-vertices,
/// with an edge wherever g has one. Index i on a side refers to left[i] / right[i].
BipartiteGraph between(const Graph &g, const std::vector<int> &left, const std::vector<int> &right);

} // namespace fracmatch
