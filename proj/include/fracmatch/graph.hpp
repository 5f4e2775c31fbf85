#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fracmatch {

/// Subset of the vertex range {0..63} of some graph, one bit per vertex.
class VertexSet {
public:
	constexpr VertexSet() = default;
	constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
	VertexSet(std::initializer_list<int> members);

	/// {0, .., n-1}
	static constexpr VertexSet range(int n) {
		return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
	}

	constexpr std::uint64_t bits() const { return bits_; }
	constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
	constexpr int size() const { return std::popcount(bits_); }
	constexpr bool empty() const { return bits_ == 0; }

	constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
	constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

	/// Smallest member; the set must be non-empty.
	constexpr int front() const { return std::countr_zero(bits_); }

	/// Members in ascending order.
	std::vector<int> members() const;

	constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
	constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
	constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
	constexpr bool operator==(const VertexSet &) const = default;

	constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

private:
	std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64), stored as symmetric bit rows.
class Graph {
public:
	static constexpr int kMaxOrder = 64;

	Graph() = default;
	/// Edgeless graph of order n; throws PreconditionError if n is outside [0, 64].
	explicit Graph(int n);
	Graph(int n, const std::vector<Edge> &edges);

	int order() const { return n_; }
	VertexSet vertices() const { return VertexSet::range(n_); }

	bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
	VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
	int degree(int v) const { return std::popcount(rows_[v]); }

	/// Adds uv; loops and out-of-range endpoints throw PreconditionError.
	void add_edge(int u, int v);
	void remove_edge(int u, int v);

	std::size_t edge_count() const;
	/// All edges (u < v), ordered by u then v.
	std::vector<Edge> edges() const;

	bool operator==(const Graph &o) const;

private:
	void check_vertex(int v) const;

	int n_ = 0;
	std::array<std::uint64_t, kMaxOrder> rows_{};
};

Graph complement(const Graph &g);

/// Degree-0 vertices.
VertexSet isolated_vertices(const Graph &g);

/// True iff every vertex has positive degree.
bool is_isolate_free(const Graph &g);

/// Labeled containment E(g) ⊆ E(h) on a common vertex set. Orders must agree.
bool is_spanning_subgraph_of(const Graph &g, const Graph &h);

/// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph &g, VertexSet keep);

/// Does `g` have two vertex-disjoint edges?
bool has_two_independent_edges(const Graph &g);

} // namespace fracmatch
