#include "fracmatch/graph.hpp"

#include <string>

#include "fracmatch/errors.hpp"

namespace fracmatch {

VertexSet::VertexSet(std::initializer_list<int> members) {
	for (int v : members) insert(v);
}

std::vector<int> VertexSet::members() const {
	std::vector<int> out;
	out.reserve(size());
	for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
	return out;
}

Graph::Graph(int n) : n_(n) {
	if (n < 0 || n > kMaxOrder)
		throw PreconditionError("graph order " + std::to_string(n) + " outside [0, 64]");
}

Graph::Graph(int n, const std::vector<Edge> &edges) : Graph(n) {
	for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
	if (v < 0 || v >= n_)
		throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
		                        std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
	check_vertex(u);
	check_vertex(v);
	if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
	rows_[u] |= std::uint64_t{1} << v;
	rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
	check_vertex(u);
	check_vertex(v);
	rows_[u] &= ~(std::uint64_t{1} << v);
	rows_[v] &= ~(std::uint64_t{1} << u);
}

std::size_t Graph::edge_count() const {
	std::size_t twice = 0;
	for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
	return twice / 2;
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	for (int u = 0; u < n_; ++u) {
		std::uint64_t above = rows_[u] & ~((std::uint64_t{2} << u) - 1);
		for (int v : VertexSet(above).members()) out.emplace_back(u, v);
	}
	return out;
}

bool Graph::operator==(const Graph &o) const {
	if (n_ != o.n_) return false;
	for (int v = 0; v < n_; ++v)
		if (rows_[v] != o.rows_[v]) return false;
	return true;
}

Graph complement(const Graph &g) {
	const int n = g.order();
	Graph out(n);
	const VertexSet all = VertexSet::range(n);
	for (int u = 0; u < n; ++u) {
		VertexSet missing = all - g.neighbours(u);
		missing.erase(u);
		for (int v : missing.members())
			if (v > u) out.add_edge(u, v);
	}
	return out;
}

VertexSet isolated_vertices(const Graph &g) {
	VertexSet out;
	for (int v = 0; v < g.order(); ++v)
		if (g.degree(v) == 0) out.insert(v);
	return out;
}

bool is_isolate_free(const Graph &g) { return isolated_vertices(g).empty(); }

bool is_spanning_subgraph_of(const Graph &g, const Graph &h) {
	if (g.order() != h.order())
		throw PreconditionError("containment check needs equal orders (" +
		                        std::to_string(g.order()) + " vs " + std::to_string(h.order()) + ")");
	for (int v = 0; v < g.order(); ++v)
		if (!g.neighbours(v).is_subset_of(h.neighbours(v))) return false;
	return true;
}

Graph induced_subgraph(const Graph &g, VertexSet keep) {
	const std::vector<int> kept = keep.members();
	Graph out(static_cast<int>(kept.size()));
	for (std::size_t i = 0; i < kept.size(); ++i)
		for (std::size_t j = i + 1; j < kept.size(); ++j)
			if (g.adjacent(kept[i], kept[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
	return out;
}

bool has_two_independent_edges(const Graph &g) {
	for (auto [u, v] : g.edges()) {
		VertexSet rest = g.vertices();
		rest.erase(u);
		rest.erase(v);
		for (int w : rest.members())
			if (!(g.neighbours(w) & rest).empty()) return true;
	}
	return false;
}

} // namespace fracmatch
