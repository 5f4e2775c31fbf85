#include "fracmatch/bipartite.hpp"

#include <string>

#include "fracmatch/errors.hpp"

namespace fracmatch {

BipartiteGraph::BipartiteGraph(int left_size, int right_size)
    : left_(left_size), right_(right_size) {
	if (left_size < 0 || right_size < 0 || left_size > 64 || right_size > 64)
		throw PreconditionError("bipartite sides must lie in [0, 64]");
	rows_.assign(static_cast<std::size_t>(left_size), 0);
}

void BipartiteGraph::add_edge(int left, int right) {
	if (left < 0 || left >= left_ || right < 0 || right >= right_)
		throw PreconditionError("bipartite edge (" + std::to_string(left) + ", " +
		                        std::to_string(right) + ") out of range");
	rows_[static_cast<std::size_t>(left)] |= std::uint64_t{1} << right;
}

std::size_t BipartiteGraph::edge_count() const {
	std::size_t total = 0;
	for (auto row : rows_) total += std::popcount(row);
	return total;
}

namespace {

class Augmenter {
public:
	Augmenter(const BipartiteGraph &b, BipartiteMatching &m) : b_(b), m_(m) {}

	bool augment_from(int u) {
		visited_ = 0;
		return search(u);
	}

private:
	bool search(int u) {
		const std::uint64_t fresh = b_.right_neighbours(u).bits() & ~visited_;
		for (int v : VertexSet(fresh).members()) {
			if ((visited_ >> v) & 1U) continue;
			visited_ |= std::uint64_t{1} << v;
			const int owner = m_.right_mate[static_cast<std::size_t>(v)];
			if (owner < 0 || search(owner)) {
				m_.left_mate[static_cast<std::size_t>(u)] = v;
				m_.right_mate[static_cast<std::size_t>(v)] = u;
				return true;
			}
		}
		return false;
	}

	const BipartiteGraph &b_;
	BipartiteMatching &m_;
	std::uint64_t visited_ = 0;
};

} // namespace

BipartiteMatching max_bipartite_matching(const BipartiteGraph &b) {
	BipartiteMatching m;
	m.left_mate.assign(static_cast<std::size_t>(b.left_size()), -1);
	m.right_mate.assign(static_cast<std::size_t>(b.right_size()), -1);

	Augmenter augmenter(b, m);
	for (int u = 0; u < b.left_size(); ++u)
		if (augmenter.augment_from(u)) ++m.size;

	// König: Z = vertices reachable from free left vertices by alternating
	// paths; cover = (L \ Z) ∪ (R ∩ Z).
	std::uint64_t reach_left = 0;
	std::uint64_t reach_right = 0;
	std::vector<int> stack;
	for (int u = 0; u < b.left_size(); ++u)
		if (m.left_mate[static_cast<std::size_t>(u)] < 0) {
			reach_left |= std::uint64_t{1} << u;
			stack.push_back(u);
		}
	while (!stack.empty()) {
		const int u = stack.back();
		stack.pop_back();
		const std::uint64_t fresh = b.right_neighbours(u).bits() & ~reach_right;
		for (int v : VertexSet(fresh).members()) {
			reach_right |= std::uint64_t{1} << v;
			const int w = m.right_mate[static_cast<std::size_t>(v)];
			if (w >= 0 && !((reach_left >> w) & 1U)) {
				reach_left |= std::uint64_t{1} << w;
				stack.push_back(w);
			}
		}
	}
	m.cover_left = VertexSet::range(b.left_size()) - VertexSet(reach_left);
	m.cover_right = VertexSet(reach_right);
	return m;
}

BipartiteGraph double_cover(const Graph &g) {
	BipartiteGraph b(g.order(), g.order());
	for (int u = 0; u < g.order(); ++u)
		for (int v : g.neighbours(u).members()) b.add_edge(u, v);
	return b;
}

BipartiteGraph between(const Graph &g, const std::vector<int> &left, const std::vector<int> &right) {
	BipartiteGraph b(static_cast<int>(left.size()), static_cast<int>(right.size()));
	for (std::size_t i = 0; i < left.size(); ++i)
		for (std::size_t j = 0; j < right.size(); ++j)
			if (g.adjacent(left[i], right[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
	return b;
}

} // namespace fracmatch
