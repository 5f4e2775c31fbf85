#include "fracmatch/generators.hpp"

#include <sstream>
#include <utility>

#include "fracmatch/errors.hpp"

namespace fracmatch {

namespace {

void require_nonnegative(int value, const char *what) {
	if (value < 0) throw PreconditionError(std::string(what) + " must be non-negative");
}

} // namespace

Graph complete(int n) {
	Graph g(n);
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
	return g;
}

Graph empty(int n) { return Graph(n); }

Graph cycle(int n) {
	if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
	Graph g(n);
	for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
	return g;
}

Graph path(int n) {
	Graph g(n);
	for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
	return g;
}

Graph star(int n) {
	if (n < 1) throw PreconditionError("star needs at least 1 vertex");
	Graph g(n);
	for (int leaf = 1; leaf < n; ++leaf) g.add_edge(0, leaf);
	return g;
}

Graph k2pql(int p, int q, int l) {
	require_nonnegative(p, "p");
	require_nonnegative(q, "q");
	require_nonnegative(l, "l");
	if (p < q) std::swap(p, q);
	Graph g(p + q + l + 2);
	g.add_edge(0, 1);
	int next = 2;
	for (int i = 0; i < p; ++i) g.add_edge(0, next++);
	for (int i = 0; i < q; ++i) g.add_edge(1, next++);
	for (int i = 0; i < l; ++i, ++next) {
		g.add_edge(0, next);
		g.add_edge(1, next);
	}
	return g;
}

Graph hgraph(int n) {
	if (n < 4) throw PreconditionError("hgraph needs at least 4 vertices");
	Graph g(n);
	for (int u = 0; u < 4; ++u)
		for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
	for (int leaf = 4; leaf < n; ++leaf) g.add_edge(0, leaf);
	return g;
}

Graph complete_bipartite(int a, int b) {
	require_nonnegative(a, "a");
	require_nonnegative(b, "b");
	Graph g(a + b);
	for (int u = 0; u < a; ++u)
		for (int v = a; v < a + b; ++v) g.add_edge(u, v);
	return g;
}

Graph disjoint_union(const Graph &g1, const Graph &g2) {
	const int shift = g1.order();
	Graph g(g1.order() + g2.order());
	for (auto [u, v] : g1.edges()) g.add_edge(u, v);
	for (auto [u, v] : g2.edges()) g.add_edge(u + shift, v + shift);
	return g;
}

Graph add_isolates(const Graph &g, int k) {
	require_nonnegative(k, "isolate count");
	return disjoint_union(g, Graph(k));
}

FamilySpec FamilySpec::parse(const std::string &text) {
	FamilySpec spec;
	const auto colon = text.find(':');
	spec.name = text.substr(0, colon);
	if (colon == std::string::npos) return spec;
	std::istringstream in(text.substr(colon + 1));
	std::string item;
	while (std::getline(in, item, ',')) {
		try {
			std::size_t used = 0;
			spec.params.push_back(std::stoi(item, &used));
			if (used != item.size()) throw std::invalid_argument(item);
		} catch (const std::exception &) {
			throw ParseError("bad family parameter '" + item + "' in '" + text + "'");
		}
	}
	return spec;
}

Graph generate(const FamilySpec &spec) {
	const auto &p = spec.params;
	auto arity = [&](std::size_t k) {
		if (p.size() != k)
			throw PreconditionError("family '" + spec.name + "' takes " + std::to_string(k) +
			                        " parameter(s)");
	};
	if (spec.name == "complete") return arity(1), complete(p[0]);
	if (spec.name == "empty") return arity(1), empty(p[0]);
	if (spec.name == "cycle") return arity(1), cycle(p[0]);
	if (spec.name == "path") return arity(1), path(p[0]);
	if (spec.name == "star") return arity(1), star(p[0]);
	if (spec.name == "hgraph") return arity(1), hgraph(p[0]);
	if (spec.name == "k2pql") return arity(3), k2pql(p[0], p[1], p[2]);
	if (spec.name == "complete_bipartite") return arity(2), complete_bipartite(p[0], p[1]);
	throw PreconditionError("unknown family '" + spec.name + "'");
}

} // namespace fracmatch
