#include "fracmatch/fractional.hpp"

#include "fracmatch/errors.hpp"

namespace fracmatch {

FractionalMatching::FractionalMatching(const Graph &host)
    : host_(host),
      units_(static_cast<std::size_t>(host.order()) * static_cast<std::size_t>(host.order()), 0) {}

void FractionalMatching::set_units(int u, int v, int units) {
	if (u < 0 || v < 0 || u >= order() || v >= order() || !host_.adjacent(u, v))
		throw PreconditionError("cannot weight non-edge " + std::to_string(u) + "-" +
		                        std::to_string(v));
	if (units < 0 || units > 2)
		throw PreconditionError("edge weight must be 0, 1/2 or 1");
	units_[index(u, v)] = static_cast<unsigned char>(units);
	units_[index(v, u)] = static_cast<unsigned char>(units);
}

int FractionalMatching::load(int v) const {
	int total = 0;
	for (int u : host_.neighbours(v).members()) total += units(u, v);
	return total;
}

HalfInt FractionalMatching::value() const {
	std::int64_t total = 0;
	for (auto [u, v] : host_.edges()) total += units(u, v);
	return HalfInt::from_units(total);
}

int FractionalMatching::one_edge_count() const {
	return static_cast<int>(edges_with_units(2).size());
}

std::vector<Edge> FractionalMatching::edges_with_units(int wanted) const {
	std::vector<Edge> out;
	for (auto [u, v] : host_.edges())
		if (units(u, v) == wanted) out.emplace_back(u, v);
	return out;
}

VertexSet FractionalMatching::support() const {
	VertexSet out;
	for (int v = 0; v < order(); ++v)
		if (load(v) > 0) out.insert(v);
	return out;
}

VertexSet FractionalMatching::unweighted() const { return host_.vertices() - support(); }

VertexSet FractionalMatching::full_vertices() const {
	VertexSet out;
	for (int v = 0; v < order(); ++v)
		if (full_partner(v) >= 0) out.insert(v);
	return out;
}

int FractionalMatching::full_partner(int v) const {
	for (int u : host_.neighbours(v).members())
		if (units(u, v) == 2) return u;
	return -1;
}

std::string FractionalMatching::violation() const {
	const int n = order();
	for (int u = 0; u < n; ++u)
		for (int v = 0; v < n; ++v) {
			const int w = units_[index(u, v)];
			if (w == 0) continue;
			if (!host_.adjacent(u, v))
				return "weight on non-edge " + std::to_string(u) + "-" + std::to_string(v);
			if (w > 2) return "weight above 1 on " + std::to_string(u) + "-" + std::to_string(v);
		}
	for (int v = 0; v < n; ++v)
		if (load(v) > 2) return "vertex " + std::to_string(v) + " carries more than 1";
	return {};
}

} // namespace fracmatch
