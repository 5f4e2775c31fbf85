#include "fracmatch/complement.hpp"

#include <sstream>

#include "fracmatch/bipartite.hpp"
#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"

namespace fracmatch {

std::string construction_name(ComplementConstruction c) {
	switch (c) {
	case ComplementConstruction::Basic: return "basic";
	case ComplementConstruction::IsolateFree: return "isolate_free";
	case ComplementConstruction::Balanced: return "balanced";
	case ComplementConstruction::NearQuarterHalf: return "near_quarter_half";
	case ComplementConstruction::NearQuarterWhole: return "near_quarter_whole";
	}
	return "?";
}

std::string CaseDescriptor::to_string() const {
	std::ostringstream os;
	os << construction_name(construction) << ":" << branch;
	if (residual >= 0) os << " residual=" << residual;
	if (!neighbour_part.empty()) os << " neighbour=" << neighbour_part;
	if (p_count >= 0) os << " p=" << p_count;
	os << " claimed=" << claimed;
	if (target != claimed) os << " target=" << target;
	if (fallback) os << " fallback";
	return os.str();
}

bool nearquarter_applies(int n, HalfInt t) {
	const std::int64_t q = n / 4;
	const std::int64_t units = t.units();
	if (n % 4 <= 1) return units == 2 * q + 1 || units == 2 * q + 2;
	return units == 2 * q + 2 || units == 2 * q + 3;
}

namespace {

// Raised when a count the argument only guarantees for large n comes up short.
struct OrderShortfall {
	std::string what;
};

// Raised when the structure the p >= 2 branch takes for granted is absent.
struct AssumedStructureMissing {
	std::string what;
};

class Builder {
public:
	Builder(const Graph &g, bool order_dependent)
	    : gc_(complement(g)), fm_(gc_), order_dependent_(order_dependent) {}

	const Graph &gc() const { return gc_; }
	const FractionalMatching &fm() const { return fm_; }
	VertexSet used() const { return used_; }

	void one(int u, int v, const char *what) {
		if (u == v || !gc_.adjacent(u, v) || used_.contains(u) || used_.contains(v))
			throw InternalError(std::string("complement edge unavailable: ") + what);
		fm_.set_units(u, v, 2);
		used_.insert(u);
		used_.insert(v);
	}

	void half_cycle(const std::vector<int> &cycle, const char *what) {
		const std::size_t k = cycle.size();
		for (std::size_t i = 0; i < k; ++i) {
			const int a = cycle[i], b = cycle[(i + 1) % k];
			if (k < 3 || used_.contains(a) || !gc_.adjacent(a, b))
				throw InternalError(std::string("complement cycle unavailable: ") + what);
		}
		for (std::size_t i = 0; i < k; ++i) fm_.set_units(cycle[i], cycle[(i + 1) % k], 1);
		for (int v : cycle) used_.insert(v);
	}

	// `need` independent complement edges between the unused parts of left and right.
	void match(VertexSet left, VertexSet right, int need, const char *what) {
		if (need <= 0) return;
		const std::vector<int> l = (left - used_).members();
		const std::vector<int> r = (right - used_ - left).members();
		const BipartiteMatching m = max_bipartite_matching(between(gc_, l, r));
		if (m.size < need) {
			const std::string msg = std::string("too few complement edges: ") + what;
			if (order_dependent_) throw OrderShortfall{msg};
			throw InternalError(msg);
		}
		int taken = 0;
		for (std::size_t i = 0; i < l.size() && taken < need; ++i) {
			if (m.left_mate[i] < 0) continue;
			one(l[i], r[static_cast<std::size_t>(m.left_mate[i])], what);
			++taken;
		}
	}

	// Final step on the unused part of a complement clique: a 1/2-cycle on
	// three or more vertices, a 1-edge on two. Returns the number used up.
	int clique_rest(VertexSet clique, const char *what) {
		const std::vector<int> rest = (clique - used_).members();
		if (rest.size() >= 3)
			half_cycle(rest, what);
		else if (rest.size() == 2)
			one(rest[0], rest[1], what);
		return static_cast<int>(rest.size());
	}

private:
	Graph gc_;
	FractionalMatching fm_;
	VertexSet used_;
	bool order_dependent_;
};

HalfInt ceil_half(std::int64_t numerator_units, std::int64_t divisor) {
	return HalfInt::from_units((numerator_units + divisor - 1) / divisor);
}

void require(bool ok, const char *what) {
	if (!ok) throw InternalError(std::string("missing structure: ") + what);
}

void check_partition(const Graph &g, const GoodPartition &p) {
	if (!(p.fm.host() == g)) throw PreconditionError("partition was built on another graph");
	const PartitionReport r = verify_partition(g, p);
	if (!r.all()) throw PreconditionError("not a good partition: " + r.structure_issue);
}

ComplementResult finish(const Builder &b, CaseDescriptor info) {
	const std::string bad = b.fm().violation();
	if (!bad.empty()) throw InternalError("constructed matching infeasible: " + bad);
	ComplementResult out{b.fm(), std::move(info), false, false};
	out.meets_claim = out.fm.value() >= out.info.claimed;
	out.meets_target = out.fm.value() >= out.info.target;
	return out;
}

int first_in(VertexSet s) { return s.empty() ? -1 : s.front(); }

// t <= n/4: 2t - s edges V12 -> V2 plus a cycle (or edge) on the rest of V2.
ComplementResult basic(const Graph &g, const GoodPartition &p) {
	const int n = g.order();
	const int T = static_cast<int>(p.t.units());
	const int s = p.s;
	const int d = n - 2 * T + s;
	CaseDescriptor info;
	info.construction = ComplementConstruction::Basic;
	info.claimed = info.target = HalfInt::from_units(n - s);
	info.residual = d;

	Builder b(g, false);
	const VertexSet v2 = p.v2();
	if (d == 0) {
		info.branch = "residual=0";
		b.match(p.v12, p.v22, T - s, "V12-V22 perfect");
	} else if (d == 1) {
		info.branch = "residual=1";
		const int u = s == 1 ? p.x.front() : p.v12.front();
		std::vector<int> tri{u};
		for (int w : (p.v21 | p.v22).members()) {
			if (tri.size() < 3 && b.gc().adjacent(u, w)) tri.push_back(w);
		}
		require(tri.size() == 3, "two complement neighbours of a V12 vertex in V2");
		b.half_cycle(tri, "triangle through V12");
		b.match(p.v12, v2, T - s - 1, "V12-V2 after triangle");
	} else if (d == 2) {
		info.branch = "residual=2";
		std::vector<int> order = p.v21.members();
		for (int w : p.v22.members()) order.push_back(w);
		b.one(order[0], order[1], "edge inside V2");
		b.match(p.v12, v2, T - s, "V12-V2 after edge");
	} else {
		info.branch = "residual>=3";
		b.match(p.v12, p.v22, T - s, "V12-V22");
		b.clique_rest(v2, "cycle in V2");
	}
	return finish(b, std::move(info));
}

// t <= n/4, s >= 1, G and complement isolate-free: one extra complement edge at V11.
ComplementResult isolate_free(const Graph &g, const GoodPartition &p) {
	const int n = g.order();
	const int T = static_cast<int>(p.t.units());
	const int s = p.s;
	const Graph gc = complement(g);
	CaseDescriptor info;
	info.construction = ComplementConstruction::IsolateFree;
	info.claimed = info.target = HalfInt::from_units(n - s + 1);

	int u = -1, v = -1;
	for (const VertexSet part : {p.v12, p.v11 | p.v21, p.v22}) {
		for (int a : p.v11.members()) {
			const int w = first_in(gc.neighbours(a) & part);
			if (w >= 0) {
				u = a;
				v = w;
				break;
			}
		}
		if (u >= 0) break;
	}
	require(u >= 0, "complement neighbour of a V11 vertex");
	info.neighbour_part = p.v12.contains(v)   ? "V12"
	                      : p.v11.contains(v) ? "V11"
	                      : p.v21.contains(v) ? "V21"
	                                          : "V22";

	Builder b(g, false);
	const VertexSet v2 = p.v2();
	b.one(u, v, "V11 vertex and its complement neighbour");
	if (p.v12.contains(v)) {
		const int d = n - 2 * T + s + 1;
		info.residual = d;
		if (d == 2) {
			info.branch = "residual=2";
			require(!p.v21.empty() && !p.v22.empty(), "V21 and V22 nonempty");
			b.one(p.v22.front(), p.v21.front(), "V21-V22 edge");
			b.match(p.v12, p.v22, T - s - 1, "V12-V22 after edge");
		} else {
			info.branch = "residual>=3";
			b.match(p.v12, p.v22, T - s - 1, "V12-V22");
			b.clique_rest(v2, "cycle in V2");
		}
	} else {
		info.branch = "pair_in_X";
		require(s >= 2, "s >= 2 when the neighbour avoids V12");
		const std::vector<int> xs = p.x.members();
		b.one(xs[0], xs[1], "two vertices of X");
		b.match(p.v12, p.v22, T - s - 2, "V12-V22");
		info.residual = b.clique_rest(v2, "cycle in V2");
	}
	return finish(b, std::move(info));
}

// t <= n/4, s = t >= 3, G and complement isolate-free.
ComplementResult balanced(const Graph &g, const GoodPartition &p) {
	const int n = g.order();
	const int s = p.s;
	const Graph gc = complement(g);
	CaseDescriptor info;
	info.construction = ComplementConstruction::Balanced;
	info.claimed = info.target = HalfInt::from_units(n - s + 2);
	const VertexSet v2 = p.v2();
	require(p.x == p.v12, "X = V12 when s = t");

	// A complement edge inside V11.
	auto inside_v11 = [&](int a, int c, const char *branch) {
		Builder b(g, false);
		info.branch = branch;
		b.one(a, c, "complement edge in V11");
		b.match(p.v12, p.v22, s, "V12-V22");
		info.residual = b.clique_rest(v2, "cycle in V2");
		return finish(b, info);
	};

	for (int a : p.v11.members()) {
		const int c = first_in(gc.neighbours(a) & p.v11);
		if (c >= 0) return inside_v11(a, c, "pair_in_V11");
	}

	for (int u : p.v11.members()) {
		const int v = first_in(gc.neighbours(u) & v2);
		if (v < 0) continue;
		const int w = first_in(g.neighbours(v) & (p.v11 - VertexSet{u}));
		require(w >= 0, "second V11 neighbour of a V2 vertex");
		const VertexSet miss = gc.neighbours(w);
		if (!(miss & p.v11).empty()) return inside_v11(w, (miss & p.v11).front(), "pair_in_V11");
		Builder b(g, false);
		b.one(u, v, "V11-V2 complement edge");
		if (!(miss & p.v12).empty()) {
			info.branch = "second_in_V12";
			b.one(w, (miss & p.v12).front(), "V11-V12 complement edge");
			b.match(p.v12, v2, s - 1, "V12-V2");
		} else {
			const int w2 = first_in(miss & (v2 - VertexSet{v}));
			require(w2 >= 0, "complement neighbour of a V11 vertex");
			info.branch = "second_in_V2";
			b.one(w, w2, "V11-V2 complement edge");
			const std::vector<int> xs = p.v12.members();
			b.one(xs[0], xs[1], "edge inside V12");
			b.match(p.v12, v2, s - 2, "V12-V2");
		}
		info.residual = b.clique_rest(v2, "cycle in V2");
		return finish(b, std::move(info));
	}

	// G[V11] is a clique joined to all of V2; every complement neighbour of V11 is in V12.
	const int u = p.v11.front();
	const int v = first_in(gc.neighbours(u) & p.v12);
	require(v >= 0, "complement neighbour of a V11 vertex in V12");
	const int vp = p.fm.full_partner(v);
	require(vp >= 0 && p.v11.contains(vp), "V11 partner of an X vertex");
	const int vpp = first_in(gc.neighbours(vp) & p.v12);
	require(vpp >= 0 && vpp != v, "complement neighbour in V12 of the partner");
	info.branch = "all_in_V12";
	Builder b(g, false);
	b.one(u, v, "V11-V12 complement edge");
	b.one(vp, vpp, "partner complement edge");
	b.match(p.v12, p.v22, s - 2, "V12-V22");
	info.residual = b.clique_rest(v2, "cycle in V2");
	return finish(b, std::move(info));
}

// Closing step shared by the half-cycle and p >= 2 branches: the V22 vertices
// left over (r of them) together with the complement edge v1v2 inside X.
void close_residual(Builder &b, const GoodPartition &p, int r, int v1, int v2, CaseDescriptor &info) {
	info.residual = r;
	info.branch += r >= 3 ? "/residual>=3" : "/residual=" + std::to_string(r);
	const std::vector<int> rest = (p.v22 - b.used()).members();
	if (static_cast<int>(rest.size()) != r) throw OrderShortfall{"residual count mismatch"};
	if (r < 0) throw OrderShortfall{"negative residual"};
	if (r == 1) {
		b.half_cycle({v1, v2, rest[0]}, "triangle on v1 v2 and a V22 vertex");
		return;
	}
	b.one(v1, v2, "pair in X");
	b.clique_rest(p.v22, "cycle in V22");
}

std::vector<int> first_half_cycle(const FractionalMatching &fm, VertexSet within) {
	for (int start : within.members()) {
		std::vector<int> walk{start};
		int prev = -1, cur = start;
		while (true) {
			int next = -1;
			for (int w : fm.host().neighbours(cur).members())
				if (w != prev && fm.units(cur, w) == 1) {
					next = w;
					break;
				}
			if (next < 0 || next == start) break;
			walk.push_back(next);
			prev = cur;
			cur = next;
		}
		if (walk.size() >= 3) return walk;
	}
	return {};
}

ComplementResult nearquarter(const Graph &g, const GoodPartition &p, CaseDescriptor &info) {
	const int n = g.order();
	const int T = static_cast<int>(p.t.units());
	const int s = p.s;
	Builder b(g, true);

	if (s <= 1) {
		info.branch = "s<=1";
		b.match(p.v12, p.v22, n - T - s, "V22 into V12");
		return finish(b, info);
	}

	const std::vector<int> xs = p.x.members();
	const int v1 = xs[0], v2 = xs[1];
	require(!g.adjacent(v1, v2), "X independent");
	if (p.v22.size() < 3) throw OrderShortfall{"|V22| >= 3"};
	const VertexSet rest12 = p.v12 - p.x;
	const int r = n - 2 * T + s + 2;

	if (T == 2 * s) {
		info.branch = "s=t";
		b.one(v1, v2, "pair in X");
		b.match(p.x, p.v21, s - 2, "X-V21");
		info.residual = b.clique_rest(p.v2(), "cycle in V2");
		return finish(b, info);
	}

	const std::vector<int> cycle = first_half_cycle(p.fm, rest12);
	if (T % 2 == 1) require(!cycle.empty(), "1/2-cycle in V12 - X when t is not integral");
	if (!cycle.empty()) {
		info.branch = "half_cycle";
		const std::vector<int> x21 = p.v21.members();
		b.one(cycle[0], x21[0], "cycle vertex to V21");
		b.one(cycle[1], x21[1], "cycle vertex to V21");
		b.match(p.x - VertexSet{v1, v2}, p.v21, s - 2, "X-V21");
		b.match(rest12, p.v22, T - 2 * s - 2, "V12 - X into V22");
		close_residual(b, p, r, v1, v2, info);
		return finish(b, info);
	}

	std::vector<Edge> ones;
	for (const Edge &e : p.fm.edges_with_units(2))
		if (rest12.contains(e.first) && rest12.contains(e.second)) ones.push_back(e);
	info.p_count = static_cast<int>(ones.size());
	require(!ones.empty(), "1-edge inside V12 - X");
	const std::vector<int> x21 = p.v21.members();
	// Each 1-edge has an end off any given V2 vertex's neighbourhood.
	auto open_end = [&](const Edge &e, int x) {
		if (!g.adjacent(e.first, x)) return std::pair{e.first, e.second};
		if (g.adjacent(e.second, x)) {
			if (ones.size() >= 2) throw AssumedStructureMissing{"1-edge without a common V2 neighbour"};
			require(false, "1-edge without a common V2 neighbour");
		}
		return std::pair{e.second, e.first};
	};

	if (ones.size() == 1) {
		info.branch = "p=1";
		require(T == 2 * s + 2, "t = s + 1 when p = 1");
		const auto [w, w1] = open_end(ones[0], x21[0]);
		b.one(v1, v2, "pair in X");
		b.one(x21[0], w, "1-edge end to V21");
		b.one(p.v22.front(), w1, "1-edge end to V22");
		b.match(p.x, p.v21, s - 2, "X-V21");
		info.residual = b.clique_rest(p.v2(), "cycle in V2");
		return finish(b, info);
	}

	info.branch = "p>=2";
	const int w1 = open_end(ones[0], x21[0]).first;
	const int w3 = open_end(ones[1], x21[1]).first;
	b.one(x21[0], w1, "1-edge end to V21");
	b.one(x21[1], w3, "1-edge end to V21");
	b.match(p.x - VertexSet{v1, v2}, p.v21, s - 2, "X-V21");
	b.match(rest12, p.v22, T - 2 * s - 2, "V12 - X into V22");
	close_residual(b, p, r, v1, v2, info);
	return finish(b, info);
}

} // namespace

ComplementResult construct_complement_fm(const Graph &g, const GoodPartition &p, ComplementConstruction which) {
	if (g.order() < 2) throw PreconditionError("complement constructions need n >= 2");
	check_partition(g, p);
	if (which == ComplementConstruction::NearQuarterHalf || which == ComplementConstruction::NearQuarterWhole) {
		ComplementResult r = construct_complement_fm_nearquarter(g, p);
		if (r.info.construction != which) throw PreconditionError("t does not match the requested near-quarter case");
		return r;
	}
	if (4 * p.t.units() > 2 * static_cast<std::int64_t>(g.order()))
		throw PreconditionError("construction needs t <= n/4");
	const bool both_isolate_free = is_isolate_free(g) && is_isolate_free(complement(g));
	switch (which) {
	case ComplementConstruction::Basic: return basic(g, p);
	case ComplementConstruction::IsolateFree:
		if (!both_isolate_free || p.s < 1)
			throw PreconditionError("needs s >= 1 and G, complement isolate-free");
		return isolate_free(g, p);
	case ComplementConstruction::Balanced:
		if (!both_isolate_free || p.s < 3 || p.t != HalfInt::from_whole(p.s))
			throw PreconditionError("needs s = t >= 3 and G, complement isolate-free");
		return balanced(g, p);
	default: break;
	}
	throw PreconditionError("unknown construction");
}

ComplementResult construct_complement_fm_nearquarter(const Graph &g, const GoodPartition &p,
                                                     bool require_large_order) {
	const int n = g.order();
	check_partition(g, p);
	if (require_large_order && n < 28) throw PreconditionError("near-quarter construction needs n >= 28");
	if (!nearquarter_applies(n, p.t)) throw PreconditionError("t is not in the near-quarter range");

	CaseDescriptor info;
	info.construction = p.t.is_integral() ? ComplementConstruction::NearQuarterWhole
	                                      : ComplementConstruction::NearQuarterHalf;
	const std::int64_t T = p.t.units();
	info.claimed = ceil_half(2 * n - T, 2);
	info.target = ceil_half(n + 12, 2);
	auto fall_back = [&](const std::string &why) {
		CaseDescriptor fb = info;
		fb.fallback = true;
		fb.branch = (info.branch.empty() ? std::string("entry") : info.branch) + " (" + why + ")";
		ComplementResult out{extract_fm(complement(g)), fb, false, false};
		out.meets_claim = out.fm.value() >= fb.claimed;
		out.meets_target = out.fm.value() >= fb.target;
		return out;
	};
	try {
		return nearquarter(g, p, info);
	} catch (const OrderShortfall &e) {
		if (n >= 28) throw InternalError("order-dependent structure missing at n >= 28: " + e.what);
		return fall_back(e.what);
	} catch (const AssumedStructureMissing &e) {
		info.branch = "p>=2";
		return fall_back(e.what);
	}
}

} // namespace fracmatch
