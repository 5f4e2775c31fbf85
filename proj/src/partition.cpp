#include "fracmatch/partition.hpp"

#include "json.hpp"

#include "fracmatch/bipartite.hpp"
#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"

namespace fracmatch {

int GoodPartition::paired_with(int u) const {
	for (auto [a, b] : pairing)
		if (a == u) return b;
	return -1;
}

GoodPartition build_partition(const Graph &g, const FractionalMatching &fm) {
	GoodPartition p;
	p.fm = fm;
	p.t = fm.value();
	const VertexSet v1 = fm.support();
	const VertexSet v2 = g.vertices() - v1;

	const std::vector<int> left = v1.members();
	const std::vector<int> right = v2.members();
	const BipartiteMatching m = max_bipartite_matching(between(g, left, right));
	for (std::size_t i = 0; i < left.size(); ++i) {
		const int j = m.left_mate[i];
		if (j < 0) continue;
		const int a = left[i];
		const int b = right[static_cast<std::size_t>(j)];
		p.pairing.emplace_back(a, b);
		p.v11.insert(a);
		p.v21.insert(b);
		if (const int partner = fm.full_partner(a); partner >= 0) p.x.insert(partner);
	}
	p.s = m.size;
	p.v12 = v1 - p.v11;
	p.v22 = v2 - p.v21;
	return p;
}

namespace {

std::string check_structure(const Graph &g, const GoodPartition &p) {
	const VertexSet all = g.vertices();
	const VertexSet v1 = p.v1(), v2 = p.v2();
	if (!(p.v11 & p.v12).empty() || !(p.v21 & p.v22).empty() || !(v1 & v2).empty() ||
	    (v1 | v2) != all)
		return "parts do not partition V";
	if (!(p.fm.host() == g)) return "fractional matching belongs to another graph";
	if (!p.fm.is_valid()) return "infeasible fractional matching: " + p.fm.violation();
	if (p.fm.value() != p.t) return "t differs from f(G)";
	if (v1 != p.fm.support()) return "V1 is not the support of f";
	if (v1.size() != p.t.units()) return "|V1| != 2t";
	for (int v : v1.members())
		if (p.fm.load(v) != 2) return "f is not fractional perfect on V1";
	if (!inspect_structure(p.fm).half_edges_form_odd_cycles) return "1/2-edges do not form odd cycles";
	for (int v : v2.members())
		if (!(g.neighbours(v) & v2).empty()) return "V2 is not independent";
	if (p.v11.size() != p.s || p.v21.size() != p.s || static_cast<int>(p.pairing.size()) != p.s)
		return "|V11|, |V21| and the pairing disagree with s";
	VertexSet left, right;
	for (auto [a, b] : p.pairing) {
		if (!g.adjacent(a, b) || !p.v11.contains(a) || !p.v21.contains(b) || left.contains(a) ||
		    right.contains(b))
			return "pairing is not a set of independent [V11, V21] edges";
		left.insert(a);
		right.insert(b);
	}
	if (max_bipartite_matching(between(g, v1.members(), v2.members())).size != p.s)
		return "pairing is not a maximum [V1, V2] matching";
	VertexSet partners;
	for (int u : p.v11.members())
		if (int w = p.fm.full_partner(u); w >= 0) partners.insert(w);
	// A V11 vertex without a full partner is a property failure, reported separately.
	if (p.x.size() != p.s || !p.x.is_subset_of(p.v12) || (partners.size() == p.s && p.x != partners))
		return "X is not the set of full partners of V11 inside V12";
	return {};
}

} // namespace

PartitionReport verify_partition(const Graph &g, const GoodPartition &p) {
	PartitionReport r;
	r.structure_issue = check_structure(g, p);
	r.structure = r.structure_issue.empty();

	const VertexSet v2 = p.v2();
	for (auto [u, v] : p.fm.edges_with_units(2))
		if (!(g.neighbours(u) & g.neighbours(v) & v2).empty()) r.one_edges_avoid_common_v2 = false;

	for (int u : p.v11.members()) {
		if (p.fm.full_partner(u) < 0) r.v11_all_full = false;
		for (int v : (g.neighbours(u) & p.v11).members())
			if (p.fm.units(u, v) > 0) r.v11_edges_carry_zero = false;
	}
	if (p.s >= 2)
		for (int u : p.x.members())
			if (!(g.neighbours(u) & p.x).empty()) r.x_independent = false;
	for (int u : p.x.members())
		if (!(g.neighbours(u) & v2).empty()) r.no_v2_x_edges = false;
	return r;
}

namespace {

[[noreturn]] void exchange_raised_value(const Graph &g, const FractionalMatching &improved,
                                        const std::string &rule) {
	const std::string feasible = improved.is_valid() ? "feasible" : "infeasible";
	throw InternalError(rule + ": exchange yields a " + feasible + " fractional matching of value " +
	                    improved.value().to_string() + " > alpha' = " +
	                    alpha_prime(g).to_string());
}

/// Sets every edge at v to zero.
void clear_vertex(FractionalMatching &f, int v) {
	for (int w : f.host().neighbours(v).members()) f.set_units(v, w, 0);
}

/// Applies the exchange behind the first failing property. Each of them
/// raises f(G), so on an optimal matching this never returns.
[[noreturn]] void raise_via_exchange(const Graph &g, const GoodPartition &p,
                                     const PartitionReport &r) {
	FractionalMatching f = p.fm;
	const VertexSet v2 = p.v2();
	if (!r.one_edges_avoid_common_v2) {
		for (auto [u, v] : p.fm.edges_with_units(2)) {
			const VertexSet common = g.neighbours(u) & g.neighbours(v) & v2;
			if (common.empty()) continue;
			const int w = common.front();
			f.set_units(u, v, 1);
			f.set_units(u, w, 1);
			f.set_units(v, w, 1);
			exchange_raised_value(g, f, "common V2 neighbour of a 1-edge");
		}
	}
	if (!r.v11_edges_carry_zero) {
		for (int u : p.v11.members())
			for (int v : (g.neighbours(u) & p.v11).members()) {
				if (p.fm.units(u, v) == 0) continue;
				clear_vertex(f, u);
				clear_vertex(f, v);
				f.set_units(u, p.paired_with(u), 2);
				f.set_units(v, p.paired_with(v), 2);
				exchange_raised_value(g, f, "weighted edge inside V11");
			}
	}
	if (!r.v11_all_full) {
		for (int u : p.v11.members()) {
			if (p.fm.full_partner(u) >= 0) continue;
			// u lies on a 1/2-cycle: match it to its V21 partner and
			// re-alternate the even path left on the cycle.
			std::vector<int> walk{u};
			int prev = -1, cur = u;
			while (true) {
				int next = -1;
				for (int w : g.neighbours(cur).members())
					if (w != prev && p.fm.units(cur, w) == 1) {
						next = w;
						break;
					}
				if (next < 0 || next == u) break;
				walk.push_back(next);
				prev = cur;
				cur = next;
			}
			for (std::size_t k = 0; k < walk.size(); ++k) {
				const int a = walk[k], b = walk[(k + 1) % walk.size()];
				if (g.adjacent(a, b)) f.set_units(a, b, 0);
			}
			for (std::size_t k = 1; k + 1 < walk.size(); k += 2) f.set_units(walk[k], walk[k + 1], 2);
			f.set_units(u, p.paired_with(u), 2);
			exchange_raised_value(g, f, "V11 vertex that is not full");
		}
	}
	if (!r.x_independent) {
		for (int a : p.x.members())
			for (int b : (g.neighbours(a) & p.x).members()) {
				const int ga = p.fm.full_partner(a), hb = p.fm.full_partner(b);
				f.set_units(ga, a, 0);
				f.set_units(hb, b, 0);
				f.set_units(a, b, 2);
				f.set_units(ga, p.paired_with(ga), 2);
				f.set_units(hb, p.paired_with(hb), 2);
				exchange_raised_value(g, f, "adjacent vertices in X");
			}
	}
	if (!r.no_v2_x_edges) {
		for (int v : p.x.members()) {
			const VertexSet hits = g.neighbours(v) & v2;
			if (hits.empty()) continue;
			const int x = hits.front();
			const int u = p.fm.full_partner(v);
			f.set_units(u, v, 0);
			f.set_units(v, x, 2);
			f.set_units(u, p.paired_with(u), 2);
			exchange_raised_value(g, f, "edge between V2 and X");
		}
	}
	throw InternalError("partition repair found no applicable rule");
}

} // namespace

GoodPartition repair(const Graph &g, GoodPartition p) {
	if (!(p.fm.host() == g)) throw PreconditionError("partition belongs to another graph");
	const HalfInt optimum = alpha_prime(g);
	if (!p.fm.is_valid() || p.fm.value() != optimum)
		throw NotOptimalError("partition matching has value " + p.fm.value().to_string() +
		                      ", alpha' = " + optimum.to_string() + "; refusing to repair");

	// Each canonicalization strictly raises the 1-edge count, bounded by n/2.
	for (int round = 0; round <= g.order(); ++round) {
		const PartitionReport r = verify_partition(g, p);
		if (r.all()) return p;
		if (!inspect_structure(p.fm).all() || !r.structure) {
			FractionalMatching canonical = canonicalize_fm(g, p.fm);
			if (canonical == p.fm)
				throw InternalError("partition structure broken on a canonical matching: " +
				                    r.structure_issue);
			p = build_partition(g, canonical);
			continue;
		}
		raise_via_exchange(g, p, r);
	}
	throw InternalError("partition repair did not reach a fixpoint");
}

GoodPartition good_partition(const Graph &g) { return repair(g, build_partition(g, extract_fm(g))); }

std::string dump_partition(const GoodPartition &p) {
	using nlohmann::json;
	json j;
	j["n"] = p.fm.order();
	j["t"] = p.t.to_string();
	j["s"] = p.s;
	j["V11"] = p.v11.members();
	j["V12"] = p.v12.members();
	j["V21"] = p.v21.members();
	j["V22"] = p.v22.members();
	j["X"] = p.x.members();
	json pairing = json::array();
	for (auto [a, b] : p.pairing) pairing.push_back({a, b});
	j["pairing"] = pairing;
	json one = json::array(), half = json::array();
	for (auto [u, v] : p.fm.edges_with_units(2)) one.push_back({u, v});
	for (auto [u, v] : p.fm.edges_with_units(1)) half.push_back({u, v});
	j["one_edges"] = one;
	j["half_edges"] = half;
	return j.dump(2);
}

GoodPartition parse_partition_dump(const Graph &g, const std::string &text) {
	using nlohmann::json;
	try {
		const json j = json::parse(text);
		if (j.at("n").get<int>() != g.order()) throw ParseError("partition dump order mismatch");
		auto set_of = [&](const char *key) {
			VertexSet out;
			for (int v : j.at(key).get<std::vector<int>>()) {
				if (v < 0 || v >= g.order()) throw ParseError(std::string("vertex out of range in ") + key);
				out.insert(v);
			}
			return out;
		};
		GoodPartition p;
		p.v11 = set_of("V11");
		p.v12 = set_of("V12");
		p.v21 = set_of("V21");
		p.v22 = set_of("V22");
		p.x = set_of("X");
		p.s = j.at("s").get<int>();
		p.t = parse_half_int(j.at("t").get<std::string>());
		for (const auto &e : j.at("pairing")) p.pairing.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
		p.fm = FractionalMatching(g);
		for (const auto &e : j.at("one_edges")) p.fm.set_units(e.at(0).get<int>(), e.at(1).get<int>(), 2);
		for (const auto &e : j.at("half_edges")) p.fm.set_units(e.at(0).get<int>(), e.at(1).get<int>(), 1);
		return p;
	} catch (const json::exception &e) {
		throw ParseError(std::string("bad partition dump: ") + e.what());
	} catch (const PreconditionError &e) {
		throw ParseError(std::string("bad partition dump: ") + e.what());
	}
}

} // namespace fracmatch
