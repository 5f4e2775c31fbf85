#include <numeric>

#include "doctest.h"
#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"
#include "fracmatch/generators.hpp"
#include "fracmatch/harness.hpp"
#include "oracles.hpp"

using namespace fracmatch;

namespace {

Graph petersen() {
	Graph g(10);
	for (int i = 0; i < 5; ++i) {
		g.add_edge(i, (i + 1) % 5);
		g.add_edge(i, i + 5);
		g.add_edge(5 + i, 5 + (i + 2) % 5);
	}
	return g;
}

Graph relabel(const Graph &g, const std::vector<int> &perm) {
	Graph h(g.order());
	for (const auto &[u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
	return h;
}

} // namespace

TEST_CASE("alpha' on named graphs") {
	CHECK(alpha_prime(complete(2)) == HalfInt::from_whole(1));
	CHECK(alpha_prime(complete(3)) == HalfInt::from_units(3));
	CHECK(alpha_prime(cycle(5)) == HalfInt::from_units(5));
	CHECK(alpha_prime(complete(5)) == HalfInt::from_units(5));
	CHECK(alpha_prime(star(9)) == HalfInt::from_whole(1));
	CHECK(alpha_prime(path(4)) == HalfInt::from_whole(2));
	CHECK(alpha_prime(complete_bipartite(2, 3)) == HalfInt::from_whole(2));
	CHECK(alpha_prime(petersen()) == HalfInt::from_whole(5));
	CHECK(alpha_prime(empty(7)) == HalfInt());
	CHECK(alpha_prime(Graph(0)) == HalfInt());
	CHECK(alpha_prime(complete(30)) == HalfInt::from_whole(15));
}

TEST_CASE("alpha' agrees with the brute-force references on every graph up to order 6") {
	for (int n = 0; n <= 6; ++n) {
		const GraphSource src = GraphSource::enumerate(n);
		for (std::uint64_t m = 0; m < src.size(); ++m) {
			const Graph g = src.at(m);
			const HalfInt a = alpha_prime(g);
			REQUIRE(a == oracle::alpha_dp(g));
			REQUIRE(a == HalfInt::from_units(n - oracle::berge_deficiency(g)));
			REQUIRE(berge_deficiency(g).deficiency == oracle::berge_deficiency(g));
			REQUIRE(berge_deficiency_konig(g).deficiency == oracle::berge_deficiency(g));
			if (g.edge_count() <= (n <= 5 ? 10U : 7U)) REQUIRE(oracle_alpha_exhaustive(g) == oracle::alpha_weights(g));
		}
	}
}

TEST_CASE("Berge witnesses certify their deficiency") {
	const SampleSpec spec{12, Probability{1, 4}, 200, 3};
	for (std::uint64_t i = 0; i < spec.count; ++i) {
		const Graph g = sample_graph(spec, i);
		const BergeWitness a = berge_deficiency_exhaustive(g);
		const BergeWitness b = berge_deficiency_konig(g);
		CHECK(a.deficiency == b.deficiency);
		CHECK(isolated_after_removal(g, a.s_set) - a.s_set.size() == a.deficiency);
		CHECK(isolated_after_removal(g, b.s_set) - b.s_set.size() == b.deficiency);
	}
	// Above the exhaustive limit the König route answers.
	const Graph s = star(30);
	CHECK(berge_deficiency(s).deficiency == 28);
	CHECK(berge_deficiency(s).s_set == VertexSet{0});
	CHECK_THROWS_AS(berge_deficiency_exhaustive(s), PreconditionError);
}

TEST_CASE("exhaustive weight search refuses large inputs") {
	CHECK_THROWS_AS(oracle_alpha_exhaustive(complete(6)), PreconditionError);
	CHECK(oracle_alpha_exhaustive(cycle(7)) == HalfInt::from_units(7));
}

TEST_CASE("extracted matchings are optimal and half-integral") {
	for (const Graph &g : {petersen(), cycle(7), star(5), complete(6), k2pql(3, 2, 1)}) {
		const FractionalMatching f = extract_fm(g);
		CHECK(f.is_valid());
		CHECK(f.value() == alpha_prime(g));
	}
	CHECK(is_fractional_perfect(extract_fm(complete(4))));
	CHECK_FALSE(is_fractional_perfect(extract_fm(star(4))));
}

TEST_CASE("canonicalization re-alternates even 1/2-cycles") {
	const Graph g = complete(4);
	FractionalMatching f(g);
	for (int i = 0; i < 4; ++i) f.set_units(i, (i + 1) % 4, 1);
	REQUIRE(f.value() == HalfInt::from_whole(2));
	const FractionalMatching c = canonicalize_fm(g, f);
	CHECK(c.value() == HalfInt::from_whole(2));
	CHECK(c.one_edge_count() == 2);
	CHECK(c.edges_with_units(1).empty());
}

TEST_CASE("canonicalization merges two 1/2-triangles joined by an edge") {
	const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
	FractionalMatching f(g);
	for (const auto &[u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) f.set_units(u, v, 1);
	REQUIRE(f.value() == HalfInt::from_whole(3));
	const FractionalMatching c = canonicalize_fm(g, f);
	CHECK(c.value() == HalfInt::from_whole(3));
	CHECK(c.one_edge_count() == 3);
	CHECK(c.units(2, 3) == 2);
}

TEST_CASE("canonicalization keeps a lone odd 1/2-cycle") {
	const Graph g = cycle(5);
	const FractionalMatching c = optimal_fm(g);
	CHECK(c.edges_with_units(1).size() == 5);
	CHECK(inspect_structure(c).all());
}

TEST_CASE("canonicalization rejects infeasible and sub-optimal input") {
	const Graph g = path(4);
	FractionalMatching f(g);
	f.set_units(0, 1, 1);
	f.set_units(1, 2, 1);
	f.set_units(2, 3, 1);
	CHECK_THROWS_AS(canonicalize_fm(g, f), NotOptimalError);
	f.set_units(0, 1, 2);
	f.set_units(1, 2, 2);
	CHECK_FALSE(f.is_valid());
	CHECK_THROWS_AS(canonicalize_fm(g, f), NotOptimalError);
	CHECK_THROWS_AS(f.set_units(0, 2, 1), PreconditionError);
}

TEST_CASE("canonical shape holds from many starting optima") {
	const SampleSpec spec{9, Probability{2, 5}, 300, 17};
	for (std::uint64_t i = 0; i < spec.count; ++i) {
		const Graph g = sample_graph(spec, i);
		// Different labelings steer the matching search to different optima.
		std::vector<int> perm(9), back(9);
		std::iota(perm.begin(), perm.end(), 0);
		std::rotate(perm.begin(), perm.begin() + static_cast<long>(i % 9), perm.end());
		if (i % 2) std::reverse(perm.begin(), perm.end());
		for (int v = 0; v < 9; ++v) back[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
		const FractionalMatching moved = extract_fm(relabel(g, perm));
		FractionalMatching f(g);
		for (int units : {1, 2})
			for (const auto &[u, v] : moved.edges_with_units(units))
				f.set_units(back[static_cast<std::size_t>(u)], back[static_cast<std::size_t>(v)], units);
		REQUIRE(f.value() == alpha_prime(g));

		const FractionalMatching c = canonicalize_fm(g, f);
		CHECK(c.is_valid());
		CHECK(c.value() == f.value());
		CHECK(c.one_edge_count() >= f.one_edge_count());
		CHECK(inspect_structure(c).all());
		CHECK(canonicalize_fm(g, c) == c);
	}
}
