#include "doctest.h"
#include "fracmatch/complement.hpp"
#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"
#include "fracmatch/generators.hpp"
#include "fracmatch/harness.hpp"
#include "fracmatch/ng_bounds.hpp"
#include "fracmatch/partition.hpp"
#include "oracles.hpp"

using namespace fracmatch;

namespace {

Graph copies(const Graph &piece, int k, int isolates) {
	Graph g(0);
	for (int i = 0; i < k; ++i) g = disjoint_union(g, piece);
	return add_isolates(g, isolates);
}

// Hubs 0..c-1 form a clique; hub a has private partner c+a; every later
// vertex is joined to every hub.
Graph hub_clique(int c, int leaves) {
	Graph g(2 * c + leaves);
	for (int a = 0; a < c; ++a) {
		for (int b = a + 1; b < c; ++b) g.add_edge(a, b);
		g.add_edge(a, c + a);
		for (int l = 0; l < leaves; ++l) g.add_edge(a, 2 * c + l);
	}
	return g;
}

ComplementResult build(const Graph &g, ComplementConstruction which) {
	return construct_complement_fm(g, good_partition(g), which);
}

} // namespace

TEST_CASE("sum reports at the extremal graphs") {
	const BoundReport star29 = ng_sum(star(29));
	CHECK(star29.sum == HalfInt::from_whole(15));
	CHECK(star29.nonempty.applies);
	CHECK(star29.nonempty.equality);
	CHECK_FALSE(star29.isolate_free.applies);
	CHECK(star29.strongest() == BoundKind::Nonempty);
	CHECK(star29.equality_family.tag == FamilyTag::StarUnion);
	CHECK(star29.family_matches);

	for (const Graph &g : {empty(30), complete(30)}) {
		const BoundReport r = ng_sum(g);
		CHECK(r.sum == HalfInt::from_whole(15));
		CHECK(r.half_order.equality);
		CHECK_FALSE(r.nonempty.applies);
		CHECK(r.equality_family.tag != FamilyTag::None);
	}

	const BoundReport k = ng_sum(k2pql(14, 13, 1));
	CHECK(k.n == 30);
	CHECK(k.alpha_g == HalfInt::from_whole(2));
	CHECK(k.alpha_gc == HalfInt::from_whole(15));
	CHECK(k.isolate_free.equality);
	CHECK(k.equality_family.tag == FamilyTag::K2pql);

	const BoundReport b = ng_sum(disjoint_union(star(6), star(24)));
	CHECK(b.sum == HalfInt::from_whole(17));
	CHECK(b.isolate_free.equality);
	CHECK(b.equality_family.tag == FamilyTag::BistarInK2n2);

	CHECK(ng_sum(add_isolates(complete(3), 9)).sum == HalfInt::from_units(15));
	CHECK(ng_sum(k2pql(0, 0, 10)).sum == HalfInt::from_whole(7));

	CHECK_THROWS_AS(ng_sum(Graph(1)), PreconditionError);
	const BoundReport tiny = ng_sum(complete(2));
	CHECK(tiny.half_order.equality);
}

TEST_CASE("sum is symmetric under complementation") {
	const SampleSpec spec{14, Probability{1, 3}, 100, 5};
	for (std::uint64_t i = 0; i < spec.count; ++i) {
		const Graph g = sample_graph(spec, i);
		const BoundReport a = ng_sum(g), b = ng_sum(complement(g));
		CHECK(a.sum == b.sum);
		CHECK(a.alpha_g == b.alpha_gc);
		CHECK(a.sum == oracle::alpha_dp(g) + oracle::alpha_dp(complement(g)));
	}
}

TEST_CASE("basic construction on a star") {
	const Graph g = star(8);
	const ComplementResult r = build(g, ComplementConstruction::Basic);
	CHECK(r.fm.is_valid());
	CHECK(r.fm.host() == complement(g));
	CHECK(r.fm.value() == HalfInt::from_units(7));
	CHECK(r.fm.one_edge_count() == 1);
	CHECK(r.fm.edges_with_units(1).size() == 5);
	CHECK(r.info.branch == "residual>=3");
	CHECK(r.info.residual == 5);
	CHECK(r.info.claimed == HalfInt::from_units(7));
	CHECK(r.meets_claim);
	CHECK(alpha_prime(complement(g)) == HalfInt::from_units(7));
}

TEST_CASE("basic construction on 2K2 with isolates") {
	const Graph g(8, {{0, 1}, {2, 3}});
	const ComplementResult r = build(g, ComplementConstruction::Basic);
	CHECK(r.info.branch == "residual=0");
	CHECK(r.fm.value() == HalfInt::from_whole(4));
	CHECK(r.fm.one_edge_count() == 4);
}

TEST_CASE("isolate-free construction on a double star") {
	const Graph g = k2pql(3, 3, 0);
	const ComplementResult r = build(g, ComplementConstruction::IsolateFree);
	CHECK(r.fm.is_valid());
	CHECK(r.fm.value() >= HalfInt::from_units(7));
	CHECK(r.fm.value() <= alpha_prime(complement(g)));
	CHECK(r.meets_claim);
	CHECK(!r.info.neighbour_part.empty());
}

TEST_CASE("balanced construction reaches the all-in-V12 case") {
	for (int c = 3; c <= 6; ++c)
		for (int leaves = 2 * c; leaves <= 2 * c + 3; ++leaves) {
			const Graph g = hub_clique(c, leaves);
			const ComplementResult r = build(g, ComplementConstruction::Balanced);
			CHECK(r.info.branch == "all_in_V12");
			CHECK(r.meets_claim);
			CHECK(r.fm.value() <= alpha_prime(complement(g)));
		}
}

TEST_CASE("construction preconditions") {
	CHECK_THROWS_AS(build(complete(8), ComplementConstruction::Basic), PreconditionError);
	CHECK_THROWS_AS(build(star(8), ComplementConstruction::IsolateFree), PreconditionError);
	CHECK_THROWS_AS(build(Graph(8, {{0, 1}, {2, 3}}), ComplementConstruction::IsolateFree), PreconditionError);
	CHECK_THROWS_AS(build(k2pql(3, 3, 0), ComplementConstruction::Balanced), PreconditionError);
	CHECK_THROWS_AS(build(star(8), ComplementConstruction::NearQuarterWhole), PreconditionError);

	GoodPartition p = good_partition(star(8));
	p.s = 0;
	CHECK_THROWS_AS(construct_complement_fm(star(8), p, ComplementConstruction::Basic), PreconditionError);
	CHECK_THROWS_AS(construct_complement_fm(star(9), good_partition(star(8)), ComplementConstruction::Basic),
	                PreconditionError);
}

TEST_CASE("near-quarter construction") {
	// 8 K_{1,2} plus 4 isolates: n = 28, t = s = 8.
	const Graph a = copies(path(3), 8, 4);
	const GoodPartition pa = good_partition(a);
	REQUIRE(pa.t == HalfInt::from_whole(8));
	REQUIRE(pa.s == 8);
	const ComplementResult ra = construct_complement_fm_nearquarter(a, pa);
	CHECK(ra.info.construction == ComplementConstruction::NearQuarterWhole);
	CHECK(ra.info.branch == "s=t");
	CHECK(ra.fm.value() >= HalfInt::from_whole(10));
	CHECK(ra.meets_claim);
	CHECK(ra.meets_target);
	CHECK(ra.fm.value() <= alpha_prime(complement(a)));

	// C3 ∪ 6K2 ∪ 14K1: n = 29, t = 15/2, s = 0.
	const Graph b = add_isolates(disjoint_union(complete(3), copies(complete(2), 6, 0)), 14);
	const GoodPartition pb = good_partition(b);
	REQUIRE(pb.t == HalfInt::from_units(15));
	const ComplementResult rb = construct_complement_fm_nearquarter(b, pb);
	CHECK(rb.info.construction == ComplementConstruction::NearQuarterHalf);
	CHECK(rb.info.branch == "s<=1");
	CHECK(rb.fm.value() >= HalfInt::from_whole(14));
	CHECK(rb.meets_target);

	// 7 C3 ∪ 7K1: t = 21/2 is out of range.
	const Graph c = copies(complete(3), 7, 7);
	CHECK_THROWS_AS(construct_complement_fm_nearquarter(c, good_partition(c)), PreconditionError);
	// Below n = 28 only on request.
	const Graph d = copies(path(3), 4, 0);
	CHECK_THROWS_AS(construct_complement_fm_nearquarter(d, good_partition(d)), PreconditionError);

	CHECK(nearquarter_applies(28, HalfInt::from_units(15)));
	CHECK(nearquarter_applies(28, HalfInt::from_units(16)));
	CHECK_FALSE(nearquarter_applies(28, HalfInt::from_units(17)));
	CHECK(nearquarter_applies(30, HalfInt::from_units(17)));
	CHECK_FALSE(nearquarter_applies(30, HalfInt::from_units(15)));
}

TEST_CASE("constructions on every graph up to order 6") {
	int built = 0;
	for (int n = 2; n <= 6; ++n) {
		const GraphSource src = GraphSource::enumerate(n);
		for (std::uint64_t m = 0; m < src.size(); ++m) {
			const Graph g = src.at(m);
			const GoodPartition p = good_partition(g);
			const HalfInt exact = oracle::alpha_dp(complement(g));
			for (auto which : {ComplementConstruction::Basic, ComplementConstruction::IsolateFree,
			                   ComplementConstruction::Balanced}) {
				try {
					const ComplementResult r = construct_complement_fm(g, p, which);
					++built;
					REQUIRE(r.fm.is_valid());
					REQUIRE(r.meets_claim);
					REQUIRE(r.fm.value() <= exact);
				} catch (const PreconditionError &) {
				}
			}
		}
	}
	CHECK(built > 0);
}

TEST_CASE("constructions on generated graphs of order 28 to 31") {
	std::map<std::string, int> branches;
	for (int n = 28; n <= 31; ++n) {
		const GraphSource src = GraphSource::low_matching(n, 1500, 2024);
		for (std::uint64_t i = 0; i < src.size(); ++i) {
			const Graph g = src.at(i);
			const GoodPartition p = good_partition(g);
			const HalfInt exact = alpha_prime(complement(g));
			auto examine = [&](const ComplementResult &r) {
				++branches[construction_name(r.info.construction) + ":" + r.info.branch];
				REQUIRE(r.fm.is_valid());
				REQUIRE(r.meets_claim);
				REQUIRE(r.meets_target);
				REQUIRE(!r.info.fallback);
				REQUIRE(r.fm.value() <= exact);
			};
			for (auto which : {ComplementConstruction::Basic, ComplementConstruction::IsolateFree,
			                   ComplementConstruction::Balanced}) {
				try {
					examine(construct_complement_fm(g, p, which));
				} catch (const PreconditionError &) {
				}
			}
			if (nearquarter_applies(n, p.t)) examine(construct_complement_fm_nearquarter(g, p));
		}
	}
	for (const char *key : {"basic:residual>=3", "isolate_free:residual>=3", "balanced:pair_in_V11",
	                        "near_quarter_whole:p=1", "near_quarter_whole:s=t", "near_quarter_half:s<=1"})
		CHECK(branches[key] > 0);
}

TEST_CASE("below order 28 missing structure falls back to an optimum") {
	int fallbacks = 0;
	for (int n = 8; n <= 20; ++n) {
		const GraphSource src = GraphSource::low_matching(n, 400, 9);
		for (std::uint64_t i = 0; i < src.size(); ++i) {
			const Graph g = src.at(i);
			const GoodPartition p = good_partition(g);
			if (!nearquarter_applies(n, p.t)) continue;
			const ComplementResult r = construct_complement_fm_nearquarter(g, p, false);
			REQUIRE(r.fm.is_valid());
			REQUIRE(r.fm.value() <= alpha_prime(complement(g)));
			if (r.info.fallback) {
				++fallbacks;
				CHECK(r.fm.value() == alpha_prime(complement(g)));
			}
		}
	}
	CHECK(fallbacks > 0);
}
