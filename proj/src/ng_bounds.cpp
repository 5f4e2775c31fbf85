#include "fracmatch/ng_bounds.hpp"

#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"

namespace fracmatch {

const BoundCheck &BoundReport::check(BoundKind kind) const {
	switch (kind) {
	case BoundKind::Nonempty: return nonempty;
	case BoundKind::IsolateFree: return isolate_free;
	default: return half_order;
	}
}

BoundKind BoundReport::strongest() const {
	if (isolate_free.applies) return BoundKind::IsolateFree;
	if (nonempty.applies) return BoundKind::Nonempty;
	return BoundKind::HalfOrder;
}

bool BoundReport::any_violation() const {
	for (const BoundCheck *c : {&half_order, &nonempty, &isolate_free})
		if (c->applies && !c->satisfied) return true;
	return !family_matches;
}

namespace {

BoundCheck evaluate(HalfInt sum, std::int64_t bound_units, bool applies) {
	BoundCheck c;
	c.bound = HalfInt::from_units(bound_units);
	c.applies = applies;
	c.satisfied = sum >= c.bound;
	c.equality = sum == c.bound;
	return c;
}

} // namespace

BoundReport ng_sum(const Graph &g) {
	if (g.order() < 2) throw PreconditionError("sum bounds need n >= 2");
	const Graph gc = complement(g);
	BoundReport r;
	r.n = g.order();
	r.alpha_g = alpha_prime(g);
	r.alpha_gc = alpha_prime(gc);
	r.sum = r.alpha_g + r.alpha_gc;
	r.g_nonempty = g.edge_count() > 0;
	r.gc_nonempty = gc.edge_count() > 0;
	r.g_isolate_free = is_isolate_free(g);
	r.gc_isolate_free = is_isolate_free(gc);
	r.large_order = r.n >= kLargeOrder;

	r.half_order = evaluate(r.sum, r.n, true);
	r.nonempty = evaluate(r.sum, r.n + 1, r.g_nonempty && r.gc_nonempty && r.large_order);
	r.isolate_free = evaluate(r.sum, r.n + 4, r.g_isolate_free && r.gc_isolate_free && r.large_order);

	const BoundKind kind = r.strongest();
	const FamilyLabel family = classify_equality_family(g, kind);
	const bool tight = r.check(kind).equality;
	if (tight) r.equality_family = family;
	r.family_matches = tight == (family.tag != FamilyTag::None);
	return r;
}

} // namespace fracmatch
