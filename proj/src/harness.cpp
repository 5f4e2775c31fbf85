#include "fracmatch/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "fracmatch/complement.hpp"
#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"
#include "fracmatch/families.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/ng_bounds.hpp"
#include "fracmatch/partition.hpp"
#include "json.hpp"

namespace fracmatch {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

std::uint64_t parse_u64(const std::string &text, const char *what) {
	std::uint64_t v = 0;
	const char *end = text.data() + text.size();
	auto [ptr, ec] = std::from_chars(text.data(), end, v);
	if (text.empty() || ec != std::errc() || ptr != end)
		throw ParseError(std::string("bad ") + what + ": '" + text + "'");
	return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
	std::vector<std::string> out;
	std::string cur;
	std::istringstream in(text);
	while (std::getline(in, cur, sep)) out.push_back(cur);
	if (!text.empty() && text.back() == sep) out.emplace_back();
	return out;
}

} // namespace

std::uint64_t SplitMix64::next() {
	state_ += kGamma;
	return mix(state_);
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t i) { return mix(seed + (i + 1) * kGamma); }

Graph graph_from_mask(int n, std::uint64_t mask) {
	Graph g(n);
	int k = 0;
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u, ++k)
			if ((mask >> k) & 1U) g.add_edge(u, v);
	return g;
}

std::uint64_t mask_of(const Graph &g) {
	if (g.order() > 11) throw PreconditionError("mask needs n <= 11");
	std::uint64_t mask = 0;
	int k = 0;
	for (int v = 1; v < g.order(); ++v)
		for (int u = 0; u < v; ++u, ++k)
			if (g.adjacent(u, v)) mask |= std::uint64_t{1} << k;
	return mask;
}

Probability Probability::parse(const std::string &text) {
	Probability p;
	if (auto slash = text.find('/'); slash != std::string::npos) {
		p.num = parse_u64(text.substr(0, slash), "probability numerator");
		p.den = parse_u64(text.substr(slash + 1), "probability denominator");
	} else if (auto dot = text.find('.'); dot != std::string::npos) {
		const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
		if (frac.empty() || frac.size() > 18) throw ParseError("bad probability '" + text + "'");
		p.den = 1;
		for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
		p.num = (whole.empty() ? 0 : parse_u64(whole, "probability")) * p.den + parse_u64(frac, "probability");
	} else {
		p.num = parse_u64(text, "probability");
	}
	if (p.den == 0 || p.num > p.den) throw ParseError("probability must lie in [0, 1]: '" + text + "'");
	return p;
}

std::string Probability::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

bool Probability::accepts(std::uint64_t r) const {
	__extension__ using u128 = unsigned __int128;
	return static_cast<u128>(r) * den < static_cast<u128>(num) << 64;
}

SampleSpec SampleSpec::parse(const std::string &text) {
	const std::vector<std::string> parts = split(text, ',');
	if (parts.size() != 4) throw ParseError("sample spec is n,p,count,seed: '" + text + "'");
	SampleSpec s;
	const std::uint64_t n = parse_u64(parts[0], "order");
	if (n > static_cast<std::uint64_t>(Graph::kMaxOrder)) throw ParseError("order above 64");
	s.n = static_cast<int>(n);
	s.p = Probability::parse(parts[1]);
	s.count = parse_u64(parts[2], "count");
	s.seed = parse_u64(parts[3], "seed");
	return s;
}

std::string SampleSpec::to_string() const {
	return std::to_string(n) + "," + p.to_string() + "," + std::to_string(count) + "," + std::to_string(seed);
}

Graph sample_graph(const SampleSpec &spec, std::uint64_t index) {
	SplitMix64 rng(SplitMix64::at(spec.seed, index));
	Graph g(spec.n);
	for (int v = 1; v < spec.n; ++v)
		for (int u = 0; u < v; ++u)
			if (spec.p.accepts(rng.next())) g.add_edge(u, v);
	return g;
}

Graph low_matching_graph(int n, std::uint64_t seed, std::uint64_t index) {
	if (n < 2) throw PreconditionError("low-matching generator needs n >= 2");
	SplitMix64 rng(SplitMix64::at(seed, index));
	auto below = [&](int k) { return static_cast<int>(rng.next() % static_cast<std::uint64_t>(k)); };
	auto join = [](Graph &g, int a, int b) {
		if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
	};
	Graph g(n);
	const int quarter = std::max(1, n / 4);
	const int shape = below(5);
	if (shape == 0) {
		// Disjoint K2, C3 and small stars, the rest isolated.
		const int pieces = std::max(1, quarter - 2 + below(5));
		int next = 0;
		for (int i = 0; i < pieces; ++i) {
			const int kind = below(3);
			const int size = kind == 0 ? 2 : kind == 1 ? 3 : 3 + below(3);
			if (next + size > n) break;
			for (int j = 1; j < size; ++j) g.add_edge(next, next + j);
			if (kind == 1) g.add_edge(next + 1, next + 2);
			next += size;
		}
		// Half the time the leftover vertices become leaves of one more star.
		if (below(2) == 0 && next + 1 < n)
			for (int v = next + 1; v < n; ++v) g.add_edge(next, v);
	} else if (shape == 1 || shape == 3) {
		// Hubs with leaves attached to one or two of them.
		const int hubs = 1 + below(std::min(n - 1, quarter + 2));
		for (int a = 0; a < hubs; ++a)
			for (int b = a + 1; b < hubs; ++b)
				if (below(2) == 0) g.add_edge(a, b);
		for (int v = hubs; v < n; ++v) {
			if (shape == 3 && below(8) == 0) continue;
			g.add_edge(v, below(hubs));
			if (below(3) == 0) join(g, v, below(hubs));
		}
		const int extra = below(4);
		for (int e = 0; e < extra && n - hubs >= 2; ++e) join(g, hubs + below(n - hubs), hubs + below(n - hubs));
	} else if (shape == 4) {
		// Pieces worth exactly `budget` halves of fractional matching.
		int budget = 2 * quarter - 2 + below(6);
		int next = 0;
		std::vector<int> heads;
		while (budget >= 2) {
			const int roll = below(6);
			const bool triangle = budget == 3 || (budget > 3 && roll == 0);
			const int size = triangle ? 3 : roll <= 3 ? 2 : 3 + below(2);
			if (next + size > n) break;
			for (int j = 1; j < size; ++j) g.add_edge(next, next + j);
			if (triangle) g.add_edge(next + 1, next + 2);
			heads.push_back(next);
			budget -= triangle ? 3 : 2;
			next += size;
		}
		if (!heads.empty() && below(2) == 0)
			for (int v = next; v < n; ++v) g.add_edge(v, heads[static_cast<std::size_t>(below(static_cast<int>(heads.size())))]);
	} else {
		// A hub clique, a private partner per hub, and leaves shared by the hubs.
		const int hubs = std::max(1, std::min(quarter, 2 + below(quarter)));
		const int drop = below(2) == 0 ? 0 : 8; // 0: keep every edge
		auto keep = [&] { return drop == 0 || below(drop) != 0; };
		for (int a = 0; a < hubs; ++a) {
			for (int b = a + 1; b < hubs; ++b)
				if (keep()) g.add_edge(a, b);
			if (hubs + a < n) g.add_edge(a, hubs + a);
		}
		for (int v = 2 * hubs; v < n; ++v)
			for (int a = 0; a < hubs; ++a)
				if (keep()) g.add_edge(v, a);
		if (below(2) == 0) return g;
	}
	// Relabel uniformly so no branch depends on vertex order.
	std::vector<int> perm(static_cast<std::size_t>(n));
	for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
	for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(below(i + 1))]);
	Graph out(n);
	for (const auto &[u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
	return out;
}

GraphSource GraphSource::enumerate(int n, bool allow_ceiling) {
	if (n < 0 || n > kEnumerationCeiling || (n > kEnumerationGuard && !allow_ceiling))
		throw PreconditionError("enumeration budget exceeded for n = " + std::to_string(n));
	GraphSource s;
	s.kind_ = Kind::Enumerate;
	s.n_ = n;
	s.count_ = std::uint64_t{1} << (n * (n - 1) / 2);
	return s;
}

GraphSource GraphSource::sample(const SampleSpec &spec) {
	GraphSource s;
	s.kind_ = Kind::Sample;
	s.n_ = spec.n;
	s.count_ = spec.count;
	s.spec_ = spec;
	return s;
}

GraphSource GraphSource::low_matching(int n, std::uint64_t count, std::uint64_t seed) {
	if (n < 2 || n > Graph::kMaxOrder) throw PreconditionError("low-matching generator needs 2 <= n <= 64");
	GraphSource s;
	s.kind_ = Kind::LowMatching;
	s.n_ = n;
	s.count_ = count;
	s.spec_.n = n;
	s.spec_.count = count;
	s.spec_.seed = seed;
	return s;
}

Graph GraphSource::at(std::uint64_t index) const {
	switch (kind_) {
	case Kind::Enumerate: return graph_from_mask(n_, index);
	case Kind::Sample: return sample_graph(spec_, index);
	case Kind::LowMatching: return low_matching_graph(n_, spec_.seed, index);
	}
	return Graph(n_);
}

std::string GraphSource::describe() const {
	switch (kind_) {
	case Kind::Enumerate: return "enumerate:" + std::to_string(n_);
	case Kind::Sample: return "sample:" + spec_.to_string();
	case Kind::LowMatching:
		return "low_matching:" + std::to_string(n_) + "," + std::to_string(count_) + "," +
		       std::to_string(spec_.seed);
	}
	return "?";
}

std::string cheap_signature(const Graph &g) {
	std::vector<std::vector<int>> rows;
	for (int v = 0; v < g.order(); ++v) {
		std::vector<int> row{g.degree(v)};
		for (int w : g.neighbours(v).members()) row.push_back(g.degree(w));
		std::sort(row.begin() + 1, row.end());
		rows.push_back(std::move(row));
	}
	std::sort(rows.begin(), rows.end());
	std::string out;
	for (const auto &row : rows) {
		for (int d : row) out += std::to_string(d) + ".";
		out += "|";
	}
	return out;
}

int worker_count_from_env() {
	if (const char *env = std::getenv("FRACMATCH_WORKERS")) {
		int w = 0;
		const char *end = env + std::char_traits<char>::length(env);
		auto [ptr, ec] = std::from_chars(env, end, w);
		if (ec == std::errc() && ptr == end && w > 0) return w;
	}
	return omp_get_max_threads();
}

// ---------------------------------------------------------------------------

void CheckTally::record(const std::string &check, bool ok, const std::string &graph6, const std::string &detail) {
	++examined[check];
	if (ok) return;
	++failed[check];
	failures.insert(check + " " + graph6 + (detail.empty() ? "" : ": " + detail));
	while (failures.size() > kFailureCap) failures.erase(std::prev(failures.end()));
}

void CheckTally::merge(const CheckTally &other) {
	graphs += other.graphs;
	for (const auto &[k, v] : other.examined) examined[k] += v;
	for (const auto &[k, v] : other.failed) failed[k] += v;
	for (const auto &[k, v] : other.branches) branches[k] += v;
	failures.insert(other.failures.begin(), other.failures.end());
	while (failures.size() > kFailureCap) failures.erase(std::prev(failures.end()));
}

std::uint64_t CheckTally::total_failed() const {
	std::uint64_t total = 0;
	for (const auto &[k, v] : failed) total += v;
	return total;
}

std::uint64_t CheckTally::examined_count(const std::string &check) const {
	auto it = examined.find(check);
	return it == examined.end() ? 0 : it->second;
}

std::uint64_t CheckTally::failed_count(const std::string &check) const {
	auto it = failed.find(check);
	return it == failed.end() ? 0 : it->second;
}

namespace {

void check_constructions(const Graph &g, const GoodPartition &p, CheckTally &tally, const std::string &g6) {
	const HalfInt exact = alpha_prime(complement(g));
	auto examine = [&](auto &&build) {
		try {
			const ComplementResult r = build();
			tally.branches[construction_name(r.info.construction) + ":" + r.info.branch] += 1;
			const bool ok = !r.info.fallback && r.meets_claim && r.meets_target && r.fm.value() <= exact;
			tally.record("construction", ok, g6, r.info.to_string() + " value=" + r.fm.value().to_string());
		} catch (const PreconditionError &) {
		} catch (const Error &e) {
			tally.record("construction", false, g6, e.what());
		}
	};
	for (auto which : {ComplementConstruction::Basic, ComplementConstruction::IsolateFree,
	                   ComplementConstruction::Balanced})
		examine([&] { return construct_complement_fm(g, p, which); });
	if (g.order() >= kLargeOrder && nearquarter_applies(g.order(), p.t))
		examine([&] { return construct_complement_fm_nearquarter(g, p); });
}

} // namespace

void check_graph(const Graph &g, unsigned checks, CheckTally &tally) {
	++tally.graphs;
	const std::string g6 = emit_graph6(g);
	const int n = g.order();
	const HalfInt a = alpha_prime(g);

	if (checks & kCheckOracle) {
		const BergeWitness w = n <= kExhaustiveBergeLimit ? berge_deficiency_exhaustive(g) : berge_deficiency_konig(g);
		const bool berge = HalfInt::from_units(n - w.deficiency) == a &&
		                   isolated_after_removal(g, w.s_set) - w.s_set.size() == w.deficiency;
		tally.record("oracle_berge", berge, g6, "alpha'=" + a.to_string());
		if (g.edge_count() <= kOracleEdgeLimit) {
			const HalfInt searched = oracle_alpha_exhaustive(g);
			tally.record("oracle_search", searched == a, g6, searched.to_string() + " vs " + a.to_string());
		}
	}

	if (checks & kCheckStructure) {
		try {
			const FractionalMatching f = optimal_fm(g);
			std::string issue = f.violation();
			if (issue.empty() && f.value() != a) issue = "value " + f.value().to_string();
			if (issue.empty() && !inspect_structure(f).all()) issue = "shape";
			const VertexSet v1 = f.support();
			for (int v : v1.members())
				if (issue.empty() && f.load(v) != 2) issue = "not perfect on the support";
			if (issue.empty() && v1.size() != a.units()) issue = "|V1| != 2 alpha'";
			tally.record("structure", issue.empty(), g6, issue);
		} catch (const Error &e) {
			tally.record("structure", false, g6, e.what());
		}
	}

	if (checks & (kCheckPartition | kCheckConstruction)) {
		try {
			const GoodPartition p = good_partition(g);
			if (checks & kCheckPartition) {
				const PartitionReport r = verify_partition(g, p);
				tally.record("partition", r.all(), g6, r.structure_issue);
			}
			if ((checks & kCheckConstruction) && n >= 2) check_constructions(g, p, tally, g6);
		} catch (const Error &e) {
			tally.record("partition", false, g6, e.what());
		}
	}

	if (checks & kCheckSmallAlpha) {
		const FamilyLabel label = classify_small_alpha(g);
		const auto u = a.units();
		const bool small = u >= 2 && u <= 5;
		const bool ok = (label.tag != FamilyTag::None) == small &&
		                (label.tag == FamilyTag::None || family_alpha(label.tag) == a);
		tally.record("small_alpha", ok, g6, label.to_string() + " alpha'=" + a.to_string());
	}

	if ((checks & kCheckBounds) && n >= 2) {
		const BoundReport r = ng_sum(g);
		tally.record("bounds", !r.any_violation(), g6, "sum=" + r.sum.to_string());
	}
}

CheckTally run_checks_serial(const GraphSource &source, unsigned checks) {
	CheckTally tally;
	for (std::uint64_t i = 0; i < source.size(); ++i) check_graph(source.at(i), checks, tally);
	return tally;
}

CheckTally run_checks(const GraphSource &source, unsigned checks, int workers) {
	if (workers <= 0) workers = worker_count_from_env();
	CheckTally total;
	const auto size = static_cast<std::int64_t>(source.size());
#pragma omp parallel num_threads(workers)
	{
		CheckTally local;
#pragma omp for schedule(dynamic, 64) nowait
		for (std::int64_t i = 0; i < size; ++i) check_graph(source.at(static_cast<std::uint64_t>(i)), checks, local);
#pragma omp critical
		total.merge(local);
	}
	return total;
}

// ---------------------------------------------------------------------------

std::string SweepRow::csv() const {
	std::ostringstream os;
	os << graph6 << ',' << n << ',' << alpha_g << ',' << alpha_gc << ',' << sum << ',' << bound << ','
	   << (satisfied ? 1 : 0) << ',' << (equality ? 1 : 0) << ',' << family;
	return os.str();
}

std::string SweepResult::csv() const {
	std::string out = std::string(kSweepCsvHeader) + "\n";
	for (const SweepRow &r : rows) out += r.csv() + "\n";
	return out;
}

std::vector<SweepRow> parse_sweep_csv(const std::string &text) {
	std::istringstream in(text);
	std::string line;
	if (!std::getline(in, line) || line != kSweepCsvHeader) throw ParseError("missing sweep CSV header");
	auto flag = [](const std::string &s) {
		if (s != "0" && s != "1") throw ParseError("bad flag '" + s + "'");
		return s == "1";
	};
	std::vector<SweepRow> rows;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		const std::vector<std::string> c = split(line, ',');
		if (c.size() != 9) throw ParseError("sweep CSV row needs 9 cells: '" + line + "'");
		SweepRow r;
		r.graph6 = c[0];
		r.n = static_cast<int>(parse_u64(c[1], "order"));
		r.alpha_g = parse_half_int(c[2]);
		r.alpha_gc = parse_half_int(c[3]);
		r.sum = parse_half_int(c[4]);
		r.bound = parse_half_int(c[5]);
		r.satisfied = flag(c[6]);
		r.equality = flag(c[7]);
		r.family = c[8];
		rows.push_back(std::move(r));
	}
	return rows;
}

void SweepSummary::merge(const SweepSummary &o) {
	graphs += o.graphs;
	for (auto [mine, theirs] : {std::pair{&half_order, &o.half_order}, std::pair{&nonempty, &o.nonempty},
	                            std::pair{&isolate_free, &o.isolate_free}}) {
		mine->applies += theirs->applies;
		mine->satisfied += theirs->satisfied;
		mine->equality += theirs->equality;
		mine->family_match += theirs->family_match;
	}
	for (const auto &[k, v] : o.equality_families) equality_families[k] += v;
	for (const auto &[k, v] : o.probe) {
		ThresholdProbe &p = probe[k];
		p.nonempty_eligible += v.nonempty_eligible;
		p.nonempty_below += v.nonempty_below;
		p.isolate_free_eligible += v.isolate_free_eligible;
		p.isolate_free_below += v.isolate_free_below;
	}
	violations.insert(o.violations.begin(), o.violations.end());
}

std::string SweepSummary::to_json() const {
	using nlohmann::ordered_json;
	ordered_json j;
	j["source"] = source;
	j["graphs"] = graphs;
	auto bound = [](const BoundTally &t) {
		return ordered_json{{"applies", t.applies},
		                    {"satisfied", t.satisfied},
		                    {"equality", t.equality},
		                    {"family_match", t.family_match}};
	};
	j["bounds"] = ordered_json{{bound_name(BoundKind::HalfOrder), bound(half_order)},
	                           {bound_name(BoundKind::Nonempty), bound(nonempty)},
	                           {bound_name(BoundKind::IsolateFree), bound(isolate_free)}};
	j["equality_families"] = ordered_json::object();
	for (const auto &[k, v] : equality_families) j["equality_families"][k] = v;
	j["threshold_probe"] = ordered_json::object();
	for (const auto &[n, p] : probe)
		j["threshold_probe"][std::to_string(n)] = ordered_json{{"nonempty_eligible", p.nonempty_eligible},
		                                                       {"nonempty_below", p.nonempty_below},
		                                                       {"isolate_free_eligible", p.isolate_free_eligible},
		                                                       {"isolate_free_below", p.isolate_free_below}};
	if (signatures) j["signatures"] = signatures;
	j["violation_count"] = violations.size();
	j["violations"] = ordered_json(std::vector<std::string>(violations.begin(), violations.end()));
	return j.dump(2);
}

namespace {

void tally_bound(BoundTally &t, const BoundCheck &c) {
	if (!c.applies) return;
	++t.applies;
	t.satisfied += c.satisfied;
	t.equality += c.equality;
}

BoundTally &tally_for(SweepSummary &s, BoundKind kind) {
	switch (kind) {
	case BoundKind::Nonempty: return s.nonempty;
	case BoundKind::IsolateFree: return s.isolate_free;
	default: return s.half_order;
	}
}

void sweep_one(const Graph &g, SweepSummary &summary, std::vector<SweepRow> *rows) {
	const std::string g6 = emit_graph6(g);
	++summary.graphs;
	BoundReport r;
	try {
		r = ng_sum(g);
	} catch (const Error &e) {
		summary.violations.insert(g6 + ": " + e.what());
		return;
	}
	tally_bound(summary.half_order, r.half_order);
	tally_bound(summary.nonempty, r.nonempty);
	tally_bound(summary.isolate_free, r.isolate_free);

	const BoundKind kind = r.strongest();
	const BoundCheck &top = r.check(kind);
	tally_for(summary, kind).family_match += r.family_matches;
	if (top.equality) summary.equality_families[r.equality_family.to_string()] += 1;

	for (BoundKind k : {BoundKind::HalfOrder, BoundKind::Nonempty, BoundKind::IsolateFree}) {
		const BoundCheck &c = r.check(k);
		if (c.applies && !c.satisfied)
			summary.violations.insert(g6 + ": " + bound_name(k) + " bound violated, sum " + r.sum.to_string() +
			                          " < " + c.bound.to_string());
	}
	if (!r.family_matches)
		summary.violations.insert(g6 + ": " + bound_name(kind) + (top.equality ? " tight outside" : " not tight on") +
		                          " its extremal families");

	if (r.n < kLargeOrder) {
		ThresholdProbe &p = summary.probe[r.n];
		if (r.g_nonempty && r.gc_nonempty) {
			++p.nonempty_eligible;
			p.nonempty_below += !r.nonempty.satisfied;
		}
		if (r.g_isolate_free && r.gc_isolate_free) {
			++p.isolate_free_eligible;
			p.isolate_free_below += !r.isolate_free.satisfied;
		}
	}

	if (rows) {
		SweepRow row;
		row.graph6 = g6;
		row.n = r.n;
		row.alpha_g = r.alpha_g;
		row.alpha_gc = r.alpha_gc;
		row.sum = r.sum;
		row.bound = top.bound;
		row.satisfied = top.satisfied;
		row.equality = top.equality;
		row.family = r.equality_family.to_string();
		rows->push_back(std::move(row));
	}
}

void sort_rows(std::vector<SweepRow> &rows) {
	std::sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) { return a.graph6 < b.graph6; });
}

} // namespace

SweepResult verify_theorem_sweep_serial(const GraphSource &source, const SweepOptions &options) {
	SweepResult out;
	out.summary.source = source.describe();
	std::set<std::string> signatures;
	for (std::uint64_t i = 0; i < source.size(); ++i) {
		const Graph g = source.at(i);
		sweep_one(g, out.summary, options.keep_rows ? &out.rows : nullptr);
		if (options.count_signatures) signatures.insert(cheap_signature(g));
	}
	out.summary.signatures = signatures.size();
	sort_rows(out.rows);
	return out;
}

SweepResult verify_theorem_sweep(const GraphSource &source, const SweepOptions &options) {
	const int workers = options.workers > 0 ? options.workers : worker_count_from_env();
	SweepResult out;
	out.summary.source = source.describe();
	std::set<std::string> signatures;
	const auto size = static_cast<std::int64_t>(source.size());
#pragma omp parallel num_threads(workers)
	{
		SweepSummary local;
		std::vector<SweepRow> rows;
		std::set<std::string> sigs;
#pragma omp for schedule(dynamic, 256) nowait
		for (std::int64_t i = 0; i < size; ++i) {
			const Graph g = source.at(static_cast<std::uint64_t>(i));
			sweep_one(g, local, options.keep_rows ? &rows : nullptr);
			if (options.count_signatures) sigs.insert(cheap_signature(g));
		}
#pragma omp critical
		{
			out.summary.merge(local);
			out.rows.insert(out.rows.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
			signatures.merge(sigs);
		}
	}
	out.summary.signatures = signatures.size();
	sort_rows(out.rows);
	return out;
}

} // namespace fracmatch
