#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fracmatch/graph.hpp"
#include "fracmatch/half_int.hpp"

namespace fracmatch {

/// SplitMix64 (Steele, Lea, Flood). state += 0x9e3779b97f4a7c15, then the
/// usual xor-shift-multiply finalizer; its k-th output depends only on seed + k*gamma.
class SplitMix64 {
public:
	explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
	std::uint64_t next();
	/// The (i+1)-th output of a stream seeded with `seed`, without stepping through it.
	static std::uint64_t at(std::uint64_t seed, std::uint64_t i);

private:
	std::uint64_t state_;
};

/// Default enumeration guard and the hard ceiling (2^28 graphs at n = 8).
inline constexpr int kEnumerationGuard = 7;
inline constexpr int kEnumerationCeiling = 8;

/// Bit k of `mask` is the k-th vertex pair in graph6 order (0,1) (0,2) (1,2) (0,3) ...
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph &g);

/// Exact rational edge probability num/den, 0 <= num <= den.
struct Probability {
	std::uint64_t num = 0;
	std::uint64_t den = 1;

	/// "1/3", "0.25", "1".
	static Probability parse(const std::string &text);
	std::string to_string() const;
	/// True with probability num/den for a uniform 64-bit r.
	bool accepts(std::uint64_t r) const;
};

/// Seeded G(n, p) stream. Graph i draws from SplitMix64(SplitMix64::at(seed, i)),
/// one output per vertex pair in graph6 order; the pair is an edge iff
/// Probability::accepts(output).
struct SampleSpec {
	int n = 0;
	Probability p;
	std::uint64_t count = 0;
	std::uint64_t seed = 0;

	/// "n,p,count,seed", e.g. "30,1/2,1000,42".
	static SampleSpec parse(const std::string &text);
	std::string to_string() const;
};

Graph sample_graph(const SampleSpec &spec, std::uint64_t index);

/// Seeded generator of graphs with a small fractional matching number, used
/// to reach every branch of the complement constructions at n >= 28. Graph i
/// draws from SplitMix64(SplitMix64::at(seed, i)) and picks one of five shapes
/// (q = max(1, n/4)):
///   0  about q disjoint pieces (K2, C3, stars with 2..4 leaves), the rest
///      isolated or (probability 1/2) the leaves of one more star
///   1  up to q+2 hubs, random hub edges, every other vertex on one or two hubs
///   3  as 1, but each non-hub vertex stays isolated with probability 1/8
///   2  a hub clique, one private partner per hub, remaining vertices joined
///      to every hub; with probability 1/2 each clique and leaf edge is
///      instead kept with probability 7/8; labeled hubs, partners, leaves
///      in order with probability 1/2
///   4  K2, C3 and 2..3-leaf stars worth 2q-2..2q+3 halves in total, the rest
///      isolated or (probability 1/2) joined to random piece heads
/// Otherwise the vertices are finally relabeled by a uniform permutation.
Graph low_matching_graph(int n, std::uint64_t seed, std::uint64_t index);

/// Index-addressable stream of graphs: every labeled graph of order n by
/// mask, a G(n, p) sample, or the low-matching generator.
class GraphSource {
public:
	enum class Kind { Enumerate, Sample, LowMatching };

	/// Throws PreconditionError above kEnumerationGuard unless allow_ceiling,
	/// and always above kEnumerationCeiling.
	static GraphSource enumerate(int n, bool allow_ceiling = false);
	static GraphSource sample(const SampleSpec &spec);
	static GraphSource low_matching(int n, std::uint64_t count, std::uint64_t seed);

	Kind kind() const { return kind_; }
	int order() const { return n_; }
	std::uint64_t size() const { return count_; }
	Graph at(std::uint64_t index) const;
	/// e.g. "enumerate:6", "sample:30,1/2,1000,42", "low_matching:28,1000,7".
	std::string describe() const;

private:
	Kind kind_ = Kind::Enumerate;
	int n_ = 0;
	std::uint64_t count_ = 0;
	SampleSpec spec_;
};

/// Cheap isomorphism-invariant signature (sorted degrees, each with its
/// sorted neighbour degrees). Equal graphs up to isomorphism share it; the
/// converse can fail, so counts built on it are heuristic.
std::string cheap_signature(const Graph &g);

/// FRACMATCH_WORKERS if set to a positive integer, otherwise the OpenMP default.
int worker_count_from_env();

// ---------------------------------------------------------------------------
// Per-graph check suites

enum CheckSet : unsigned {
	kCheckOracle = 1U << 0,       ///< alpha' against the Berge formula and the {0,1/2,1} search
	kCheckStructure = 1U << 1,    ///< canonical optimal matching shape
	kCheckPartition = 1U << 2,    ///< good partition properties at the repair fixpoint
	kCheckConstruction = 1U << 3, ///< complement constructions meet their claims
	kCheckSmallAlpha = 1U << 4,   ///< small-alpha classifier recognizes exactly alpha' <= 5/2
	kCheckBounds = 1U << 5,       ///< applicable sum bounds and their extremal families
	kCheckAll = (1U << 6) - 1,
};

struct CheckTally {
	/// Largest number of failure descriptions kept (the smallest ones, sorted).
	static constexpr std::size_t kFailureCap = 32;

	std::uint64_t graphs = 0;
	std::map<std::string, std::uint64_t> examined;
	std::map<std::string, std::uint64_t> failed;
	/// Construction branches reached, keyed "construction:branch".
	std::map<std::string, std::uint64_t> branches;
	/// "check graph6: detail"
	std::set<std::string> failures;

	void record(const std::string &check, bool ok, const std::string &graph6, const std::string &detail = {});
	void merge(const CheckTally &other);
	std::uint64_t total_failed() const;
	std::uint64_t examined_count(const std::string &check) const;
	std::uint64_t failed_count(const std::string &check) const;
};

void check_graph(const Graph &g, unsigned checks, CheckTally &tally);

/// Reference loop over every graph of the source.
CheckTally run_checks_serial(const GraphSource &source, unsigned checks);
/// OpenMP fan-out; workers <= 0 means worker_count_from_env().
CheckTally run_checks(const GraphSource &source, unsigned checks, int workers = 0);

// ---------------------------------------------------------------------------
// Sum-bound sweep

/// One CSV row: graph6,n,alpha_g,alpha_gc,sum,bound,satisfied,equality,family.
/// `bound` is the value of the strongest applicable bound, `satisfied` and
/// `equality` refer to it, and `family` is its extremal family ("None" unless tight).
struct SweepRow {
	std::string graph6;
	int n = 0;
	HalfInt alpha_g, alpha_gc, sum, bound;
	bool satisfied = false;
	bool equality = false;
	std::string family;

	std::string csv() const;
	bool operator==(const SweepRow &) const = default;
};

inline constexpr const char *kSweepCsvHeader = "graph6,n,alpha_g,alpha_gc,sum,bound,satisfied,equality,family";

struct BoundTally {
	std::uint64_t applies = 0;
	std::uint64_t satisfied = 0;
	std::uint64_t equality = 0;
	/// Graphs where tightness of the strongest bound agrees with family membership.
	std::uint64_t family_match = 0;
};

/// Below the large-order threshold: graphs meeting a bound's other
/// hypotheses, and how many of them fall short of it.
struct ThresholdProbe {
	std::uint64_t nonempty_eligible = 0;
	std::uint64_t nonempty_below = 0;
	std::uint64_t isolate_free_eligible = 0;
	std::uint64_t isolate_free_below = 0;
};

struct SweepSummary {
	std::string source;
	std::uint64_t graphs = 0;
	BoundTally half_order, nonempty, isolate_free;
	/// Equality hits of the strongest applicable bound, by family label.
	std::map<std::string, std::uint64_t> equality_families;
	/// Keyed by n.
	std::map<int, ThresholdProbe> probe;
	/// "graph6: reason", sorted.
	std::set<std::string> violations;
	/// Distinct cheap signatures, when requested.
	std::uint64_t signatures = 0;

	void merge(const SweepSummary &other);
	bool ok() const { return violations.empty(); }
	/// JSON object with keys source, graphs, bounds, equality_families,
	/// threshold_probe, violation_count, violations (and signatures if counted).
	std::string to_json() const;
};

struct SweepOptions {
	int workers = 0; ///< <= 0: worker_count_from_env()
	bool keep_rows = true;
	bool count_signatures = false;
};

struct SweepResult {
	SweepSummary summary;
	/// Sorted by graph6 (identical keys give identical rows).
	std::vector<SweepRow> rows;

	/// Header plus one line per row.
	std::string csv() const;
};

SweepResult verify_theorem_sweep(const GraphSource &source, const SweepOptions &options = {});
SweepResult verify_theorem_sweep_serial(const GraphSource &source, const SweepOptions &options = {});

/// Inverse of SweepResult::csv (header required).
std::vector<SweepRow> parse_sweep_csv(const std::string &text);

} // namespace fracmatch
