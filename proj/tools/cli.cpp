#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fracmatch/complement.hpp"
#include "fracmatch/engine.hpp"
#include "fracmatch/errors.hpp"
#include "fracmatch/families.hpp"
#include "fracmatch/generators.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/harness.hpp"
#include "fracmatch/ng_bounds.hpp"
#include "fracmatch/partition.hpp"

namespace fracmatch::cli {

Graph resolve_graph(const std::string &arg) {
	constexpr std::string_view kFamily = "family:";
	if (arg.starts_with(kFamily)) {
		std::optional<Graph> g;
		std::istringstream in(arg.substr(kFamily.size()));
		std::string piece;
		while (std::getline(in, piece, '+')) {
			const Graph part = generate(FamilySpec::parse(piece));
			g = g ? disjoint_union(*g, part) : part;
		}
		if (!g) throw ParseError("empty family expression");
		return *g;
	}
	std::error_code ec;
	if (std::filesystem::is_regular_file(arg, ec)) {
		std::ifstream file(arg);
		std::stringstream buf;
		buf << file.rdbuf();
		std::string text = buf.str();
		if (text.starts_with(">>graph6<<")) text.erase(0, 10);
		return parse_graph_auto(text);
	}
	return parse_graph_auto(arg);
}

namespace {

void print_bound(std::ostream &out, BoundKind kind, const BoundCheck &c) {
	out << bound_name(kind) << ": bound=" << c.bound << " applies=" << c.applies << " satisfied=" << c.satisfied
	    << " equality=" << c.equality << "\n";
}

ComplementResult construct_auto(const Graph &g, const GoodPartition &p, bool allow_small) {
	for (auto which : {ComplementConstruction::Balanced, ComplementConstruction::IsolateFree,
	                   ComplementConstruction::Basic}) {
		try {
			return construct_complement_fm(g, p, which);
		} catch (const PreconditionError &) {
		}
	}
	return construct_complement_fm_nearquarter(g, p, !allow_small);
}

std::optional<ComplementConstruction> parse_variant(const std::string &name) {
	for (auto c : {ComplementConstruction::Basic, ComplementConstruction::IsolateFree, ComplementConstruction::Balanced,
	               ComplementConstruction::NearQuarterHalf, ComplementConstruction::NearQuarterWhole})
		if (construction_name(c) == name) return c;
	return std::nullopt;
}

void write_to(const std::string &target, const std::string &text, std::ostream &out) {
	if (target == "-") {
		out << text;
		return;
	}
	std::ofstream file(target);
	if (!file) throw PreconditionError("cannot write " + target);
	file << text;
}

int selftest(int max_n, int workers, std::ostream &out) {
	CheckTally total;
	for (int n = 1; n <= max_n; ++n) {
		const CheckTally t = run_checks(GraphSource::enumerate(n), kCheckAll, workers);
		out << "n=" << n << " graphs=" << t.graphs << " failed=" << t.total_failed() << "\n";
		total.merge(t);
	}
	for (const auto &[check, count] : total.examined)
		out << "  " << check << ": " << count - total.failed_count(check) << "/" << count << " ok\n";
	for (const std::string &f : total.failures) out << "  FAIL " << f << "\n";
	return total.total_failed() == 0 ? kExitOk : kExitViolation;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
	CLI::App app{"Exact fractional matching numbers and complement sum bounds"};
	app.name("fracmatch");
	app.require_subcommand(1);

	std::string graph_arg;
	auto add_graph = [&](CLI::App *sub) {
		sub->add_option("graph", graph_arg, "graph6 literal, file, or family:<name>:<params>[+...]")->required();
	};

	auto *alpha = app.add_subcommand("alpha", "print 2a' in halves and a' in decimal");
	add_graph(alpha);
	auto *partition = app.add_subcommand("partition", "dump the good partition as JSON");
	add_graph(partition);
	auto *classify = app.add_subcommand("classify", "small-alpha family and extremal families");
	add_graph(classify);
	auto *ngsum = app.add_subcommand("ngsum", "a'(G) + a'(complement) against the sum bounds");
	add_graph(ngsum);

	auto *construct = app.add_subcommand("construct", "fractional matching of the complement with its case");
	add_graph(construct);
	std::string variant = "auto";
	bool allow_small = false;
	construct->add_option("--variant", variant,
	                      "auto, basic, isolate_free, balanced, near_quarter_half, near_quarter_whole");
	construct->add_flag("--allow-small", allow_small, "run the near-quarter construction below n = 28");

	auto *sweep = app.add_subcommand("sweep", "check the sum bounds over an enumeration or a sample");
	int enumerate_n = -1;
	std::string sample_text, csv_target, json_target;
	int workers = 0;
	bool serial = false, allow_eight = false, dedup = false;
	auto *enum_opt = sweep->add_option("--enumerate", enumerate_n, "every labeled graph of order n");
	auto *sample_opt = sweep->add_option("--sample", sample_text, "n,p,count,seed with p as a/b or decimal");
	enum_opt->excludes(sample_opt);
	sweep->add_option("--csv", csv_target, "CSV destination ('-' for stdout)");
	sweep->add_option("--json", json_target, "JSON summary destination ('-' for stdout)");
	sweep->add_option("--workers", workers, "worker count (default: FRACMATCH_WORKERS or OpenMP default)");
	sweep->add_flag("--serial", serial, "use the serial reference loop");
	sweep->add_flag("--allow-eight", allow_eight, "permit --enumerate 8 (2^28 graphs)");
	sweep->add_flag("--dedup", dedup, "count distinct cheap isomorphism signatures");

	auto *self = app.add_subcommand("selftest", "oracle and invariant suites on every small graph");
	int max_n = 6;
	self->add_option("--max-n", max_n, "largest enumerated order")->check(CLI::Range(1, 7));
	self->add_option("--workers", workers, "worker count");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitUsage;
	}

	try {
		if (*self) return selftest(max_n, workers, out);

		if (*sweep) {
			if (enumerate_n < 0 && sample_text.empty()) {
				err << "sweep needs --enumerate or --sample\n";
				return kExitUsage;
			}
			const GraphSource source = enumerate_n >= 0 ? GraphSource::enumerate(enumerate_n, allow_eight)
			                                            : GraphSource::sample(SampleSpec::parse(sample_text));
			SweepOptions opts;
			opts.workers = workers;
			opts.keep_rows = !csv_target.empty() || json_target.empty();
			opts.count_signatures = dedup;
			const SweepResult r = serial ? verify_theorem_sweep_serial(source, opts) : verify_theorem_sweep(source, opts);
			if (opts.keep_rows) write_to(csv_target.empty() ? "-" : csv_target, r.csv(), out);
			if (!json_target.empty()) write_to(json_target, r.summary.to_json() + "\n", out);
			return r.summary.ok() ? kExitOk : kExitViolation;
		}

		const Graph g = resolve_graph(graph_arg);
		if (*alpha) {
			const HalfInt a = alpha_prime(g);
			out << "2a'=" << a.units() << " (" << a << ")\n";
			return kExitOk;
		}
		if (*partition) {
			out << dump_partition(good_partition(g)) << "\n";
			return kExitOk;
		}
		if (*classify) {
			out << "alpha': " << alpha_prime(g) << "\n";
			out << "small_alpha: " << classify_small_alpha(g).to_string() << "\n";
			for (BoundKind k : {BoundKind::HalfOrder, BoundKind::Nonempty, BoundKind::IsolateFree})
				out << bound_name(k) << ": " << classify_equality_family(g, k).to_string() << "\n";
			return kExitOk;
		}
		if (*ngsum) {
			const BoundReport r = ng_sum(g);
			out << "n: " << r.n << "\nalpha_g: " << r.alpha_g << "\nalpha_gc: " << r.alpha_gc << "\nsum: " << r.sum
			    << "\n";
			print_bound(out, BoundKind::HalfOrder, r.half_order);
			print_bound(out, BoundKind::Nonempty, r.nonempty);
			print_bound(out, BoundKind::IsolateFree, r.isolate_free);
			out << "strongest: " << bound_name(r.strongest()) << "\nfamily: " << r.equality_family.to_string()
			    << "\nfamily_matches: " << r.family_matches << "\n";
			return r.any_violation() ? kExitViolation : kExitOk;
		}
		if (*construct) {
			const GoodPartition p = good_partition(g);
			ComplementResult r;
			if (variant == "auto") {
				r = construct_auto(g, p, allow_small);
			} else if (auto which = parse_variant(variant)) {
				r = (*which == ComplementConstruction::NearQuarterHalf || *which == ComplementConstruction::NearQuarterWhole)
				        ? construct_complement_fm_nearquarter(g, p, !allow_small)
				        : construct_complement_fm(g, p, *which);
				if (r.info.construction != *which) throw PreconditionError("t does not match the requested variant");
			} else {
				err << "unknown variant '" << variant << "'\n";
				return kExitUsage;
			}
			out << "case: " << r.info.to_string() << "\nvalue: " << r.fm.value()
			    << "\nexact: " << alpha_prime(complement(g)) << "\nmeets_claim: " << r.meets_claim << "\n";
			for (int units : {2, 1})
				for (const auto &[u, v] : r.fm.edges_with_units(units))
					out << u << " " << v << " " << HalfInt::from_units(units) << "\n";
			return r.meets_claim ? kExitOk : kExitViolation;
		}
	} catch (const ParseError &e) {
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const PreconditionError &e) {
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const Error &e) {
		err << "internal error: " << e.what() << "\n";
		return kExitViolation;
	}
	return kExitUsage;
}

} // namespace fracmatch::cli
