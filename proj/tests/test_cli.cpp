#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fracmatch/generators.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/harness.hpp"
#include "fracmatch/partition.hpp"
#include "json.hpp"

using namespace fracmatch;

namespace {

struct Outcome {
	int code;
	std::string out, err;
};

Outcome run(std::vector<std::string> args) {
	std::ostringstream out, err;
	const int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
	return (std::filesystem::temp_directory_path() / ("fracmatch_cli_" + name)).string();
}

} // namespace

TEST_CASE("alpha command") {
	const Outcome r = run({"alpha", "A_"});
	CHECK(r.code == 0);
	CHECK(r.out == "2a'=2 (1)\n");
	CHECK(run({"alpha", "family:cycle:5"}).out == "2a'=5 (2.5)\n");
	CHECK(run({"alpha", "family:cycle:3+empty:9"}).out == "2a'=3 (1.5)\n");
}

TEST_CASE("graph arguments from files") {
	const std::string el = temp_path("g.txt");
	std::ofstream(el) << emit_edgelist(star(29));
	CHECK(cli::resolve_graph(el) == star(29));
	const std::string g6 = temp_path("g.g6");
	std::ofstream(g6) << ">>graph6<<" << emit_graph6(cycle(6)) << "\n";
	CHECK(cli::resolve_graph(g6) == cycle(6));
	std::filesystem::remove(el);
	std::filesystem::remove(g6);
}

TEST_CASE("ngsum command") {
	const std::string el = temp_path("star29.txt");
	std::ofstream(el) << emit_edgelist(star(29));
	const Outcome r = run({"ngsum", el});
	std::filesystem::remove(el);
	CHECK(r.code == 0);
	CHECK(r.out.find("sum: 15\n") != std::string::npos);
	CHECK(r.out.find("nonempty: bound=15 applies=1 satisfied=1 equality=1") != std::string::npos);
	CHECK(r.out.find("family: StarUnion(k=28)") != std::string::npos);
}

TEST_CASE("partition command output parses back") {
	const Outcome r = run({"partition", "family:k2pql:3,2,1"});
	CHECK(r.code == 0);
	const Graph g = k2pql(3, 2, 1);
	const GoodPartition p = parse_partition_dump(g, r.out);
	CHECK(verify_partition(g, p).all());
}

TEST_CASE("classify and construct commands") {
	const Outcome c = run({"classify", "family:k2pql:14,13,1"});
	CHECK(c.code == 0);
	CHECK(c.out.find("isolate_free: K2pql(p=14;q=13;l=1") != std::string::npos);

	const Outcome k = run({"construct", "family:star:8"});
	CHECK(k.code == 0);
	CHECK(k.out.find("case: basic:residual>=3") != std::string::npos);
	CHECK(k.out.find("value: 3.5\n") != std::string::npos);

	CHECK(run({"construct", "family:star:8", "--variant", "balanced"}).code == 2);
	CHECK(run({"construct", "family:star:8", "--variant", "nope"}).code == 2);
}

TEST_CASE("sweep command") {
	const Outcome r = run({"sweep", "--enumerate", "4"});
	CHECK(r.code == 0);
	const auto rows = parse_sweep_csv(r.out);
	CHECK(rows.size() == 64);

	const std::string csv = temp_path("s.csv"), json = temp_path("s.json");
	CHECK(run({"sweep", "--sample", "30,1/2,20,42", "--csv", csv, "--json", json, "--workers", "2"}).code == 0);
	std::ifstream jf(json);
	const nlohmann::json j = nlohmann::json::parse(jf);
	CHECK(j["graphs"] == 20);
	std::stringstream buf;
	buf << std::ifstream(csv).rdbuf();
	CHECK(parse_sweep_csv(buf.str()).size() == 20);
	const Outcome serial = run({"sweep", "--sample", "30,1/2,20,42", "--serial"});
	CHECK(serial.out == buf.str());
	std::filesystem::remove(csv);
	std::filesystem::remove(json);

	const Outcome only_json = run({"sweep", "--enumerate", "3", "--json", "-"});
	CHECK(nlohmann::json::parse(only_json.out)["graphs"] == 8);
}

TEST_CASE("usage errors exit with 2") {
	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"alpha"}).code == 2);
	CHECK(run({"alpha", "not a graph"}).code == 2);
	CHECK(run({"alpha", "family:star:1,2"}).code == 2);
	CHECK(run({"sweep"}).code == 2);
	CHECK(run({"sweep", "--enumerate", "9"}).code == 2);
	CHECK(run({"sweep", "--enumerate", "3", "--sample", "3,1,1,1"}).code == 2);
	CHECK(run({"ngsum", "@"}).code == 2);
	CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest command") {
	const Outcome r = run({"selftest", "--max-n", "4"});
	CHECK(r.code == 0);
	CHECK(r.out.find("n=4 graphs=64 failed=0") != std::string::npos);
}
