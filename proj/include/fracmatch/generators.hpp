#pragma once

#include <string>
#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch {

// Named graph families. Labelings are fixed so that tests can refer to
// specific vertices:
//   star(n):            center 0, leaves 1..n-1
//   cycle(n):           i ~ i+1 (mod n)
//   path(n):            i ~ i+1
//   k2pql(p, q, l):     u = 0, v = 1, u-pendants 2..p+1, v-pendants p+2..p+q+1,
//                       common neighbours p+q+2..p+q+l+1
//   hgraph(n):          K4 on 0..3, pendants 4..n-1 hanging from 0
//   complete_bipartite: sides 0..a-1 and a..a+b-1

Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{1,n-1}.
Graph star(int n);
/// Two adjacent vertices with p and q private pendants and l common neighbours.
/// p < q is normalized by swapping the roles of u and v.
Graph k2pql(int p, int q, int l);
/// K4 with n-4 pendant edges at one vertex.
Graph hgraph(int n);
Graph complete_bipartite(int a, int b);
/// g1 on 0..n1-1, g2 shifted to n1..n1+n2-1.
Graph disjoint_union(const Graph &g1, const Graph &g2);
Graph add_isolates(const Graph &g, int k);

/// A family name plus integer parameters, e.g. "k2pql:3,1,2" or "star:29".
struct FamilySpec {
	std::string name;
	std::vector<int> params;

	static FamilySpec parse(const std::string &text);
};

Graph generate(const FamilySpec &spec);

} // namespace fracmatch
