// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive and shares no code with the engine:
// plain recursion over class assignments, subset enumeration for colourings
// and 2-DCS, index-order vertex scans, no seeding, no distance pruning.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctract/graph.hpp"
#include "ctract/hypergraph.hpp"
#include "ctract/search.hpp"

namespace ctract::oracle {

// Graph on n vertices named v0..v{n-1}; bit e of mask (counting pairs
// (0,1),(0,2),(1,2),(0,3),... column by column) turns edge e on.
Graph graph_from_mask(int n, std::uint64_t mask);

int pair_count(int n);

// True iff g has an H-witness structure, by recursive assignment of vertices
// to pattern classes in index order with an incremental cross-edge check.
bool brute_contracts_to(const Graph& g, const Graph& h);

bool brute_path_contractible(const Graph& g, int l);
bool brute_cycle_contractible(const Graph& g, int k);

// Largest k >= 3 with a C_k witness (0 when none), checking every k.
int brute_cyclicity(const Graph& g);

// First valid 2-colouring by subset enumeration, element 0 pinned to side 1,
// subsets scanned in increasing binary order over elements 1..m-1.
std::optional<TwoColouring> brute_two_colourable(const Hypergraph& h);

// 2-DCS by enumerating all 2^free side choices in index order.
std::optional<TwoDCSSolution> brute_2dcs(const Graph& g,
                                         const std::set<std::string>& z1,
                                         const std::set<std::string>& z2);

Graph random_graph(std::mt19937_64& rng, int n, double p);
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);

}  // namespace ctract::oracle
