#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctract/gadgets.hpp"
#include "ctract/hypergraph.hpp"
#include "ctract/search.hpp"

namespace ctract {

struct SweepParams {
  int max_elements = 3;
  int max_edges = 3;       // hyperedges per family before Q is appended
  std::uint64_t seed = 1;  // used only when sampling
  int sample = 0;          // 0 = exhaustive
  int threads = 0;         // 0 = hardware concurrency
  SearchLimits limits;
};

// One enumerated instance: a family of distinct nonempty hyperedges over
// q1..qm, before normalization.
struct PreInstance {
  std::string key;
  Hypergraph hypergraph;
};

// All families with 2 <= m <= max_elements and at most max_edges distinct
// nonempty hyperedges, in canonical order (m ascending, then the ascending
// bitmask combination order).
std::vector<PreInstance> enumerate_pre_instances(int max_elements, int max_edges);

struct SweepInstance {
  std::string key;
  Hypergraph normalized;
  bool colourable = false;
  int p5_vertices = 0, p5_edges = 0;
  int c6_vertices = 0, c6_edges = 0;
  int p6_vertices = 0, p6_edges = 0;
  std::string p5_verdict, c6_verdict, p6_verdict;  // "yes" / "no" / "budget"
  bool agreement = false;
};

struct SweepReport {
  SweepParams params;
  bool sampled = false;
  std::vector<SweepInstance> instances;
  int colourable_count = 0;
  int agreement_count = 0;
  bool all_agree = false;
  bool any_budget = false;
};

// Evaluate one normalized instance: 2-colourability against the P5, C6 and
// P6 gadget contractibility verdicts.
SweepInstance evaluate_instance(const PreInstance& pre, const SearchLimits& limits);

SweepReport run_sweep(const SweepParams& params);

// schema "sweep/1"
std::string sweep_report_to_json(const SweepReport& report);

}  // namespace ctract
