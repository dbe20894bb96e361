#include "ctract/sweep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "ctract/parallel.hpp"
#include "json.hpp"

namespace ctract {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<PreInstance> enumerate_pre_instances(int max_elements, int max_edges) {
  if (max_elements < 2) throw std::invalid_argument("sweep: max_elements must be >= 2");
  if (max_edges < 0) throw std::invalid_argument("sweep: max_edges must be >= 0");
  if (max_elements > 16) throw std::invalid_argument("sweep: max_elements too large");
  std::vector<PreInstance> out;
  for (int m = 2; m <= max_elements; ++m) {
    std::vector<std::string> elements;
    for (int i = 1; i <= m; ++i) elements.push_back("q" + std::to_string(i));
    int universe = (1 << m) - 1;  // nonempty subsets are 1..universe

    // distinct mask families, ordered by family size then mask tuple
    std::vector<std::vector<int>> families;
    std::vector<int> masks;
    std::function<void(int)> grow = [&](int from) {
      families.push_back(masks);
      if (static_cast<int>(masks.size()) == max_edges) return;
      for (int mask = from; mask <= universe; ++mask) {
        masks.push_back(mask);
        grow(mask + 1);
        masks.pop_back();
      }
    };
    grow(1);
    std::sort(families.begin(), families.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });

    for (const auto& family : families) {
      Hypergraph h;
      h.elements = elements;
      std::string key = "m" + std::to_string(m);
      for (int mask : family) {
        std::vector<int> members;
        for (int i = 0; i < m; ++i)
          if ((mask >> i) & 1) members.push_back(i);
        h.hyperedges.push_back(std::move(members));
        key += "-" + std::to_string(mask);
      }
      out.push_back({key, std::move(h)});
    }
  }
  return out;
}

namespace {

std::string verdict_of(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "yes";
    case SearchStatus::exhausted:
      return "no";
    default:
      return "budget";
  }
}

}  // namespace

SweepInstance evaluate_instance(const PreInstance& pre, const SearchLimits& limits) {
  SweepInstance rec;
  rec.key = pre.key;
  rec.normalized = normalize(pre.hypergraph);
  rec.colourable = is_two_colourable(rec.normalized).has_value();

  LabeledGadget p5 = build_p5_gadget(rec.normalized);
  rec.p5_vertices = p5.graph.order();
  rec.p5_edges = p5.graph.size();
  rec.p5_verdict = verdict_of(find_suitable_pair(p5.graph, 5, limits).status);

  LabeledGadget c6 = build_c6_gadget(rec.normalized);
  rec.c6_vertices = c6.graph.order();
  rec.c6_edges = c6.graph.size();
  rec.c6_verdict = verdict_of(contracts_to(c6.graph, PatternSpec::cycle(6), limits).status);

  LabeledGadget p6 = build_p6_gadget(rec.normalized);
  rec.p6_vertices = p6.graph.order();
  rec.p6_edges = p6.graph.size();
  rec.p6_verdict = verdict_of(find_suitable_pair(p6.graph, 6, limits).status);

  std::string want = rec.colourable ? "yes" : "no";
  rec.agreement =
      rec.p5_verdict == want && rec.c6_verdict == want && rec.p6_verdict == want;
  return rec;
}

SweepReport run_sweep(const SweepParams& params) {
  SweepReport report;
  report.params = params;
  std::vector<PreInstance> pre = enumerate_pre_instances(params.max_elements, params.max_edges);
  if (params.sample > 0 && static_cast<std::size_t>(params.sample) < pre.size()) {
    report.sampled = true;
    std::mt19937_64 rng(params.seed);
    std::vector<std::size_t> idx(pre.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(params.sample); ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(static_cast<std::size_t>(params.sample));
    std::sort(idx.begin(), idx.end());
    std::vector<PreInstance> chosen;
    for (std::size_t i : idx) chosen.push_back(pre[i]);
    pre = std::move(chosen);
  }

  report.instances.resize(pre.size());
  parallel_for(pre.size(), params.threads, [&](std::size_t i) {
    report.instances[i] = evaluate_instance(pre[i], params.limits);
  });

  for (const auto& rec : report.instances) {
    if (rec.colourable) ++report.colourable_count;
    if (rec.agreement) ++report.agreement_count;
    if (rec.p5_verdict == "budget" || rec.c6_verdict == "budget" ||
        rec.p6_verdict == "budget")
      report.any_budget = true;
  }
  report.all_agree =
      report.agreement_count == static_cast<int>(report.instances.size());
  return report;
}

std::string sweep_report_to_json(const SweepReport& report) {
  ordered_json j;
  j["schema"] = "sweep/1";
  ordered_json params;
  params["max_elements"] = report.params.max_elements;
  params["max_edges"] = report.params.max_edges;
  params["seed"] = report.params.seed;
  params["sample"] = report.params.sample;
  params["sampled"] = report.sampled;
  j["params"] = std::move(params);

  auto instances = ordered_json::array();
  for (const auto& rec : report.instances) {
    ordered_json r;
    r["key"] = rec.key;
    r["hypergraph"] = json::parse(hypergraph_to_json(rec.normalized));
    r["colourable"] = rec.colourable;
    ordered_json sizes;
    sizes["p5"] = {{"vertices", rec.p5_vertices}, {"edges", rec.p5_edges}};
    sizes["c6"] = {{"vertices", rec.c6_vertices}, {"edges", rec.c6_edges}};
    sizes["p6"] = {{"vertices", rec.p6_vertices}, {"edges", rec.p6_edges}};
    r["gadgets"] = std::move(sizes);
    r["p5_contractible"] = rec.p5_verdict;
    r["c6_contractible"] = rec.c6_verdict;
    r["p6_contractible"] = rec.p6_verdict;
    r["agreement"] = rec.agreement;
    instances.push_back(std::move(r));
  }
  j["instances"] = std::move(instances);

  ordered_json summary;
  summary["instances"] = report.instances.size();
  summary["colourable"] = report.colourable_count;
  summary["agreements"] = report.agreement_count;
  summary["disagreements"] =
      static_cast<int>(report.instances.size()) - report.agreement_count;
  summary["all_agree"] = report.all_agree;
  summary["any_budget"] = report.any_budget;
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

}  // namespace ctract
