#include "ctract/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "ctract/gadgets.hpp"
#include "ctract/graph_io.hpp"
#include "ctract/hypergraph.hpp"
#include "ctract/search.hpp"
#include "ctract/sweep.hpp"

namespace ctract {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

int outcome_exit(SearchStatus status, std::ostream& out) {
  switch (status) {
    case SearchStatus::found:
      return 0;
    case SearchStatus::exhausted:
      out << "no\n";
      return 1;
    default:
      out << "budget exceeded\n";
      return 3;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph contractibility toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "build a gadget graph from a hypergraph");
  std::string gen_kind, gen_input, gen_output, gen_dot;
  gen->add_option("kind", gen_kind, "gadget kind")
      ->required()
      ->check(CLI::IsMember({"p5", "p6", "c6"}));
  gen->add_option("hypergraph", gen_input, "hypergraph JSON file")->required();
  gen->add_option("-o,--output", gen_output, "write gadget JSON here instead of stdout");
  gen->add_option("--dot", gen_dot, "also write a DOT rendering");

  auto* color = app.add_subcommand("color", "2-colour a hypergraph");
  std::string color_input;
  color->add_option("hypergraph", color_input, "hypergraph JSON file")->required();

  auto* decide = app.add_subcommand("decide", "decide contractibility");
  decide->require_subcommand(1);
  std::uint64_t budget = SearchLimits{}.max_nodes;

  auto* dpath = decide->add_subcommand("path", "path contractibility");
  int path_len = 0;
  std::string dpath_graph, dpath_witness;
  dpath->add_option("-l,--length", path_len, "path order")->required()->check(CLI::PositiveNumber);
  dpath->add_option("graph", dpath_graph, "graph JSON file")->required();
  dpath->add_option("--witness", dpath_witness, "write the witness JSON here");
  dpath->add_option("--budget", budget, "search node budget");

  auto* dcycle = decide->add_subcommand("cycle", "cycle contractibility");
  int cycle_len = 0;
  std::string dcycle_graph, dcycle_witness;
  dcycle->add_option("-k,--length", cycle_len, "cycle order")
      ->required()
      ->check(CLI::Range(3, 1'000'000));
  dcycle->add_option("graph", dcycle_graph, "graph JSON file")->required();
  dcycle->add_option("--witness", dcycle_witness, "write the witness JSON here");
  dcycle->add_option("--budget", budget, "search node budget");

  auto* dp4 = decide->add_subcommand("p4", "P4 contractibility via 2-DCS");
  std::string dp4_graph;
  dp4->add_option("graph", dp4_graph, "graph JSON file")->required();

  auto* cyc = app.add_subcommand("cyclicity", "largest k with a C_k contraction");
  std::string cyc_graph;
  cyc->add_option("graph", cyc_graph, "graph JSON file")->required();
  cyc->add_option("--budget", budget, "search node budget");

  auto* verify = app.add_subcommand("verify", "check a witness structure");
  std::string verify_graph, verify_witness_path;
  verify->add_option("graph", verify_graph, "graph JSON file")->required();
  verify->add_option("witness", verify_witness_path, "witness JSON file")->required();

  auto* extract = app.add_subcommand("extract-colouring",
                                     "recover a 2-colouring from a P5 gadget witness");
  std::string extract_gadget, extract_witness;
  extract->add_option("gadget", extract_gadget, "gadget JSON file")->required();
  extract->add_option("witness", extract_witness, "witness JSON file")->required();

  auto* sweep = app.add_subcommand("sweep", "contractibility vs 2-colourability sweep");
  SweepParams params;
  std::string sweep_output;
  sweep->add_option("--max-elements", params.max_elements, "largest ground set")
      ->check(CLI::Range(2, 16));
  sweep->add_option("--max-edges", params.max_edges, "largest hyperedge family")
      ->check(CLI::Range(0, 64));
  sweep->add_option("--seed", params.seed, "sampling seed");
  sweep->add_option("--sample", params.sample, "sample this many instances (0 = all)");
  sweep->add_option("--threads", params.threads, "worker threads (0 = hardware)");
  sweep->add_option("--budget", params.limits.max_nodes, "search node budget per call");
  sweep->add_option("-o,--output", sweep_output, "write the report here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  SearchLimits limits{budget};
  try {
    if (app.got_subcommand(gen)) {
      Hypergraph h = normalize(hypergraph_from_json(read_file(gen_input)));
      LabeledGadget gadget;
      if (gen_kind == "p5")
        gadget = build_p5_gadget(h);
      else if (gen_kind == "c6")
        gadget = build_c6_gadget(h);
      else
        gadget = build_p6_gadget(h);
      emit(gadget_to_json(gadget), gen_output, out);
      if (!gen_dot.empty()) write_file(gen_dot, gadget_to_dot(gadget));
      return 0;
    }

    if (app.got_subcommand(color)) {
      Hypergraph h = hypergraph_from_json(read_file(color_input));
      auto c = is_two_colourable(h);
      if (!c) {
        out << "NONE\n";
        return 1;
      }
      out << colouring_to_json(h, *c);
      return 0;
    }

    if (app.got_subcommand(decide)) {
      if (decide->got_subcommand(dpath)) {
        Graph g = graph_from_json(read_file(dpath_graph));
        if (path_len >= 3) {
          Outcome<SuitablePair> r = find_suitable_pair(g, path_len, limits);
          if (r.is_found()) {
            out << "yes (suitable pair: " << r.value->u << ", " << r.value->v << ")\n";
            if (!dpath_witness.empty())
              write_file(dpath_witness, witness_to_json(r.value->witness));
          }
          return outcome_exit(r.status, out);
        }
        Outcome<WitnessStructure> r = contracts_to(g, PatternSpec::path(path_len), limits);
        if (r.is_found()) {
          out << "yes\n";
          if (!dpath_witness.empty()) write_file(dpath_witness, witness_to_json(*r.value));
        }
        return outcome_exit(r.status, out);
      }
      if (decide->got_subcommand(dcycle)) {
        Graph g = graph_from_json(read_file(dcycle_graph));
        Outcome<WitnessStructure> r = contracts_to(g, PatternSpec::cycle(cycle_len), limits);
        if (r.is_found()) {
          out << "yes\n";
          if (!dcycle_witness.empty()) write_file(dcycle_witness, witness_to_json(*r.value));
        }
        return outcome_exit(r.status, out);
      }
      Graph g = graph_from_json(read_file(dp4_graph));
      auto ws = p4_contractible(g);
      out << (ws ? "yes\n" : "no\n");
      return ws ? 0 : 1;
    }

    if (app.got_subcommand(cyc)) {
      Graph g = graph_from_json(read_file(cyc_graph));
      Outcome<int> r = cyclicity(g, limits);
      if (r.is_budget()) {
        out << "budget exceeded\n";
        return 3;
      }
      out << *r.value << "\n";
      return 0;
    }

    if (app.got_subcommand(verify)) {
      Graph g = graph_from_json(read_file(verify_graph));
      WitnessStructure ws = witness_from_json(read_file(verify_witness_path));
      VerifyResult vr = verify_witness(g, ws);
      if (vr.ok) {
        out << "valid\n";
        return 0;
      }
      out << "invalid: " << vr.reason << "\n";
      return 1;
    }

    if (app.got_subcommand(extract)) {
      LabeledGadget gadget = gadget_from_json(read_file(extract_gadget));
      WitnessStructure ws = witness_from_json(read_file(extract_witness));
      try {
        TwoColouring c = p5_witness_to_colouring(gadget, ws);
        out << colouring_to_json(gadget.source, c);
        return 0;
      } catch (const extraction_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
      }
    }

    if (app.got_subcommand(sweep)) {
      SweepReport report = run_sweep(params);
      emit(sweep_report_to_json(report), sweep_output, out);
      if (report.any_budget) return 3;
      return report.all_agree ? 0 : 1;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace ctract
