#pragma once

#include "braidrep/classify.hpp"
#include "braidrep/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidrep {

struct AnalysisOptions {
  std::uint64_t seed = 0;
  std::size_t random_trials = 16;
};

/// Everything the pipeline learned about one representation. Failures of
/// individual stages are recorded in `notes`, never thrown.
struct AnalysisReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::string label;

  RelationReport relations;
  bool cyclic_conjugation_ok = false;
  bool deformed_relations_ok = false;

  std::optional<std::size_t> corank;

  std::optional<FriendshipGraph> full_graph;
  std::optional<FriendshipGraph> reduced_graph;
  std::optional<GraphClass> graph_class;
  bool graph_is_chain = false;

  IrreducibilityVerdict irreducibility;
  std::optional<StandardFormResult> standard_form;
  std::optional<bool> dimension_bound_holds;

  // Hypotheses of the classification: n >= 6 for the r = n chain result,
  // n >= 7 for the statement over all corank-2 irreducibles.
  bool main_theorem_applies = false;
  bool corollary_applies = false;

  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const Representation& rep, const AnalysisOptions& opts = {});

/// Field order: relations, corank, graph, irreducibility, standard_form
/// (when present), seed, then n, r, theorems, notes.
Json report_to_json(const AnalysisReport& report);

Json verdict_to_json(const IrreducibilityVerdict& v);
Json relations_to_json(const RelationReport& rep);
Json graph_to_json(const FriendshipGraph& g, const std::optional<GraphClass>& cls);

}  // namespace braidrep
