#include "braidrep/analysis.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/zoo.hpp"

namespace braidrep {

namespace {

template <typename F>
bool record_errors(AnalysisReport& report, const std::string& stage, F&& f) {
  try {
    f();
    return true;
  } catch (const std::exception& e) {
    report.notes.push_back(stage + ": " + e.what());
    return false;
  }
}

}  // namespace

AnalysisReport analyze(const Representation& rep, const AnalysisOptions& opts) {
  AnalysisReport report;
  report.n = rep.strands();
  report.r = rep.dim();
  report.label = rep.label();
  report.seed = opts.seed;

  const std::size_t n = rep.strands();
  const std::size_t r = rep.dim();

  record_errors(report, "relations", [&] {
    report.relations = verify_braid_relations(rep);
    report.cyclic_conjugation_ok = verify_cyclic_conjugation(rep);
    report.deformed_relations_ok = verify_deformed_relations(rep);
  });
  if (!report.relations.ok()) report.notes.push_back("relations: input is not a representation of B_n");

  record_errors(report, "corank", [&] { report.corank = corank(rep); });

  record_errors(report, "graph", [&] {
    report.full_graph = full_friendship_graph(rep);
    report.reduced_graph = report.full_graph->reduced();
    report.graph_is_chain = is_chain(*report.full_graph);
    report.graph_class = classify_graph(*report.full_graph);
    if (report.graph_class->exceptional_small_n)
      report.notes.push_back("graph: exceptional small-n friendship graph (" + report.graph_class->detail +
                             "); no classification attempted");
    if (n != 4) {
      for (const FriendshipGraph* g : {&*report.full_graph, &*report.reduced_graph})
        if (g->edge_count() != 0 && !g->connected())
          throw InvariantViolation("friendship graph is neither edgeless nor connected for n != 4");
    }
  });

  const WitnessSearchOptions search{opts.seed, opts.random_trials};
  if (report.corank == std::size_t{0}) {
    record_errors(report, "irreducibility", [&] {
      report.irreducibility = r == 1 ? burnside_dimension(rep).second : *find_invariant_subspace(rep, search);
      report.irreducibility.method = "corank 0: direct sum of trivial characters";
    });
  } else {
    record_errors(report, "irreducibility", [&] { report.irreducibility = decide_irreducibility(rep, search); });
  }

  const bool irreducible = report.irreducibility.tag == IrreducibilityTag::AbsolutelyIrreducible;
  const bool corank_two = report.corank == std::size_t{2};
  report.main_theorem_applies = irreducible && corank_two && n >= 6 && r >= n;
  report.corollary_applies = irreducible && corank_two && n >= 7;

  const bool exceptional = report.graph_class && report.graph_class->exceptional_small_n;
  if (irreducible && corank_two && r == n && n >= 4 && report.graph_is_chain && !exceptional) {
    record_errors(report, "standard_form", [&] { report.standard_form = extract_standard_form(rep); });
  }
  if (report.main_theorem_applies) {
    if (r != n) report.notes.push_back("main theorem: VIOLATION, irreducible corank-2 rep with r > n");
    if (!report.graph_is_chain) report.notes.push_back("main theorem: VIOLATION, friendship graph is not a chain");
    if (!report.standard_form) report.notes.push_back("main theorem: VIOLATION, no standard form recovered");
  }

  if (irreducible && r >= n && n != 4) {
    record_errors(report, "dimension_bound", [&] { report.dimension_bound_holds = dimension_bound_check(rep); });
  }
  return report;
}

Json relations_to_json(const RelationReport& rep) {
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    Json item;
    item["relation"] = f.relation;
    item["i"] = f.i;
    item["j"] = f.j;
    failures.push_back(std::move(item));
  }
  Json out;
  out["braid_relations_ok"] = rep.braid_relations_ok;
  out["far_commutation_ok"] = rep.far_commutation_ok;
  out["failures"] = std::move(failures);
  return out;
}

Json graph_to_json(const FriendshipGraph& g, const std::optional<GraphClass>& cls) {
  Json out;
  if (cls) {
    out["distance_set"] = Json(std::vector<std::size_t>(cls->distance_set.begin(), cls->distance_set.end()));
    out["class"] = to_string(cls->tag);
    out["detail"] = cls->detail;
    out["exceptional_small_n"] = cls->exceptional_small_n;
  }
  out["full"] = g.full();
  out["vertices"] = g.vertex_count();
  Json edges = Json::array();
  Json adjacency = Json::array();
  const std::size_t first = g.first_label();
  const std::size_t last = first + g.vertex_count();
  for (std::size_t i = first; i < last; ++i) {
    Json row = Json::array();
    for (std::size_t j = first; j < last; ++j) {
      const bool e = i != j && g.edge(i, j);
      row.push_back(e ? 1 : 0);
      if (e && i < j) edges.push_back(Json::array({i, j}));
    }
    adjacency.push_back(std::move(row));
  }
  out["edges"] = std::move(edges);
  out["adjacency"] = std::move(adjacency);
  out["chain"] = is_chain(g);
  return out;
}

Json verdict_to_json(const IrreducibilityVerdict& v) {
  Json out;
  out["tag"] = to_string(v.tag);
  out["algebra_dim"] = v.algebra_dim ? Json(*v.algebra_dim) : Json(nullptr);
  if (v.witness) out["witness"] = subspace_to_json(*v.witness);
  out["method"] = v.method;
  return out;
}

Json report_to_json(const AnalysisReport& report) {
  Json out;
  Json rel = relations_to_json(report.relations);
  rel["cyclic_conjugation_ok"] = report.cyclic_conjugation_ok;
  rel["deformed_relations_ok"] = report.deformed_relations_ok;
  out["relations"] = std::move(rel);
  out["corank"] = report.corank ? Json(*report.corank) : Json(nullptr);
  if (report.full_graph) {
    Json g = graph_to_json(*report.full_graph, report.graph_class);
    g["reduced"] = graph_to_json(*report.reduced_graph, std::nullopt);
    out["graph"] = std::move(g);
  } else {
    out["graph"] = nullptr;
  }
  out["irreducibility"] = verdict_to_json(report.irreducibility);
  if (report.standard_form) {
    Json sf;
    sf["u"] = to_string(report.standard_form->u);
    sf["basis"] = matrix_to_json(report.standard_form->basis);
    out["standard_form"] = std::move(sf);
  }
  out["seed"] = report.seed;
  out["n"] = report.n;
  out["r"] = report.r;
  Json th;
  th["main_theorem_applies"] = report.main_theorem_applies;
  th["corollary_applies"] = report.corollary_applies;
  th["dimension_bound_holds"] =
      report.dimension_bound_holds ? Json(*report.dimension_bound_holds) : Json(nullptr);
  out["theorems"] = std::move(th);
  out["notes"] = report.notes;
  return out;
}

}  // namespace braidrep
