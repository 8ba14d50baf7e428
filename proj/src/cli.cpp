#include "braidrep/cli.hpp"

#include "braidrep/analysis.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/zoo.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace braidrep {

// ---------------------------------------------------------------------------
// Builtin spec grammar

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw ParseError("unbalanced ')' in '" + std::string(s) + "'");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::size_t parse_size(std::string_view v, std::string_view what) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" + std::string(v) + "'");
  return out;
}

const std::map<std::string, std::set<std::string>, std::less<>>& family_keys() {
  static const std::map<std::string, std::set<std::string>, std::less<>> keys{
      {"tym", {"n", "u"}}, {"burau", {"n", "t"}}, {"char", {"n", "y"}}};
  return keys;
}

struct KeyValue {
  std::string key;
  std::string value;
};

std::optional<KeyValue> as_key_value(std::string_view piece) {
  const auto eq = piece.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  const std::string_view key = trim(piece.substr(0, eq));
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  return KeyValue{std::string(key), std::string(trim(piece.substr(eq + 1)))};
}

Representation build_family(std::string_view name, const std::map<std::string, std::string>& params) {
  const auto& keys = family_keys().find(name)->second;
  for (const auto& k : keys)
    if (!params.contains(k)) throw ParseError("family '" + std::string(name) + "' needs parameter '" + k + "'");
  const std::size_t n = parse_size(params.at("n"), "n");
  if (name == "tym") return tym_standard(n, parse_rational(params.at("u")));
  if (name == "burau") return reduced_burau(n, parse_rational(params.at("t")));
  return character_rep(n, parse_rational(params.at("y")));
}

struct SpecPiece {
  std::string text;                     // the spec as written, without attached params
  std::string family;                   // empty for combinators
  std::map<std::string, std::string> params;
};

Representation parse_spec(std::string_view text, std::uint64_t default_seed);

/// Groups comma-separated pieces into nested specs and trailing combinator parameters.
void group_arguments(std::string_view inner, std::vector<SpecPiece>& specs, std::map<std::string, std::string>& params) {
  for (std::string_view piece : split_top_level(inner)) {
    if (piece.empty()) throw ParseError("empty argument in '" + std::string(inner) + "'");
    const auto kv = as_key_value(piece);
    const bool starts_spec = !kv || piece.find(':') < piece.find('=') || piece.find('(') < piece.find('=');
    if (starts_spec) {
      SpecPiece sp;
      const auto colon = piece.find(':');
      const auto paren = piece.find('(');
      if (colon != std::string_view::npos && colon < paren) {
        sp.family = std::string(trim(piece.substr(0, colon)));
        if (!family_keys().contains(sp.family)) throw ParseError("unknown family '" + sp.family + "'");
        const auto first = as_key_value(piece.substr(colon + 1));
        if (!first) throw ParseError("expected key=value after '" + sp.family + ":'");
        sp.params[first->key] = first->value;
      }
      sp.text = std::string(piece);
      specs.push_back(std::move(sp));
      continue;
    }
    SpecPiece* open = specs.empty() ? nullptr : &specs.back();
    if (open && !open->family.empty() && family_keys().find(open->family)->second.contains(kv->key) &&
        !open->params.contains(kv->key)) {
      open->params[kv->key] = kv->value;
      open->text += "," + std::string(piece);
    } else {
      if (params.contains(kv->key)) throw ParseError("duplicate parameter '" + kv->key + "'");
      params[kv->key] = kv->value;
    }
  }
}

Representation parse_spec(std::string_view text, std::uint64_t default_seed) {
  text = trim(text);
  const auto paren = text.find('(');
  const auto colon = text.find(':');
  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    const std::string_view name = trim(text.substr(0, paren));
    if (text.back() != ')') throw ParseError("expected ')' at the end of '" + std::string(text) + "'");
    const std::string_view inner = text.substr(paren + 1, text.size() - paren - 2);

    std::vector<SpecPiece> specs;
    std::map<std::string, std::string> params;
    group_arguments(inner, specs, params);

    auto expect = [&](std::size_t nspecs, std::set<std::string> allowed) {
      if (specs.size() != nspecs)
        throw ParseError(std::string(name) + " takes " + std::to_string(nspecs) + " representation argument(s)");
      for (const auto& [k, v] : params)
        if (!allowed.contains(k)) throw ParseError(std::string(name) + " does not take parameter '" + k + "'");
    };

    if (name == "tensor") {
      expect(1, {"y"});
      if (!params.contains("y")) throw ParseError("tensor needs y=<rational>");
      return tensor_character(parse_spec(specs[0].text, default_seed), parse_rational(params["y"]));
    }
    if (name == "dsum") {
      expect(2, {});
      return direct_sum(parse_spec(specs[0].text, default_seed), parse_spec(specs[1].text, default_seed));
    }
    if (name == "conj") {
      expect(1, {"seed"});
      const std::uint64_t seed = params.contains("seed") ? parse_size(params["seed"], "seed") : default_seed;
      const Representation base = parse_spec(specs[0].text, default_seed);
      return conjugate_rep(base, random_invertible(base.dim(), seed))
          .with_label(base.label() + " conjugated by P#seed=" + std::to_string(seed));
    }
    throw ParseError("unknown combinator '" + std::string(name) + "'");
  }

  if (colon == std::string_view::npos) throw ParseError("not a representation spec: '" + std::string(text) + "'");
  std::vector<SpecPiece> specs;
  std::map<std::string, std::string> params;
  group_arguments(text, specs, params);
  if (specs.size() != 1 || specs[0].family.empty() || !params.empty())
    throw ParseError("malformed family spec '" + std::string(text) + "'");
  return build_family(specs[0].family, specs[0].params);
}

}  // namespace

Representation parse_builtin(std::string_view text, std::uint64_t default_seed) {
  return parse_spec(text, default_seed);
}

Representation load_source(const std::string& source, std::uint64_t default_seed) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return load_representation(source);
  return parse_builtin(source, default_seed);
}

// ---------------------------------------------------------------------------
// Verbs

namespace {

struct CommonOptions {
  std::string source;
  std::string format = "json";
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

std::uint64_t resolve_seed(const CommonOptions& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("BRAIDREP_SEED")) return parse_size(env, "BRAIDREP_SEED");
  return 0;
}

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw InputError("cannot write " + o.out_path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string relations_text(const Representation& rep) {
  std::ostringstream os;
  const RelationReport rr = verify_braid_relations(rep);
  os << "representation: " << rep.label() << " (n=" << rep.strands() << ", r=" << rep.dim() << ")\n";
  os << "braid relations:      " << (rr.braid_relations_ok ? "ok" : "FAIL") << '\n';
  os << "far commutation:      " << (rr.far_commutation_ok ? "ok" : "FAIL") << '\n';
  os << "cyclic conjugation:   " << (verify_cyclic_conjugation(rep) ? "ok" : "FAIL") << '\n';
  os << "deformed relations:   " << (verify_deformed_relations(rep) ? "ok" : "FAIL") << '\n';
  for (const auto& f : rr.failures) os << "  failure: " << f.relation << " (" << f.i << "," << f.j << ")\n";
  return os.str();
}

std::string report_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "representation: " << rep.label << " (n=" << rep.n << ", r=" << rep.r << ")\n";
  os << "relations:      " << (rep.relations.ok() && rep.cyclic_conjugation_ok && rep.deformed_relations_ok ? "ok" : "FAIL")
     << '\n';
  os << "corank:         " << (rep.corank ? std::to_string(*rep.corank) : std::string("n/a")) << '\n';
  if (rep.graph_class) {
    os << "graph:          " << to_string(rep.graph_class->tag) << " {";
    bool first = true;
    for (auto d : rep.graph_class->distance_set) {
      os << (first ? "" : ",") << d;
      first = false;
    }
    os << "} " << rep.graph_class->detail << '\n';
  }
  os << "irreducibility: " << to_string(rep.irreducibility.tag);
  if (rep.irreducibility.algebra_dim) os << " (algebra dim " << *rep.irreducibility.algebra_dim << ")";
  if (rep.irreducibility.witness) os << ", witness dim " << rep.irreducibility.witness->dim();
  os << " via " << rep.irreducibility.method << '\n';
  if (rep.standard_form) os << "standard form:  u = " << to_string(rep.standard_form->u) << '\n';
  os << "seed:           " << rep.seed << '\n';
  for (const auto& note : rep.notes) os << "note: " << note << '\n';
  return os.str();
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (std::string_view piece : split_top_level(text)) {
    if (const auto dots = piece.find(".."); dots != std::string_view::npos) {
      const std::size_t lo = parse_size(piece.substr(0, dots), "range start");
      const std::size_t hi = parse_size(piece.substr(dots + 2), "range end");
      for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
    } else {
      out.push_back(parse_size(piece, "n"));
    }
  }
  return out;
}

int run_sweep(const std::string& family, const std::string& ns, const std::string& params, const CommonOptions& o,
              std::ostream& out) {
  if (family != "tym" && family != "burau") throw ParseError("sweep family must be tym or burau");
  const std::vector<std::size_t> n_values = parse_size_list(ns);
  std::vector<Rational> p_values;
  for (std::string_view piece : split_top_level(params)) p_values.push_back(parse_rational(piece));
  const std::uint64_t seed = resolve_seed(o);
  const char* pname = family == "tym" ? "u" : "t";

  Json rows = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(4) << "n" << std::setw(8) << pname << std::setw(8) << "corank" << std::setw(22)
        << "graph" << std::setw(24) << "irreducibility" << std::setw(10) << "alg_dim"
        << "u_recovered\n";
  for (std::size_t n : n_values) {
    for (const auto& p : p_values) {
      const Representation rep = family == "tym" ? tym_standard(n, p) : reduced_burau(n, p);
      const AnalysisReport ar = analyze(rep, {seed, 16});
      Json row;
      row["n"] = n;
      row[pname] = to_string(p);
      row["corank"] = ar.corank ? Json(*ar.corank) : Json(nullptr);
      row["class"] = ar.graph_class ? Json(to_string(ar.graph_class->tag)) : Json(nullptr);
      row["irreducibility"] = to_string(ar.irreducibility.tag);
      row["algebra_dim"] = ar.irreducibility.algebra_dim ? Json(*ar.irreducibility.algebra_dim) : Json(nullptr);
      row["u_recovered"] = ar.standard_form ? Json(to_string(ar.standard_form->u)) : Json(nullptr);
      table << std::setw(4) << n << std::setw(8) << to_string(p) << std::setw(8)
            << (ar.corank ? std::to_string(*ar.corank) : "-") << std::setw(22)
            << (ar.graph_class ? to_string(ar.graph_class->tag) : "-") << std::setw(24)
            << to_string(ar.irreducibility.tag) << std::setw(10)
            << (ar.irreducibility.algebra_dim ? std::to_string(*ar.irreducibility.algebra_dim) : "-")
            << (ar.standard_form ? to_string(ar.standard_form->u) : "-") << '\n';
      rows.push_back(std::move(row));
    }
  }
  emit(o, o.format == "text" ? table.str() : dump(rows), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidrep: exact analysis of braid group representations"};
  app.require_subcommand(1);

  CommonOptions o;
  bool full_graph = false;
  std::string family = "tym";
  std::string sweep_n = "6..10";
  std::string sweep_params = "2,5/3,-7/4";

  auto add_common = [&](CLI::App* sub, bool with_source, const std::string& formats) {
    if (with_source) sub->add_option("source", o.source, "builtin spec or JSON representation file")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(CLI::detail::split(formats, ',')));
    sub->add_option("--out", o.out_path, "write output to a file");
    sub->add_option("--seed", o.seed, "seed for randomized steps (fallback: BRAIDREP_SEED)");
  };

  auto* make = app.add_subcommand("make", "construct a representation and save it as JSON");
  add_common(make, true, "json");
  auto* verify = app.add_subcommand("verify", "check the braid relations");
  add_common(verify, true, "json,text");
  auto* graph = app.add_subcommand("graph", "friendship graph");
  add_common(graph, true, "json,dot,text");
  graph->add_flag("--full", full_graph, "include sigma_0");
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  add_common(analyze_cmd, true, "json,text");
  auto* irreducible = app.add_subcommand("irreducible", "irreducibility verdict");
  add_common(irreducible, true, "json,text");
  auto* sweep = app.add_subcommand("sweep", "analyze a grid of (n, parameter) values");
  add_common(sweep, false, "json,text");
  sweep->add_option("--family", family, "tym or burau");
  sweep->add_option("--n", sweep_n, "list or range of strand counts, e.g. 6..10 or 6,8");
  sweep->add_option("--u", sweep_params, "comma-separated rational parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t seed = resolve_seed(o);
    if (sweep->parsed()) return run_sweep(family, sweep_n, sweep_params, o, out);

    const Representation rep = load_source(o.source, seed);

    if (make->parsed()) {
      emit(o, dump(representation_to_json(rep)), out);
    } else if (verify->parsed()) {
      if (o.format == "text") {
        emit(o, relations_text(rep), out);
      } else {
        Json j = relations_to_json(verify_braid_relations(rep));
        j["cyclic_conjugation_ok"] = verify_cyclic_conjugation(rep);
        j["deformed_relations_ok"] = verify_deformed_relations(rep);
        emit(o, dump(j), out);
      }
    } else if (graph->parsed()) {
      const FriendshipGraph full = full_friendship_graph(rep);
      std::optional<GraphClass> cls;
      std::string tag = "unclassified";
      try {
        cls = classify_graph(full);
        tag = to_string(cls->tag);
      } catch (const Error& e) {
        err << "warning: " << e.what() << '\n';
      }
      const FriendshipGraph shown = full_graph ? full : full.reduced();
      if (o.format == "dot") {
        emit(o, to_dot(shown, tag), out);
      } else if (o.format == "text") {
        std::ostringstream os;
        os << "class: " << tag << '\n';
        const std::size_t first = shown.first_label();
        for (std::size_t i = first; i < first + shown.vertex_count(); ++i)
          for (std::size_t j = i + 1; j < first + shown.vertex_count(); ++j)
            if (shown.edge(i, j)) os << "s" << i << " -- s" << j << '\n';
        emit(o, os.str(), out);
      } else {
        emit(o, dump(graph_to_json(shown, cls)), out);
      }
    } else if (analyze_cmd->parsed()) {
      const AnalysisReport report = analyze(rep, {seed, 16});
      emit(o, o.format == "text" ? report_text(report) : dump(report_to_json(report)), out);
    } else if (irreducible->parsed()) {
      IrreducibilityVerdict v;
      const std::string src = std::string(trim(o.source));
      if (src.rfind("tym:", 0) == 0) {
        v = tym_irreducibility(rep.strands(), rep.generator(1)(0, 1), seed);
      } else {
        v = decide_irreducibility(rep, {seed, 16});
      }
      if (o.format == "text") {
        std::ostringstream os;
        os << to_string(v.tag);
        if (v.algebra_dim) os << " (algebra dim " << *v.algebra_dim << ")";
        os << " via " << v.method << '\n';
        if (v.witness)
          for (const auto& b : v.witness->vectors()) os << "witness vector: " << vector_to_json(b).dump() << '\n';
        emit(o, os.str(), out);
      } else {
        emit(o, dump(verdict_to_json(v)), out);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace braidrep
