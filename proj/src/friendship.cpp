#include "braidrep/friendship.hpp"

#include "braidrep/braid.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/zoo.hpp"

#include <sstream>

namespace braidrep {

FriendshipGraph::FriendshipGraph(std::size_t strands, bool full) : n_(strands), full_(full) {
  if (n_ < 2) throw InputError("friendship graph needs n >= 2");
  adj_.assign(vertex_count(), std::vector<char>(vertex_count(), 0));
}

FriendshipGraph FriendshipGraph::circulant(std::size_t strands, const std::set<std::size_t>& distances) {
  FriendshipGraph g(strands, true);
  for (std::size_t i = 0; i < strands; ++i)
    for (std::size_t j = i + 1; j < strands; ++j)
      if (distances.contains(circular_distance(i, j, strands))) g.set_edge(i, j);
  return g;
}

std::size_t FriendshipGraph::local(std::size_t label) const {
  if (label < first_label() || label - first_label() >= vertex_count())
    throw InputError("vertex s" + std::to_string(label) + " not in graph");
  return label - first_label();
}

bool FriendshipGraph::edge(std::size_t i, std::size_t j) const { return adj_[local(i)][local(j)] != 0; }

void FriendshipGraph::set_edge(std::size_t i, std::size_t j, bool present) {
  if (i == j) throw InputError("friendship graphs have no self-loops");
  adj_[local(i)][local(j)] = adj_[local(j)][local(i)] = present ? 1 : 0;
}

std::size_t FriendshipGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (std::size_t b = a + 1; b < adj_.size(); ++b) count += adj_[a][b] ? 1 : 0;
  return count;
}

bool FriendshipGraph::connected() const {
  const std::size_t v = vertex_count();
  std::vector<char> seen(v, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < v; ++b) {
      if (adj_[a][b] && !seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == v;
}

bool FriendshipGraph::neighbors(std::size_t i, std::size_t j) const {
  if (full_) return are_neighbors(i, j, n_);
  return (i > j ? i - j : j - i) == 1;
}

FriendshipGraph FriendshipGraph::reduced() const {
  if (!full_) return *this;
  FriendshipGraph g(n_, false);
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (edge(i, j)) g.set_edge(i, j);
  return g;
}

const char* to_string(GraphTag tag) {
  switch (tag) {
    case GraphTag::TotallyDisconnected: return "TotallyDisconnected";
    case GraphTag::ContainsChain: return "ContainsChain";
    case GraphTag::NonNeighborEdges: return "NonNeighborEdges";
    case GraphTag::Exceptional: return "Exceptional";
  }
  return "?";
}

namespace {

void require_distinct(const Representation& rep, std::size_t i, std::size_t j) {
  if (i % rep.strands() == j % rep.strands()) throw InputError("friendship is defined for distinct generators");
}

bool friends_from_images(const Subspace& a, const Subspace& b) { return !intersect(a, b).is_zero(); }

}  // namespace

bool are_friends(const Representation& rep, std::size_t i, std::size_t j) {
  require_distinct(rep, i, j);
  return friends_from_images(image_basis(deformation(rep, i)), image_basis(deformation(rep, j)));
}

bool are_true_friends(const Representation& rep, std::size_t i, std::size_t j) {
  require_distinct(rep, i, j);
  const Matrix a = deformation(rep, i);
  const Matrix b = deformation(rep, j);
  if (!are_neighbors(i, j, rep.strands())) {
    const Matrix ab = a * b;
    return ab == b * a && !ab.is_zero();
  }
  const Matrix left = a + a * a + a * b * a;
  return left == b + b * b + b * a * b && !left.is_zero();
}

FriendshipGraph full_friendship_graph(const Representation& rep) {
  const std::size_t n = rep.strands();
  std::vector<Subspace> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(image_basis(deformation(rep, i)));

  FriendshipGraph g(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (friends_from_images(images[i], images[j])) g.set_edge(i, j);
  return g;
}

FriendshipGraph friendship_graph(const Representation& rep) {
  const std::size_t n = rep.strands();
  std::vector<Subspace> images;
  images.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) images.push_back(image_basis(deformation(rep, i)));

  FriendshipGraph g(n, false);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (friends_from_images(images[i - 1], images[j - 1])) g.set_edge(i, j);
  return g;
}

bool check_zn_equivariance(const FriendshipGraph& g) {
  if (!g.full()) throw PreconditionError("Z_n-equivariance is a property of the full friendship graph");
  const std::size_t n = g.strands();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.edge(i, j) != g.edge((i + 1) % n, (j + 1) % n)) return false;
  return true;
}

GraphClass classify_graph(const FriendshipGraph& g) {
  if (!g.full()) throw PreconditionError("classification needs the full friendship graph");
  if (!check_zn_equivariance(g)) throw InputError("full friendship graph is not Z_n-equivariant");

  const std::size_t n = g.strands();
  GraphClass out;
  for (std::size_t d = 1; d <= n / 2; ++d)
    if (g.edge(0, d)) out.distance_set.insert(d);

  const auto& ds = out.distance_set;
  out.case_a = ds.empty();
  out.case_b = ds.contains(1);
  out.case_c = true;
  for (std::size_t d = 2; d <= n / 2; ++d) out.case_c = out.case_c && ds.contains(d);

  if (!out.case_a && !out.case_b && !out.case_c)
    throw InvariantViolation("friendship graph satisfies none of: no edges, all neighbour edges, all non-neighbour edges");

  if (out.case_a) {
    out.tag = GraphTag::TotallyDisconnected;
    out.detail = "no two generators are friends";
  } else if (n == 4 && ds != std::set<std::size_t>{1}) {
    out.tag = GraphTag::Exceptional;
    out.exceptional_small_n = true;
    out.detail = ds.contains(1) ? "n=4 complete graph; exceptional shape (inferred, figure unavailable)"
                                : "n=4 diagonals only; reduced graph neither edgeless nor connected (shape inferred, "
                                  "figure unavailable)";
  } else if (out.case_b) {
    out.tag = GraphTag::ContainsChain;
    out.detail = ds.size() == 1 ? "chain: edges exactly between neighbours" : "contains the chain plus further edges";
  } else {
    out.tag = GraphTag::NonNeighborEdges;
    if (n == 5) {
      out.exceptional_small_n = true;
      out.detail = "n=5 pentagram; the exceptional case besides the chain (shape inferred, figure unavailable)";
    } else {
      out.detail = "every non-neighbour pair are friends, no neighbour pair is";
    }
  }
  return out;
}

bool is_chain(const FriendshipGraph& g) {
  const std::size_t first = g.first_label();
  const std::size_t last = first + g.vertex_count();
  for (std::size_t i = first; i < last; ++i)
    for (std::size_t j = i + 1; j < last; ++j)
      if (g.edge(i, j) != g.neighbors(i, j)) return false;
  return true;
}

std::string to_dot(const FriendshipGraph& g, const std::string& graph_label) {
  std::ostringstream os;
  os << "graph friendship {\n";
  os << "  label=\"" << graph_label << "\";\n";
  const std::size_t first = g.first_label();
  const std::size_t last = first + g.vertex_count();
  for (std::size_t i = first; i < last; ++i) os << "  s" << i << ";\n";
  for (std::size_t i = first; i < last; ++i)
    for (std::size_t j = i + 1; j < last; ++j)
      if (g.edge(i, j)) os << "  s" << i << " -- s" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace braidrep
