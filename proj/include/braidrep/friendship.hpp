#pragma once

#include "braidrep/representation.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace braidrep {

/// Simple undirected graph whose vertices are generator labels.
///
/// A full graph has vertices sigma_0..sigma_{n-1} and neighbours are at
/// circular distance 1; the reduced graph drops sigma_0, leaving
/// sigma_1..sigma_{n-1} with neighbours |i - j| = 1.
class FriendshipGraph {
 public:
  FriendshipGraph(std::size_t strands, bool full);

  /// Graph on sigma_0..sigma_{n-1} with edges at the given circular distances.
  static FriendshipGraph circulant(std::size_t strands, const std::set<std::size_t>& distances);

  std::size_t strands() const { return n_; }
  bool full() const { return full_; }
  std::size_t vertex_count() const { return full_ ? n_ : n_ - 1; }
  std::size_t first_label() const { return full_ ? 0 : 1; }

  /// Vertices are addressed by generator label.
  bool edge(std::size_t i, std::size_t j) const;
  void set_edge(std::size_t i, std::size_t j, bool present = true);

  std::size_t edge_count() const;
  bool connected() const;
  /// Labels i and j are neighbours in this graph's sense.
  bool neighbors(std::size_t i, std::size_t j) const;

  /// Induced subgraph on sigma_1..sigma_{n-1}.
  FriendshipGraph reduced() const;

  friend bool operator==(const FriendshipGraph&, const FriendshipGraph&) = default;

 private:
  std::size_t local(std::size_t label) const;

  std::size_t n_;
  bool full_;
  std::vector<std::vector<char>> adj_;
};

enum class GraphTag { TotallyDisconnected, ContainsChain, NonNeighborEdges, Exceptional };

const char* to_string(GraphTag tag);

struct GraphClass {
  GraphTag tag = GraphTag::TotallyDisconnected;
  std::set<std::size_t> distance_set;
  std::string detail;
  /// n = 4 or n = 5 shapes singled out as exceptions to the chain theorem.
  bool exceptional_small_n = false;
  // Which cases of the trichotomy hold: no edges / all neighbours / all non-neighbours.
  bool case_a = false;
  bool case_b = false;
  bool case_c = false;
};

bool are_friends(const Representation& rep, std::size_t i, std::size_t j);
bool are_true_friends(const Representation& rep, std::size_t i, std::size_t j);

FriendshipGraph full_friendship_graph(const Representation& rep);
FriendshipGraph friendship_graph(const Representation& rep);

/// adjacency(i, j) == adjacency(i + 1, j + 1) mod n. Full graphs only.
bool check_zn_equivariance(const FriendshipGraph& g);

/// Requires a full, Z_n-equivariant graph. Throws InvariantViolation when
/// none of the three trichotomy cases holds.
GraphClass classify_graph(const FriendshipGraph& g);

/// Edge set equals exactly the neighbour pairs.
bool is_chain(const FriendshipGraph& g);

/// Graphviz text; vertices s<label>, graph label = tag.
std::string to_dot(const FriendshipGraph& g, const std::string& graph_label);

}  // namespace braidrep
