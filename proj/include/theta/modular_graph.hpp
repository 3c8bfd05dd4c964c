#pragma once

// Directed modular graphs: vertices carry a genus and a degree, edges are
// directed, and markings come in two ordered families. Positive (outgoing)
// markings P = {1..p} map to vertices through m_out, negative (incoming)
// markings N = {1..n} through m_in.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace theta {

struct Vertex {
  std::string id;
  std::int64_t genus = 0;
  std::int64_t degree = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::string source;
  std::string target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DirectedModularGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::string> pos_markings;  // entry i is m_out(i + 1)
  std::vector<std::string> neg_markings;  // entry i is m_in(i + 1)

  const Vertex* find_vertex(const std::string& id) const;
  Vertex* find_vertex(const std::string& id);
  const Edge* find_edge(const std::string& id) const;

  friend bool operator==(const DirectedModularGraph&, const DirectedModularGraph&) = default;
};

struct Valence {
  std::int64_t in = 0;   // |t^-1(v)| + |m_in^-1(v)|
  std::int64_t out = 0;  // |s^-1(v)| + |m_out^-1(v)|
  friend bool operator==(const Valence&, const Valence&) = default;
};

using Valences = std::map<std::string, Valence>;

/// Empty when the graph is well formed; otherwise one message per violation.
std::vector<std::string> validate(const DirectedModularGraph& g);

Valences valences(const DirectedModularGraph& g);

std::int64_t total_degree(const DirectedModularGraph& g);

/// Number of connected components of the underlying undirected graph.
std::int64_t component_count(const DirectedModularGraph& g);

/// sum of vertex genera + |E| - |V| + #components
std::int64_t arithmetic_genus(const DirectedModularGraph& g);

/// Removes e and records its two half-edges as markings: a positive marking
/// at source(e) and a negative marking at target(e).
DirectedModularGraph cut_edge(const DirectedModularGraph& g, const std::string& edge_id);

/// Collapses e. The merged vertex keeps the id of source(e).
DirectedModularGraph contract_edge(const DirectedModularGraph& g, const std::string& edge_id);

/// Joins the last positive marking to the last negative marking by a new edge.
DirectedModularGraph glue(const DirectedModularGraph& g);

/// Turns the last negative marking into a new last positive marking and
/// lowers the degree of its vertex by one.
DirectedModularGraph flip_neg_to_pos(const DirectedModularGraph& g);

/// Turns the last positive marking into a new last negative marking.
DirectedModularGraph flip_pos_to_neg(const DirectedModularGraph& g);

/// Isomorphism that may relabel vertex and edge ids but must preserve genus,
/// degree, edge directions and each marking index.
bool isomorphic(const DirectedModularGraph& a, const DirectedModularGraph& b);

/// A valid graph with 1..max_vertices vertices, random edges (loops and
/// multi-edges allowed) and random markings.
DirectedModularGraph random_graph(std::mt19937_64& rng, int max_vertices = 8);

}  // namespace theta
