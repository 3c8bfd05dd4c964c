#include "theta/modular_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "theta/numeric.hpp"

namespace theta {

const Vertex* DirectedModularGraph::find_vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

Vertex* DirectedModularGraph::find_vertex(const std::string& id) {
  for (auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Edge* DirectedModularGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<std::string> validate(const DirectedModularGraph& g) {
  std::vector<std::string> problems;
  std::set<std::string> vids;
  for (const auto& v : g.vertices) {
    if (!vids.insert(v.id).second) problems.push_back("duplicate vertex id '" + v.id + "'");
    if (v.genus < 0) problems.push_back("vertex '" + v.id + "' has negative genus");
  }
  std::set<std::string> eids;
  for (const auto& e : g.edges) {
    if (!eids.insert(e.id).second) problems.push_back("duplicate edge id '" + e.id + "'");
    if (!vids.count(e.source)) {
      problems.push_back("edge '" + e.id + "' has unknown source '" + e.source + "'");
    }
    if (!vids.count(e.target)) {
      problems.push_back("edge '" + e.id + "' has unknown target '" + e.target + "'");
    }
  }
  for (std::size_t i = 0; i < g.pos_markings.size(); ++i) {
    if (!vids.count(g.pos_markings[i])) {
      problems.push_back("positive marking " + std::to_string(i + 1) + " lands on unknown vertex '" +
                         g.pos_markings[i] + "'");
    }
  }
  for (std::size_t i = 0; i < g.neg_markings.size(); ++i) {
    if (!vids.count(g.neg_markings[i])) {
      problems.push_back("negative marking " + std::to_string(i + 1) + " lands on unknown vertex '" +
                         g.neg_markings[i] + "'");
    }
  }
  return problems;
}

Valences valences(const DirectedModularGraph& g) {
  Valences out;
  for (const auto& v : g.vertices) out[v.id];
  for (const auto& e : g.edges) {
    ++out[e.source].out;
    ++out[e.target].in;
  }
  for (const auto& v : g.pos_markings) ++out[v].out;
  for (const auto& v : g.neg_markings) ++out[v].in;
  return out;
}

std::int64_t total_degree(const DirectedModularGraph& g) {
  std::int64_t sum = 0;
  for (const auto& v : g.vertices) sum += v.degree;
  return sum;
}

std::int64_t component_count(const DirectedModularGraph& g) {
  std::map<std::string, std::size_t> index;
  for (const auto& v : g.vertices) index.emplace(v.id, index.size());
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::int64_t components = static_cast<std::int64_t>(index.size());
  for (const auto& e : g.edges) {
    const auto s = index.find(e.source);
    const auto t = index.find(e.target);
    if (s == index.end() || t == index.end()) continue;
    const std::size_t rs = root(s->second);
    const std::size_t rt = root(t->second);
    if (rs != rt) {
      parent[rs] = rt;
      --components;
    }
  }
  return components;
}

std::int64_t arithmetic_genus(const DirectedModularGraph& g) {
  std::int64_t genus = 0;
  for (const auto& v : g.vertices) genus += v.genus;
  return genus + static_cast<std::int64_t>(g.edges.size()) -
         static_cast<std::int64_t>(g.vertices.size()) + component_count(g);
}

namespace {

std::vector<Edge>::const_iterator require_edge(const DirectedModularGraph& g, const std::string& id) {
  auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.id == id; });
  if (it == g.edges.end()) throw DomainError("no edge with id '" + id + "'");
  return it;
}

std::string fresh_edge_id(const DirectedModularGraph& g) {
  for (std::size_t k = g.edges.size();; ++k) {
    std::string id = "e" + std::to_string(k);
    if (!g.find_edge(id)) return id;
  }
}

}  // namespace

DirectedModularGraph cut_edge(const DirectedModularGraph& g, const std::string& edge_id) {
  const auto it = require_edge(g, edge_id);
  DirectedModularGraph out = g;
  out.pos_markings.push_back(it->source);
  out.neg_markings.push_back(it->target);
  out.edges.erase(out.edges.begin() + (it - g.edges.begin()));
  return out;
}

DirectedModularGraph contract_edge(const DirectedModularGraph& g, const std::string& edge_id) {
  const auto it = require_edge(g, edge_id);
  const Edge e = *it;
  DirectedModularGraph out = g;
  out.edges.erase(out.edges.begin() + (it - g.edges.begin()));
  Vertex* keep = out.find_vertex(e.source);
  if (!keep) throw DomainError("edge '" + e.id + "' has unknown source");
  if (e.source == e.target) {
    keep->genus += 1;
    return out;
  }
  const Vertex* gone = out.find_vertex(e.target);
  if (!gone) throw DomainError("edge '" + e.id + "' has unknown target");
  keep->genus += gone->genus;
  keep->degree += gone->degree;
  out.vertices.erase(out.vertices.begin() + (gone - out.vertices.data()));
  auto redirect = [&](std::string& v) {
    if (v == e.target) v = e.source;
  };
  for (auto& other : out.edges) {
    redirect(other.source);
    redirect(other.target);
  }
  for (auto& v : out.pos_markings) redirect(v);
  for (auto& v : out.neg_markings) redirect(v);
  return out;
}

DirectedModularGraph glue(const DirectedModularGraph& g) {
  if (g.pos_markings.empty() || g.neg_markings.empty()) {
    throw DomainError("glue needs at least one positive and one negative marking");
  }
  DirectedModularGraph out = g;
  out.edges.push_back({fresh_edge_id(g), g.pos_markings.back(), g.neg_markings.back()});
  out.pos_markings.pop_back();
  out.neg_markings.pop_back();
  return out;
}

DirectedModularGraph flip_neg_to_pos(const DirectedModularGraph& g) {
  if (g.neg_markings.empty()) throw DomainError("flip_neg_to_pos needs a negative marking");
  DirectedModularGraph out = g;
  const std::string v = out.neg_markings.back();
  out.neg_markings.pop_back();
  out.pos_markings.push_back(v);
  Vertex* vert = out.find_vertex(v);
  if (!vert) throw DomainError("negative marking lands on unknown vertex '" + v + "'");
  vert->degree -= 1;
  return out;
}

DirectedModularGraph flip_pos_to_neg(const DirectedModularGraph& g) {
  if (g.pos_markings.empty()) throw DomainError("flip_pos_to_neg needs a positive marking");
  DirectedModularGraph out = g;
  out.neg_markings.push_back(out.pos_markings.back());
  out.pos_markings.pop_back();
  return out;
}

namespace {

// Integer form of a graph for the isomorphism search.
struct Indexed {
  std::size_t n = 0;
  std::vector<std::int64_t> genus, degree;
  std::vector<std::vector<int>> mult;  // mult[s][t] = number of edges s -> t
  std::vector<std::size_t> pos, neg;
  std::vector<std::vector<std::int64_t>> signature;
};

Indexed index_graph(const DirectedModularGraph& g) {
  Indexed x;
  x.n = g.vertices.size();
  std::map<std::string, std::size_t> at;
  for (const auto& v : g.vertices) {
    at.emplace(v.id, x.genus.size());
    x.genus.push_back(v.genus);
    x.degree.push_back(v.degree);
  }
  x.mult.assign(x.n, std::vector<int>(x.n, 0));
  for (const auto& e : g.edges) ++x.mult[at.at(e.source)][at.at(e.target)];
  for (const auto& v : g.pos_markings) x.pos.push_back(at.at(v));
  for (const auto& v : g.neg_markings) x.neg.push_back(at.at(v));

  const Valences val = valences(g);
  for (std::size_t i = 0; i < x.n; ++i) {
    const Valence& vi = val.at(g.vertices[i].id);
    x.signature.push_back({x.genus[i], x.degree[i], vi.in, vi.out, x.mult[i][i]});
  }
  return x;
}

}  // namespace

bool isomorphic(const DirectedModularGraph& a, const DirectedModularGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.pos_markings.size() != b.pos_markings.size() ||
      a.neg_markings.size() != b.neg_markings.size()) {
    return false;
  }
  if (!validate(a).empty() || !validate(b).empty()) return false;
  const Indexed x = index_graph(a);
  const Indexed y = index_graph(b);
  const std::size_t n = x.n;

  std::vector<long> phi(n, -1);
  std::vector<bool> used(n, false);
  auto assign = [&](std::size_t i, std::size_t j) {
    if (phi[i] >= 0) return static_cast<std::size_t>(phi[i]) == j;
    if (used[j] || x.signature[i] != y.signature[j]) return false;
    phi[i] = static_cast<long>(j);
    used[j] = true;
    return true;
  };
  // Markings are ordered, so they pin down part of the bijection up front.
  for (std::size_t k = 0; k < x.pos.size(); ++k) {
    if (!assign(x.pos[k], y.pos[k])) return false;
  }
  for (std::size_t k = 0; k < x.neg.size(); ++k) {
    if (!assign(x.neg[k], y.neg[k])) return false;
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (phi[i] >= 0) order.insert(order.begin(), i);
    else order.push_back(i);
  }
  auto consistent = [&](std::size_t depth) {
    const std::size_t i = order[depth];
    for (std::size_t k = 0; k <= depth; ++k) {
      const std::size_t j = order[k];
      const auto pi = static_cast<std::size_t>(phi[i]);
      const auto pj = static_cast<std::size_t>(phi[j]);
      if (x.mult[i][j] != y.mult[pi][pj] || x.mult[j][i] != y.mult[pj][pi]) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t i = order[depth];
    if (phi[i] >= 0) return consistent(depth) && search(depth + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || x.signature[i] != y.signature[j]) continue;
      phi[i] = static_cast<long>(j);
      used[j] = true;
      if (consistent(depth) && search(depth + 1)) return true;
      phi[i] = -1;
      used[j] = false;
    }
    return false;
  };
  return search(0);
}

DirectedModularGraph random_graph(std::mt19937_64& rng, int max_vertices) {
  if (max_vertices < 1) throw DomainError("random_graph needs at least one vertex");
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  DirectedModularGraph g;
  const int nv = pick(1, max_vertices);
  for (int i = 0; i < nv; ++i) g.vertices.push_back({"v" + std::to_string(i), pick(0, 3), pick(-5, 5)});
  auto any_vertex = [&] { return g.vertices[static_cast<std::size_t>(pick(0, nv - 1))].id; };
  const int ne = pick(0, nv + 3);
  for (int i = 0; i < ne; ++i) g.edges.push_back({"e" + std::to_string(i), any_vertex(), any_vertex()});
  const int np = pick(0, 3);
  for (int i = 0; i < np; ++i) g.pos_markings.push_back(any_vertex());
  const int nn = pick(0, 3);
  for (int i = 0; i < nn; ++i) g.neg_markings.push_back(any_vertex());
  return g;
}

}  // namespace theta
