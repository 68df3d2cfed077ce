#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/validation.hpp"

namespace qwalk {

using Complex = std::complex<double>;

struct Arc {
  std::size_t id = 0;
  std::size_t origin = 0;
  std::size_t terminal = 0;
  std::size_t inverse = 0;
  std::size_t edge = 0;   // index of the undirected edge this arc orients
  bool forward = true;    // true for (u -> v) of edge {u, v} as inserted
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
};

/// Finite symmetric digraph. Every undirected edge {u, v} (loops and
/// multi-edges allowed) contributes the arc pair (u->v, v->u) at ids
/// 2k and 2k+1, so arc ids are contiguous and define the basis of l2(D).
class Graph {
 public:
  Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
  std::optional<std::size_t> find_vertex(const std::string& name) const;

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t id) const { return arcs_.at(id); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(std::size_t v) const { return out_arcs_.at(v).size(); }
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_arcs_.at(v); }

  // "edgeIndex:f" / "edgeIndex:b".
  std::string arc_label(std::size_t id) const;
  std::optional<std::size_t> parse_arc_label(const std::string& label) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_arcs_;
};

struct CycleSpec {
  int n = 3;
};
struct CompleteSpec {
  int n = 2;
};
// Path on n vertices with a loop attached at each end vertex.
struct PathWithLoopsSpec {
  int n = 2;
};
struct EdgeListSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

using GraphSpec = std::variant<CycleSpec, CompleteSpec, PathWithLoopsSpec, EdgeListSpec>;

/// Throws StructuralError for dangling vertex ids or isolated vertices and
/// DomainError when a size parameter is below its minimum.
Graph build_graph(const GraphSpec& spec);

/// Arc weights w(e). Stored as complex even when real.
class Weight {
 public:
  explicit Weight(std::vector<Complex> values) : values_(std::move(values)) {}
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t arc) const { return values_.at(arc); }
  Complex& operator[](std::size_t arc) { return values_.at(arc); }
  const std::vector<Complex>& values() const { return values_; }

 private:
  std::vector<Complex> values_;
};

/// Real 1-form on arcs. from_edges() enforces theta(inv e) = -theta(e);
/// from_arcs() accepts raw per-arc values so broken forms can be validated.
class OneForm {
 public:
  static OneForm zero(const Graph& g);
  static OneForm constant(const Graph& g, double value);
  static OneForm from_edges(const Graph& g, const std::vector<double>& edge_values);
  static OneForm from_arcs(std::vector<double> arc_values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t arc) const { return values_.at(arc); }
  const std::vector<double>& values() const { return values_; }

 private:
  explicit OneForm(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

Weight grover_weight(const Graph& g);

/// Checks graph structure, weight normalization and 1-form antisymmetry.
/// Rule ids: "arc-involution", "arc-endpoints", "isolated-vertex",
/// "weight-size", "weight-nonzero", "weight-normalization",
/// "one-form-size", "one-form-antisymmetry".
ValidationReport validate_structures(const Graph& g, const Weight* w = nullptr,
                                     const OneForm* theta = nullptr);

}  // namespace qwalk
