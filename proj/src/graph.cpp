#include "qwalk/graph.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "qwalk/errors.hpp"

namespace qwalk {

Graph::Graph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  out_arcs_.resize(names_.size());
  arcs_.reserve(2 * edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.u >= names_.size() || e.v >= names_.size()) {
      std::ostringstream msg;
      msg << "edge " << k << " references vertex outside 0.." << names_.size();
      throw StructuralError(msg.str());
    }
    const std::size_t f = 2 * k;
    const std::size_t b = 2 * k + 1;
    arcs_.push_back({f, e.u, e.v, b, k, true});
    arcs_.push_back({b, e.v, e.u, f, k, false});
    out_arcs_[e.u].push_back(f);
    out_arcs_[e.v].push_back(b);
  }
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (out_arcs_[v].empty()) throw StructuralError("isolated vertex '" + names_[v] + "'");
  }
}

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const {
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

std::string Graph::arc_label(std::size_t id) const {
  const auto& a = arcs_.at(id);
  return std::to_string(a.edge) + (a.forward ? ":f" : ":b");
}

std::optional<std::size_t> Graph::parse_arc_label(const std::string& label) const {
  const auto colon = label.find(':');
  if (colon == std::string::npos || colon + 2 != label.size()) return std::nullopt;
  const char dir = label.back();
  if (dir != 'f' && dir != 'b') return std::nullopt;
  std::size_t edge = 0;
  try {
    std::size_t used = 0;
    edge = std::stoul(label.substr(0, colon), &used);
    if (used != colon) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (edge >= edges_.size()) return std::nullopt;
  return 2 * edge + (dir == 'f' ? 0 : 1);
}

namespace {

std::vector<std::string> numbered_vertices(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

struct Builder {
  Graph operator()(const CycleSpec& s) const {
    if (s.n < 3) throw DomainError("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < s.n; ++i)
      edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % s.n)});
    return Graph(numbered_vertices(s.n), std::move(edges));
  }

  Graph operator()(const CompleteSpec& s) const {
    if (s.n < 2) throw DomainError("complete graph requires n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < s.n; ++i)
      for (int j = i + 1; j < s.n; ++j)
        edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
    return Graph(numbered_vertices(s.n), std::move(edges));
  }

  Graph operator()(const PathWithLoopsSpec& s) const {
    if (s.n < 2) throw DomainError("path with loops requires n >= 2");
    const auto last = static_cast<std::size_t>(s.n - 1);
    std::vector<Edge> edges{{0, 0}};
    for (std::size_t i = 0; i < last; ++i) edges.push_back({i, i + 1});
    edges.push_back({last, last});
    return Graph(numbered_vertices(s.n), std::move(edges));
  }

  Graph operator()(const EdgeListSpec& s) const {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < s.vertices.size(); ++v) {
      if (!index.emplace(s.vertices[v], v).second)
        throw StructuralError("duplicate vertex id '" + s.vertices[v] + "'");
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : s.edges) {
      const auto iu = index.find(u);
      const auto iv = index.find(v);
      if (iu == index.end()) throw StructuralError("dangling vertex id '" + u + "'");
      if (iv == index.end()) throw StructuralError("dangling vertex id '" + v + "'");
      edges.push_back({iu->second, iv->second});
    }
    return Graph(s.vertices, std::move(edges));
  }
};

}  // namespace

Graph build_graph(const GraphSpec& spec) { return std::visit(Builder{}, spec); }

OneForm OneForm::zero(const Graph& g) { return OneForm(std::vector<double>(g.num_arcs(), 0.0)); }

OneForm OneForm::constant(const Graph& g, double value) {
  return from_edges(g, std::vector<double>(g.num_edges(), value));
}

OneForm OneForm::from_edges(const Graph& g, const std::vector<double>& edge_values) {
  if (edge_values.size() != g.num_edges())
    throw DimensionError("one-form needs one value per edge");
  std::vector<double> v(g.num_arcs());
  for (const auto& a : g.arcs()) v[a.id] = a.forward ? edge_values[a.edge] : -edge_values[a.edge];
  return OneForm(std::move(v));
}

OneForm OneForm::from_arcs(std::vector<double> arc_values) { return OneForm(std::move(arc_values)); }

Weight grover_weight(const Graph& g) {
  std::vector<Complex> w(g.num_arcs());
  for (const auto& a : g.arcs())
    w[a.id] = Complex(1.0 / std::sqrt(static_cast<double>(g.degree(a.origin))), 0.0);
  return Weight(std::move(w));
}

ValidationReport validate_structures(const Graph& g, const Weight* w, const OneForm* theta) {
  ValidationReport report;
  const auto& arcs = g.arcs();
  for (const auto& a : arcs) {
    const auto where = "arc " + g.arc_label(a.id);
    if (a.inverse >= arcs.size() || a.inverse == a.id || arcs[a.inverse].inverse != a.id) {
      report.add("arc-involution", where, 1.0);
      continue;
    }
    const auto& inv = arcs[a.inverse];
    if (inv.origin != a.terminal || inv.terminal != a.origin) report.add("arc-endpoints", where, 1.0);
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) report.add("isolated-vertex", g.vertex_name(v), 1.0);

  if (w != nullptr) {
    if (w->size() != g.num_arcs()) {
      report.add("weight-size", "weight", std::abs(double(w->size()) - double(g.num_arcs())));
    } else {
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        double total = 0.0;
        for (auto e : g.out_arcs(v)) {
          if ((*w)[e] == Complex(0.0, 0.0)) report.add("weight-nonzero", "arc " + g.arc_label(e), 0.0);
          total += std::norm((*w)[e]);
        }
        const double dev = std::abs(total - 1.0);
        report.expect_le("weight-normalization", "vertex " + g.vertex_name(v), dev,
                         1e-12 * static_cast<double>(g.degree(v)));
      }
    }
  }

  if (theta != nullptr) {
    if (theta->size() != g.num_arcs()) {
      report.add("one-form-size", "one-form",
                 std::abs(double(theta->size()) - double(g.num_arcs())));
    } else {
      for (const auto& a : arcs) {
        if (!a.forward) continue;
        const double dev = std::abs((*theta)[a.id] + (*theta)[a.inverse]);
        if (dev != 0.0) report.add("one-form-antisymmetry", "edge " + std::to_string(a.edge), dev);
      }
    }
  }
  return report;
}

}  // namespace qwalk
