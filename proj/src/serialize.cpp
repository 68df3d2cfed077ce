#include "qwalk/serialize.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

json operator_to_json(const Operator& a) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json rr = json::array();
    json ri = json::array();
    for (Index j = 0; j < a.cols(); ++j) {
      rr.push_back(a(i, j).real());
      ri.push_back(a(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Operator operator_from_json(const json& j) {
  const auto rows = j.at("rows").get<Index>();
  const auto cols = j.at("cols").get<Index>();
  if (rows < 0 || cols < 0) throw DimensionError("operator: negative dimension");
  const auto& re = j.at("re");
  const bool has_im = j.contains("im");
  if (static_cast<Index>(re.size()) != rows || (has_im && static_cast<Index>(j.at("im").size()) != rows))
    throw DimensionError("operator: row count does not match 'rows'");
  Operator a(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& rr = re.at(static_cast<std::size_t>(i));
    if (static_cast<Index>(rr.size()) != cols) throw DimensionError("operator: column count does not match 'cols'");
    for (Index c = 0; c < cols; ++c) {
      const double x = rr.at(static_cast<std::size_t>(c)).get<double>();
      const double y = has_im ? j["im"].at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(c)).get<double>() : 0.0;
      if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("operator: non-finite entry");
      a(i, c) = Complex(x, y);
    }
  }
  return a;
}

GraphDocument graph_from_json(const json& j) {
  EdgeListSpec spec;
  for (const auto& v : j.at("vertices")) spec.vertices.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges")) spec.edges.emplace_back(e.at("u").get<std::string>(), e.at("v").get<std::string>());
  GraphDocument doc{build_graph(spec), std::nullopt, std::nullopt};
  const Graph& g = doc.graph;

  if (j.contains("weights")) {
    std::vector<Complex> w(g.num_arcs(), Complex(0.0, 0.0));
    std::vector<bool> set(g.num_arcs(), false);
    for (const auto& [key, value] : j.at("weights").items()) {
      const auto arc = g.parse_arc_label(key);
      if (!arc) throw StructuralError("weights: unknown arc id '" + key + "'");
      w[*arc] = Complex(value.at(0).get<double>(), value.at(1).get<double>());
      set[*arc] = true;
    }
    for (std::size_t a = 0; a < set.size(); ++a)
      if (!set[a]) throw StructuralError("weights: missing arc " + g.arc_label(a));
    doc.weight = Weight(std::move(w));
  }
  if (j.contains("one_form")) {
    std::vector<double> per_edge(g.num_edges(), 0.0);
    for (const auto& [key, value] : j.at("one_form").items()) {
      std::size_t used = 0;
      std::size_t edge = 0;
      try {
        edge = std::stoul(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || edge >= g.num_edges()) throw StructuralError("one_form: unknown edge index '" + key + "'");
      per_edge[edge] = value.get<double>();
    }
    doc.one_form = OneForm::from_edges(g, per_edge);
  }
  return doc;
}

json graph_to_json(const Graph& g, const Weight* w, const OneForm* theta) {
  json j;
  j["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", g.vertex_name(e.u)}, {"v", g.vertex_name(e.v)}});
  j["edges"] = std::move(edges);
  if (w != nullptr) {
    json wj = json::object();
    for (const auto& a : g.arcs()) wj[g.arc_label(a.id)] = {(*w)[a.id].real(), (*w)[a.id].imag()};
    j["weights"] = std::move(wj);
  }
  if (theta != nullptr) {
    json tj = json::object();
    for (const auto& a : g.arcs())
      if (a.forward) tj[std::to_string(a.edge)] = (*theta)[a.id];
    j["one_form"] = std::move(tj);
  }
  return j;
}

json report_to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations()) v.push_back({{"rule", x.rule}, {"location", x.location}, {"magnitude", x.magnitude}});
  return {{"passed", r.passed()}, {"violations", std::move(v)}};
}

json walk_to_json(const WalkInstance& inst, bool derived) {
  json j;
  j["dim_H"] = inst.dim_H();
  j["dim_K"] = inst.dim_K();
  if (inst.graph()) j["graph"] = graph_to_json(*inst.graph());
  j["d_A"] = operator_to_json(inst.d_A());
  j["S"] = operator_to_json(inst.S());
  if (derived) {
    j["C"] = operator_to_json(inst.C());
    j["U"] = operator_to_json(inst.U());
    j["T"] = operator_to_json(inst.T());
  }
  return j;
}

json generator_to_json(const GeneratorDecomposition& gen) {
  json dims = json::object();
  json spectra = json::object();
  for (const auto& b : gen.blocks) {
    dims[to_string(b.kind)] = b.basis.cols();
    spectra[to_string(b.kind)] = std::vector<double>(b.spectrum.data(), b.spectrum.data() + b.spectrum.size());
  }
  return {{"H", operator_to_json(gen.H)}, {"block_dims", std::move(dims)}, {"block_spectra", std::move(spectra)}};
}

json digraph_to_json(const Digraph& d) {
  json arcs = json::array();
  for (const auto& [from, to] : d.arcs) arcs.push_back({{"from", d.vertices[from]}, {"to", d.vertices[to]}});
  return {{"vertices", d.vertices}, {"arcs", std::move(arcs)}};
}

json localization_to_json(const LocalizationReport& rep) {
  json limit = json::object();
  json window_max = json::object();
  for (std::size_t x = 0; x < rep.labels.size(); ++x) {
    limit[rep.labels[x]] = rep.limit[x];
    window_max[rep.labels[x]] = rep.window_max[x];
  }
  return {{"limit_distribution", std::move(limit)},
          {"certified_lower_bound", rep.certified_lower_bound},
          {"argmax", rep.argmax_label},
          {"point_spectrum_overlap", rep.point_spectrum_overlap},
          {"sigma_p_T_nonempty", rep.sigma_p_T_nonempty},
          {"d_perp_nonempty", rep.d_perp_nonempty},
          {"dim_d_perp", rep.dim_d_perp},
          {"localizes", rep.localizes},
          {"window", {rep.window.first, rep.window.second}},
          {"window_max_estimate", std::move(window_max)}};
}

}  // namespace qwalk
