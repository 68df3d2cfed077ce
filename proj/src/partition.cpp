#include "qwalk/partition.hpp"

#include <algorithm>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

Partition::Partition(Index dim, std::vector<Block> blocks) : dim_(dim), blocks_(std::move(blocks)) {
  std::vector<int> seen(static_cast<std::size_t>(dim), 0);
  for (auto& b : blocks_) {
    if (b.indices.empty()) throw StructuralError("partition block '" + b.label + "' is empty");
    std::sort(b.indices.begin(), b.indices.end());
    for (auto i : b.indices) {
      if (i < 0 || i >= dim) throw StructuralError("partition block '" + b.label + "' index out of range");
      if (seen[static_cast<std::size_t>(i)]++ != 0)
        throw StructuralError("partition blocks overlap at index " + std::to_string(i));
    }
  }
  for (Index i = 0; i < dim; ++i)
    if (seen[static_cast<std::size_t>(i)] == 0)
      throw StructuralError("partition does not cover index " + std::to_string(i));
}

Partition Partition::contiguous(const std::vector<std::string>& labels, const std::vector<Index>& sizes) {
  if (labels.size() != sizes.size()) throw DimensionError("partition: labels and sizes differ in length");
  std::vector<Block> blocks;
  Index offset = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (sizes[k] < 1) throw StructuralError("partition block '" + labels[k] + "' has size < 1");
    Block b{labels[k], {}};
    for (Index i = 0; i < sizes[k]; ++i) b.indices.push_back(offset + i);
    offset += sizes[k];
    blocks.push_back(std::move(b));
  }
  return Partition(offset, std::move(blocks));
}

Partition Partition::singletons(Index dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (Index i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return contiguous(labels, std::vector<Index>(static_cast<std::size_t>(dim), 1));
}

Partition Partition::by_origin(const Graph& g) {
  std::vector<Block> blocks;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Block b{g.vertex_name(v), {}};
    for (auto e : g.out_arcs(v)) b.indices.push_back(static_cast<Index>(e));
    blocks.push_back(std::move(b));
  }
  return Partition(static_cast<Index>(g.num_arcs()), std::move(blocks));
}

std::optional<std::size_t> Partition::find(const std::string& label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].label == label) return i;
  return std::nullopt;
}

std::vector<std::string> Partition::labels() const {
  std::vector<std::string> out;
  for (const auto& b : blocks_) out.push_back(b.label);
  return out;
}

std::vector<double> Partition::measure(const Vector& psi) const {
  if (psi.size() != dim_) throw DimensionError("partition: state dimension mismatch");
  std::vector<double> nu(blocks_.size(), 0.0);
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (auto i : blocks_[k].indices) nu[k] += std::norm(psi(i));
  return nu;
}

Operator Partition::block_projector(std::size_t i) const {
  Operator p = Operator::Zero(dim_, dim_);
  for (auto k : blocks_.at(i).indices) p(k, k) = 1.0;
  return p;
}

Operator Partition::sub_block(const Operator& w, std::size_t u, std::size_t v) const {
  if (w.rows() != dim_ || w.cols() != dim_) throw DimensionError("partition: operator dimension mismatch");
  const auto& rows = blocks_.at(u).indices;
  const auto& cols = blocks_.at(v).indices;
  Operator out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out(static_cast<Index>(r), static_cast<Index>(c)) = w(rows[r], cols[c]);
  return out;
}

}  // namespace qwalk
