#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwalk/linop.hpp"

namespace qwalk {

class Graph;

struct Block {
  std::string label;
  std::vector<Index> indices;  // ascending basis indices spanning H_label
};

/// Orthogonal decomposition H = (+)_x H_x into coordinate blocks. Blocks are
/// nonempty, pairwise disjoint and cover 0..dim-1; a block need not be a
/// contiguous index range.
class Partition {
 public:
  Partition(Index dim, std::vector<Block> blocks);

  static Partition contiguous(const std::vector<std::string>& labels, const std::vector<Index>& sizes);
  static Partition singletons(Index dim, const std::string& prefix = "h");
  /// H_v = span{delta_e : o(e) = v}.
  static Partition by_origin(const Graph& g);

  Index dim() const { return dim_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::vector<std::string> labels() const;

  /// ||P_x psi||^2 for every block x, in block order.
  std::vector<double> measure(const Vector& psi) const;
  Operator block_projector(std::size_t i) const;
  /// Rows of block u, columns of block v.
  Operator sub_block(const Operator& w, std::size_t u, std::size_t v) const;

 private:
  Index dim_;
  std::vector<Block> blocks_;
};

}  // namespace qwalk
