#pragma once

#include <cstddef>
#include <vector>

#include "msslab/universe.hpp"

namespace msslab {

/// A nonempty list of distinct, nonempty clusters. Clusters may overlap and
/// need not cover the universe.
class Clustering {
 public:
  /// Throws StructuralError on an empty list, an empty cluster, a duplicate
  /// cluster or a universe mismatch.
  Clustering(std::size_t universe_size, std::vector<Subset> clusters);

  std::size_t universe_size() const noexcept { return size_; }
  const std::vector<Subset>& clusters() const noexcept { return clusters_; }
  std::size_t size() const noexcept { return clusters_.size(); }
  bool contains(const Subset& s) const;

 private:
  std::size_t size_;
  std::vector<Subset> clusters_;
};

}  // namespace msslab
