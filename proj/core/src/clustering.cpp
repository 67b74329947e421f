#include "msslab/clustering.hpp"

#include <algorithm>
#include <string>

namespace msslab {

Clustering::Clustering(std::size_t universe_size, std::vector<Subset> clusters)
    : size_(universe_size), clusters_(std::move(clusters)) {
  if (clusters_.empty()) throw StructuralError("a clustering needs at least one cluster");
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    if (clusters_[i].universe_size() != size_) {
      throw StructuralError("cluster " + std::to_string(i) + " is over a different universe");
    }
    if (clusters_[i].is_empty()) throw StructuralError("cluster " + std::to_string(i) + " is empty");
    if (std::find(clusters_.begin(), clusters_.begin() + static_cast<std::ptrdiff_t>(i), clusters_[i]) !=
        clusters_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw StructuralError("cluster " + std::to_string(i) + " duplicates an earlier cluster");
    }
  }
}

bool Clustering::contains(const Subset& s) const {
  return std::find(clusters_.begin(), clusters_.end(), s) != clusters_.end();
}

}  // namespace msslab
