#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace draim {

class Scenario;

// Subset of a scenario's vehicles, stored as a membership mask over vehicle
// indices. The universe size is fixed at construction.
class ParticipationSet {
 public:
  ParticipationSet() = default;
  explicit ParticipationSet(std::size_t universe) : mask_(universe, 0) {}
  ParticipationSet(std::size_t universe, std::span<const std::size_t> members);

  static ParticipationSet empty(std::size_t universe) { return ParticipationSet(universe); }
  static ParticipationSet full(std::size_t universe);
  // Throws ValidationError for ids the scenario does not know.
  static ParticipationSet from_ids(const Scenario& s, std::span<const std::string> ids);

  std::size_t universe() const { return mask_.size(); }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(std::size_t i) const { return i < mask_.size() && mask_[i] != 0; }

  void insert(std::size_t i);
  void erase(std::size_t i);

  // Ascending vehicle indices.
  std::vector<std::size_t> indices() const;
  std::vector<std::string> ids(const Scenario& s) const;

  bool is_subset_of(const ParticipationSet& other) const;

  bool operator==(const ParticipationSet& o) const { return mask_ == o.mask_; }

 private:
  std::vector<char> mask_;
  std::size_t count_ = 0;
};

// Canonical order: by cardinality, then lexicographically by ascending index
// sequence.
bool canonical_less(const ParticipationSet& a, const ParticipationSet& b);

}  // namespace draim
