#include "draim/participation.hpp"

#include <algorithm>

#include "draim/errors.hpp"
#include "draim/scenario.hpp"

namespace draim {

ParticipationSet::ParticipationSet(std::size_t universe, std::span<const std::size_t> members)
    : mask_(universe, 0) {
  for (std::size_t i : members) insert(i);
}

ParticipationSet ParticipationSet::full(std::size_t universe) {
  ParticipationSet set(universe);
  std::fill(set.mask_.begin(), set.mask_.end(), 1);
  set.count_ = universe;
  return set;
}

ParticipationSet ParticipationSet::from_ids(const Scenario& s, std::span<const std::string> ids) {
  ParticipationSet set(s.vehicle_count());
  for (const std::string& id : ids) set.insert(s.vehicle_index(id));
  return set;
}

void ParticipationSet::insert(std::size_t i) {
  if (i >= mask_.size()) throw ValidationError("unknown vehicle index " + std::to_string(i));
  if (!mask_[i]) {
    mask_[i] = 1;
    ++count_;
  }
}

void ParticipationSet::erase(std::size_t i) {
  if (i >= mask_.size()) throw ValidationError("unknown vehicle index " + std::to_string(i));
  if (mask_[i]) {
    mask_[i] = 0;
    --count_;
  }
}

std::vector<std::size_t> ParticipationSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::string> ParticipationSet::ids(const Scenario& s) const {
  std::vector<std::string> out;
  out.reserve(count_);
  for (std::size_t i : indices()) out.push_back(s.vehicles().at(i).id);
  return out;
}

bool ParticipationSet::is_subset_of(const ParticipationSet& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.contains(i)) return false;
  }
  return true;
}

bool canonical_less(const ParticipationSet& a, const ParticipationSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace draim
