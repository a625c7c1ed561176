#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace wkl {

// Finite table for a decidable predicate theta(m, i). Pairs outside the
// horizons are rejected at construction; queries outside read as false.
class PredicateTable {
 public:
  PredicateTable(std::set<std::pair<uint32_t, uint32_t>> true_pairs,
                 uint32_t m_horizon, uint32_t i_horizon);

  bool holds(uint32_t m, uint32_t i) const {
    return true_pairs_.count({m, i}) != 0;
  }

  uint32_t m_horizon() const { return m_horizon_; }
  uint32_t i_horizon() const { return i_horizon_; }
  const std::set<std::pair<uint32_t, uint32_t>>& true_pairs() const {
    return true_pairs_;
  }

  // Least stage from which the characteristic string no longer changes:
  // one past the largest m appearing in the table.
  uint32_t stabilization_bound() const;

 private:
  std::set<std::pair<uint32_t, uint32_t>> true_pairs_;
  uint32_t m_horizon_;
  uint32_t i_horizon_;
};

// Finite table for a total function on [0, domain_horizon). A bounded
// range models h : N -> b; an unbounded range models the f of the
// very-smallness check.
class FunctionTable {
 public:
  FunctionTable(std::map<uint32_t, uint32_t> values, uint32_t domain_horizon,
                std::optional<uint32_t> range_bound);

  uint32_t at(uint32_t x) const;
  bool defined(uint32_t x) const { return values_.count(x) != 0; }

  uint32_t domain_horizon() const { return domain_horizon_; }
  std::optional<uint32_t> range_bound() const { return range_bound_; }
  const std::map<uint32_t, uint32_t>& values() const { return values_; }

 private:
  std::map<uint32_t, uint32_t> values_;
  uint32_t domain_horizon_;
  std::optional<uint32_t> range_bound_;
};

}  // namespace wkl
