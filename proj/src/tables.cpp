#include "tables.hpp"

#include <string>

#include "error.hpp"

namespace wkl {

PredicateTable::PredicateTable(
    std::set<std::pair<uint32_t, uint32_t>> true_pairs, uint32_t m_horizon,
    uint32_t i_horizon)
    : true_pairs_(std::move(true_pairs)),
      m_horizon_(m_horizon),
      i_horizon_(i_horizon) {
  for (const auto& [m, i] : true_pairs_) {
    if (m >= m_horizon_ || i >= i_horizon_) {
      fail(ErrorKind::kParse, "pair-outside-horizon: " + std::to_string(m) +
                                  " " + std::to_string(i));
    }
  }
}

uint32_t PredicateTable::stabilization_bound() const {
  uint32_t max_m = 0;
  for (const auto& [m, i] : true_pairs_) max_m = std::max(max_m, m);
  return max_m + 1;
}

FunctionTable::FunctionTable(std::map<uint32_t, uint32_t> values,
                             uint32_t domain_horizon,
                             std::optional<uint32_t> range_bound)
    : values_(std::move(values)),
      domain_horizon_(domain_horizon),
      range_bound_(range_bound) {
  for (uint32_t x = 0; x < domain_horizon_; ++x) {
    if (!values_.count(x)) {
      fail(ErrorKind::kParse, "function-not-total: x=" + std::to_string(x));
    }
  }
  for (const auto& [x, v] : values_) {
    if (x >= domain_horizon_) {
      fail(ErrorKind::kParse,
           "value-outside-domain: x=" + std::to_string(x));
    }
    if (range_bound_ && v >= *range_bound_) {
      fail(ErrorKind::kParse, "value-outside-range: f(" + std::to_string(x) +
                                  ")=" + std::to_string(v));
    }
  }
}

uint32_t FunctionTable::at(uint32_t x) const {
  auto it = values_.find(x);
  if (it == values_.end()) {
    fail(ErrorKind::kUsage, "function-undefined: x=" + std::to_string(x));
  }
  return it->second;
}

}  // namespace wkl
