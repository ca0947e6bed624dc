#pragma once

#include <cstdint>
#include <optional>

#include "skewdg/serialize.hpp"

namespace skewdg {

struct Report {
  Json body;
  bool consistent = true;
};

// Cross-checked bundle: classification, brute-force and presented cohomology,
// probe, resolution with verification, Ext and its Frobenius verdict.
Report build_report(const Mat& m, unsigned max_degree, const std::optional<Mat>& compare, std::uint64_t seed = 0);

}  // namespace skewdg
