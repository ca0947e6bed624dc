#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skewdg/classifier.hpp"
#include "skewdg/dg_core.hpp"
#include "skewdg/frob_algebra.hpp"

namespace skewdg {

struct SemifreeResolution {
  std::size_t size = 0;
  // d[j][l]: coefficient of e_l in the differential of e_j
  std::vector<std::vector<SkewElement>> d;
  Mat base;  // the matrix whose DG algebra carries the entries
  std::string subcase;
  std::vector<std::pair<std::string, SkewElement>> named;
  bool iso_over_closure = false;
  std::string note;
};

struct InfinitePattern {
  Vec relation;  // (t1, t2, t3) with t1*t2 = t3^2
  std::vector<std::pair<std::string, SkewElement>> named;  // y1, y2
  std::optional<std::vector<std::string>> truncation;
};

struct UnsupportedCase {
  std::string reason;
};

using BuildResult = std::variant<SemifreeResolution, InfinitePattern, UnsupportedCase>;

BuildResult build_resolution(const Mat& m, unsigned truncate = 8);

// Rows given as element strings, e.g. {{}, {"x2"}, {"x3"}, {"x1", "x2"}}.
SemifreeResolution resolution_from_rows(const Mat& base, const std::vector<std::vector<std::string>>& rows,
                                        const std::string& label);

// The six rank-1 representatives. representative_resolution is verified exact;
// displayed_resolution returns the printed differential, which for i = 2..5 leaves
// H^1(F) nonzero.
Mat representative_matrix(int i);
SemifreeResolution representative_resolution(int i);
SemifreeResolution displayed_resolution(int i);

// Adds basis elements killing H^1(F) one cocycle at a time, starting from F = A.
// Unsupported when max_size is exceeded.
SemifreeResolution minimal_resolution(const DgSpec& spec, std::size_t max_size = 16);

struct VerifyRecord {
  bool minimal = true;
  bool square_zero = true;
  bool exact = true;
  std::vector<std::size_t> homology;  // dim H^i(F), i = 0..dmax-1
  std::string failure;
  bool ok() const { return minimal && square_zero && exact; }
};

VerifyRecord verify_resolution(const DgSpec& spec, const SemifreeResolution& res, unsigned dmax);

FinAlg ext_algebra(const SemifreeResolution& res);

}  // namespace skewdg
