#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewdg/exact_linalg.hpp"
#include "skewdg/skew_algebra.hpp"

namespace skewdg {

struct DgSpec {
  std::size_t n = 0;
  Mat m;

  DgSpec() = default;
  explicit DgSpec(Mat matrix);
};

SkewElement differential(const DgSpec& spec, const SkewElement& u);
SkewElement differential(const DgSpec& spec, const SkewMonomial& a);

// Matrix of d^d : A^d -> A^{d+1}; shape dim A^{d+1} x dim A^d, acting on
// coefficient columns in graded_basis order.
Mat boundary_matrix(const DgSpec& spec, unsigned d);

struct H2Data {
  std::vector<SkewElement> cocycle_reps;
  std::vector<SkewElement> coboundary_basis;
};

struct CohomologyReport {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> boundary_ranks;  // rank of d^d for d = 0..dmax
  std::vector<SkewElement> h1_basis;
  H2Data h2;
};

CohomologyReport cohomology(const DgSpec& spec, unsigned dmax);
// Cohomology dimensions only; skips representatives.
std::vector<std::size_t> cohomology_dims(const DgSpec& spec, unsigned dmax);

// Kernel of M^T as degree-1 cocycles, in rref-pivot order.
std::vector<SkewElement> h1_basis(const DgSpec& spec);

struct CupKernel {
  std::size_t h1_dim = 0;
  std::vector<SkewElement> h1_basis;
  // Each relation has h1_dim^2 coordinates; index a*h1_dim + b is y_a y_b.
  std::vector<Vec> relations;
  std::size_t new_h2_generators = 0;
};

CupKernel cup_kernel(const DgSpec& spec);

enum class ProbeVerdict { CalabiYau, NotSmooth };

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::CalabiYau;
  std::string branch;
  std::optional<Vec> relation;  // (t1, t2, t3) when a single relation was examined
  std::size_t h1_dim = 0;
  std::size_t relation_count = 0;
};

ProbeResult cy_probe(const DgSpec& spec);

struct DifferentialCheck {
  bool square_zero = true;
  bool leibniz = true;
  std::string failure;
};

// d^2 = 0 on every basis monomial up to dmax and Leibniz on sampled pairs.
DifferentialCheck check_differential(const DgSpec& spec, unsigned dmax, std::uint64_t seed, unsigned samples);

}  // namespace skewdg
