#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewdg/exact_linalg.hpp"
#include "skewdg/qpl_action.hpp"

namespace skewdg {

enum class Branch { Rank3, Rank2Nondeg, Rank2Degenerate, Rank1, Rank0 };
enum class Subcase { S1_1, S1_2_1, S1_2_2, S1_2_3, S1_2_4, S1_3_1, S1_3_2 };

std::string branch_name(Branch b);
std::string subcase_name(Subcase s);
// Size of the minimal resolution (= Ext dimension) for each subcase.
std::size_t subcase_length(Subcase s);

struct Rank1Params {
  Scalar m11, m12, m13, l1, l2;
  int cohomology_case = 0;  // 4..9
  std::size_t moved_row = 0;
  QplMatrix normalizer;     // chi(M, normalizer) = normalized
  Mat normalized;
  Scalar excess() const { return m12 * l1 * l1 + m13 * l2 * l2 - m11; }
};

// Auxiliary vectors of the rank-2 degenerate construction, all in x-coordinates.
struct Rank2Data {
  Vec s, t, q;
  std::optional<Vec> r, u, v;
};

struct CaseLabel {
  std::size_t rank = 0;
  Branch branch = Branch::Rank0;
  std::optional<Subcase> subcase;
  std::optional<Rank1Params> rank1;
  std::optional<Rank2Data> rank2;
  int cohomology_case = 0;  // 1..9, 0 for the zero matrix
  std::string describe() const;
};

CaseLabel classify(const Mat& m);

struct TheoremCVerdict {
  bool calabi_yau = true;
  bool koszul = true;
  bool homologically_smooth = true;
  std::string reason;
};

TheoremCVerdict theorem_c(const Mat& m);
TheoremCVerdict theorem_c(const CaseLabel& label);

// Helpers shared with the resolution builder.
Vec hadamard(const Vec& a, const Vec& b);
bool in_b2(const Mat& mt, const Vec& w);
Vec solve_b2(const Mat& mt, const Vec& w);

// Graded presentations ----------------------------------------------------

struct Generator {
  std::string name;
  unsigned degree;
};

using Word = std::vector<std::size_t>;
using Relation = std::vector<std::pair<Scalar, Word>>;

struct GradedPresentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  std::string str() const;
};

GradedPresentation presentation_of(const CaseLabel& label);
std::vector<std::size_t> presented_dims(const GradedPresentation& pres, unsigned dmax);

// n = 2: rows 1..7 of the two-variable table (0 for M = 0), after the
// coordinate swap when the matrix only matches in swapped form.
struct TwoByTwoCase {
  int row = 0;
  bool swapped = false;
  Mat normalized;
};

TwoByTwoCase classify_n2(const Mat& m);
GradedPresentation presentation_n2(const TwoByTwoCase& c);

}  // namespace skewdg
