#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace porder {

// f(t) = t + (1 - t^2) on the open interval (-1, 1), t elsewhere.
double f_eval(double t);

// v_alpha(x) = f((x - alpha) / eps).
double v_alpha(double x, double alpha, double eps);

// (x, y) in P iff x + eps >= y.
bool semiorder_pair(double x, double y, double eps);

// alpha = y - eps whenever (x, y) in P; v_alpha(x) >= v_alpha(y) then holds.
std::optional<double> witness_alpha(double x, double y, double eps);

// Evenly spaced samples min, min + step, ... up to max.
struct GridSpec {
  double min = -3.0;
  double max = 3.0;
  double step = 0.05;

  std::vector<double> points() const;
};

struct SemiorderFamily {
  double epsilon;
  std::vector<double> alpha_grid;

  // Validates eps > 0 and a strictly increasing grid.
  static SemiorderFamily make(double epsilon, std::vector<double> alpha_grid);
};

inline constexpr double kSemiorderTolerance = 1e-12;

// Certified lower bound on min over all real alpha of v_alpha(y) - v_alpha(x).
struct ExclusionBound {
  double sampled_min;
  double lower_bound;
  bool certified;
  std::size_t evaluations;
};

// Bounds the minimum of alpha -> v_alpha(y) - v_alpha(x) over the whole real
// line. Outside [min(x,y) - eps, max(x,y) + eps] the difference is the
// constant (y - x) / eps. Inside, the interval is cut at the branch points
// x +- eps, y +- eps and at the family's alpha grid, then bisected until a
// Lipschitz bound (6 / eps) or a curvature bound (4 / eps^2, valid between
// branch points) certifies the sampled values.
ExclusionBound certify_exclusion(double x, double y, double eps,
                                 std::span<const double> alpha_grid = {},
                                 double tolerance = kSemiorderTolerance);

struct PairRecord {
  double x;
  double y;
  bool in_p;
  std::optional<double> witness;
  // In P: v_w(x) - v_w(y) at the witness. Not in P: certified lower bound
  // on v_alpha(y) - v_alpha(x) over all alpha.
  double margin;
  bool passed;
};

struct FamilyReport {
  std::size_t pairs_checked = 0;
  std::size_t in_p = 0;
  std::size_t not_in_p = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double min_witness_margin = 0.0;
  double min_exclusion_margin = 0.0;
  std::vector<PairRecord> failures;

  bool ok() const { return failed == 0; }
  // Throws ToleranceViolation naming the first failing pair.
  void require_ok() const;
};

FamilyReport verify_family_on_grid(const SemiorderFamily& family, const GridSpec& pairs,
                                   const std::function<void(const PairRecord&)>& on_pair = {},
                                   double tolerance = kSemiorderTolerance);

// Members of alpha_grid that witness the boundary pair (x, x + eps).
std::vector<double> boundary_witnesses(double x, double eps, std::span<const double> alpha_grid);

struct BoundaryPair {
  double x;
  double y;
};

// A boundary pair (x, x + eps) in P that no v_alpha with alpha in the list
// witnesses. x is the midpoint of the largest gap between distinct alphas,
// or max + 1 when there is no gap.
BoundaryPair countable_failure_witness(std::span<const double> alphas, double eps);

// True iff v_alpha(x) < v_alpha(y) for every listed alpha.
bool defeats_subfamily(const BoundaryPair& pair, std::span<const double> alphas, double eps);

}  // namespace porder
