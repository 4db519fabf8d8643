#include "porder/semiorder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "porder/error.hpp"

namespace porder {
namespace {

void require_epsilon(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::NonpositiveEpsilon, "epsilon must be positive");
}

constexpr int kMaxDepth = 80;

struct Bisector {
  double x;
  double y;
  double eps;
  double tolerance;
  double lipschitz;
  double curvature;
  ExclusionBound bound;

  double gap(double alpha) {
    ++bound.evaluations;
    return v_alpha(y, alpha, eps) - v_alpha(x, alpha, eps);
  }

  // [a, b] contains no branch point of either term in its interior.
  void refine(double a, double b, double ga, double gb, int depth) {
    const double m = std::min(ga, gb);
    bound.sampled_min = std::min(bound.sampled_min, m);
    if (m < -tolerance) {
      bound.certified = false;
      bound.lower_bound = std::min(bound.lower_bound, m);
      return;
    }
    const double w = b - a;
    const double lip = 0.5 * (ga + gb) - 0.5 * lipschitz * w;
    const double curv = m - curvature * w * w / 8.0;
    const double lb = std::max(lip, curv);
    if (lb >= 0.5 * m - 0.5 * tolerance || depth >= kMaxDepth) {
      if (lb < -tolerance) bound.certified = false;
      bound.lower_bound = std::min(bound.lower_bound, lb);
      return;
    }
    const double mid = a + 0.5 * w;
    const double gm = gap(mid);
    refine(a, mid, ga, gm, depth + 1);
    refine(mid, b, gm, gb, depth + 1);
  }
};

}  // namespace

double f_eval(double t) {
  if (t > -1.0 && t < 1.0) return t + (1.0 - t * t);
  return t;
}

double v_alpha(double x, double alpha, double eps) {
  require_epsilon(eps);
  return f_eval((x - alpha) / eps);
}

bool semiorder_pair(double x, double y, double eps) {
  require_epsilon(eps);
  return x + eps >= y;
}

std::optional<double> witness_alpha(double x, double y, double eps) {
  if (!semiorder_pair(x, y, eps)) return std::nullopt;
  return y - eps;
}

std::vector<double> GridSpec::points() const {
  if (!(step > 0.0) || !(max >= min)) {
    throw Error(ErrorKind::InvalidInput, "grid needs step > 0 and max >= min");
  }
  const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = min + static_cast<double>(i) * step;
  return out;
}

SemiorderFamily SemiorderFamily::make(double epsilon, std::vector<double> alpha_grid) {
  require_epsilon(epsilon);
  if (std::adjacent_find(alpha_grid.begin(), alpha_grid.end(),
                         [](double a, double b) { return !(a < b); }) != alpha_grid.end()) {
    throw Error(ErrorKind::InvalidInput, "alpha grid must be sorted and distinct");
  }
  return SemiorderFamily{epsilon, std::move(alpha_grid)};
}

ExclusionBound certify_exclusion(double x, double y, double eps,
                                 std::span<const double> alpha_grid, double tolerance) {
  require_epsilon(eps);
  Bisector b{x, y, eps, tolerance, 6.0 / eps, 4.0 / (eps * eps),
             ExclusionBound{std::numeric_limits<double>::infinity(),
                            std::numeric_limits<double>::infinity(), true, 0}};
  const double lo = std::min(x, y) - eps;
  const double hi = std::max(x, y) + eps;

  // Far from both points the difference is the constant (y - x) / eps.
  const double tail = (y - x) / eps;
  b.bound.sampled_min = tail;
  b.bound.lower_bound = tail;
  if (tail < -tolerance) b.bound.certified = false;

  std::vector<double> knots{lo, hi, x - eps, x + eps, y - eps, y + eps};
  for (double a : alpha_grid) {
    if (a > lo && a < hi) knots.push_back(a);
  }
  const double coarse = eps / 8.0;
  for (double a = lo + coarse; a < hi; a += coarse) knots.push_back(a);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::vector<double> values(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) values[i] = b.gap(knots[i]);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    b.refine(knots[i], knots[i + 1], values[i], values[i + 1], 0);
  }
  return b.bound;
}

void FamilyReport::require_ok() const {
  if (ok()) return;
  const PairRecord& p = failures.front();
  throw Error(ErrorKind::ToleranceViolation,
              "pair (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") " +
                  (p.in_p ? "has no witness" : "is not certified excluded") + ", margin " +
                  std::to_string(p.margin));
}

FamilyReport verify_family_on_grid(const SemiorderFamily& family, const GridSpec& pairs,
                                   const std::function<void(const PairRecord&)>& on_pair,
                                   double tolerance) {
  const double eps = family.epsilon;
  require_epsilon(eps);
  const std::vector<double> points = pairs.points();
  FamilyReport report;
  report.min_witness_margin = std::numeric_limits<double>::infinity();
  report.min_exclusion_margin = std::numeric_limits<double>::infinity();
  for (double x : points) {
    for (double y : points) {
      PairRecord rec{x, y, semiorder_pair(x, y, eps), witness_alpha(x, y, eps), 0.0, false};
      if (rec.in_p) {
        ++report.in_p;
        rec.margin = v_alpha(x, *rec.witness, eps) - v_alpha(y, *rec.witness, eps);
        rec.passed = rec.margin >= -tolerance;
        report.min_witness_margin = std::min(report.min_witness_margin, rec.margin);
      } else {
        ++report.not_in_p;
        const ExclusionBound bound = certify_exclusion(x, y, eps, family.alpha_grid, tolerance);
        rec.margin = bound.lower_bound;
        rec.passed = bound.certified;
        report.min_exclusion_margin = std::min(report.min_exclusion_margin, rec.margin);
      }
      ++report.pairs_checked;
      if (rec.passed) {
        ++report.passed;
      } else {
        ++report.failed;
        if (report.failures.size() < 16) report.failures.push_back(rec);
      }
      if (on_pair) on_pair(rec);
    }
  }
  return report;
}

std::vector<double> boundary_witnesses(double x, double eps, std::span<const double> alpha_grid) {
  std::vector<double> out;
  for (double a : alpha_grid) {
    if (v_alpha(x, a, eps) >= v_alpha(x + eps, a, eps)) out.push_back(a);
  }
  return out;
}

BoundaryPair countable_failure_witness(std::span<const double> alphas, double eps) {
  require_epsilon(eps);
  std::vector<double> sorted(alphas.begin(), alphas.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double x = sorted.empty() ? 1.0 : sorted.back() + 1.0;
  double widest = 0.0;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double gap = sorted[i + 1] - sorted[i];
    if (gap > widest) {
      widest = gap;
      x = sorted[i] + 0.5 * gap;
    }
  }
  return BoundaryPair{x, x + eps};
}

bool defeats_subfamily(const BoundaryPair& pair, std::span<const double> alphas, double eps) {
  return std::all_of(alphas.begin(), alphas.end(), [&](double a) {
    return v_alpha(pair.x, a, eps) < v_alpha(pair.y, a, eps);
  });
}

}  // namespace porder
