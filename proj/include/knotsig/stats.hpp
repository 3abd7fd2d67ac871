#ifndef KNOTSIG_STATS_HPP
#define KNOTSIG_STATS_HPP

#include "knotsig/triangle.hpp"

#include <optional>
#include <vector>

namespace knotsig {

/// Centering used for the second moment. paper_center takes the row's
/// symmetry center (0 for even c, 3 for odd c), which is what the reference
/// variance tables print. true_central centers at the actual mean.
enum class Centering { paper_center, true_central };

struct MomentReport {
  int c = 0;
  Centering convention = Centering::paper_center;
  ExactRational center;
  ExactRational mean;
  ExactRational second_moment;
  std::string rendered;  // 9 decimal places
};

MomentReport moments(const SignatureRow& row, Centering convention);

/// Standard normal CDF. Absolute error at most 1e-12 for |t| <= 8; clamped
/// to 0 or 1 beyond. Throws std::domain_error for non-finite t.
double phi(double t);

/// s(c, <= x) / |T(c)|, exact.
ExactRational cdf_T(const SignatureRow& row, double x);
ExactRational cdf_T(int c, double x);

/// Scale for normalizing signatures: sqrt(c) as in the limit statement, or
/// the square root of the measured paper_center second moment.
enum class Normalization { sqrt_c, measured };

struct CltPoint {
  int sigma = 0;
  double t = 0;        // sigma / scale
  ExactRational F_left;  // CDF value just below the step
  ExactRational F;       // CDF value at the step
  double phi = 0;
};

struct CltReport {
  int c = 0;
  Normalization normalization = Normalization::sqrt_c;
  double scale = 0;
  std::vector<CltPoint> points;  // ascending in t
  double sup_distance = 0;       // Kolmogorov distance to the standard normal
};

/// Step-function CDF of normalized signatures against the Gaussian. The sup
/// is taken over both one-sided limits at every breakpoint, which is exact
/// for a step function against a continuous CDF.
CltReport clt_report(int c, Normalization normalization = Normalization::sqrt_c);

/// Sandwich for k(c, <= x) / |K(c)|. The palindromic signatures at odd c are
/// unknown, so only the interval is available there; at even c all
/// palindromic mass sits at 0 and the exact value is populated.
struct KCdfBounds {
  ExactRational lower;
  ExactRational upper;
  std::optional<ExactRational> exact;
};

KCdfBounds k_cdf_bounds(const SignatureRow& row, const CensusCounts& cen, double x);
KCdfBounds k_cdf_bounds(int c, double x);

struct LimitRow {
  int c = 0;
  ExactRational pow2_over_t;  // 2^c / |T(c)|        -> 12
  ExactRational t_over_2k;    // |T(c)| / (2 |K(c)|) -> 1
  ExactRational moment_gap;   // c - E[(sigma - center)^2], paper_center
};

/// Exact convergence diagnostics for c = 3 .. c_max. c_max >= 6.
std::vector<LimitRow> limit_diagnostics(int c_max);

}  // namespace knotsig

#endif
