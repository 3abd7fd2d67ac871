#include "knotsig/stats.hpp"

#include <cmath>
#include <cstdlib>

namespace knotsig {

MomentReport moments(const SignatureRow& row, Centering convention) {
  if (row.counts.empty()) throw std::domain_error("moments: empty row");
  const ExactInt total = row.total();

  ExactRational mean = 0;
  for (const auto& [sigma, v] : row.counts) mean += ExactRational(v) * sigma;
  mean /= ExactRational(total);

  MomentReport out;
  out.c = row.c;
  out.convention = convention;
  out.mean = mean;
  out.center = (convention == Centering::paper_center) ? ExactRational(row.c % 2 == 0 ? 0 : 3)
                                                       : mean;

  ExactRational m2 = 0;
  for (const auto& [sigma, v] : row.counts) {
    const ExactRational d = ExactRational(sigma) - out.center;
    m2 += ExactRational(v) * d * d;
  }
  m2 /= ExactRational(total);
  out.second_moment = m2;
  out.rendered = decimal_render(m2, 9);
  return out;
}

double phi(double t) {
  if (!std::isfinite(t)) throw std::domain_error("phi: t must be finite");
  if (t > 8.0) return 1.0;
  if (t < -8.0) return 0.0;

  // All-positive-term series: Phi(x) = 1/2 + pdf(x) * sum_k x^(2k+1)/(2k+1)!!
  // for x >= 0. No cancellation, so long double keeps the absolute error far
  // below the 1e-12 contract across the whole clamp window.
  const long double x = std::fabs(static_cast<long double>(t));
  constexpr long double inv_sqrt_2pi = 0.39894228040143267793994605993438L;
  long double term = x;
  long double sum = x;
  for (int k = 1; k < 400; ++k) {
    term *= x * x / (2 * k + 1);
    sum += term;
    if (term < sum * 1e-21L) break;
  }
  const long double upper = 0.5L + std::exp(-0.5L * x * x) * inv_sqrt_2pi * sum;
  const long double p = (t < 0) ? 1.0L - upper : upper;
  return static_cast<double>(std::min(std::max(p, 0.0L), 1.0L));
}

ExactRational cdf_T(const SignatureRow& row, double x) {
  ExactInt below = 0;
  for (const auto& [sigma, v] : row.counts)
    if (static_cast<double>(sigma) <= x) below += v;
  return ExactRational(below) / ExactRational(t_count(row.c));
}

ExactRational cdf_T(int c, double x) {
  Triangle tri = triangle(c, Method::both);
  return cdf_T(tri.row(c), x);
}

CltReport clt_report(int c, Normalization normalization) {
  if (c < 3) throw std::domain_error("clt_report: c must be >= 3");
  Triangle tri = triangle(c, Method::both);
  const SignatureRow& row = tri.row(c);

  CltReport out;
  out.c = c;
  out.normalization = normalization;
  out.scale = (normalization == Normalization::sqrt_c)
                  ? std::sqrt(static_cast<double>(c))
                  : std::sqrt(to_double(moments(row, Centering::paper_center).second_moment));

  const ExactRational total{t_count(c)};
  ExactInt cum = 0;
  ExactRational prev{0};
  double sup = 0;
  for (const auto& [sigma, v] : row.counts) {
    cum += v;
    CltPoint p;
    p.sigma = sigma;
    p.t = sigma / out.scale;
    p.F_left = prev;
    p.F = ExactRational(cum) / total;
    p.phi = phi(p.t);
    sup = std::max(sup, std::fabs(to_double(p.F) - p.phi));
    sup = std::max(sup, std::fabs(to_double(p.F_left) - p.phi));
    prev = p.F;
    out.points.push_back(std::move(p));
  }
  out.sup_distance = sup;
  return out;
}

KCdfBounds k_cdf_bounds(const SignatureRow& row, const CensusCounts& cen, double x) {
  const ExactRational two_k = ExactRational(2 * cen.k);
  ExactInt below = 0;
  for (const auto& [sigma, v] : row.counts)
    if (static_cast<double>(sigma) <= x) below += v;
  const ExactRational s_below{below};

  KCdfBounds out;
  out.lower = s_below / two_k;
  out.upper = (s_below + ExactRational(cen.tp)) / two_k;
  if (cen.c % 2 == 0) {
    const ExactRational palindromic = (x >= 0.0) ? ExactRational(cen.tp) : ExactRational(0);
    out.exact = (s_below + palindromic) / two_k;
  }
  return out;
}

KCdfBounds k_cdf_bounds(int c, double x) {
  if (c < 3) throw std::domain_error("k_cdf_bounds: c must be >= 3");
  Triangle tri = triangle(c, Method::both);
  return k_cdf_bounds(tri.row(c), census(c), x);
}

std::vector<LimitRow> limit_diagnostics(int c_max) {
  if (c_max < 6) throw std::domain_error("limit_diagnostics: c_max must be >= 6");
  Triangle tri = triangle(c_max, Method::both);
  std::vector<LimitRow> out;
  for (int c = 3; c <= c_max; ++c) {
    LimitRow r;
    r.c = c;
    r.pow2_over_t = ExactRational(ExactInt(1) << c) / ExactRational(t_count(c));
    r.t_over_2k = ExactRational(t_count(c)) / ExactRational(2 * k_count(c));
    r.moment_gap =
        ExactRational(c) - moments(tri.row(c), Centering::paper_center).second_moment;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace knotsig
