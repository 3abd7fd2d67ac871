#ifndef KNOTSIG_REPORT_HPP
#define KNOTSIG_REPORT_HPP

#include "knotsig/stats.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knotsig {

inline constexpr const char* kToolName = "knotsig";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { table, csv, json };

std::optional<Format> parse_format(const std::string& name);

// Counts and rationals are always emitted as exact digit strings; the only
// floating-point cells are t, phi and sup_distance, and the JSON meta block
// names them.
std::string render_triangle(const Triangle& tri, Format format, Method method);
std::string render_counts(const std::vector<CensusCounts>& rows, Format format);
std::string render_moments(const std::vector<MomentReport>& rows, Format format);

struct CltSection {
  CltReport report;
  CensusCounts counts;
  std::vector<KCdfBounds> bounds;  // one per report point, at x = sigma
};

CltSection make_clt_section(int c, Normalization normalization);
std::string render_clt(const std::vector<CltSection>& sections, Format format);

/// Reference second-moment digit strings, exactly as printed: {c, digits}.
const std::vector<std::pair<int, std::string>>& variance_reference_even();
const std::vector<std::pair<int, std::string>>& variance_reference_odd();

/// Adds delta to one cell of the reference triangle copy before the
/// golden-table comparison. Exists for fault-injection testing.
struct TamperSpec {
  int c = 0;
  int sigma = 0;
  long long delta = 0;
};

struct VerifyReport {
  bool ok = false;
  std::string text;  // deterministic: identical inputs, identical bytes
};

/// The full verification battery: golden-table comparison, cross-method
/// agreement, row sums, symmetries, pair-binomial identities, census
/// identity and the variance-table digit strings. c_max >= 14.
VerifyReport run_verify(int c_max, const std::optional<TamperSpec>& tamper = std::nullopt);

}  // namespace knotsig

#endif
