#ifndef KNOTSIG_TRIANGLE_HPP
#define KNOTSIG_TRIANGLE_HPP

#include "knotsig/exact.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotsig {

/// One row of the signature triangle: the counts of 2-bridge knot words of
/// crossing number c by signature. Signatures are always even; zero cells
/// are not stored.
struct SignatureRow {
  int c = 0;
  std::map<int, ExactInt> counts;

  /// Count for a signature value, 0 if the cell is not stored.
  ExactInt count(int sigma) const;
  ExactInt total() const;
  int min_sigma() const;
  int max_sigma() const;
};

/// Rows c = 3 .. c_max, in order.
struct Triangle {
  std::vector<SignatureRow> rows;

  int c_max() const { return rows.empty() ? 2 : rows.back().c; }
  bool has(int c) const { return c >= 3 && c <= c_max(); }
  const SignatureRow& row(int c) const;
};

/// Census sizes for one crossing number: the word-proxy set T(c), the knot
/// set K(c) with chiral pairs identified, and the palindromic set T_p(c).
/// Always satisfies 2*k = t + tp.
struct CensusCounts {
  int c = 0;
  ExactInt t;
  ExactInt k;
  ExactInt tp;
};

/// Signature distribution over K(c) for even c. A chiral pair contributes
/// half a unit of mass to each of +sigma and -sigma, so off-center weights
/// are half-integers.
struct KWeightedRow {
  int c = 0;
  std::map<int, ExactRational> weights;
};

/// Two independent computation routes disagreed on a value.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |T(c)| = (2^(c-2) - (-1)^c) / 3, the Jacobsthal number J(c-2). c >= 2.
ExactInt t_count(int c);

/// |K(c)|, split by c mod 4. c >= 3.
ExactInt k_count(int c);

/// All three census counts; tp is derived from 2k - t.
CensusCounts census(int c);

/// Signature count from the closed binomial-column formulas. c >= 3,
/// sigma even. Empty summation ranges evaluate to 0.
ExactInt s_closed(int c, int sigma);

/// One step of the row recurrence. previous must be null for c = 3 (base
/// row {2: 1}) and must be the row for c - 1 otherwise.
SignatureRow row_recursive(int c, const SignatureRow* previous);

enum class Method { recursive, closed, both };

/// Rows 3 .. c_max. Method::both evaluates the recurrence and the closed
/// formulas independently and throws IntegrityError naming (c, sigma, both
/// values) on any disagreement.
Triangle triangle(int c_max, Method method);

KWeightedRow k_row_even(const SignatureRow& row, const CensusCounts& cen);
KWeightedRow k_row_even(int c);

struct IdentityResult {
  std::string name;
  int c = 0;
  std::optional<int> sigma;  // set for per-cell failures
  bool pass = true;
  std::string detail;
};

/// Structural checks over every applicable row of tri: row sums against
/// t_count, the parity symmetries, and the consecutive-row binomial
/// identities. Failures come back as data, never as exceptions.
std::vector<IdentityResult> check_identities(const Triangle& tri);

/// The embedded reference triangle, rows c = 3 .. 14.
const Triangle& golden_table();

}  // namespace knotsig

#endif
