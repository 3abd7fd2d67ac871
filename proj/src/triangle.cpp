#include "knotsig/triangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace knotsig {

namespace {

// Pascal triangle cache for the closed-formula and identity paths, grown on
// demand. Row n costs n big-integer additions.
class BinomialTable {
 public:
  const ExactInt& at(int n, int k) {
    if (n < 0 || k < 0 || k > n) return zero_;
    while (static_cast<int>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<ExactInt> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = prev[j - 1] + prev[j];
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<ExactInt>> rows_{{ExactInt(1)}};
  ExactInt zero_{0};
};

// The column-sum formulas, parameterized over the binomial provider so the
// single-cell entry point stays a pure function while bulk construction can
// share a table.
template <class Binom>
ExactInt closed_cell(int c, int sigma, Binom&& binom) {
  const int n = sigma / 2;
  ExactInt sum = 0;
  if (c % 2 == 0) {
    const int m = c / 2;
    const int upper = m - std::abs(n) - 2;
    for (int i = 0; i <= upper; ++i) sum += binom(2 * m - 4 - 2 * i, m + n - 2 - i);
  } else {
    const int m = (c - 1) / 2;
    const int upper = std::min(m + n - 3, m - n);
    for (int i = 0; i <= upper; ++i) sum += binom(2 * m - 3 - 2 * i, m + n - 3 - i);
    if (n == 1) sum += 1;  // sigma = 2 sits one above the plain column sum
  }
  return sum;
}

SignatureRow closed_row(int c, BinomialTable& tab) {
  SignatureRow row;
  row.c = c;
  auto b = [&tab](int n, int k) -> const ExactInt& { return tab.at(n, k); };
  // Iterate exactly where the summation range is nonempty (plus n = 1 for
  // odd c, whose cell carries the extra unit even when the sum is empty).
  int n_lo, n_hi;
  if (c % 2 == 0) {
    const int m = c / 2;
    n_lo = -(m - 2);
    n_hi = m - 2;
  } else {
    const int m = (c - 1) / 2;
    n_lo = std::min(3 - m, 1);
    n_hi = std::max(m, 1);
  }
  for (int n = n_lo; n <= n_hi; ++n) {
    ExactInt v = closed_cell(c, 2 * n, b);
    if (v != 0) row.counts.emplace(2 * n, std::move(v));
  }
  return row;
}

std::string cell_mismatch(int c, int sigma, const ExactInt& recursive_value,
                          const ExactInt& closed_value) {
  std::ostringstream os;
  os << "triangle methods disagree at c=" << c << " sigma=" << sigma
     << ": recursive=" << recursive_value << " closed=" << closed_value;
  return os.str();
}

}  // namespace

ExactInt SignatureRow::count(int sigma) const {
  auto it = counts.find(sigma);
  return it == counts.end() ? ExactInt(0) : it->second;
}

ExactInt SignatureRow::total() const {
  ExactInt sum = 0;
  for (const auto& [sigma, v] : counts) sum += v;
  return sum;
}

int SignatureRow::min_sigma() const {
  if (counts.empty()) throw std::domain_error("SignatureRow: empty row");
  return counts.begin()->first;
}

int SignatureRow::max_sigma() const {
  if (counts.empty()) throw std::domain_error("SignatureRow: empty row");
  return counts.rbegin()->first;
}

const SignatureRow& Triangle::row(int c) const {
  if (!has(c)) throw std::domain_error("Triangle: no row for c=" + std::to_string(c));
  return rows[static_cast<std::size_t>(c - 3)];
}

ExactInt t_count(int c) {
  if (c < 2) throw std::domain_error("t_count: c must be >= 2");
  const ExactInt p = ExactInt(1) << (c - 2);
  if (c % 2 == 0) return (p - 1) / 3;
  return (p + 1) / 3;
}

ExactInt k_count(int c) {
  if (c < 3) throw std::domain_error("k_count: c must be >= 3");
  const ExactInt a = ExactInt(1) << (c - 3);
  switch (c % 4) {
    case 0: return (a + (ExactInt(1) << ((c - 4) / 2))) / 3;
    case 1: return (a + (ExactInt(1) << ((c - 3) / 2))) / 3;
    case 2: return (a + (ExactInt(1) << ((c - 4) / 2)) - 1) / 3;
    default: return (a + (ExactInt(1) << ((c - 3) / 2)) + 1) / 3;
  }
}

CensusCounts census(int c) {
  CensusCounts out;
  out.c = c;
  out.t = t_count(c);
  out.k = k_count(c);
  out.tp = 2 * out.k - out.t;
  return out;
}

ExactInt s_closed(int c, int sigma) {
  if (c < 3) throw std::domain_error("s_closed: c must be >= 3");
  if (sigma % 2 != 0) throw std::domain_error("s_closed: signature must be even");
  return closed_cell(c, sigma, [](long long n, long long k) { return binomial(n, k); });
}

SignatureRow row_recursive(int c, const SignatureRow* previous) {
  if (c < 3) throw std::domain_error("row_recursive: c must be >= 3");
  if (c == 3) {
    if (previous != nullptr)
      throw std::invalid_argument("row_recursive: the base row c=3 takes no previous row");
    SignatureRow base;
    base.c = 3;
    base.counts.emplace(2, 1);
    return base;
  }
  if (previous == nullptr || previous->c != c - 1)
    throw std::invalid_argument("row_recursive: previous row must be for c-1=" +
                                std::to_string(c - 1));

  const SignatureRow& prev = *previous;
  SignatureRow row;
  row.c = c;
  const int lo = prev.min_sigma();
  const int hi = prev.max_sigma();
  if (c % 2 == 1) {
    for (int sigma = std::min(lo + 2, 2); sigma <= std::max(hi + 4, 2); sigma += 2) {
      ExactInt v = prev.count(sigma - 2) + prev.count(sigma - 4);
      if (sigma == 2) v += 1;
      if (v != 0) row.counts.emplace(sigma, std::move(v));
    }
  } else {
    for (int sigma = std::min(lo - 4, -2); sigma <= std::max(hi - 2, -2); sigma += 2) {
      ExactInt v = prev.count(sigma + 2) + prev.count(sigma + 4);
      if (sigma == -2) v -= 1;
      if (v != 0) row.counts.emplace(sigma, std::move(v));
    }
  }
  return row;
}

Triangle triangle(int c_max, Method method) {
  if (c_max < 3) throw std::domain_error("triangle: c_max must be >= 3");

  Triangle recursive;
  if (method != Method::closed) {
    recursive.rows.push_back(row_recursive(3, nullptr));
    for (int c = 4; c <= c_max; ++c)
      recursive.rows.push_back(row_recursive(c, &recursive.rows.back()));
  }

  Triangle closed;
  if (method != Method::recursive) {
    BinomialTable tab;
    for (int c = 3; c <= c_max; ++c) closed.rows.push_back(closed_row(c, tab));
  }

  if (method == Method::recursive) return recursive;
  if (method == Method::closed) return closed;

  for (int c = 3; c <= c_max; ++c) {
    const SignatureRow& r = recursive.row(c);
    const SignatureRow& s = closed.row(c);
    for (const auto& [sigma, v] : r.counts)
      if (s.count(sigma) != v) throw IntegrityError(cell_mismatch(c, sigma, v, s.count(sigma)));
    for (const auto& [sigma, v] : s.counts)
      if (r.count(sigma) != v) throw IntegrityError(cell_mismatch(c, sigma, r.count(sigma), v));
  }
  return recursive;
}

KWeightedRow k_row_even(const SignatureRow& row, const CensusCounts& cen) {
  if (row.c < 4 || row.c % 2 != 0)
    throw std::domain_error("k_row_even: c must be even and >= 4");
  if (row.c != cen.c) throw std::invalid_argument("k_row_even: row and census disagree on c");
  // At even c every palindromic word has signature 0, so the palindromic
  // mass lands entirely on the center cell.
  KWeightedRow out;
  out.c = row.c;
  for (const auto& [sigma, v] : row.counts) out.weights[sigma] = ExactRational(v) / 2;
  out.weights[0] += ExactRational(cen.tp) / 2;
  if (out.weights[0] == 0) out.weights.erase(0);
  return out;
}

KWeightedRow k_row_even(int c) {
  if (c < 4 || c % 2 != 0) throw std::domain_error("k_row_even: c must be even and >= 4");
  Triangle tri = triangle(c, Method::both);
  return k_row_even(tri.row(c), census(c));
}

std::vector<IdentityResult> check_identities(const Triangle& tri) {
  std::vector<IdentityResult> out;
  BinomialTable tab;

  auto record = [&out](std::string name, int c, std::optional<int> sigma, bool pass,
                       std::string detail) {
    out.push_back({std::move(name), c, sigma, pass, std::move(detail)});
  };

  for (const SignatureRow& row : tri.rows) {
    const int c = row.c;

    {
      const ExactInt sum = row.total();
      const ExactInt want = t_count(c);
      if (sum == want) {
        record("row-sum", c, std::nullopt, true, {});
      } else {
        std::ostringstream os;
        os << "sum=" << sum << " expected=" << want;
        record("row-sum", c, std::nullopt, false, os.str());
      }
    }

    {
      bool ok = true;
      const int lo = row.min_sigma();
      const int hi = row.max_sigma();
      if (c % 2 == 0) {
        const int span = std::max(std::abs(lo), std::abs(hi));
        for (int sigma = -span; sigma <= span; sigma += 2) {
          if (row.count(sigma) != row.count(-sigma)) {
            ok = false;
            std::ostringstream os;
            os << "s(" << c << "," << sigma << ")=" << row.count(sigma) << " but s(" << c << ","
               << -sigma << ")=" << row.count(-sigma);
            record("symmetry", c, sigma, false, os.str());
          }
        }
      } else {
        if (row.count(2) != row.count(4) + 1) {
          ok = false;
          std::ostringstream os;
          os << "s(" << c << ",2)=" << row.count(2) << " but s(" << c << ",4)+1=" << row.count(4) + 1;
          record("symmetry", c, 2, false, os.str());
        }
        for (int sigma = std::min(lo, 6 - hi); sigma <= std::max(hi, 6 - lo); sigma += 2) {
          if (sigma > 0 && sigma < 6) continue;
          if (row.count(sigma) != row.count(6 - sigma)) {
            ok = false;
            std::ostringstream os;
            os << "s(" << c << "," << sigma << ")=" << row.count(sigma) << " but s(" << c << ","
               << 6 - sigma << ")=" << row.count(6 - sigma);
            record("symmetry", c, sigma, false, os.str());
          }
        }
      }
      if (ok) record("symmetry", c, std::nullopt, true, {});
    }
  }

  // Consecutive rows sum to one full row of Pascal's triangle. The sigma
  // range extends past both supports so spurious mass on either side of the
  // identity would be caught.
  for (const SignatureRow& row : tri.rows) {
    const int c = row.c;
    if (!tri.has(c + 1)) continue;
    const SignatureRow& next = tri.row(c + 1);
    bool ok = true;
    const int m = (c % 2 == 1) ? (c - 1) / 2 : c / 2;
    for (int sigma = -2 * m - 6; sigma <= 2 * m + 6; sigma += 2) {
      const int n = sigma / 2;
      const ExactInt& want =
          (c % 2 == 1) ? tab.at(2 * m - 1, m - 1 + n) : tab.at(2 * m - 2, m - 2 + n);
      const ExactInt got = row.count(sigma) + next.count(sigma);
      if (got != want) {
        ok = false;
        std::ostringstream os;
        os << "s(" << c << "," << sigma << ")+s(" << c + 1 << "," << sigma << ")=" << got
           << " expected=" << want;
        record("pair-binomial", c, sigma, false, os.str());
      }
    }
    if (ok) record("pair-binomial", c, std::nullopt, true, {});
  }

  return out;
}

}  // namespace knotsig
