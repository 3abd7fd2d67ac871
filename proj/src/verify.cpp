#include "knotsig/report.hpp"

#include <map>
#include <set>
#include <sstream>

namespace knotsig {

namespace {

// Reference digit strings exactly as printed; precision varies per entry
// (the longer rows stabilize and are printed to ten significant digits).
const std::vector<std::pair<int, std::string>> kVarianceEven = {
    {6, "1.6"},           {8, "3.428571429"},  {10, "5.364705882"}, {12, "7.343108504"},
    {14, "9.336263736"},  {16, "11.33626374"}, {18, "13.33626374"}, {20, "15.33626374"},
};

const std::vector<std::pair<int, std::string>> kVarianceOdd = {
    {7, "2.454545455"},  {9, "4.348837209"},  {11, "6.333333333"}, {13, "8.332357247"},
    {15, "10.33663004"}, {17, "12.33635531"}, {19, "14.33628663"},
};

unsigned printed_places(const std::string& entry) {
  const auto dot = entry.find('.');
  return dot == std::string::npos ? 0u : static_cast<unsigned>(entry.size() - dot - 1);
}

class Checker {
 public:
  void fail(const std::string& line) {
    text_ << "[FAIL] " << line << '\n';
    ++failures_;
  }
  void pass(const std::string& line) { text_ << "[PASS] " << line << '\n'; }
  void check(bool ok, const std::string& pass_line, const std::string& fail_line) {
    if (ok)
      pass(pass_line);
    else
      fail(fail_line);
  }
  int failures() const { return failures_; }
  std::string str() const { return text_.str(); }
  void summary(int checks) {
    text_ << "verify: " << checks << " checks, " << failures_ << " failures\n";
  }

 private:
  std::ostringstream text_;
  int failures_ = 0;
};

}  // namespace

const std::vector<std::pair<int, std::string>>& variance_reference_even() {
  return kVarianceEven;
}

const std::vector<std::pair<int, std::string>>& variance_reference_odd() {
  return kVarianceOdd;
}

VerifyReport run_verify(int c_max, const std::optional<TamperSpec>& tamper) {
  if (c_max < 14) throw std::domain_error("verify: c_max must be >= 14");
  const int cap = std::max(c_max, 20);  // the variance tables need rows up to 20

  const Triangle rec = triangle(cap, Method::recursive);
  const Triangle clo = triangle(cap, Method::closed);

  Checker out;

  {
    Triangle golden = golden_table();
    if (tamper) {
      SignatureRow& row = golden.rows.at(static_cast<std::size_t>(tamper->c - 3));
      row.counts[tamper->sigma] += tamper->delta;
    }
    bool ok = true;
    for (const SignatureRow& grow : golden.rows) {
      const int c = grow.c;
      for (const Triangle* tri : {&rec, &clo}) {
        const SignatureRow& computed = tri->row(c);
        std::set<int> sigmas;
        for (const auto& [sigma, v] : grow.counts) sigmas.insert(sigma);
        for (const auto& [sigma, v] : computed.counts) sigmas.insert(sigma);
        for (int sigma : sigmas) {
          if (computed.count(sigma) != grow.count(sigma)) {
            ok = false;
            std::ostringstream os;
            os << "golden-table c=" << c << " sigma=" << sigma << ": "
               << (tri == &rec ? "recursive" : "closed") << "=" << computed.count(sigma)
               << " golden=" << grow.count(sigma);
            out.fail(os.str());
          }
        }
      }
    }
    if (ok) out.pass("golden-table (rows 3..14, both methods)");
  }

  {
    bool ok = true;
    for (int c = 3; c <= cap; ++c) {
      const SignatureRow& r = rec.row(c);
      const SignatureRow& s = clo.row(c);
      std::set<int> sigmas;
      for (const auto& [sigma, v] : r.counts) sigmas.insert(sigma);
      for (const auto& [sigma, v] : s.counts) sigmas.insert(sigma);
      for (int sigma : sigmas) {
        if (r.count(sigma) != s.count(sigma)) {
          ok = false;
          std::ostringstream os;
          os << "cross-method c=" << c << " sigma=" << sigma << ": recursive=" << r.count(sigma)
             << " closed=" << s.count(sigma);
          out.fail(os.str());
        }
      }
    }
    if (ok) out.pass("cross-method (c <= " + std::to_string(cap) + ")");
  }

  {
    std::map<std::string, bool> group_ok = {
        {"row-sum", true}, {"symmetry", true}, {"pair-binomial", true}};
    for (const IdentityResult& r : check_identities(rec)) {
      if (r.pass) continue;
      group_ok[r.name] = false;
      std::ostringstream os;
      os << r.name << " c=" << r.c;
      if (r.sigma) os << " sigma=" << *r.sigma;
      os << ": " << r.detail;
      out.fail(os.str());
    }
    for (const char* name : {"row-sum", "symmetry", "pair-binomial"})
      if (group_ok[name]) out.pass(std::string(name) + " (c <= " + std::to_string(cap) + ")");
  }

  {
    bool ok = true;
    ExactInt prev2 = t_count(2), prev1 = t_count(3);
    for (int c = 3; c <= cap; ++c) {
      const CensusCounts cen = census(c);
      if (c >= 4) {
        const ExactInt jacobsthal = prev1 + 2 * prev2;
        if (cen.t != jacobsthal) {
          ok = false;
          std::ostringstream os;
          os << "census-identity c=" << c << ": |T|=" << cen.t
             << " but recurrence gives " << jacobsthal;
          out.fail(os.str());
        }
        prev2 = prev1;
        prev1 = cen.t;
      }
      if (2 * cen.k != cen.t + cen.tp || cen.tp < 0) {
        ok = false;
        std::ostringstream os;
        os << "census-identity c=" << c << ": T=" << cen.t << " K=" << cen.k
           << " Tp=" << cen.tp;
        out.fail(os.str());
      }
    }
    if (ok) out.pass("census-identity (c <= " + std::to_string(cap) + ")");
  }

  {
    bool ok = true;
    for (const auto* table : {&kVarianceEven, &kVarianceOdd}) {
      for (const auto& [c, printed] : *table) {
        const MomentReport report = moments(rec.row(c), Centering::paper_center);
        const std::string got = decimal_render(report.second_moment, printed_places(printed));
        if (got != printed) {
          ok = false;
          std::ostringstream os;
          os << "variance-table c=" << c << ": rendered=" << got << " expected=" << printed;
          out.fail(os.str());
        }
      }
    }
    if (ok) out.pass("variance-table (c = 6..20)");
  }

  const bool ok = out.failures() == 0;
  out.summary(7);
  return {ok, out.str()};
}

}  // namespace knotsig
