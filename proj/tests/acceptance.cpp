// Acceptance battery: every release criterion in one binary, one pass/fail
// line each. Exits nonzero if anything fails. Budgets are wall-clock.

#include "knotsig/report.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "phi_oracle.hpp"

#ifndef KNOTSIG_CLI_PATH
#define KNOTSIG_CLI_PATH ""
#endif

using namespace knotsig;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string ms_str(double ms) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.0f ms", ms);
  return buf;
}

// True when |a| <= 1 / 10^places, compared exactly.
bool within_decimal(const ExactRational& a, unsigned places) {
  ExactRational mag = a < 0 ? -a : a;
  ExactInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  return mag * ExactRational(scale) <= 1;
}

// Exact-half ties would make round-half-away-from-zero ambiguous against a
// table printed under an unknown rule; assert none occur at this precision.
bool rounding_tie(const ExactRational& q, unsigned places) {
  ExactInt scaled = abs(boost::multiprecision::numerator(q));
  for (unsigned i = 0; i < places; ++i) scaled *= 10;
  const ExactInt den = boost::multiprecision::denominator(q);
  return 2 * (scaled % den) == den;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  while (std::fgets(buf, sizeof(buf), pipe) != nullptr) result.output += buf;
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

unsigned printed_places(const std::string& entry) {
  const auto dot = entry.find('.');
  return dot == std::string::npos ? 0u : static_cast<unsigned>(entry.size() - dot - 1);
}

}  // namespace

int main() {
  // --- Golden triangle: both methods, every cell, under a second. ---
  {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      for (Method method : {Method::recursive, Method::closed}) {
        const Triangle tri = triangle(14, method);
        for (const SignatureRow& want : golden_table().rows) {
          const SignatureRow& got = tri.row(want.c);
          if (got.counts != want.counts) {
            ok = false;
            detail = "mismatch at c=" + std::to_string(want.c);
          }
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double ms = ms_since(start);
    if (ms >= 1000.0) {
      ok = false;
      detail = "budget exceeded: " + ms_str(ms);
    }
    report("golden-triangle", ok, detail.empty() ? ms_str(ms) : detail);
  }

  // --- Oracle equivalence to c = 200 (and the pair identities need 202). ---
  Triangle tri202;
  {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
      tri202 = triangle(202, Method::both);  // throws IntegrityError on any cell
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    // The single-cell closed evaluator must agree with the recurrence too;
    // full product up to 80 keeps it honest without blowing the budget.
    if (ok) {
      for (int c = 3; c <= 80 && ok; ++c) {
        const SignatureRow& row = tri202.row(c);
        for (int sigma = row.min_sigma() - 4; sigma <= row.max_sigma() + 4; sigma += 2) {
          if (s_closed(c, sigma) != row.count(sigma)) {
            ok = false;
            detail = "s_closed mismatch at c=" + std::to_string(c) +
                     " sigma=" + std::to_string(sigma);
            break;
          }
        }
      }
    }
    const double ms = ms_since(start);
    if (ok && ms >= 10000.0) {
      ok = false;
      detail = "budget exceeded: " + ms_str(ms);
    }
    report("oracle-equivalence", ok, detail.empty() ? ms_str(ms) : detail);
  }
  if (tri202.rows.empty()) {
    std::cout << "acceptance: cannot continue without the triangle\n";
    return failures;
  }

  // --- Census identities for 3 <= c <= 200. ---
  {
    bool ok = true;
    std::string detail;
    for (int c = 3; c <= 200; ++c) {
      const CensusCounts cen = census(c);
      const ExactInt row_sum = tri202.row(c).total();
      const ExactInt formula = ((ExactInt(1) << (c - 2)) - (c % 2 == 0 ? 1 : -1)) / 3;
      if (row_sum != formula || cen.t != formula || 2 * cen.k != cen.t + cen.tp || cen.tp < 0) {
        ok = false;
        detail = "failed at c=" + std::to_string(c);
        break;
      }
    }
    report("census-identities", ok, detail);
  }

  // --- Consecutive-row binomial identities for 2 <= m <= 100, all sigma. ---
  {
    bool ok = true;
    std::string detail;
    for (int m = 2; m <= 100 && ok; ++m) {
      for (int sigma = -2 * m - 8; sigma <= 2 * m + 8; sigma += 2) {
        const int n = sigma / 2;
        const ExactInt odd_even =
            tri202.row(2 * m + 1).count(sigma) + tri202.row(2 * m + 2).count(sigma);
        if (odd_even != binomial(2 * m - 1, m - 1 + n)) {
          ok = false;
          detail = "odd+even failed at m=" + std::to_string(m) + " sigma=" + std::to_string(sigma);
          break;
        }
        const ExactInt even_odd =
            tri202.row(2 * m).count(sigma) + tri202.row(2 * m + 1).count(sigma);
        if (even_odd != binomial(2 * m - 2, m - 2 + n)) {
          ok = false;
          detail = "even+odd failed at m=" + std::to_string(m) + " sigma=" + std::to_string(sigma);
          break;
        }
      }
    }
    report("row-pair-binomials", ok, detail);
  }

  // --- Variance tables reproduce every printed digit string. ---
  {
    bool ok = true;
    std::string detail;
    auto check_table = [&](const std::vector<std::pair<int, std::string>>& table) {
      for (const auto& [c, printed] : table) {
        const MomentReport rep = moments(tri202.row(c), Centering::paper_center);
        const unsigned places = printed_places(printed);
        if (rounding_tie(rep.second_moment, places) || rounding_tie(rep.second_moment, 9)) {
          ok = false;
          detail = "rounding tie at c=" + std::to_string(c);
          return;
        }
        if (decimal_render(rep.second_moment, places) != printed) {
          ok = false;
          detail = "c=" + std::to_string(c) + " rendered=" +
                   decimal_render(rep.second_moment, places) + " expected=" + printed;
          return;
        }
      }
    };
    check_table(variance_reference_even());
    if (ok) check_table(variance_reference_odd());
    // Spot-pinned 9-place strings.
    if (ok && moments(tri202.row(8), Centering::paper_center).rendered != "3.428571429") {
      ok = false;
      detail = "9-place render of c=8 changed";
    }
    if (ok && moments(tri202.row(13), Centering::paper_center).rendered != "8.332357247") {
      ok = false;
      detail = "9-place render of c=13 changed";
    }
    report("variance-tables", ok, detail);
  }

  // --- Second-moment gap stabilizes: even c in [16, 60]. ---
  {
    bool ok = true;
    std::string detail;
    ExactRational prev;
    bool have_prev = false;
    ExactRational last;
    for (int c = 16; c <= 60; c += 2) {
      const ExactRational gap =
          ExactRational(c) - moments(tri202.row(c), Centering::paper_center).second_moment;
      if (have_prev && !within_decimal(gap - prev, 8)) {
        ok = false;
        detail = "consecutive gap moved more than 1e-8 at c=" + std::to_string(c);
        break;
      }
      prev = gap;
      have_prev = true;
      last = gap;
    }
    if (ok && decimal_render(last, 8) != "4.66373626") {
      ok = false;
      detail = "stabilized value renders as " + decimal_render(last, 8);
    }
    if (ok) {
      std::ostringstream os;
      os << "c=60 exact gap " << last << " ~ " << decimal_render(last, 8);
      detail = os.str();
    }
    report("moment-gap-stability", ok, detail);
  }

  // --- CLT convergence diagnostics. ---
  {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    double prev_sup = 2.0;
    std::ostringstream sups;
    for (int c : {20, 40, 80, 160}) {
      const CltReport rep = clt_report(c);
      if (rep.sup_distance >= prev_sup) {
        ok = false;
        detail = "sup distance did not decrease at c=" + std::to_string(c);
      }
      prev_sup = rep.sup_distance;
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", rep.sup_distance);
      sups << (c == 20 ? "" : " > ") << buf;
    }
    if (ok) detail = sups.str();
    const CensusCounts cen40 = census(40);
    const ExactRational width = ExactRational(cen40.tp) / ExactRational(2 * cen40.k);
    if (width * 10000 >= 1) {
      ok = false;
      detail = "k-CDF interval width at c=40 is not below 1e-4";
    }
    const double ms = ms_since(start);
    if (ok && ms >= 30000.0) {
      ok = false;
      detail = "budget exceeded: " + ms_str(ms);
    }
    report("clt-convergence", ok, detail);
  }

  // --- Normal CDF accuracy against the independent series oracle. ---
  {
    bool ok = true;
    std::string detail;
    if (std::fabs(phi(0.0) - 0.5) > 1e-15) {
      ok = false;
      detail = "phi(0) off";
    }
    const double oracle_at_one = static_cast<double>(phi_oracle(1.0L));
    if (std::fabs(oracle_at_one - 0.841344746069) > 1e-12) {
      ok = false;
      detail = "oracle disagrees with the pinned constant";
    }
    if (std::fabs(phi(1.0) - 0.841344746069) > 1e-9) {
      ok = false;
      detail = "phi(1) off";
    }
    if (std::fabs(phi(1.0) - oracle_at_one) > 1e-12) {
      ok = false;
      detail = "phi(1) disagrees with the oracle";
    }
    report("phi-accuracy", ok, detail);
  }

  // --- Fault injection: a perturbed golden cell must fail verify, named. ---
  {
    bool ok = true;
    std::string detail;
    for (const SignatureRow& row : golden_table().rows) {
      for (const auto& [sigma, value] : row.counts) {
        for (long long delta : {+1LL, -1LL}) {
          const VerifyReport rep = run_verify(14, TamperSpec{row.c, sigma, delta});
          const std::string needle =
              "golden-table c=" + std::to_string(row.c) + " sigma=" + std::to_string(sigma);
          if (rep.ok || rep.text.find(needle) == std::string::npos) {
            ok = false;
            detail = "tamper not caught at c=" + std::to_string(row.c) +
                     " sigma=" + std::to_string(sigma);
          }
        }
      }
    }
    report("fault-injection-library", ok, detail);
  }

  // --- CLI contract: exit codes 0 / 1 / 2 and named failures. ---
  {
    bool ok = true;
    std::string detail;
    const std::string cli = KNOTSIG_CLI_PATH;
    if (cli.empty()) {
      ok = false;
      detail = "CLI path not configured";
    } else {
      const CommandResult clean = run_command(cli + " verify --c-max 14");
      if (clean.exit_code != 0 || clean.output.find("0 failures") == std::string::npos) {
        ok = false;
        detail = "clean verify should exit 0";
      }
      const CommandResult tampered = run_command(cli + " verify --c-max 14 --tamper 10:0:1");
      if (tampered.exit_code != 1 ||
          tampered.output.find("golden-table c=10 sigma=0") == std::string::npos) {
        ok = false;
        detail = "tampered verify should exit 1 and name the cell";
      }
      const CommandResult usage = run_command(cli + " row --c 2");
      if (usage.exit_code != 2) {
        ok = false;
        detail = "row --c 2 should exit 2, got " + std::to_string(usage.exit_code);
      }
      const CommandResult small = run_command(cli + " verify --c-max 13");
      if (small.exit_code != 2) {
        ok = false;
        detail = "verify --c-max 13 should exit 2";
      }
    }
    report("cli-exit-codes", ok, detail);
  }

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
  } else {
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  }
  return failures;
}
