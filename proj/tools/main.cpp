#include "knotsig/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <set>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write output to a file instead of stdout");
}

int emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << opts.out << " for writing\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

knotsig::Format format_of(const CommonOpts& opts) {
  return *knotsig::parse_format(opts.format);  // membership already validated
}

knotsig::Centering parse_centering(const std::string& name) {
  if (name == "paper_center") return knotsig::Centering::paper_center;
  return knotsig::Centering::true_central;
}

knotsig::Normalization parse_normalization(const std::string& name) {
  if (name == "measured") return knotsig::Normalization::measured;
  return knotsig::Normalization::sqrt_c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact census and signature statistics for 2-bridge knots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(knotsig::kToolVersion));

  // row
  auto* row_cmd = app.add_subcommand("row", "One signature row, computed by both methods");
  int row_c = 0;
  CommonOpts row_opts;
  row_cmd->add_option("--c", row_c, "Crossing number (>= 3)")->required();
  add_common(row_cmd, row_opts);

  // triangle
  auto* tri_cmd = app.add_subcommand("triangle", "Signature rows c = 3 .. c_max");
  int tri_cmax = 14;
  std::string tri_method = "both";
  CommonOpts tri_opts;
  tri_cmd->add_option("--c-max", tri_cmax, "Largest crossing number")->capture_default_str();
  tri_cmd->add_option("--method", tri_method, "Computation route")
      ->check(CLI::IsMember({"recursive", "closed", "both"}))
      ->capture_default_str();
  add_common(tri_cmd, tri_opts);

  // counts
  auto* counts_cmd = app.add_subcommand("counts", "Census sizes |T|, |K|, |Tp| per crossing number");
  int counts_from = 3, counts_to = 20;
  CommonOpts counts_opts;
  counts_cmd->add_option("--from", counts_from, "First crossing number (>= 3)")
      ->capture_default_str();
  counts_cmd->add_option("--to", counts_to, "Last crossing number")->capture_default_str();
  add_common(counts_cmd, counts_opts);

  // variance
  auto* var_cmd = app.add_subcommand("variance", "Second moments of the signature rows");
  int var_from = 6, var_to = 20;
  std::string var_convention = "paper_center";
  CommonOpts var_opts;
  var_cmd->add_option("--from", var_from, "First crossing number (>= 6)")->capture_default_str();
  var_cmd->add_option("--to", var_to, "Last crossing number")->capture_default_str();
  var_cmd->add_option("--convention", var_convention, "Centering convention")
      ->check(CLI::IsMember({"paper_center", "true_central"}))
      ->capture_default_str();
  add_common(var_cmd, var_opts);

  // clt
  auto* clt_cmd = app.add_subcommand("clt", "Normalized signature CDF against the Gaussian");
  std::vector<int> clt_cs;
  std::string clt_norm = "sqrt_c";
  CommonOpts clt_opts;
  clt_cmd->add_option("--c", clt_cs, "Crossing numbers (repeatable, each >= 3)")->required();
  clt_cmd->add_option("--normalization", clt_norm, "Scale for sigma/scale")
      ->check(CLI::IsMember({"sqrt_c", "measured"}))
      ->capture_default_str();
  add_common(clt_cmd, clt_opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the full verification battery");
  int verify_cmax = 50;
  std::string tamper_arg;
  std::string verify_out;
  verify_cmd->add_option("--c-max", verify_cmax, "Check rows up to this crossing number (>= 14)")
      ->capture_default_str();
  verify_cmd->add_option("--tamper", tamper_arg, "c:sigma:delta fault injection into the golden table")
      ->group("");  // hidden; exists for robustness testing
  verify_cmd->add_option("--out", verify_out, "Write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (row_cmd->parsed()) {
      knotsig::Triangle tri = knotsig::triangle(row_c, knotsig::Method::both);
      knotsig::Triangle one;
      one.rows.push_back(tri.row(row_c));
      return emit(row_opts, render_triangle(one, format_of(row_opts), knotsig::Method::both));
    }

    if (tri_cmd->parsed()) {
      knotsig::Method method = tri_method == "recursive" ? knotsig::Method::recursive
                               : tri_method == "closed"  ? knotsig::Method::closed
                                                         : knotsig::Method::both;
      knotsig::Triangle tri = knotsig::triangle(tri_cmax, method);
      return emit(tri_opts, render_triangle(tri, format_of(tri_opts), method));
    }

    if (counts_cmd->parsed()) {
      if (counts_from < 3 || counts_from > counts_to)
        throw std::domain_error("counts: need 3 <= from <= to");
      std::vector<knotsig::CensusCounts> rows;
      for (int c = counts_from; c <= counts_to; ++c) rows.push_back(knotsig::census(c));
      return emit(counts_opts, render_counts(rows, format_of(counts_opts)));
    }

    if (var_cmd->parsed()) {
      if (var_from < 6 || var_from > var_to)
        throw std::domain_error("variance: need 6 <= from <= to");
      const knotsig::Centering convention = parse_centering(var_convention);
      knotsig::Triangle tri = knotsig::triangle(var_to, knotsig::Method::both);
      std::vector<knotsig::MomentReport> rows;
      for (int c = var_from; c <= var_to; ++c)
        rows.push_back(knotsig::moments(tri.row(c), convention));
      return emit(var_opts, render_moments(rows, format_of(var_opts)));
    }

    if (clt_cmd->parsed()) {
      const knotsig::Normalization norm = parse_normalization(clt_norm);
      std::set<int> unique(clt_cs.begin(), clt_cs.end());
      for (int c : unique)
        if (c < 3) throw std::domain_error("clt: every c must be >= 3");
      // Independent per c; fan out and emit in ascending order.
      std::vector<std::future<knotsig::CltSection>> futures;
      for (int c : unique)
        futures.push_back(std::async(std::launch::async,
                                     [c, norm] { return knotsig::make_clt_section(c, norm); }));
      std::vector<knotsig::CltSection> sections;
      for (auto& f : futures) sections.push_back(f.get());
      return emit(clt_opts, render_clt(sections, format_of(clt_opts)));
    }

    if (verify_cmd->parsed()) {
      std::optional<knotsig::TamperSpec> tamper;
      if (!tamper_arg.empty()) {
        knotsig::TamperSpec spec;
        if (std::sscanf(tamper_arg.c_str(), "%d:%d:%lld", &spec.c, &spec.sigma, &spec.delta) != 3 ||
            spec.c < 3 || spec.c > 14)
          throw std::domain_error("verify: --tamper wants c:sigma:delta with 3 <= c <= 14");
        tamper = spec;
      }
      const knotsig::VerifyReport report = knotsig::run_verify(verify_cmax, tamper);
      CommonOpts opts;
      opts.out = verify_out;
      const int emit_rc = emit(opts, report.text);
      if (emit_rc != kExitOk) return emit_rc;
      return report.ok ? kExitOk : kExitVerifyFailure;
    }
  } catch (const knotsig::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitVerifyFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return kExitOk;
}
