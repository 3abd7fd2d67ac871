#include "knotsig/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace knotsig {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string rat_str(const ExactRational& q) {
  std::ostringstream os;
  os << q;
  return os.str();  // "p/q", or "p" when the denominator is 1
}

std::string num_str(const ExactRational& q) {
  return boost::multiprecision::numerator(q).str();
}

std::string den_str(const ExactRational& q) {
  return boost::multiprecision::denominator(q).str();
}

// Floats are round-trippable; exactness everywhere else comes from digit
// strings, so these are only ever phi/t/sup values.
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::recursive: return "recursive";
    case Method::closed: return "closed";
    default: return "both";
  }
}

std::string centering_name(Centering c) {
  return c == Centering::paper_center ? "paper_center" : "true_central";
}

std::string normalization_name(Normalization n) {
  return n == Normalization::sqrt_c ? "sqrt_c" : "measured";
}

ordered_json json_envelope(const char* kind) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["kind"] = kind;
  return j;
}

std::string right_align(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string render_triangle(const Triangle& tri, Format format, Method method) {
  if (format == Format::csv) {
    std::ostringstream os;
    os << "c,sigma,count\n";
    for (const auto& row : tri.rows)
      for (const auto& [sigma, v] : row.counts) os << row.c << ',' << sigma << ',' << v << '\n';
    return os.str();
  }

  if (format == Format::json) {
    ordered_json j = json_envelope("triangle");
    j["method"] = method_name(method);
    j["schema"] = {{"exact", {"count"}}, {"float", ordered_json::array()}};
    ordered_json rows = ordered_json::array();
    for (const auto& row : tri.rows) {
      ordered_json r;
      r["c"] = row.c;
      ordered_json cells = ordered_json::array();
      for (const auto& [sigma, v] : row.counts)
        cells.push_back({{"sigma", sigma}, {"count", v.str()}});
      r["cells"] = cells;
      rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }

  // Table layout mirrors the reference triangle: one column per even
  // signature across the union of supports, blanks for zero cells.
  int lo = 0, hi = 0;
  std::size_t cell_w = 1;
  for (const auto& row : tri.rows) {
    lo = std::min(lo, row.min_sigma());
    hi = std::max(hi, row.max_sigma());
    for (const auto& [sigma, v] : row.counts) cell_w = std::max(cell_w, v.str().size());
  }
  for (int sigma = lo; sigma <= hi; sigma += 2)
    cell_w = std::max(cell_w, std::to_string(sigma).size());

  std::ostringstream os;
  std::string head = right_align("c\\sigma", 8);
  for (int sigma = lo; sigma <= hi; sigma += 2)
    head += "  " + right_align(std::to_string(sigma), cell_w);
  os << head << '\n';
  for (const auto& row : tri.rows) {
    std::string line = right_align(std::to_string(row.c), 8);
    for (int sigma = lo; sigma <= hi; sigma += 2) {
      line += "  ";
      auto it = row.counts.find(sigma);
      line += right_align(it == row.counts.end() ? "" : it->second.str(), cell_w);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string render_counts(const std::vector<CensusCounts>& rows, Format format) {
  auto ratio = [](const CensusCounts& r) {
    return ExactRational(r.t) / ExactRational(2 * r.k);
  };
  auto pow_ratio = [](const CensusCounts& r) {
    return ExactRational(ExactInt(1) << r.c) / ExactRational(r.t);
  };

  if (format == Format::csv) {
    std::ostringstream os;
    os << "c,T,K,Tp,t_over_2k,t_over_2k_rendered,pow2_over_t,pow2_over_t_rendered\n";
    for (const auto& r : rows)
      os << r.c << ',' << r.t << ',' << r.k << ',' << r.tp << ',' << rat_str(ratio(r)) << ','
         << decimal_render(ratio(r), 9) << ',' << rat_str(pow_ratio(r)) << ','
         << decimal_render(pow_ratio(r), 9) << '\n';
    return os.str();
  }

  if (format == Format::json) {
    ordered_json j = json_envelope("counts");
    j["schema"] = {{"exact", {"T", "K", "Tp", "t_over_2k", "pow2_over_t"}},
                   {"float", ordered_json::array()}};
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
      out.push_back({{"c", r.c},
                     {"T", r.t.str()},
                     {"K", r.k.str()},
                     {"Tp", r.tp.str()},
                     {"t_over_2k", rat_str(ratio(r))},
                     {"t_over_2k_rendered", decimal_render(ratio(r), 9)},
                     {"pow2_over_t", rat_str(pow_ratio(r))},
                     {"pow2_over_t_rendered", decimal_render(pow_ratio(r), 9)}});
    }
    j["rows"] = out;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"c", "|T|", "|K|", "|Tp|", "|T|/(2|K|)", "2^c/|T|"});
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.c), r.t.str(), r.k.str(), r.tp.str(),
                     decimal_render(ratio(r), 9), decimal_render(pow_ratio(r), 9)});
  std::vector<std::size_t> w(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += right_align(line[i], w[i]);
    }
    os << text << '\n';
  }
  return os.str();
}

std::string render_moments(const std::vector<MomentReport>& rows, Format format) {
  auto gap = [](const MomentReport& r) { return ExactRational(r.c) - r.second_moment; };

  if (format == Format::csv) {
    std::ostringstream os;
    os << "c,convention,value_num,value_den,rendered,gap_num,gap_den,gap_rendered\n";
    for (const auto& r : rows) {
      const ExactRational g = gap(r);
      os << r.c << ',' << centering_name(r.convention) << ',' << num_str(r.second_moment) << ','
         << den_str(r.second_moment) << ',' << r.rendered << ',' << num_str(g) << ','
         << den_str(g) << ',' << decimal_render(g, 9) << '\n';
    }
    return os.str();
  }

  if (format == Format::json) {
    ordered_json j = json_envelope("moments");
    j["schema"] = {{"exact", {"value", "mean", "gap"}}, {"float", ordered_json::array()}};
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
      const ExactRational g = gap(r);
      out.push_back({{"c", r.c},
                     {"convention", centering_name(r.convention)},
                     {"center", rat_str(r.center)},
                     {"mean", rat_str(r.mean)},
                     {"value", rat_str(r.second_moment)},
                     {"rendered", r.rendered},
                     {"gap", rat_str(g)},
                     {"gap_rendered", decimal_render(g, 9)}});
    }
    j["rows"] = out;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"c", "convention", "second_moment", "rendered", "c - value"});
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.c), centering_name(r.convention), rat_str(r.second_moment),
                     r.rendered, decimal_render(gap(r), 9)});
  std::vector<std::size_t> w(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += right_align(line[i], w[i]);
    }
    os << text << '\n';
  }
  return os.str();
}

CltSection make_clt_section(int c, Normalization normalization) {
  CltSection section;
  section.report = clt_report(c, normalization);
  section.counts = census(c);
  Triangle tri = triangle(c, Method::both);
  const SignatureRow& row = tri.row(c);
  section.bounds.reserve(section.report.points.size());
  for (const auto& p : section.report.points)
    section.bounds.push_back(k_cdf_bounds(row, section.counts, p.sigma));
  return section;
}

std::string render_clt(const std::vector<CltSection>& sections, Format format) {
  if (format == Format::csv) {
    std::ostringstream os;
    os << "c,sigma,t,F_left,F,phi,k_lower,k_upper,k_exact,sup_distance\n";
    for (const auto& s : sections) {
      for (std::size_t i = 0; i < s.report.points.size(); ++i) {
        const auto& p = s.report.points[i];
        const auto& b = s.bounds[i];
        os << s.report.c << ',' << p.sigma << ',' << fmt_double(p.t) << ',' << rat_str(p.F_left)
           << ',' << rat_str(p.F) << ',' << fmt_double(p.phi) << ',' << rat_str(b.lower) << ','
           << rat_str(b.upper) << ',' << (b.exact ? rat_str(*b.exact) : std::string()) << ','
           << fmt_double(s.report.sup_distance) << '\n';
      }
    }
    return os.str();
  }

  if (format == Format::json) {
    ordered_json j = json_envelope("clt");
    j["schema"] = {{"exact", {"F_left", "F", "k_lower", "k_upper", "k_exact"}},
                   {"float", {"t", "phi", "sup_distance", "scale"}}};
    ordered_json reports = ordered_json::array();
    for (const auto& s : sections) {
      ordered_json r;
      r["c"] = s.report.c;
      r["normalization"] = normalization_name(s.report.normalization);
      r["scale"] = s.report.scale;
      r["sup_distance"] = s.report.sup_distance;
      r["interval_width"] = rat_str(ExactRational(s.counts.tp) / ExactRational(2 * s.counts.k));
      ordered_json points = ordered_json::array();
      for (std::size_t i = 0; i < s.report.points.size(); ++i) {
        const auto& p = s.report.points[i];
        const auto& b = s.bounds[i];
        ordered_json q = {{"sigma", p.sigma},     {"t", p.t},
                          {"F_left", rat_str(p.F_left)}, {"F", rat_str(p.F)},
                          {"phi", p.phi},         {"k_lower", rat_str(b.lower)},
                          {"k_upper", rat_str(b.upper)}};
        if (b.exact) q["k_exact"] = rat_str(*b.exact);
        points.push_back(q);
      }
      r["points"] = points;
      reports.push_back(r);
    }
    j["reports"] = reports;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  for (const auto& s : sections) {
    os << "c=" << s.report.c << "  normalization=" << normalization_name(s.report.normalization)
       << "  scale=" << fmt_double(s.report.scale)
       << "  sup_distance=" << fmt_double(s.report.sup_distance) << '\n';
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"sigma", "t", "F_left", "F", "phi", "k_lower", "k_upper", "k_exact"});
    for (std::size_t i = 0; i < s.report.points.size(); ++i) {
      const auto& p = s.report.points[i];
      const auto& b = s.bounds[i];
      char tbuf[32], pbuf[32];
      std::snprintf(tbuf, sizeof(tbuf), "%.6f", p.t);
      std::snprintf(pbuf, sizeof(pbuf), "%.6f", p.phi);
      cells.push_back({std::to_string(p.sigma), tbuf, rat_str(p.F_left), rat_str(p.F), pbuf,
                       rat_str(b.lower), rat_str(b.upper),
                       b.exact ? rat_str(*b.exact) : std::string("-")});
    }
    std::vector<std::size_t> w(cells[0].size(), 0);
    for (const auto& line : cells)
      for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
    for (const auto& line : cells) {
      std::string text = "  ";
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) text += "  ";
        text += right_align(line[i], w[i]);
      }
      os << text << '\n';
    }
  }
  return os.str();
}

}  // namespace knotsig
