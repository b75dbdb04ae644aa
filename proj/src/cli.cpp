#include "quadproj/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "quadproj/conic_metrics.hpp"
#include "quadproj/errors.hpp"
#include "quadproj/plane_sections.hpp"
#include "quadproj/quadric.hpp"
#include "quadproj/stereographic.hpp"
#include "quadproj/theorem_suite.hpp"

namespace quadproj::cli {

namespace {

using nlohmann::ordered_json;

/// Bad command-line content; always exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

constexpr int kDefaultSampleCount = 64;
constexpr std::array<double, 5> kRemarkFractions = {0.0, 0.5, 0.9, 0.99, 0.999};

double parse_real(std::string_view text) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw UsageError("not a finite number: '" + std::string(text) + "'");
  return value;
}

std::vector<double> parse_tuple(std::string_view text, std::size_t arity, std::string_view what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != arity)
    throw UsageError(fmt::format("{} expects {} comma-separated numbers, got '{}'", what, arity, text));
  return values;
}

std::vector<std::vector<double>> read_tuples(const std::string& path, std::size_t arity) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || std::isalpha(static_cast<unsigned char>(line.front()))) continue;  // blank or header
    rows.push_back(parse_tuple(line, arity, "input row"));
  }
  return rows;
}

std::vector<double> parse_sweep(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t colon; (colon = text.find(':', start)) != std::string_view::npos; start = colon + 1)
    parts.push_back(text.substr(start, colon - start));
  parts.push_back(text.substr(start));
  if (parts.size() != 3) throw UsageError("--d-sweep expects start:stop:count");
  const double lo = parse_real(parts[0]);
  const double hi = parse_real(parts[1]);
  int count = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1)
    throw UsageError("--d-sweep count must be a positive integer");
  std::vector<double> ds;
  for (int i = 0; i < count; ++i) ds.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return ds;
}

ordered_json quadric_json(const Quadric& q) {
  return {{"kind", to_string(q.kind)}, {"a", q.a}, {"b", q.b}, {"c", q.c}};
}

ordered_json ellipse_json(const SectionEllipse& e) {
  return {{"semi_x", e.semi_x}, {"semi_y", e.semi_y}, {"plane_height", e.plane_height}};
}

std::string join(std::initializer_list<std::string> fields) {
  std::string line;
  for (const std::string& f : fields) {
    if (!line.empty()) line += ',';
    line += f;
  }
  return line + '\n';
}

std::string num(double v) { return format_number(v); }
std::string flag(bool b) { return b ? "true" : "false"; }

/// Options shared by every subcommand; filled by CLI11.
struct CommonArgs {
  std::string ellipsoid;
  std::string paraboloid;
  std::string format = "csv";
  std::string out_path;

  Format parsed_format() const { return format == "json" ? Format::Json : Format::Csv; }

  Quadric quadric() const {
    if (ellipsoid.empty() == paraboloid.empty())
      throw UsageError("give exactly one of --ellipsoid a,b,c or --paraboloid a,b,c");
    const bool is_ellipsoid = !ellipsoid.empty();
    const auto abc = parse_tuple(is_ellipsoid ? ellipsoid : paraboloid, 3,
                                 is_ellipsoid ? "--ellipsoid" : "--paraboloid");
    Quadric q{is_ellipsoid ? QuadricKind::Ellipsoid : QuadricKind::EllipticParaboloid, abc[0], abc[1], abc[2]};
    try {
      validate(q);
    } catch (const GeometryError& e) {
      throw UsageError(e.what());
    }
    return q;
  }
};

void add_common(CLI::App* sub, CommonArgs& args, bool with_quadric = true) {
  if (with_quadric) {
    sub->add_option("--ellipsoid", args.ellipsoid, "Ellipsoid semi-axes a,b,c");
    sub->add_option("--paraboloid", args.paraboloid, "Paraboloid coefficients a,b,c (z = c - x²/a² - y²/b²)");
  }
  sub->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", args.out_path, "Write output to this file instead of stdout");
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the document to emit.

std::string cmd_project(const CommonArgs& common, const std::vector<std::string>& points, const std::string& input) {
  const Quadric q = common.quadric();
  std::vector<std::vector<double>> uv;
  for (const auto& p : points) uv.push_back(parse_tuple(p, 2, "--point"));
  if (!input.empty())
    for (auto& row : read_tuples(input, 2)) uv.push_back(std::move(row));
  if (uv.empty()) throw UsageError("project needs --point u,v or --input file");

  std::string csv = "u,v,x,y,z\n";
  ordered_json rows = ordered_json::array();
  for (const auto& p : uv) {
    const SurfacePoint s = project_to_surface(q, {p[0], p[1]});
    csv += join({num(p[0]), num(p[1]), num(s.x), num(s.y), num(s.z)});
    rows.push_back({{"u", p[0]}, {"v", p[1]}, {"x", s.x}, {"y", s.y}, {"z", s.z}});
  }
  if (common.parsed_format() == Format::Csv) return csv;
  return ordered_json{{"quadric", quadric_json(q)}, {"points", rows}}.dump(2) + '\n';
}

std::string cmd_invert(const CommonArgs& common, const std::vector<std::string>& points, const std::string& input,
                       double tol) {
  const Quadric q = common.quadric();
  if (!(tol >= 0)) throw UsageError("--tol must be non-negative");
  std::vector<std::vector<double>> xyz;
  for (const auto& p : points) xyz.push_back(parse_tuple(p, 3, "--point"));
  if (!input.empty())
    for (auto& row : read_tuples(input, 3)) xyz.push_back(std::move(row));
  if (xyz.empty()) throw UsageError("invert needs --point x,y,z or --input file");

  std::string csv = "x,y,z,u,v\n";
  ordered_json rows = ordered_json::array();
  for (const auto& p : xyz) {
    const PlanePoint uv = project_to_plane(q, {p[0], p[1], p[2]}, tol);
    csv += join({num(p[0]), num(p[1]), num(p[2]), num(uv.u), num(uv.v)});
    rows.push_back({{"x", p[0]}, {"y", p[1]}, {"z", p[2]}, {"u", uv.u}, {"v", uv.v}});
  }
  if (common.parsed_format() == Format::Csv) return csv;
  return ordered_json{{"quadric", quadric_json(q)}, {"points", rows}}.dump(2) + '\n';
}

struct EllipseSummary {
  SectionEllipse ellipse;
  double eccentricity, focal_half_distance, area, perimeter;
};

EllipseSummary summarize(const SectionEllipse& e, double rel_tol) {
  return {e, eccentricity(e), focal_half_distance(e), ellipse_area(e), ellipse_perimeter(e, rel_tol)};
}

const std::string kSampleHeader = "curve,t,x,y,z\n";

void append_samples(const Quadric& q, double d, int n, std::string& csv, ordered_json& rows) {
  const auto emit = [&](const char* curve, const SectionEllipse& e) {
    for (const CurveSample& s : sample_curve(e, n)) {
      csv += join({curve, num(s.t), num(s.point.u), num(s.point.v), num(e.plane_height)});
      rows.push_back({{"curve", curve}, {"t", s.t}, {"x", s.point.u}, {"y", s.point.v}, {"z", e.plane_height}});
    }
  };
  emit("section", section_ellipse(q, d));
  emit("projection", projected_ellipse(q, d));
}

std::string cmd_section(const CommonArgs& common, std::optional<double> d, std::optional<int> samples) {
  const Quadric q = common.quadric();
  if (!d) throw UsageError("section needs --d");
  if (samples && *samples < 3) throw GeometryError(Errc::InvalidSampleCount, "--samples must be at least 3");
  const EllipseSummary section = summarize(section_ellipse(q, *d), kDefaultArcLengthRelTol);
  const EllipseSummary projection = summarize(projected_ellipse(q, *d), kDefaultArcLengthRelTol);

  std::string csv = "ellipse,semi_x,semi_y,plane_height,eccentricity,focal_half_distance,area,perimeter\n";
  ordered_json doc{{"quadric", quadric_json(q)}, {"d", *d}, {"scale", projection_scale(q, *d)}};
  for (const auto& [name, s] : {std::pair{"section", section}, std::pair{"projection", projection}}) {
    csv += join({name, num(s.ellipse.semi_x), num(s.ellipse.semi_y), num(s.ellipse.plane_height), num(s.eccentricity),
                 num(s.focal_half_distance), num(s.area), num(s.perimeter)});
    ordered_json e = ellipse_json(s.ellipse);
    e["eccentricity"] = s.eccentricity;
    e["focal_half_distance"] = s.focal_half_distance;
    e["area"] = s.area;
    e["perimeter"] = s.perimeter;
    doc[name] = e;
  }
  if (samples) {
    ordered_json rows = ordered_json::array();
    csv += '\n' + kSampleHeader;
    append_samples(q, *d, *samples, csv, rows);
    doc["samples"] = rows;
  }
  return common.parsed_format() == Format::Csv ? csv : doc.dump(2) + '\n';
}

std::string cmd_metrics(const CommonArgs& common, const std::string& semi, const std::vector<double>& angles,
                        double rel_tol) {
  if (semi.empty()) throw UsageError("metrics needs --semi A,B");
  if (!(rel_tol > 0)) throw UsageError("--tol must be positive");
  const auto ab = parse_tuple(semi, 2, "--semi");
  if (!(ab[0] > 0 && ab[1] > 0)) throw UsageError("--semi axes must be positive");
  const SectionEllipse e{ab[0], ab[1], 0};
  const EllipseSummary s = summarize(e, rel_tol);

  std::string csv = "semi_x,semi_y,eccentricity,focal_half_distance,area,perimeter\n";
  csv += join({num(e.semi_x), num(e.semi_y), num(s.eccentricity), num(s.focal_half_distance), num(s.area),
               num(s.perimeter)});
  ordered_json doc = ellipse_json(e);
  doc["eccentricity"] = s.eccentricity;
  doc["focal_half_distance"] = s.focal_half_distance;
  doc["area"] = s.area;
  doc["perimeter"] = s.perimeter;
  if (!angles.empty()) {
    csv += "\nt,curvature\n";
    ordered_json rows = ordered_json::array();
    for (double t : angles) {
      const double k = ellipse_curvature(e, CurveAngle(t));
      csv += join({num(t), num(k)});
      rows.push_back({{"t", t}, {"curvature", k}});
    }
    doc["curvature"] = rows;
  }
  return common.parsed_format() == Format::Csv ? csv : doc.dump(2) + '\n';
}

ordered_json report_json(const TheoremReport& r) {
  ordered_json j;
  j["theorem_id"] = to_string(r.theorem_id);
  j["quadric"] = quadric_json(r.quadric);
  j["d"] = r.d;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (!r.lhs_samples.empty()) {
    j["lhs_samples"] = r.lhs_samples;
    j["rhs_samples"] = r.rhs_samples;
  }
  j["expected_ratio"] = r.expected_ratio;
  j["max_abs_error"] = r.max_abs_error;
  j["tolerance"] = r.tolerance;
  j["oracle_error"] = r.oracle_error;
  j["oracle_tolerance"] = r.oracle_tolerance;
  j["pass"] = r.pass;
  return j;
}

ordered_json remark_json(const RemarkReport& r) {
  return {{"quadric", quadric_json(r.quadric)},
          {"d_values", r.d_values},
          {"curvature_trend", r.curvature_trend},
          {"length_trend", r.length_trend},
          {"area_trend", r.area_trend},
          {"area_ratio_trend", r.area_ratio_trend},
          {"monotone_flags",
           {{"curvature_decreasing", r.monotone_flags.curvature_decreasing},
            {"length_increasing", r.monotone_flags.length_increasing},
            {"area_increasing", r.monotone_flags.area_increasing}}},
          {"pass", r.pass}};
}

struct VerifyOutcome {
  std::string document;
  bool all_pass;
};

VerifyOutcome cmd_verify(const CommonArgs& common, const std::vector<double>& d_list, const std::string& sweep,
                         std::optional<int> samples, std::optional<double> tol, bool remark) {
  const Quadric q = common.quadric();
  std::vector<double> ds = d_list;
  if (!sweep.empty())
    for (double d : parse_sweep(sweep)) ds.push_back(d);
  if (ds.empty()) throw UsageError("verify needs --d or --d-sweep");

  VerifyOptions options;
  if (samples) options.curvature_samples = *samples;
  if (tol) {
    if (!(*tol > 0)) throw UsageError("--tol must be positive");
    options.eccentricity_tol = options.curvature_rel_tol = options.arclength_rel_tol = options.area_rel_tol = *tol;
  }

  bool all_pass = true;
  std::string csv =
      "theorem,kind,a,b,c,d,lhs,rhs,expected_ratio,max_abs_error,tolerance,oracle_error,oracle_tolerance,pass\n";
  ordered_json reports = ordered_json::array();
  for (double d : ds) {
    for (const TheoremReport& r : verify_all(q, d, options)) {
      all_pass = all_pass && r.pass;
      csv += join({std::string(to_string(r.theorem_id)), std::string(to_string(q.kind)), num(q.a), num(q.b),
                   num(q.c), num(d), num(r.lhs), num(r.rhs), num(r.expected_ratio), num(r.max_abs_error),
                   num(r.tolerance), num(r.oracle_error), num(r.oracle_tolerance), flag(r.pass)});
      reports.push_back(report_json(r));
    }
  }
  ordered_json doc{{"reports", reports}};

  if (remark) {
    std::vector<double> scan;
    for (double f : kRemarkFractions) scan.push_back(f * q.c);
    const RemarkReport rr = remark_scan(q, scan);
    all_pass = all_pass && rr.pass;
    csv += "\nd,curvature_trend,length_trend,area_trend,area_ratio_trend\n";
    for (std::size_t i = 0; i < rr.d_values.size(); ++i)
      csv += join({num(rr.d_values[i]), num(rr.curvature_trend[i]), num(rr.length_trend[i]), num(rr.area_trend[i]),
                   num(rr.area_ratio_trend[i])});
    csv += "\ncurvature_decreasing,length_increasing,area_increasing,pass\n";
    csv += join({flag(rr.monotone_flags.curvature_decreasing), flag(rr.monotone_flags.length_increasing),
                 flag(rr.monotone_flags.area_increasing), flag(rr.pass)});
    doc["remark"] = remark_json(rr);
  }
  doc["all_pass"] = all_pass;
  return {common.parsed_format() == Format::Csv ? csv : doc.dump(2) + '\n', all_pass};
}

std::string cmd_sample(const CommonArgs& common, std::optional<double> d, int samples) {
  const Quadric q = common.quadric();
  if (!d) throw UsageError("sample needs --d");
  if (samples < 3) throw GeometryError(Errc::InvalidSampleCount, "--samples must be at least 3");
  std::string csv = kSampleHeader;
  ordered_json rows = ordered_json::array();
  append_samples(q, *d, samples, csv, rows);
  if (common.parsed_format() == Format::Csv) return csv;
  return ordered_json{{"quadric", quadric_json(q)}, {"d", *d}, {"samples", rows}}.dump(2) + '\n';
}

std::string show_defaults() {
  const VerifyOptions v;
  std::string s = "name,value\n";
  s += join({"membership_tol", num(kDefaultMembershipTol)});
  s += join({"pole_rel_threshold", num(kPoleRelThreshold)});
  s += join({"arc_length_rel_tol", num(kDefaultArcLengthRelTol)});
  s += join({"quadrature_budget", std::to_string(kDefaultQuadratureBudget)});
  s += join({"sample_count", std::to_string(kDefaultSampleCount)});
  s += join({"eccentricity_tol", num(v.eccentricity_tol)});
  s += join({"curvature_samples", std::to_string(v.curvature_samples)});
  s += join({"curvature_rel_tol", num(v.curvature_rel_tol)});
  s += join({"arclength_rel_tol", num(v.arclength_rel_tol)});
  s += join({"area_rel_tol", num(v.area_rel_tol)});
  s += join({"area_oracle_samples", std::to_string(v.area_oracle_samples)});
  s += join({"area_oracle_rel_tol", num(v.area_oracle_rel_tol)});
  std::string fractions;
  for (double f : kRemarkFractions) fractions += (fractions.empty() ? "" : ";") + num(f);
  s += join({"remark_scan_fractions_of_c", fractions});
  return s;
}

int domain_exit(Errc code) {
  switch (code) {
    case Errc::InvalidSampleCount:
    case Errc::InvalidArgument:
    case Errc::NonPositiveAxis:
      return kUsageError;
    default:
      return kDomainError;
  }
}

}  // namespace

std::string format_number(double value) {
  if (value == 0) return "0";
  return fmt::format("{:.17g}", value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stereographic projections of the ellipsoid and elliptic paraboloid"};
  app.name("quadproj");
  bool defaults = false;
  app.add_flag("--show-defaults", defaults, "Print every default tolerance and sample count");

  CommonArgs common;
  std::vector<std::string> points;
  std::string input;
  double tol_invert = kDefaultMembershipTol;
  std::optional<double> d;
  std::optional<int> samples;
  std::optional<double> tol;
  std::vector<double> d_list;
  std::string sweep;
  bool remark = false;
  std::string semi;
  std::vector<double> angles;
  double metrics_tol = kDefaultArcLengthRelTol;
  int sample_count = kDefaultSampleCount;

  CLI::App* project = app.add_subcommand("project", "Map plane points (u,v) onto the quadric");
  add_common(project, common);
  project->add_option("--point", points, "u,v (repeatable)");
  project->add_option("--input", input, "CSV file of u,v rows");

  CLI::App* invert = app.add_subcommand("invert", "Map quadric points (x,y,z) to the plane");
  add_common(invert, common);
  invert->add_option("--point", points, "x,y,z (repeatable)");
  invert->add_option("--input", input, "CSV file of x,y,z rows");
  invert->add_option("--tol", tol_invert, "Membership tolerance on the implicit residual");

  CLI::App* section = app.add_subcommand("section", "Horizontal section z=d and its projected ellipse");
  add_common(section, common);
  section->add_option("--d", d, "Section height");
  section->add_option("--samples", samples, "Also emit this many boundary samples per ellipse");

  CLI::App* metrics = app.add_subcommand("metrics", "Eccentricity, area, perimeter and curvature of an ellipse");
  add_common(metrics, common, false);
  metrics->add_option("--semi", semi, "Semi-axes A,B");
  metrics->add_option("--t", angles, "Curve angle for curvature (repeatable)");
  metrics->add_option("--tol", metrics_tol, "Relative tolerance of the perimeter quadrature");

  CLI::App* verify = app.add_subcommand("verify", "Check the eccentricity, curvature, length and area relations");
  add_common(verify, common);
  verify->add_option("--d", d_list, "Section height (repeatable)");
  verify->add_option("--d-sweep", sweep, "start:stop:count evenly spaced heights");
  verify->add_option("--samples", samples, "Angles sampled by the curvature check");
  verify->add_option("--tol", tol, "Override every check's tolerance");
  verify->add_flag("--remark", remark, "Append the scan toward the pole");

  CLI::App* sample = app.add_subcommand("sample", "Plot-ready boundary samples of the section and its projection");
  add_common(sample, common);
  sample->add_option("--d", d, "Section height");
  sample->add_option("--samples", sample_count, "Samples per ellipse");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    std::string document;
    int status = kSuccess;
    if (defaults) {
      document = show_defaults();
    } else if (project->parsed()) {
      document = cmd_project(common, points, input);
    } else if (invert->parsed()) {
      document = cmd_invert(common, points, input, tol_invert);
    } else if (section->parsed()) {
      document = cmd_section(common, d, samples);
    } else if (metrics->parsed()) {
      document = cmd_metrics(common, semi, angles, metrics_tol);
    } else if (verify->parsed()) {
      VerifyOutcome outcome = cmd_verify(common, d_list, sweep, samples, tol, remark);
      document = std::move(outcome.document);
      if (!outcome.all_pass) status = kVerificationFailed;
    } else if (sample->parsed()) {
      document = cmd_sample(common, d, sample_count);
    } else {
      err << app.help();
      return kUsageError;
    }

    if (common.out_path.empty()) {
      out << document;
    } else {
      std::ofstream file(common.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + common.out_path + "'");
      file << document;
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return domain_exit(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace quadproj::cli
