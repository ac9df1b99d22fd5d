#include "koebe/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <json.hpp>

#include "koebe/boundary.hpp"
#include "koebe/families.hpp"
#include "koebe/pullback.hpp"
#include "koebe/radius.hpp"

namespace koebe::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  Precision precision = kDefaultPrecision;
  Precision precision_cap = kDefaultPrecisionCap;
  std::string output;
  std::string format;
  std::string family = "pnew";
  int n = 1;
  int j = 1;
  int from = 1;
  int to = 0;
  int count = 1024;
  int grid = kDefaultMinGrid;
  int jobs = 0;
  bool resume = false;
  bool timing = true;
};

json real_json(const Real& x) { return {{"mid", x.decimal(17)}, {"radius", x.radius_decimal()}}; }

std::string fixed17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string short_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Output sink: the caller's stream or a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, std::ios::openmode mode = std::ios::trunc)
      : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::out | mode);
    if (!file_) throw IoError("cannot open output file: " + path);
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }
  void check() {
    out_->flush();
    if (!*out_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

FamilySpec family_spec(const Config& cfg) {
  FamilySpec spec;
  try {
    spec.family = parse_family(cfg.family);
    spec.degree = cfg.n;
    spec.j = cfg.j;
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::string resolve_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return *allowed.begin();
  for (const char* f : allowed) {
    if (cfg.format == f) return cfg.format;
  }
  throw UsageError("format '" + cfg.format + "' not supported by this command");
}

void apply_jobs(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

json certificate_json(const UnivalenceCertificate& c, bool timing) {
  json j;
  j["n"] = c.n;
  j["root_count"] = c.root_count_pos_axis ? json(*c.root_count_pos_axis) : json(nullptr);
  j["interior_sign"] = to_string(c.interior_sign);
  j["verdict"] = to_string(c.verdict);
  j["precision_used"] = c.precision_used;
  if (timing) j["wall_time"] = c.wall_time_seconds;
  return j;
}

int cmd_coeffs(const Config& cfg, std::ostream& out) {
  const FamilySpec spec = family_spec(cfg);
  const std::string format = resolve_format(cfg, {"json", "csv"});
  const RealPolynomial p = generate(spec, cfg.precision);
  Sink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  const std::size_t first = (p.size() > 0 && p[0].is_exact_zero()) ? 1 : 0;
  if (format == "json") {
    json arr = json::array();
    for (std::size_t k = first; k < p.size(); ++k) {
      json entry{{"k", k}};
      entry.update(real_json(p[k]));
      arr.push_back(std::move(entry));
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "k,mid,radius\n";
    for (std::size_t k = first; k < p.size(); ++k) {
      os << k << ',' << p[k].decimal(17) << ',' << p[k].radius_decimal() << '\n';
    }
  }
  sink.check();
  return kExitOk;
}

int cmd_certify(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  resolve_format(cfg, {"json"});
  const UnivalenceCertificate cert = certify_univalence(cfg.n, cfg.precision_cap, cfg.precision);
  Sink sink(cfg.output, out);
  sink.stream() << certificate_json(cert, cfg.timing).dump() << '\n';
  sink.check();
  return cert.certified() ? kExitOk : kExitUndecided;
}

const char* const kRadiusHeader =
    "N,upper_pn,suffridge_at_minus1,suffridge_boundary_min,psi_n,lower_rs,pn_boundary_min,"
    "certified";

int cmd_radius_table(const Config& cfg, std::ostream& out) {
  const int last = cfg.to > 0 ? cfg.to : cfg.n;
  const int first = cfg.to > 0 ? cfg.from : cfg.n;
  if (first < 1 || last < first) throw UsageError("empty or invalid N range");
  const std::string format = resolve_format(cfg, {"csv", "json"});
  apply_jobs(cfg.jobs);
  RadiusTableOptions opts;
  opts.precision = cfg.precision;
  opts.precision_cap = cfg.precision_cap;
  opts.grid = cfg.grid;
  opts.exec = cfg.jobs == 1 ? Execution::Serial : Execution::Parallel;
  const auto rows = radius_table(first, last, opts);

  Sink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  if (format == "csv") {
    os << kRadiusHeader << '\n';
    for (const RadiusReport& r : rows) {
      os << r.n << ',' << r.upper_pn.decimal(17) << ',' << r.suffridge_at_minus1.decimal(17)
         << ',' << r.suffridge_boundary_min.decimal(17) << ',' << r.psi_n.decimal(17) << ','
         << r.lower_rs.decimal(17) << ',' << r.boundary_min.decimal(17) << ','
         << (r.certified ? "true" : "false") << '\n';
    }
  } else {
    json arr = json::array();
    for (const RadiusReport& r : rows) {
      arr.push_back({{"N", r.n},
                     {"upper_pn", real_json(r.upper_pn)},
                     {"suffridge_at_minus1", real_json(r.suffridge_at_minus1)},
                     {"suffridge_boundary_min", real_json(r.suffridge_boundary_min)},
                     {"psi_n", real_json(r.psi_n)},
                     {"lower_rs", real_json(r.lower_rs)},
                     {"pn_boundary_min", real_json(r.boundary_min)},
                     {"certified", r.certified}});
    }
    os << arr.dump(2) << '\n';
  }
  sink.check();
  return kExitOk;
}

void write_svg(std::ostream& os, const BoundaryCurve& curve, double radius) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const CurveSample& s : curve.samples) {
    const double x = s.re, y = -s.im;
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const double mx = 0.05 * (xmax - xmin), my = 0.05 * (ymax - ymin);
  const double w = xmax - xmin + 2 * mx, h = ymax - ymin + 2 * my;
  const double stroke = 0.003 * std::max(w, h);

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << short_num(xmin - mx) << ' '
     << short_num(ymin - my) << ' ' << short_num(w) << ' ' << short_num(h) << "\">\n";
  if (curve.polynomial_id) os << "<title>" << curve.polynomial_id->label() << "</title>\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << short_num(stroke)
     << "\" points=\"";
  for (const CurveSample& s : curve.samples) os << short_num(s.re) << ',' << short_num(0.0 - s.im) << ' ';
  const CurveSample& s0 = curve.samples.front();
  os << short_num(s0.re) << ',' << short_num(0.0 - s0.im) << "\"/>\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"" << short_num(radius)
     << "\" fill=\"none\" stroke=\"red\" stroke-width=\"" << short_num(stroke) << "\"/>\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"" << short_num(3 * stroke) << "\" fill=\"blue\"/>\n";
  os << "</svg>\n";
}

int cmd_boundary(const Config& cfg, std::ostream& out) {
  const FamilySpec spec = family_spec(cfg);
  if (cfg.count < 8) throw UsageError("--count must be >= 8");
  const std::string format = resolve_format(cfg, {"csv", "svg"});
  apply_jobs(cfg.jobs);
  const Execution exec = cfg.jobs == 1 ? Execution::Serial : Execution::Parallel;
  const RealPolynomial p = generate(spec, cfg.precision);
  const BoundaryCurve curve = sample_curve(p, cfg.count, spec, exec);

  Sink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  if (format == "csv") {
    os << "t,re,im,abs\n";
    for (const CurveSample& s : curve.samples) {
      os << fixed17(s.t) << ',' << fixed17(s.re) << ',' << fixed17(s.im) << ',' << fixed17(s.abs)
         << '\n';
    }
  } else {
    const MinDistanceResult m = min_distance(p, cfg.grid, kDefaultRefineTolerance, exec);
    write_svg(os, curve, m.distance.mid_double());
  }
  sink.check();
  return kExitOk;
}

// Complete, parseable records of an earlier scan; summary lines dropped.
std::vector<json> read_scan_records(const std::string& path) {
  std::vector<json> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: interrupted write
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.contains("summary") || !j.contains("n")) continue;
    records.push_back(std::move(j));
  }
  return records;
}

int cmd_scan(const Config& cfg, std::ostream& out) {
  const int first = cfg.from;
  const int last = cfg.to > 0 ? cfg.to : cfg.n;
  if (first < 1 || last < first) throw UsageError("empty or invalid N range");
  resolve_format(cfg, {"json"});
  if (cfg.resume && cfg.output.empty()) throw UsageError("--resume requires --output");

  std::vector<json> existing;
  if (cfg.resume) existing = read_scan_records(cfg.output);
  std::set<int> done;
  for (const json& r : existing) done.insert(r["n"].get<int>());

  Sink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  for (const json& r : existing) os << r.dump() << '\n';
  sink.check();

  std::vector<int> todo;
  for (int n = first; n <= last; ++n) {
    if (!done.count(n)) todo.push_back(n);
  }
  std::map<int, bool> certified;
  for (const json& r : existing) {
    certified[r["n"].get<int>()] = r["verdict"] != to_string(Verdict::NotCertified);
  }

  const int count = static_cast<int>(todo.size());
  const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
  bool write_failed = false;
#pragma omp parallel for ordered schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    const UnivalenceCertificate cert =
        certify_univalence(todo[static_cast<std::size_t>(i)], cfg.precision_cap, cfg.precision);
#pragma omp ordered
    {
      os << certificate_json(cert, cfg.timing).dump() << '\n';
      os.flush();
      if (!os) write_failed = true;
      certified[cert.n] = cert.certified();
    }
  }
  if (write_failed) throw IoError("write failed");

  std::optional<int> largest, first_failure;
  for (int n = first; n <= last; ++n) {
    const auto it = certified.find(n);
    if (it == certified.end()) continue;
    if (it->second) {
      largest = n;
    } else if (!first_failure) {
      first_failure = n;
    }
  }
  json summary{{"summary", true},
               {"from", first},
               {"to", last},
               {"largest_certified_n", largest ? json(*largest) : json(nullptr)},
               {"first_not_certified_n", first_failure ? json(*first_failure) : json(nullptr)}};
  os << summary.dump() << '\n';
  sink.check();
  return first_failure ? kExitUndecided : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Univalent polynomial toolkit: coefficients, certificates, Koebe radii", "koebe"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--precision", cfg.precision, "working precision in bits")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--output", cfg.output, "write to this file instead of stdout");
  app.add_option("--format", cfg.format, "json, csv or svg (default depends on command)")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--jobs", cfg.jobs, "worker threads (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);

  auto family_options = [&cfg](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "fejer, alexander, suffridge, egervary-szasz, pnew");
    sub->add_option("--n", cfg.n, "degree N")->check(CLI::PositiveNumber);
    sub->add_option("--j", cfg.j, "Suffridge index j")->check(CLI::PositiveNumber);
  };
  auto cap_option = [&cfg](CLI::App* sub) {
    sub->add_option("--precision-cap", cfg.precision_cap, "escalation limit in bits")
        ->check(CLI::Range(64L, 1L << 20));
  };
  auto timing_flag = [&cfg](CLI::App* sub) {
    sub->add_flag("!--no-timing", cfg.timing, "omit wall_time for byte-reproducible output");
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "coefficients of a family member");
  family_options(coeffs);

  CLI::App* certify = app.add_subcommand("certify", "univalence certificate for P_N");
  certify->add_option("--n", cfg.n, "degree N")->check(CLI::PositiveNumber);
  cap_option(certify);
  timing_flag(certify);

  CLI::App* table = app.add_subcommand("radius-table", "Koebe radius bounds per N");
  table->add_option("--n", cfg.n, "single degree N")->check(CLI::PositiveNumber);
  table->add_option("--from", cfg.from, "first N")->check(CLI::PositiveNumber);
  table->add_option("--to", cfg.to, "last N")->check(CLI::PositiveNumber);
  table->add_option("--grid", cfg.grid, "boundary grid for minimum search")
      ->check(CLI::Range(64, 1 << 24));
  cap_option(table);

  CLI::App* boundary = app.add_subcommand("boundary", "image of the unit circle");
  family_options(boundary);
  boundary->add_option("--count", cfg.count, "samples on the circle")->check(CLI::Range(8, 1 << 24));
  boundary->add_option("--grid", cfg.grid, "grid for the inscribed circle")
      ->check(CLI::Range(64, 1 << 24));

  CLI::App* scan = app.add_subcommand("scan", "certify a range of N, one JSON line each");
  scan->add_option("--from", cfg.from, "first N")->check(CLI::PositiveNumber);
  scan->add_option("--to", cfg.to, "last N")->check(CLI::PositiveNumber)->required();
  scan->add_flag("--resume", cfg.resume, "skip N already recorded in --output");
  cap_option(scan);
  timing_flag(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.precision_cap < cfg.precision) cfg.precision_cap = cfg.precision;

  try {
    if (coeffs->parsed()) return cmd_coeffs(cfg, out);
    if (certify->parsed()) return cmd_certify(cfg, out);
    if (table->parsed()) return cmd_radius_table(cfg, out);
    if (boundary->parsed()) return cmd_boundary(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace koebe::cli
