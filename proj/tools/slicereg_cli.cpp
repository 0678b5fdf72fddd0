#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "figures.hpp"
#include "slicereg/error.hpp"
#include "slicereg/expression.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/verify.hpp"

using namespace slicereg;

namespace {

enum Exit { kPass = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kDegenerate = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return kUsage;
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotInvertible: return kDegenerate;
    default: return kDomain;
  }
}

struct Options {
  std::uint64_t seed{20240917};
  int samples{0};
  std::vector<std::string> tol;
  std::string out;
  std::string format{"json"};
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

// A polynomial argument is a file name, JSON text or an expression.
RegularSeries polynomial_arg(const std::string& arg) {
  const std::string text = std::ifstream(arg).good() ? read_file(arg) : arg;
  if (looks_like_json(text)) return series_from_json(parse_json(text));
  return parse_polynomial(text);
}

// A quaternion is four reals, a JSON array, or a constant expression like "1+2j".
Quaternion quaternion_arg(const std::vector<std::string>& args) {
  if (args.size() == 4) {
    Quaternion q;
    double* parts[] = {&q.w, &q.x, &q.y, &q.z};
    for (std::size_t k = 0; k < 4; ++k) {
      try {
        std::size_t used = 0;
        *parts[k] = std::stod(args[k], &used);
        if (used != args[k].size()) throw std::invalid_argument(args[k]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "not a number: '" + args[k] + "'");
      }
    }
    return q;
  }
  if (args.size() != 1) throw Error(ErrorKind::InvalidArgument, "expected one quaternion or four reals");
  if (looks_like_json(args[0])) return quaternion_from_json(parse_json(args[0]));
  const RegularSeries c = parse_polynomial(args[0]);
  if (c.degree() > 0) throw Error(ErrorKind::InvalidArgument, "'" + args[0] + "' is not a constant");
  return c.coeff(0);
}

Complex complex_arg(const std::string& arg) {
  const Quaternion q = quaternion_arg({arg});
  if (q.y != 0.0 || q.z != 0.0) throw Error(ErrorKind::InvalidArgument, "'" + arg + "' is not in C");
  return {q.w, q.x};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const Options& opt, const Json& j, int indent = 2) {
  Output out(opt.out);
  out.stream() << j.dump(indent) << '\n';
}

void emit_csv(const Options& opt, const std::string& header, const std::vector<std::vector<std::string>>& rows) {
  Output out(opt.out);
  out.stream() << header << '\n';
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out.stream() << (k ? "," : "") << r[k];
    out.stream() << '\n';
  }
}

std::string num(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::vector<std::string> quaternion_cells(const Quaternion& q) { return {num(q.w), num(q.x), num(q.y), num(q.z)}; }

verify::SuiteConfig suite_config(const Options& opt) {
  verify::SuiteConfig cfg;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  for (const auto& item : opt.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidArgument, "--tol expects NAME=VALUE");
    try {
      cfg.tolerances[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad tolerance value in '" + item + "'");
    }
  }
  return cfg;
}

int cmd_eval(const Options& opt, const std::string& poly, const std::vector<std::string>& at) {
  const Quaternion value = eval(polynomial_arg(poly), quaternion_arg(at));
  if (opt.format == "csv")
    emit_csv(opt, "w,x,y,z", {quaternion_cells(value)});
  else
    emit_json(opt, to_json(value), -1);
  return kPass;
}

int cmd_zeros(const Options& opt, const std::string& poly) {
  const ZeroSet zs = zeros(polynomial_arg(poly));
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : zs.spheres)
      rows.push_back({"sphere", num(s.sphere.x), num(s.sphere.y), "", "", "", "", std::to_string(s.multiplicity)});
    for (const auto& p : zs.points) {
      std::vector<std::string> r{"point", "", ""};
      for (auto& c : quaternion_cells(p.point)) r.push_back(c);
      r.push_back(std::to_string(p.multiplicity));
      rows.push_back(r);
    }
    emit_csv(opt, "type,x,y,w,i,j,k,multiplicity", rows);
  } else {
    emit_json(opt, to_json(zs));
  }
  return kPass;
}

int cmd_classify(const Options& opt, const std::vector<std::string>& args) {
  const Quaternion c = quaternion_arg(args);
  const FiberIntersections fi = fiber_intersections(c);
  std::optional<Quaternion> jp, jm;
  try {
    jp = j_plus(c).unit();
    jm = j_minus(c).unit();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DomainError) throw;
  }
  if (opt.format == "csv") {
    std::vector<std::string> r{std::string(to_string(fi.kind)), num(fi.discriminant)};
    for (const auto& j : {jp, jm})
      for (auto& cell : j ? quaternion_cells(*j) : std::vector<std::string>(4)) r.push_back(cell);
    emit_csv(opt, "class,D,Jp_w,Jp_x,Jp_y,Jp_z,Jm_w,Jm_x,Jm_y,Jm_z", {r});
  } else {
    Json j = to_json(fi);
    j["J_plus"] = jp ? to_json(*jp) : Json(nullptr);
    j["J_minus"] = jm ? to_json(*jm) : Json(nullptr);
    emit_json(opt, j);
  }
  return kPass;
}

int cmd_verify(const Options& opt, const std::string& name, bool list) {
  if (list) {
    for (const auto& s : verify::suites())
      std::cout << s.name << (s.criterion ? " [AC" + std::to_string(s.criterion) + "]" : "") << "  " << s.description
                << '\n';
    return kPass;
  }
  const auto cfg = suite_config(opt);
  std::vector<std::string> names;
  if (name == "all" || name == "acceptance") {
    for (const auto& s : name == "all" ? verify::suites() : verify::acceptance_suites()) names.push_back(s.name);
  } else {
    names.push_back(name);
  }
  std::vector<verify::SuiteReport> reports;
  for (const auto& n : names) reports.push_back(verify::run_suite(n, cfg));
  bool passed = true;
  for (const auto& r : reports) {
    passed = passed && r.passed;
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks - r.failures << "/" << r.checks
              << " checks, max residual " << r.max_residual << ")\n";
  }
  // Timings go to stderr only, so equal configurations give identical output.
  if (opt.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports)
      rows.push_back({r.name, r.passed ? "PASS" : "FAIL", std::to_string(r.checks), std::to_string(r.failures),
                      num(r.max_residual)});
    emit_csv(opt, "suite,result,checks,failures,max_residual", rows);
  } else {
    Json out = Json::array();
    for (const auto& r : reports)
      out.push_back({{"suite", r.name},
                     {"result", r.passed ? "PASS" : "FAIL"},
                     {"seed", cfg.seed},
                     {"checks", r.checks},
                     {"failures", r.failures},
                     {"max_residual", r.max_residual},
                     {"notes", r.notes}});
    emit_json(opt, reports.size() == 1 ? out[0] : out);
  }
  return passed ? kPass : kVerifyFailed;
}

int cmd_figure(const Options& opt, const std::string& name, const figures::GridSpec& grid, int samples) {
  if (opt.format != "csv" && opt.format != "json")
    throw Error(ErrorKind::InvalidArgument, "unknown format");
  Output out(opt.out);
  if (name == "fig1")
    figures::write_fig1(out.stream(), samples);
  else if (name == "fig2")
    figures::write_fig2(out.stream(), grid);
  else if (name == "fibers")
    figures::write_fiber_scan(out.stream(), grid);
  else
    throw Error(ErrorKind::InvalidArgument, "unknown figure '" + name + "'");
  return kPass;
}

int cmd_transform(const Options& opt, const std::string& poly, const std::string& v, int nodes) {
  const RegularSeries f = polynomial_arg(poly);
  if (!v.empty()) {
    const KleinPoint zeta = twistor_transform(f, complex_arg(v));
    if (opt.format == "csv") {
      std::vector<std::string> r;
      for (const Complex z : zeta.coords()) {
        r.push_back(num(z.real()));
        r.push_back(num(z.imag()));
      }
      emit_csv(opt, "z1_re,z1_im,z2_re,z2_im,z3_re,z3_im,z4_re,z4_im,z5_re,z5_im,z6_re,z6_im", {r});
    } else {
      emit_json(opt, to_json(zeta));
    }
    return kPass;
  }
  std::vector<CurveSample> curve;
  for (const Complex node : circle_nodes(nodes)) curve.push_back({node, twistor_transform(f, node)});
  emit_json(opt, to_json(curve));
  return kPass;
}

int cmd_reconstruct(const Options& opt, const std::string& curve_arg, bool record_poles) {
  const std::string text = std::ifstream(curve_arg).good() ? read_file(curve_arg) : curve_arg;
  const auto curve = curve_from_json(parse_json(text));
  ReconstructOptions ro;
  ro.poles = record_poles ? PolePolicy::Record : PolePolicy::Throw;
  emit_json(opt, to_json(reconstruct(curve, ro)));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice-regular quaternionic functions and their twistor lifts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", opt.samples, "Sample count override (0 keeps each suite's default)");
  app.add_option("--tol", opt.tol, "Tolerance override NAME=VALUE")->take_all();
  app.add_option("--out", opt.out, "Write output to this file instead of stdout");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::string poly, suite = "acceptance", figure, v, curve;
  std::vector<std::string> at;
  bool list = false, record_poles = false;
  figures::GridSpec grid;
  int fig_samples = 400, nodes = 16;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial at a quaternion");
  eval_cmd->add_option("poly", poly, "Polynomial: file, JSON or expression")->required();
  eval_cmd->add_option("q", at, "Quaternion: expression, JSON array or four reals")->required();

  auto* zeros_cmd = app.add_subcommand("zeros", "Zero set with multiplicities");
  zeros_cmd->add_option("poly", poly, "Polynomial: file, JSON or expression")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Fiber class, discriminant and J+/J- over a point");
  classify_cmd->add_option("c", at, "Quaternion: expression, JSON array or four reals")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite ('acceptance', 'all' or a name)");
  verify_cmd->add_option("suite", suite, "Suite name")->capture_default_str();
  verify_cmd->add_flag("--list", list, "List the available suites");

  auto* figure_cmd = app.add_subcommand("figure", "Emit figure data as CSV (fig1, fig2, fibers)");
  figure_cmd->add_option("name", figure, "Figure name")->required();
  figure_cmd->add_option("--grid", grid.n, "Cells per axis (default 100, 12 for fibers)")->capture_default_str();
  figure_cmd->add_option("--bound", grid.bound, "Half-width of the grid")->capture_default_str();
  figure_cmd->add_option("--points", fig_samples, "Points per curve in fig1")->capture_default_str();

  auto* transform_cmd = app.add_subcommand("transform", "Twistor transform at v, or sampled on a circle");
  transform_cmd->add_option("poly", poly, "Polynomial: file, JSON or expression")->required();
  transform_cmd->add_option("--v", v, "Single complex parameter");
  transform_cmd->add_option("--nodes", nodes, "Circle nodes when --v is absent")->capture_default_str();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover g, h from a sampled transform curve");
  reconstruct_cmd->add_option("curve", curve, "Curve: file or JSON")->required();
  reconstruct_cmd->add_flag("--record-poles", record_poles, "Report poles instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(opt, poly, at);
    if (*zeros_cmd) return cmd_zeros(opt, poly);
    if (*classify_cmd) return cmd_classify(opt, at);
    if (*verify_cmd) return cmd_verify(opt, suite, list);
    if (*figure_cmd) {
      // the fiber scan is four-dimensional, so it gets a coarser default grid
      if (figure == "fibers" && figure_cmd->get_option("--grid")->count() == 0) grid.n = 12;
      return cmd_figure(opt, figure, grid, fig_samples);
    }
    if (*transform_cmd) return cmd_transform(opt, poly, v, nodes);
    if (*reconstruct_cmd) return cmd_reconstruct(opt, curve, record_poles);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kUsage;
}
