// Command-line front end: transform / invert / verify-identity / convex /
// multipliers.  Exit codes: 0 ok, 1 numerical gate failed, 2 I/O or parse
// problem, 3 precondition violated.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "funk/errors.hpp"
#include "funk/inversion.hpp"
#include "funk/io.hpp"
#include "funk/parallel.hpp"
#include "funk/transforms.hpp"
#include "json.hpp"

namespace {

using namespace funk;
using ordered_json = nlohmann::ordered_json;

struct CommonArgs {
  RunConfig cfg;
  std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--n-lat", a.cfg.n_lat, "latitude rows of the working grid");
  cmd->add_option("--n-lon", a.cfg.n_lon, "longitude columns (default 2 * n_lat)");
  cmd->add_option("--bandlimit", a.cfg.L, "max harmonic degree (default n_lat - 1)");
  cmd->add_option("--circle-nodes", a.cfg.circle_nodes, "quadrature points per circle");
  cmd->add_option("--rho-nodes", a.cfg.rho_nodes, "rotation-average sample count");
  cmd->add_option("--nt", a.cfg.N_t, "radial grid size for the fractional pipeline");
  cmd->add_option("--identity-tol", a.cfg.identity_tol, "gate for verify-identity");
  cmd->add_option("--minkowski-tol", a.cfg.minkowski_tol, "relative constancy tolerance");
  cmd->add_option("--format", a.cfg.format, "output format: json or csv");
  cmd->add_option("-o,--output", a.output, "output file (default stdout)");
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty())
    std::cout << text;
  else
    write_text_file(output, text);
}

UnitVector3 parse_point(const std::string& s) {
  const auto comma1 = s.find(',');
  const auto comma2 = (comma1 == std::string::npos) ? std::string::npos : s.find(',', comma1 + 1);
  if (comma1 == std::string::npos || comma2 == std::string::npos)
    throw parse_error("point must be '<x>,<y>,<z>': '" + s + "'");
  auto num = [&](const std::string& t) {
    try {
      std::size_t pos = 0;
      double v = std::stod(t, &pos);
      if (pos != t.size()) throw parse_error("");
      return v;
    } catch (...) {
      throw parse_error("bad point component '" + t + "'");
    }
  };
  const double x = num(s.substr(0, comma1));
  const double y = num(s.substr(comma1 + 1, comma2 - comma1 - 1));
  const double z = num(s.substr(comma2 + 1));
  try {
    return UnitVector3(x, y, z);
  } catch (const precondition_error& e) {
    throw parse_error(std::string("bad point: ") + e.what());
  }
}

std::vector<double> parse_double_list(const std::vector<std::string>& items,
                                      const std::string& what) {
  std::vector<double> out;
  for (const auto& s : items) {
    std::string cur;
    for (char c : s + ",") {
      if (c == ',') {
        if (!cur.empty()) {
          try {
            std::size_t pos = 0;
            out.push_back(std::stod(cur, &pos));
            if (pos != cur.size()) throw parse_error("");
          } catch (...) {
            throw parse_error("bad " + what + " value '" + cur + "'");
          }
          cur.clear();
        }
      } else {
        cur += c;
      }
    }
  }
  return out;
}

int cmd_transform(const CommonArgs& a, const std::string& fspec, const std::string& which,
                  double t, double theta, double alpha) {
  auto g = make_grid(a.cfg);
  const GridFunction f = parse_function_spec(fspec, g);
  TransformOptions opt;
  opt.circle_nodes = a.cfg.circle_nodes;
  opt.rho_nodes = a.cfg.rho_nodes;

  GridFunction out(g);
  ordered_json meta;
  meta["transform"] = which;
  if (which == "funk") {
    out = funk::funk(f, opt).values();
  } else if (which == "dual") {
    out = dual_funk(CircleFunction(f), opt);
  } else if (which == "mean") {
    if (!(std::abs(t) <= 1.0)) throw parse_error("transform mean: need --t in [-1, 1]");
    meta["t"] = t;
    const SpectrumEvaluator ev(analyze(f, g->max_degree()));
    for (std::size_t k = 0; k < g->size(); ++k)
      out.values[k] = spherical_mean(ev, g->node(k), t, a.cfg.rho_nodes);
  } else if (which == "gen") {
    if (!(theta >= 0.0 && theta <= M_PI / 2))
      throw parse_error("transform gen: need --theta in [0, pi/2]");
    meta["theta"] = theta;
    const SpectrumEvaluator ev(analyze(f, g->max_degree()));
    // indexed by the canonical circle of each node's pole, hence even
    for (std::size_t k = 0; k < g->size(); ++k)
      out.values[k] = generalized_funk(ev, GreatCircle(g->node(k)), theta, a.cfg.rho_nodes);
  } else if (which == "cosine") {
    if (alpha == 0.0) throw parse_error("transform cosine: need --alpha > 0");
    meta["alpha"] = alpha;
    out = cosine_transform(f, alpha);
  } else {
    throw parse_error("unknown --which '" + which + "'");
  }
  if (a.cfg.format == "csv")
    emit(a.output, grid_function_to_csv(out, which));
  else
    emit(a.output, grid_function_to_json(out, meta.dump()));
  return 0;
}

int cmd_invert(const CommonArgs& a, const std::string& gspec, const std::string& method,
               const std::string& point) {
  auto g = make_grid(a.cfg);
  const CircleFunction cf(parse_function_spec(gspec, g));
  if (method == "harmonic") {
    std::vector<int> zeroed;
    const GridFunction f = invert_harmonic(cf, a.cfg.effective_L(), {}, &zeroed);
    ordered_json meta;
    meta["inverse"] = "harmonic";
    meta["zeroed_degrees"] = zeroed;
    if (a.cfg.format == "csv")
      emit(a.output, grid_function_to_csv(f, "inverted"));
    else
      emit(a.output, grid_function_to_json(f, meta.dump()));
    return 0;
  }
  if (method == "abel") {
    if (point.empty()) throw parse_error("invert abel: --point <x>,<y>,<z> is required");
    AbelOptions opt;
    opt.rho_nodes = a.cfg.rho_nodes;
    const AbelReconstructionReport rep = invert_abel(cf, parse_point(point), a.cfg.N_t, opt);
    emit(a.output, abel_report_to_json(rep));
    return 0;
  }
  throw parse_error("unknown --method '" + method + "'");
}

int cmd_verify_identity(const CommonArgs& a, const std::string& fspec,
                        const std::vector<std::string>& theta_args,
                        const std::vector<std::string>& point_args) {
  auto g = make_grid(a.cfg);
  const GridFunction f = parse_function_spec(fspec, g);
  std::vector<double> thetas = parse_double_list(theta_args, "theta");
  if (thetas.empty()) thetas = {0.2, 0.5, 0.8, 1.1, 1.4};
  std::vector<UnitVector3> points;
  for (const auto& s : point_args) points.push_back(parse_point(s));
  if (points.empty())
    points = {UnitVector3(0, 0, 1), UnitVector3(1, 0, 0), UnitVector3(0, 1, 0),
              UnitVector3(1, 1, 1)};

  IdentityOptions opt;
  opt.N_t = a.cfg.N_t;
  opt.transform.circle_nodes = a.cfg.circle_nodes;
  opt.transform.rho_nodes = a.cfg.rho_nodes;
  const IdentityVerifier verifier(f, opt);

  // abs errors first; relative error is measured against the sweep's scale,
  // not per sample, so points where both sides vanish do not blow it up
  ordered_json samples = ordered_json::array();
  double worst_abs = 0;
  double scale = 0;
  for (const auto& x : points) {
    const RadialProfile prof = verifier.profile_for(x);
    for (double th : thetas) {
      const double lhs = verifier.lhs(x, th);
      const double rhs = verifier.rhs(prof, th);
      worst_abs = std::max(worst_abs, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(lhs));
      ordered_json e;
      e["x"] = {x.x, x.y, x.z};
      e["theta"] = th;
      e["lhs"] = lhs;
      e["rhs"] = rhs;
      e["abs_err"] = std::abs(lhs - rhs);
      samples.push_back(e);
    }
  }
  const double worst = worst_abs / std::max(scale, 1e-300);
  const bool pass = worst <= a.cfg.identity_tol;
  ordered_json rep;
  rep["tolerance"] = a.cfg.identity_tol;
  rep["scale"] = scale;
  rep["max_rel_err"] = worst;
  rep["pass"] = pass;
  rep["samples"] = samples;
  emit(a.output, rep.dump(2) + "\n");
  return pass ? 0 : 1;
}

int cmd_convex(const CommonArgs& a, const std::string& body_spec, const std::string& report,
               int directions, const std::string& table_path) {
  const SupportBody body = parse_body_spec(body_spec);
  int n_lat = static_cast<int>(std::ceil(std::sqrt(directions / 2.0)));
  if (n_lat < 2) n_lat = 2;
  const auto dirs = std::make_shared<const SphereGrid>(n_lat, 2 * n_lat);

  if (report == "width" || report == "circumference") {
    std::string csv;
    if (report == "width") {
      csv = "x,y,z,width\n";
      for (std::size_t k = 0; k < dirs->size(); ++k) {
        const UnitVector3& d = dirs->node(k);
        csv += format_float(d.x) + "," + format_float(d.y) + "," + format_float(d.z) + "," +
               format_float(width(body, d)) + "\n";
      }
    } else {
      csv = "x,y,z,circumference_funk,circumference_direct\n";
      for (std::size_t k = 0; k < dirs->size(); ++k) {
        const UnitVector3& d = dirs->node(k);
        csv += format_float(d.x) + "," + format_float(d.y) + "," + format_float(d.z) + "," +
               format_float(circumference_funk(body, d, a.cfg.circle_nodes)) + "," +
               format_float(circumference_direct(body, d, a.cfg.circle_nodes)) + "\n";
      }
    }
    emit(a.output, csv);
    return 0;
  }
  if (report == "minkowski") {
    const MinkowskiReport rep =
        minkowski_check(body, directions, a.cfg.minkowski_tol, a.cfg.circle_nodes);
    if (!table_path.empty()) write_text_file(table_path, direction_table_to_csv(rep.table));
    emit(a.output, minkowski_report_to_json(rep));
    return 0;
  }
  throw parse_error("unknown --report '" + report + "'");
}

int cmd_multipliers(const CommonArgs& a, const std::vector<std::string>& alpha_args,
                    const std::vector<std::string>& degree_args) {
  auto g = make_grid(a.cfg);
  std::vector<double> alphas = parse_double_list(alpha_args, "alpha");
  if (alphas.empty()) alphas = {0.2, 0.1, 0.05, 0.01};
  std::vector<int> degrees;
  for (double d : parse_double_list(degree_args, "degree")) degrees.push_back(static_cast<int>(d));
  if (degrees.empty()) degrees = {0, 2, 4, 6};

  TransformOptions opt;
  opt.circle_nodes = a.cfg.circle_nodes;
  opt.rho_nodes = a.cfg.rho_nodes;
  std::string csv = "alpha,l,cosine_ratio_measured,funk_ratio,abs_diff\n";
  for (double al : alphas) {
    const double c0 = multiplier_measure(g, MultiplierKind::Cosine, 0, al, opt);
    for (int l : degrees) {
      const double cl = multiplier_measure(g, MultiplierKind::Cosine, l, al, opt);
      const double ratio = cl / c0;
      const double funk_ratio = funk_multiplier(l) / funk_multiplier(0);
      csv += format_float(al) + "," + std::to_string(l) + "," + format_float(ratio) + "," +
             format_float(funk_ratio) + "," + format_float(std::abs(ratio - funk_ratio)) + "\n";
    }
  }
  emit(a.output, csv);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"great-circle transform toolbox"};
  app.require_subcommand(1);

  // --config is honored before the flag pass so flags can override it
  RunConfig base;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc)
      base = load_config(argv[i + 1], base);
    else if (arg.rfind("--config=", 0) == 0)
      base = load_config(arg.substr(9), base);
  }
  std::string config_dummy;

  CommonArgs t_args{base, ""}, i_args{base, ""}, v_args{base, ""}, c_args{base, ""},
      m_args{base, ""};

  auto* t_cmd = app.add_subcommand("transform", "apply a transform to a function");
  std::string t_f, t_which = "funk";
  double t_t = 0.0, t_theta = 0.0, t_alpha = 0.0;
  t_cmd->add_option("--config", config_dummy, "JSON config file");
  t_cmd->add_option("--f", t_f, "input function spec")->required();
  t_cmd->add_option("--which", t_which, "funk | dual | mean | gen | cosine");
  t_cmd->add_option("--t", t_t, "height parameter for --which mean");
  t_cmd->add_option("--theta", t_theta, "inclination for --which gen");
  t_cmd->add_option("--alpha", t_alpha, "exponent for --which cosine");
  add_common(t_cmd, t_args);

  auto* i_cmd = app.add_subcommand("invert", "invert the great-circle transform");
  std::string i_g, i_method = "harmonic", i_point;
  i_cmd->add_option("--config", config_dummy, "JSON config file");
  i_cmd->add_option("--g", i_g, "transformed data (function spec)")->required();
  i_cmd->add_option("--method", i_method, "harmonic | abel");
  i_cmd->add_option("--point", i_point, "reconstruction point '<x>,<y>,<z>' (abel)");
  add_common(i_cmd, i_args);

  auto* v_cmd = app.add_subcommand("verify-identity",
                                   "check the dual-transform / fractional-integral identity");
  std::string v_f;
  std::vector<std::string> v_thetas, v_points;
  v_cmd->add_option("--config", config_dummy, "JSON config file");
  v_cmd->add_option("--f", v_f, "input function spec")->required();
  v_cmd->add_option("--theta", v_thetas, "inclination angles, comma separated");
  v_cmd->add_option("--point", v_points, "evaluation points '<x>,<y>,<z>' (repeatable)");
  add_common(v_cmd, v_args);

  auto* c_cmd = app.add_subcommand("convex", "width/circumference reports for a convex body");
  std::string c_body, c_report = "minkowski", c_table;
  int c_dirs = 512;
  c_cmd->add_option("--config", config_dummy, "JSON config file");
  c_cmd->add_option("--body", c_body, "body spec")->required();
  c_cmd->add_option("--report", c_report, "width | circumference | minkowski");
  c_cmd->add_option("--directions", c_dirs, "minimum number of sample directions");
  c_cmd->add_option("--table", c_table, "also write the per-direction CSV here (minkowski)");
  add_common(c_cmd, c_args);

  auto* m_cmd = app.add_subcommand("multipliers",
                                   "measured cosine-family ratios next to the circle-transform ones");
  std::vector<std::string> m_alphas, m_degrees;
  m_cmd->add_option("--config", config_dummy, "JSON config file");
  m_cmd->add_option("--alpha", m_alphas, "exponents, comma separated");
  m_cmd->add_option("--degrees", m_degrees, "degrees, comma separated");
  add_common(m_cmd, m_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (t_cmd->parsed()) {
    t_args.cfg.validate();
    return cmd_transform(t_args, t_f, t_which, t_t, t_theta, t_alpha);
  }
  if (i_cmd->parsed()) {
    i_args.cfg.validate();
    return cmd_invert(i_args, i_g, i_method, i_point);
  }
  if (v_cmd->parsed()) {
    v_args.cfg.validate();
    return cmd_verify_identity(v_args, v_f, v_thetas, v_points);
  }
  if (c_cmd->parsed()) {
    c_args.cfg.validate();
    return cmd_convex(c_args, c_body, c_report, c_dirs, c_table);
  }
  if (m_cmd->parsed()) {
    m_args.cfg.validate();
    return cmd_multipliers(m_args, m_alphas, m_degrees);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  funk::init_threads_from_env();
  try {
    return run(argc, argv);
  } catch (const funk::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const funk::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
