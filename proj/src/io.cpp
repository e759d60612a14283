#include "funk/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "funk/errors.hpp"
#include "json.hpp"

namespace funk {

using ordered_json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (n_lat < 2) throw parse_error("config: n_lat must be >= 2");
  const int nl = effective_n_lon();
  if (nl < 4 || nl % 2 != 0) throw parse_error("config: n_lon must be even and >= 4");
  if (effective_L() > n_lat - 1)
    throw parse_error("config: bandlimit exceeds what the grid resolves (n_lat - 1)");
  if (circle_nodes < 4) throw parse_error("config: circle_nodes must be >= 4");
  if (rho_nodes < 1) throw parse_error("config: rho_nodes must be >= 1");
  if (N_t < 8) throw parse_error("config: N_t must be >= 8");
  if (format != "json" && format != "csv")
    throw parse_error("config: format must be \"json\" or \"csv\"");
}

RunConfig load_config(const std::string& path, RunConfig base) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw parse_error("config " + path + ": expected a JSON object");
  auto geti = [&](const char* k, int& dst) {
    if (j.contains(k)) dst = j.at(k).get<int>();
  };
  auto getd = [&](const char* k, double& dst) {
    if (j.contains(k)) dst = j.at(k).get<double>();
  };
  try {
    geti("n_lat", base.n_lat);
    geti("n_lon", base.n_lon);
    geti("L", base.L);
    geti("circle_nodes", base.circle_nodes);
    geti("rho_nodes", base.rho_nodes);
    geti("N_t", base.N_t);
    getd("identity_tol", base.identity_tol);
    getd("minkowski_tol", base.minkowski_tol);
    if (j.contains("format")) base.format = j.at("format").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("config " + path + ": " + e.what());
  }
  base.validate();
  return base;
}

std::shared_ptr<const SphereGrid> make_grid(const RunConfig& cfg) {
  cfg.validate();
  return std::make_shared<const SphereGrid>(cfg.n_lat, cfg.effective_n_lon());
}

namespace {

// split on '+' separators, keeping exponent signs ("1e+3") intact
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+' && i > 0 && s[i - 1] != 'e' && s[i - 1] != 'E') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw parse_error("");
    return v;
  } catch (...) {
    throw parse_error("bad " + what + ": '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw parse_error("");
    return v;
  } catch (...) {
    throw parse_error("bad " + what + ": '" + s + "'");
  }
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

GridFunction parse_function_spec(const std::string& spec,
                                 std::shared_ptr<const SphereGrid> g) {
  const std::string cleaned = trim(spec);
  if (cleaned.empty()) throw parse_error("empty function spec");
  GridFunction acc(g);
  for (const std::string& raw : split_terms(cleaned)) {
    std::string term = trim(raw);
    if (term.empty()) throw parse_error("empty term in function spec '" + spec + "'");
    double coef = 1.0;
    // optional "<coef>*" prefix
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = parse_number(trim(term.substr(0, star)), "coefficient");
      term = trim(term.substr(star + 1));
    }
    if (term.rfind("const:", 0) == 0) {
      const double v = coef * parse_number(term.substr(6), "constant");
      for (double& x : acc.values) x += v;
    } else if (term.rfind("ylm:", 0) == 0) {
      const auto parts = split_on(term.substr(4), ',');
      if (parts.size() != 2) throw parse_error("ylm term needs 'ylm:<l>,<m>': '" + term + "'");
      const int l = parse_int(trim(parts[0]), "degree");
      const int m = parse_int(trim(parts[1]), "order");
      if (l < 0 || std::abs(m) > l) throw parse_error("ylm term out of range: '" + term + "'");
      if (l > g->max_degree())
        throw parse_error("ylm degree " + std::to_string(l) + " beyond grid resolution " +
                          std::to_string(g->max_degree()));
      HarmonicSpectrum s(l);
      s.at(l, m) = 1.0;
      const GridFunction y = synthesize(s, g);
      for (std::size_t k = 0; k < acc.values.size(); ++k) acc.values[k] += coef * y.values[k];
    } else if (!term.empty() && term[0] == '@') {
      const GridFunction f = read_grid_function(term.substr(1), g);
      for (std::size_t k = 0; k < acc.values.size(); ++k) acc.values[k] += coef * f.values[k];
    } else {
      throw parse_error("unrecognized function term '" + term + "'");
    }
  }
  return acc;
}

SupportBody parse_body_spec(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.rfind("ball:", 0) == 0) return make_ball(parse_number(s.substr(5), "radius"));
  if (s.rfind("ellipsoid:", 0) == 0) {
    const auto parts = split_on(s.substr(10), ',');
    if (parts.size() != 3)
      throw parse_error("ellipsoid body needs 'ellipsoid:<a>,<b>,<c>': '" + s + "'");
    return make_ellipsoid(parse_number(trim(parts[0]), "semi-axis"),
                          parse_number(trim(parts[1]), "semi-axis"),
                          parse_number(trim(parts[2]), "semi-axis"));
  }
  if (s.rfind("harmonic:@", 0) == 0) return make_harmonic_body(read_spectrum(s.substr(10)));
  throw parse_error("unrecognized body spec '" + s + "'");
}

std::string grid_function_to_json(const GridFunction& f, const std::string& extra_metadata) {
  ordered_json j;
  j["n_lat"] = f.grid->n_lat();
  j["n_lon"] = f.grid->n_lon();
  j["values"] = f.values;
  if (!extra_metadata.empty()) j["metadata"] = ordered_json::parse(extra_metadata);
  return j.dump(2) + "\n";
}

GridFunction grid_function_from_json_text(const std::string& text,
                                          std::shared_ptr<const SphereGrid> expected_grid) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("grid function: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_lat") || !j.contains("n_lon") || !j.contains("values"))
    throw parse_error("grid function: expected {n_lat, n_lon, values}");
  int n_lat, n_lon;
  std::vector<double> values;
  try {
    n_lat = j.at("n_lat").get<int>();
    n_lon = j.at("n_lon").get<int>();
    values = j.at("values").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("grid function: ") + e.what());
  }
  if (static_cast<long long>(n_lat) * n_lon != static_cast<long long>(values.size()))
    throw parse_error("grid function: values length " + std::to_string(values.size()) +
                      " does not match n_lat * n_lon = " + std::to_string(n_lat * n_lon));
  std::shared_ptr<const SphereGrid> g;
  if (expected_grid) {
    if (expected_grid->n_lat() != n_lat || expected_grid->n_lon() != n_lon)
      throw parse_error("grid function: grid " + std::to_string(n_lat) + "x" +
                        std::to_string(n_lon) + " does not match the configured " +
                        std::to_string(expected_grid->n_lat()) + "x" +
                        std::to_string(expected_grid->n_lon()));
    g = expected_grid;
  } else {
    try {
      g = std::make_shared<const SphereGrid>(n_lat, n_lon);
    } catch (const precondition_error& e) {
      throw parse_error(std::string("grid function: ") + e.what());
    }
  }
  return GridFunction(g, std::move(values));
}

GridFunction read_grid_function(const std::string& path,
                                std::shared_ptr<const SphereGrid> expected_grid) {
  return grid_function_from_json_text(read_text_file(path), std::move(expected_grid));
}

std::string spectrum_to_json(const HarmonicSpectrum& s) {
  ordered_json arr = ordered_json::array();
  for (int l = 0; l <= s.L; ++l)
    for (int m = -l; m <= l; ++m) {
      if (s.at(l, m) == 0.0) continue;
      ordered_json e;
      e["l"] = l;
      e["m"] = m;
      e["value"] = s.at(l, m);
      arr.push_back(e);
    }
  return arr.dump(2) + "\n";
}

HarmonicSpectrum spectrum_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("spectrum: ") + e.what());
  }
  if (!j.is_array()) throw parse_error("spectrum: expected a JSON array of {l, m, value}");
  int L = 0;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("l") || !e.contains("m") || !e.contains("value"))
      throw parse_error("spectrum: entries must be {l, m, value}");
    const int l = e.at("l").get<int>();
    const int m = e.at("m").get<int>();
    if (l < 0 || std::abs(m) > l) throw parse_error("spectrum: entry out of range");
    L = std::max(L, l);
  }
  HarmonicSpectrum s(L);
  for (const auto& e : j)
    s.at(e.at("l").get<int>(), e.at("m").get<int>()) += e.at("value").get<double>();
  return s;
}

HarmonicSpectrum read_spectrum(const std::string& path) {
  return spectrum_from_json_text(read_text_file(path));
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_function_to_csv(const GridFunction& f, const std::string& value_column) {
  std::ostringstream out;
  out << "i,j,x,y,z," << value_column << "\n";
  const SphereGrid& g = *f.grid;
  for (int i = 0; i < g.n_lat(); ++i)
    for (int j = 0; j < g.n_lon(); ++j) {
      const std::size_t k = g.node_index(i, j);
      const UnitVector3& p = g.node(k);
      out << i << ',' << j << ',' << format_float(p.x) << ',' << format_float(p.y) << ','
          << format_float(p.z) << ',' << format_float(f.values[k]) << "\n";
    }
  return out.str();
}

std::string direction_table_to_csv(const DirectionTable& t) {
  std::ostringstream out;
  out << "x,y,z,width,circumference\n";
  for (std::size_t k = 0; k < t.directions.size(); ++k) {
    const UnitVector3& d = t.directions[k];
    out << format_float(d.x) << ',' << format_float(d.y) << ',' << format_float(d.z) << ','
        << format_float(t.width[k]) << ',' << format_float(t.circumference[k]) << "\n";
  }
  return out.str();
}

std::string abel_report_to_json(const AbelReconstructionReport& r) {
  ordered_json j;
  j["x"] = {r.x.x, r.x.y, r.x.z};
  j["recovered"] = r.recovered;
  j["converged"] = r.converged;
  j["extrapolation"] = {{"deltas", r.deltas},
                        {"raw_values", r.raw_values},
                        {"diagonal", r.diagonal}};
  j["t_nodes"] = r.t_nodes;
  j["dual_profile"] = r.dual_profile;
  j["fractional_profile"] = r.fractional_profile;
  return j.dump(2) + "\n";
}

std::string minkowski_report_to_json(const MinkowskiReport& r) {
  ordered_json j;
  j["directions"] = r.table.directions.size();
  j["tolerance"] = r.tolerance;
  j["width"] = {{"mean", r.width_mean},
                {"spread", r.width_spread},
                {"constant", r.constant_width}};
  j["circumference"] = {{"mean", r.circumference_mean},
                        {"spread", r.circumference_spread},
                        {"constant", r.constant_circumference}};
  j["verdicts_agree"] = r.constant_width == r.constant_circumference;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw parse_error("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace funk
