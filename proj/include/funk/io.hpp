#pragma once

// Serialization and the small spec languages the CLI accepts.
//
// GridFunction JSON:  {"n_lat": int, "n_lon": int, "values": [...]} with
// values row-major, latitude-major (index i * n_lon + j).  Writers may add a
// "metadata" object; readers ignore it.
//
// Spectrum JSON: array of {"l": int, "m": int, "value": number}.
//
// Function specs:  const:<v> | ylm:<l>,<m> | @file.json, each optionally
// scaled as <coef>*<term>, joined by '+'.
// Body specs:      ball:<R> | ellipsoid:<a>,<b>,<c> | harmonic:@file.json.

#include <memory>
#include <string>
#include <vector>

#include "funk/convex.hpp"
#include "funk/harmonics.hpp"
#include "funk/inversion.hpp"
#include "funk/sphere.hpp"

namespace funk {

struct RunConfig {
  int n_lat = 64;
  int n_lon = 0;   // 0 -> 2 * n_lat
  int L = -1;      // -1 -> n_lat - 1
  int circle_nodes = 256;
  int rho_nodes = 256;
  int N_t = 512;
  double identity_tol = 1e-3;
  double minkowski_tol = 1e-6;
  std::string format = "json";  // "json" | "csv"

  int effective_n_lon() const { return n_lon > 0 ? n_lon : 2 * n_lat; }
  int effective_L() const { return L >= 0 ? L : n_lat - 1; }
  void validate() const;  // throws parse_error
};

// Merges values found in a JSON config file over the defaults.
RunConfig load_config(const std::string& path, RunConfig base = {});

std::shared_ptr<const SphereGrid> make_grid(const RunConfig& cfg);

// Function/body spec parsing (throws parse_error on bad syntax, may read files).
GridFunction parse_function_spec(const std::string& spec, std::shared_ptr<const SphereGrid> g);
SupportBody parse_body_spec(const std::string& spec);

// GridFunction files.  extra_metadata (serialized JSON object, may be empty)
// is stored under "metadata".
std::string grid_function_to_json(const GridFunction& f, const std::string& extra_metadata = "");
GridFunction grid_function_from_json_text(const std::string& text,
                                          std::shared_ptr<const SphereGrid> expected_grid = nullptr);
GridFunction read_grid_function(const std::string& path,
                                std::shared_ptr<const SphereGrid> expected_grid = nullptr);

// Spectrum files.
std::string spectrum_to_json(const HarmonicSpectrum& s);
HarmonicSpectrum spectrum_from_json_text(const std::string& text);
HarmonicSpectrum read_spectrum(const std::string& path);

// CSV with a header row; every number printed with 17 significant digits.
std::string grid_function_to_csv(const GridFunction& f, const std::string& value_column = "value");
std::string direction_table_to_csv(const DirectionTable& t);

std::string abel_report_to_json(const AbelReconstructionReport& r);
std::string minkowski_report_to_json(const MinkowskiReport& r);

// Deterministic float formatting used by all CSV output.
std::string format_float(double v);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace funk
