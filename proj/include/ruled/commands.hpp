#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/similarity.hpp"
#include "ruled/surfaces.hpp"

namespace ruled::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes shared by all subcommands.
enum Exit : int {
  kOk = 0,
  kNegative = 1,  ///< not similar / a check failed
  kInputError = 2,
  kGeometryError = 3,
  kKindMismatch = 4,
};

struct Tolerances {
  double tol_null = 1e-9;
  double tol_frame = 1e-6;
  double tol_similar = 1e-4;
};

/// Applies "key=value,key=value" with keys tol_null, tol_frame, tol_similar.
/// Throws FileError on malformed input.
Tolerances apply_overrides(Tolerances t, std::string_view spec);

struct AnalyzeOptions {
  std::filesystem::path input;
  std::optional<std::filesystem::path> out_dir;  ///< summary.json, frame.csv, delta.csv
  Tolerances tol;
};

struct CompareOptions {
  std::filesystem::path a;
  std::filesystem::path b;
  SimilarityMode mode = SimilarityMode::ByInvariants;
  bool search_phi_offset = false;
  Tolerances tol;
};

struct ReconstructOptions {
  std::filesystem::path profile;
  std::optional<int> steps;
  std::optional<std::string> theta;
  bool developable = false;
  std::filesystem::path out_dir = ".";
  double v_min = -1.0;
  double v_max = 1.0;
  int v_steps = 8;
  Tolerances tol;
};

struct VerifyOptions {
  std::optional<std::filesystem::path> input;
  std::string suite = "builtin";
  bool inject_corruption = false;  ///< swaps h and a in every frame before checking
  bool verbose = false;
  Tolerances tol;
};

struct ExportOptions {
  std::filesystem::path input;
  std::filesystem::path output;
  double v_min = -1.0;
  double v_max = 1.0;
  int u_steps = 64;
  int v_steps = 8;
};

int analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);
int reconstruct(const ReconstructOptions& opts, std::ostream& out, std::ostream& err);
int verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int export_mesh(const ExportOptions& opts, std::ostream& out, std::ostream& err);

/// Quad strip over the parameters us and v in [v_min, v_max], split into
/// triangles. Only v and f records.
std::string obj_mesh(const RuledSurfaceSpec& S, const std::vector<double>& us, double v_min, double v_max,
                     int v_steps);

}  // namespace ruled::cli
