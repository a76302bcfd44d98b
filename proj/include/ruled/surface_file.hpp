#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/lorentz.hpp"
#include "ruled/surfaces.hpp"

namespace ruled {

/// Malformed input file. line is 1-based (0 when not tied to a line); offset
/// is the character offset inside an expression value when known.
class FileError : public std::runtime_error {
 public:
  FileError(const std::string& message, int line = 0, std::optional<std::size_t> offset = std::nullopt);

  int line() const noexcept { return line_; }
  const std::optional<std::size_t>& offset() const noexcept { return offset_; }

 private:
  int line_;
  std::optional<std::size_t> offset_;
};

/// Flat key = value text:
///
///     # comment
///     name = H1
///     kind = analytic            (or: sampled)
///     base.x = u                 (analytic only, six expressions in u)
///     base.y = 0
///     base.z = 0
///     ruling.x = 0
///     ruling.y = cos(u)
///     ruling.z = sin(u)
///     sampled = h1.csv           (sampled only, relative to the file)
///     domain = 0, 6.283185307179586
///     samples = 512              (optional)
struct SurfaceDefinition {
  enum class Kind { Analytic, Sampled };

  std::string name;
  Kind kind = Kind::Analytic;
  std::array<std::string, 3> base;
  std::array<std::string, 3> ruling;
  std::string sampled;  ///< CSV path as written in the file
  std::filesystem::path directory;  ///< used to resolve `sampled`
  double u_min = 0.0;
  double u_max = 1.0;
  int samples = 512;
};

/// Throws FileError.
SurfaceDefinition parse_surface_definition(std::string_view text, const std::filesystem::path& directory = {});
SurfaceDefinition read_surface_definition(const std::filesystem::path& path);
std::string format_surface_definition(const SurfaceDefinition& def);

/// Builds the surface; expressions are parsed (FileError with offset on
/// failure) and sampled tables are loaded and validated.
RuledSurfaceSpec to_spec(const SurfaceDefinition& def);

/// CSV with header u,kx,ky,kz,qx,qy,qz, strictly increasing u, >= 16 rows.
struct SampleTable {
  std::vector<double> u;
  std::vector<MVec3> k;
  std::vector<MVec3> q;
};

SampleTable parse_sample_csv(std::string_view text);
SampleTable read_sample_csv(const std::filesystem::path& path);
std::string format_sample_csv(const SampleTable& t);
/// rows samples of base and ruling on a uniform grid over the surface interval.
SampleTable sample_surface(const RuledSurfaceSpec& S, int rows);

/// Profile for reconstruction:
///
///     f = 0.5                    (expression in u, read as phi)
///     kind = timelike-           (timelike-, timelike+ or spacelike)
///     k1 = 1                     (expression in u, read as s; optional)
///     phi = 0, 1                 (optional)
///     theta = 0.3                (expression in u, read as s; optional)
///     steps = 1000               (optional)
///     name = profile             (optional)
struct ProfileDefinition {
  std::string name = "reconstructed";
  std::string f;
  std::string kind;
  std::string k1 = "1";
  std::optional<std::string> theta;
  double phi_min = 0.0;
  double phi_max = 1.0;
  int steps = 1000;
};

ProfileDefinition parse_profile(std::string_view text);
ProfileDefinition read_profile(const std::filesystem::path& path);

/// %.17g with '.' as decimal separator.
std::string format_number(double x);

std::string read_text_file(const std::filesystem::path& path);
/// Writes bytes exactly (LF line endings are preserved).
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ruled
