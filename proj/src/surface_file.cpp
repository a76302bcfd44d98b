#include "ruled/surface_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ruled/curves.hpp"
#include "ruled/errors.hpp"
#include "ruled/expr.hpp"

namespace ruled {

FileError::FileError(const std::string& message, int line, std::optional<std::size_t> offset)
    : std::runtime_error(message), line_(line), offset_(offset) {}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw FileError("write failed for '" + path.string() + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

std::map<std::string, Entry> parse_key_values(std::string_view text, const std::set<std::string>& allowed) {
  std::map<std::string, Entry> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FileError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    if (!allowed.count(key)) throw FileError("unknown key '" + key + "'", line_no);
    if (out.count(key)) throw FileError("duplicate key '" + key + "'", line_no);
    out[key] = {std::string(trim(line.substr(eq + 1))), line_no};
    if (end == text.size()) break;
  }
  return out;
}

double parse_double(std::string_view s, int line, const std::string& what) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw FileError("invalid number for " + what + ": '" + std::string(s) + "'", line);
  }
  return v;
}

int parse_int(std::string_view s, int line, const std::string& what) {
  s = trim(s);
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw FileError("invalid integer for " + what + ": '" + std::string(s) + "'", line);
  }
  return v;
}

std::pair<double, double> parse_range(const Entry& e, const std::string& what) {
  const auto comma = e.value.find(',');
  if (comma == std::string::npos) throw FileError(what + " must be 'a, b'", e.line);
  const double a = parse_double(std::string_view(e.value).substr(0, comma), e.line, what);
  const double b = parse_double(std::string_view(e.value).substr(comma + 1), e.line, what);
  if (!(b > a)) throw FileError(what + " must satisfy a < b", e.line);
  return {a, b};
}

expr::Expr parse_expression(const std::string& text, const std::string& key, int line) {
  try {
    return expr::parse(text);
  } catch (const expr::ParseError& e) {
    throw FileError(key + ": " + e.what(), line, e.offset());
  }
}

const char* const kAxes[3] = {"x", "y", "z"};

}  // namespace

SurfaceDefinition parse_surface_definition(std::string_view text, const std::filesystem::path& directory) {
  const std::set<std::string> allowed = {"name",     "kind",     "base.x",  "base.y", "base.z", "ruling.x",
                                         "ruling.y", "ruling.z", "sampled", "domain", "samples"};
  const auto kv = parse_key_values(text, allowed);
  SurfaceDefinition def;
  def.directory = directory;
  def.name = kv.count("name") ? kv.at("name").value : "surface";
  if (!kv.count("kind")) throw FileError("missing key 'kind'");
  const Entry& kind = kv.at("kind");
  if (kind.value == "analytic") {
    def.kind = SurfaceDefinition::Kind::Analytic;
  } else if (kind.value == "sampled") {
    def.kind = SurfaceDefinition::Kind::Sampled;
  } else {
    throw FileError("kind must be 'analytic' or 'sampled'", kind.line);
  }

  int expression_keys = 0;
  for (int i = 0; i < 3; ++i) {
    for (const char* part : {"base.", "ruling."}) {
      const std::string key = std::string(part) + kAxes[i];
      if (!kv.count(key)) continue;
      ++expression_keys;
      const Entry& e = kv.at(key);
      parse_expression(e.value, key, e.line);
      (part[0] == 'b' ? def.base : def.ruling)[static_cast<std::size_t>(i)] = e.value;
    }
  }
  if (def.kind == SurfaceDefinition::Kind::Analytic) {
    if (kv.count("sampled")) throw FileError("'sampled' is not allowed for an analytic surface", kv.at("sampled").line);
    if (expression_keys != 6) throw FileError("analytic surfaces need base.x/y/z and ruling.x/y/z");
    if (!kv.count("domain")) throw FileError("missing key 'domain'");
  } else {
    if (expression_keys != 0) throw FileError("expressions are not allowed for a sampled surface");
    if (!kv.count("sampled")) throw FileError("missing key 'sampled'");
    def.sampled = kv.at("sampled").value;
  }
  if (kv.count("domain")) {
    std::tie(def.u_min, def.u_max) = parse_range(kv.at("domain"), "domain");
  } else {
    const SampleTable t = read_sample_csv(directory / def.sampled);
    def.u_min = t.u.front();
    def.u_max = t.u.back();
  }
  if (kv.count("samples")) {
    def.samples = parse_int(kv.at("samples").value, kv.at("samples").line, "samples");
    if (def.samples < 16) throw FileError("samples must be at least 16", kv.at("samples").line);
  }
  return def;
}

SurfaceDefinition read_surface_definition(const std::filesystem::path& path) {
  return parse_surface_definition(read_text_file(path), path.parent_path());
}

std::string format_surface_definition(const SurfaceDefinition& def) {
  std::string out = "name = " + def.name + "\n";
  if (def.kind == SurfaceDefinition::Kind::Analytic) {
    out += "kind = analytic\n";
    for (int i = 0; i < 3; ++i) out += std::string("base.") + kAxes[i] + " = " + def.base[static_cast<std::size_t>(i)] + "\n";
    for (int i = 0; i < 3; ++i) {
      out += std::string("ruling.") + kAxes[i] + " = " + def.ruling[static_cast<std::size_t>(i)] + "\n";
    }
  } else {
    out += "kind = sampled\nsampled = " + def.sampled + "\n";
  }
  out += "domain = " + format_number(def.u_min) + ", " + format_number(def.u_max) + "\n";
  out += "samples = " + std::to_string(def.samples) + "\n";
  return out;
}

RuledSurfaceSpec to_spec(const SurfaceDefinition& def) {
  RuledSurfaceSpec S;
  S.name = def.name;
  S.u_min = def.u_min;
  S.u_max = def.u_max;
  S.samples = def.samples;
  if (def.kind == SurfaceDefinition::Kind::Analytic) {
    std::array<expr::Expr, 3> k, q;
    for (std::size_t i = 0; i < 3; ++i) {
      k[i] = parse_expression(def.base[i], std::string("base.") + kAxes[i], 0);
      q[i] = parse_expression(def.ruling[i], std::string("ruling.") + kAxes[i], 0);
    }
    S.base = std::make_shared<ExprCurve>(k, def.u_min, def.u_max, def.samples);
    S.ruling = std::make_shared<ExprCurve>(q, def.u_min, def.u_max, def.samples);
  } else {
    SampleTable t = read_sample_csv(def.directory / def.sampled);
    if (def.u_min < t.u.front() || def.u_max > t.u.back()) {
      throw FileError("domain exceeds the sampled parameter range of '" + def.sampled + "'");
    }
    S.base = std::make_shared<SampledCurve>(t.u, std::move(t.k));
    S.ruling = std::make_shared<SampledCurve>(std::move(t.u), std::move(t.q));
  }
  return S;
}

SampleTable parse_sample_csv(std::string_view text) {
  SampleTable t;
  int line_no = 0;
  std::size_t pos = 0;
  bool header = false;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (!header) {
      if (line != "u,kx,ky,kz,qx,qy,qz") throw FileError("CSV header must be 'u,kx,ky,kz,qx,qy,qz'", line_no);
      header = true;
      continue;
    }
    std::array<double, 7> v{};
    std::size_t start = 0;
    for (std::size_t i = 0; i < 7; ++i) {
      const std::size_t comma = i < 6 ? line.find(',', start) : line.size();
      if (comma == std::string_view::npos) throw FileError("CSV row needs seven columns", line_no);
      v[i] = parse_double(line.substr(start, comma - start), line_no, "CSV column " + std::to_string(i + 1));
      start = comma + 1;
    }
    if (!t.u.empty() && !(v[0] > t.u.back())) throw FileError("CSV u column must be strictly increasing", line_no);
    t.u.push_back(v[0]);
    t.k.emplace_back(v[1], v[2], v[3]);
    t.q.emplace_back(v[4], v[5], v[6]);
  }
  if (!header) throw FileError("CSV is empty");
  if (t.u.size() < 16) throw FileError("CSV needs at least 16 rows");
  return t;
}

SampleTable read_sample_csv(const std::filesystem::path& path) {
  try {
    return parse_sample_csv(read_text_file(path));
  } catch (const FileError& e) {
    throw FileError(path.filename().string() + ": " + e.what(), e.line(), e.offset());
  }
}

std::string format_sample_csv(const SampleTable& t) {
  std::string out = "u,kx,ky,kz,qx,qy,qz\n";
  for (std::size_t i = 0; i < t.u.size(); ++i) {
    out += format_number(t.u[i]);
    for (const MVec3* v : {&t.k[i], &t.q[i]}) {
      for (int c = 0; c < 3; ++c) out += "," + format_number((*v)[c]);
    }
    out += "\n";
  }
  return out;
}

SampleTable sample_surface(const RuledSurfaceSpec& S, int rows) {
  SampleTable t;
  for (int i = 0; i < rows; ++i) {
    const double u = i + 1 == rows ? S.u_max : S.u_min + (S.u_max - S.u_min) * i / (rows - 1);
    t.u.push_back(u);
    t.k.push_back(S.base->position(u));
    t.q.push_back(S.ruling->position(u));
  }
  return t;
}

ProfileDefinition parse_profile(std::string_view text) {
  const auto kv = parse_key_values(text, {"name", "f", "kind", "k1", "phi", "theta", "steps"});
  ProfileDefinition p;
  if (!kv.count("f")) throw FileError("missing key 'f'");
  if (!kv.count("kind")) throw FileError("missing key 'kind'");
  p.f = kv.at("f").value;
  parse_expression(p.f, "f", kv.at("f").line);
  p.kind = kv.at("kind").value;
  if (p.kind != "timelike-" && p.kind != "timelike+" && p.kind != "spacelike") {
    throw FileError("kind must be timelike-, timelike+ or spacelike", kv.at("kind").line);
  }
  if (kv.count("name")) p.name = kv.at("name").value;
  if (kv.count("k1")) {
    p.k1 = kv.at("k1").value;
    parse_expression(p.k1, "k1", kv.at("k1").line);
  }
  if (kv.count("theta")) {
    p.theta = kv.at("theta").value;
    parse_expression(*p.theta, "theta", kv.at("theta").line);
  }
  if (kv.count("phi")) std::tie(p.phi_min, p.phi_max) = parse_range(kv.at("phi"), "phi");
  if (kv.count("steps")) p.steps = parse_int(kv.at("steps").value, kv.at("steps").line, "steps");
  return p;
}

ProfileDefinition read_profile(const std::filesystem::path& path) { return parse_profile(read_text_file(path)); }

}  // namespace ruled
