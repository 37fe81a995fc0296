#include "aplab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace aplab {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

double parse_double(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw Error(Errc::parse, "malformed " + what + ": '" + s + "'");
  }
  return v;
}

long parse_long(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw Error(Errc::parse, "malformed " + what + ": '" + s + "'");
  }
  return v;
}

// `# half_width=<float> n_cells=<int>`
bool parse_comment_metadata(const std::string& line, double* half_width, long* n_cells) {
  std::istringstream in(line);
  std::string tok;
  in >> tok;
  if (tok != "#") {
    return false;
  }
  bool have_hw = false;
  bool have_nc = false;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      continue;
    }
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "half_width") {
      *half_width = parse_double(val, "half_width");
      have_hw = true;
    } else if (key == "n_cells") {
      *n_cells = parse_long(val, "n_cells");
      have_nc = true;
    }
  }
  if (!(have_hw && have_nc)) {
    throw Error(Errc::parse, "metadata comment missing half_width or n_cells");
  }
  return true;
}

void read_sidecar(const std::string& path, double* half_width, long* n_cells) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io, "cannot open sidecar " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
    *half_width = j.at("half_width").get<double>();
    *n_cells = j.at("n_cells").get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, "bad sidecar " + path + ": " + e.what());
  }
}

}  // namespace

GridFunction read_grid_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io, "cannot open " + path);
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(Errc::parse, path + " is empty");
  }

  double half_width = 0.0;
  long n_cells = 0;
  if (parse_comment_metadata(line, &half_width, &n_cells)) {
    if (!std::getline(in, line)) {
      throw Error(Errc::parse, path + " has no header line");
    }
  } else {
    read_sidecar(path + ".json", &half_width, &n_cells);
  }

  if (line != "cell_index,value") {
    throw Error(Errc::parse, "expected header 'cell_index,value', got '" + line + "'");
  }
  if (n_cells < 2) {
    throw Error(Errc::parse, "invalid n_cells in metadata");
  }

  Grid grid(half_width, static_cast<std::size_t>(n_cells));
  std::vector<double> values;
  values.reserve(grid.n_cells());
  long expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::parse, "malformed row '" + line + "'");
    }
    const long idx = parse_long(line.substr(0, comma), "cell_index");
    if (idx != expected) {
      throw Error(Errc::parse, "cell index gap: expected " + std::to_string(expected) +
                                   ", got " + std::to_string(idx));
    }
    const double v = parse_double(line.substr(comma + 1), "value");
    if (!std::isfinite(v)) {
      throw Error(Errc::parse, "nonfinite value at cell " + std::to_string(idx));
    }
    values.push_back(v);
    ++expected;
  }
  if (values.size() != grid.n_cells()) {
    throw Error(Errc::parse, "row count " + std::to_string(values.size()) +
                                 " does not match n_cells " + std::to_string(n_cells));
  }
  return GridFunction(grid, std::move(values));
}

void write_grid_function(const GridFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::io, "cannot write " + path);
  }
  out << "# half_width=" << format_double(f.grid().half_width())
      << " n_cells=" << f.grid().n_cells() << "\n";
  out << "cell_index,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << i << "," << format_double(f[i]) << "\n";
  }
  if (!out) {
    throw Error(Errc::io, "write failed for " + path);
  }

  nlohmann::json j;
  j["half_width"] = f.grid().half_width();
  j["n_cells"] = f.grid().n_cells();
  std::ofstream side(path + ".json");
  if (!side) {
    throw Error(Errc::io, "cannot write sidecar for " + path);
  }
  side << j.dump() << "\n";
}

}  // namespace aplab
