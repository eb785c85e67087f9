#include "qframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "qframe/error.hpp"

namespace qframe {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double to_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "number is not finite");
  return x;
}

Quaternion to_quaternion(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4) fail(where, "a quaternion is an array of 4 numbers");
  return Quaternion::unchecked(to_number(v[0], where), to_number(v[1], where), to_number(v[2], where),
                               to_number(v[3], where));
}

QMatrix to_matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "a matrix is a non-empty array of rows");
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  if (cols == 0) fail(where, "matrix rows must be non-empty arrays");
  std::vector<Quaternion> entries;
  entries.reserve(v.size() * cols);
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!v[r].is_array() || v[r].size() != cols) fail(row_where, "rows must all have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) entries.push_back(to_quaternion(v[r][c], row_where + "[" + std::to_string(c) + "]"));
  }
  return QMatrix(v.size(), cols, std::move(entries));
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

void append_number(std::string& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void append_quaternion(std::string& out, const Quaternion& q) {
  out += '[';
  for (int i = 0; i < 4; ++i) {
    if (i) out += ", ";
    append_number(out, q[i]);
  }
  out += ']';
}

void append_matrix(std::string& out, const QMatrix& m, std::string_view indent) {
  out += "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent;
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      append_quaternion(out, m(r, c));
    }
    out += r + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += indent;
  out += ']';
}

}  // namespace

LoadedFrame parse_frame(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("frame", "top level must be an object");
  const json& dim_json = member(doc, "dim", "frame");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() <= 0) fail("dim", "must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_json.get<long long>());
  const json& comps_json = member(doc, "components", "frame");
  if (!comps_json.is_array() || comps_json.empty()) fail("components", "must be a non-empty array");

  std::vector<FrameComponent> comps;
  std::vector<RankReduction> reductions;
  for (std::size_t j = 0; j < comps_json.size(); ++j) {
    const std::string where = "components[" + std::to_string(j) + "]";
    const json& cj = comps_json[j];
    if (!cj.is_object()) fail(where, "must be an object");
    const double weight = to_number(member(cj, "weight", where), where + ".weight");
    if (!(weight > 0.0)) fail(where + ".weight", "must be positive, got " + std::to_string(weight));

    const QMatrix rows = to_matrix(member(cj, "subspace_basis", where), where + ".subspace_basis");
    if (rows.cols() != dim) fail(where + ".subspace_basis", "basis vectors must have length " + std::to_string(dim));
    const QMatrix op = to_matrix(member(cj, "operator", where), where + ".operator");
    if (op.cols() != dim) fail(where + ".operator", "operator must have " + std::to_string(dim) + " columns");

    std::optional<Subspace> w;
    try {
      w = Subspace::span_of(transpose(rows));
    } catch (const Error& e) {
      fail(where + ".subspace_basis", std::string("basis spans no subspace (") + e.what() + ")");
    }
    if (w->dim() < rows.rows()) reductions.push_back({j, rows.rows(), w->dim()});
    comps.push_back({std::move(*w), op, weight});
  }
  try {
    return {GFusionFrame(dim, std::move(comps)), std::move(reductions)};
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

LoadedFrame load_frame(const std::filesystem::path& path) { return parse_frame(read_file(path)); }

QMatrix parse_matrix(std::string_view text) { return to_matrix(parse_json(text), "matrix"); }

QMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

QMatrix parse_signal(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.empty()) fail("signal", "must be a non-empty array");
  // [[a0..a3], ...] is a flat vector; [[[a0..a3]], ...] is an n x 1 matrix.
  const bool nested = doc[0].is_array() && !doc[0].empty() && doc[0][0].is_array();
  if (!nested) {
    std::vector<Quaternion> entries;
    for (std::size_t r = 0; r < doc.size(); ++r) entries.push_back(to_quaternion(doc[r], "signal[" + std::to_string(r) + "]"));
    return QMatrix::column(std::move(entries));
  }
  QMatrix m = to_matrix(doc, "signal");
  if (!m.is_vector()) fail("signal", "matrix form must have a single column");
  return m;
}

QMatrix load_signal(const std::filesystem::path& path) { return parse_signal(read_file(path)); }

std::string format_matrix(const QMatrix& m) {
  std::string out;
  append_matrix(out, m, "");
  out += '\n';
  return out;
}

std::string format_frame(const GFusionFrame& frame) {
  std::string out = "{\n  \"dim\": " + std::to_string(frame.dim()) + ",\n  \"components\": [\n";
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& c = frame[j];
    out += "    {\n      \"weight\": ";
    append_number(out, c.weight);
    out += ",\n      \"subspace_basis\": ";
    append_matrix(out, transpose(c.subspace.basis()), "      ");
    out += ",\n      \"operator\": ";
    append_matrix(out, c.op, "      ");
    out += j + 1 < frame.size() ? "\n    },\n" : "\n    }\n";
  }
  out += "  ]\n}\n";
  return out;
}

void save_frame(const GFusionFrame& frame, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << format_frame(frame);
  if (!out) throw Error(ErrorCode::InvalidArgument, "write to " + path.string() + " failed");
}

}  // namespace qframe
