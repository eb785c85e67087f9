#pragma once

// JSON encoding. A quaternion is [a0, a1, a2, a3]; a matrix is an array of
// rows of quaternions. A frame file is
//
//   { "dim": n,
//     "components": [ { "weight": v, "subspace_basis": [...], "operator": [...] } ] }
//
// where the rows of subspace_basis are the basis vectors. Every failure to
// read or validate input is reported as ErrorCode::Parse.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qframe/frames.hpp"

namespace qframe {

/// A component whose listed basis vectors were linearly dependent.
struct RankReduction {
  std::size_t component;
  std::size_t given;
  std::size_t kept;
};

struct LoadedFrame {
  GFusionFrame frame;
  std::vector<RankReduction> reductions;
};

LoadedFrame parse_frame(std::string_view text);
LoadedFrame load_frame(const std::filesystem::path& path);

/// Matrix file, e.g. the operator U of a transform.
QMatrix parse_matrix(std::string_view text);
QMatrix load_matrix(const std::filesystem::path& path);

/// Either a flat list of quaternions or an n x 1 matrix; returned as a column.
QMatrix parse_signal(std::string_view text);
QMatrix load_signal(const std::filesystem::path& path);

/// Numbers use 17 significant digits so doubles round-trip exactly.
std::string format_frame(const GFusionFrame& frame);
std::string format_matrix(const QMatrix& m);
void save_frame(const GFusionFrame& frame, const std::filesystem::path& path);

}  // namespace qframe
