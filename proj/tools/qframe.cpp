// qframe: analyze, construct and verify g-fusion frames stored as JSON.
//
// Exit codes:
//   0  success
//   1  not a frame, singular operator, failed check, or --require-frame unmet
//   2  unreadable input, schema or argument error
//   3  numerical failure

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qframe/constructions.hpp"
#include "qframe/error.hpp"
#include "qframe/io.hpp"
#include "qframe/random.hpp"
#include "qframe/verify.hpp"

namespace {

using nlohmann::json;
using namespace qframe;

constexpr int kExitOk = 0;
constexpr int kExitFrame = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

constexpr double kReconstructExitResidual = 1e-6;

struct Globals {
  double tol = kFrameTolerance;
  bool require_frame = false;
  std::string output;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAFrame:
    case ErrorCode::SingularOperator:
    case ErrorCode::HypothesisViolation:
      return kExitFrame;
    case ErrorCode::Parse:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidWeight:
    case ErrorCode::NonFinite:
    case ErrorCode::EmptyInput:
    case ErrorCode::ZeroVector:
    case ErrorCode::NotOrthonormal:
      return kExitInput;
    default:
      return kExitNumeric;
  }
}

// Reports carry 12 significant digits.
double sig12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json bounds_json(const FrameBounds& b) { return {{"A", sig12(b.lower)}, {"B", sig12(b.upper)}}; }

json frame_report(const GFusionFrame& frame, const FrameReport& r) {
  return {{"dim", frame.dim()},
          {"bounds", bounds_json(r.bounds)},
          {"is_frame", r.is_frame},
          {"is_tight", r.is_tight},
          {"is_parseval", r.is_parseval}};
}

void print(const json& report) { std::cout << report.dump(2) << '\n'; }

GFusionFrame load(const std::string& path) {
  LoadedFrame loaded = load_frame(path);
  for (const auto& r : loaded.reductions) {
    std::cerr << "qframe: " << path << ": component " << r.component << " basis has rank " << r.kept << " of "
              << r.given << " listed vectors\n";
  }
  return std::move(loaded.frame);
}

void write_output(const GFusionFrame& frame, const Globals& g) {
  if (g.output.empty()) {
    std::cerr << "qframe: no -o given, resulting frame not written\n";
    return;
  }
  save_frame(frame, g.output);
}

// Prints the analyze report for `frame` and applies --require-frame.
int report_frame(const GFusionFrame& frame, const Globals& g, json extra = json::object()) {
  const FrameReport r = classify(frame, g.tol);
  json report = frame_report(frame, r);
  report.update(extra);
  print(report);
  return g.require_frame && !r.is_frame ? kExitFrame : kExitOk;
}

int cmd_analyze(const std::string& path, const Globals& g) { return report_frame(load(path), g); }

int cmd_dual(const std::string& path, const Globals& g) {
  const GFusionFrame dual = canonical_dual(load(path), g.tol);
  write_output(dual, g);
  return report_frame(dual, g);
}

int cmd_parsevalize(const std::string& path, const Globals& g) {
  const GFusionFrame p = parsevalize(load(path), g.tol);
  write_output(p, g);
  return report_frame(p, g);
}

int cmd_transform(const std::string& path, const std::string& op_path, bool pullback, const Globals& g) {
  const GFusionFrame frame = load(path);
  const QMatrix u = load_matrix(op_path);
  const GFusionFrame image = transform(frame, u, g.tol);
  json extra = json::object();
  if (pullback) extra["pullback"] = bounds_json(pullback_bounds_check(frame, u, g.tol));
  write_output(image, g);
  return report_frame(image, g, extra);
}

int cmd_reconstruct(const std::string& path, const std::string& signal_path, const Globals& g) {
  const GFusionFrame frame = load(path);
  const QMatrix f = load_signal(signal_path);
  if (f.rows() != frame.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "signal has length " + std::to_string(f.rows()) + ", frame dim is " +
                                                  std::to_string(frame.dim()));
  }
  const Reconstruction r = reconstruct_checked(frame, f, g.tol);
  print({{"dim", frame.dim()}, {"residual", sig12(r.residual)}, {"alternate_residual", sig12(r.alternate_residual)}});
  const bool ok = r.residual < kReconstructExitResidual && r.alternate_residual < kReconstructExitResidual;
  if (!ok) std::cerr << "qframe: reconstruction residual exceeds " << kReconstructExitResidual << '\n';
  return ok ? kExitOk : kExitNumeric;
}

int cmd_random(const RandomSpec& spec, const Globals& g) {
  const GFusionFrame frame = random_frame(spec);
  write_output(frame, g);
  return report_frame(frame, g, {{"seed", spec.seed}});
}

int cmd_verify(const std::string& path, const Globals& g) {
  const GFusionFrame frame = load(path);
  VerifyOptions options;
  options.tol = g.tol;
  const VerifyReport report = verify_frame(frame, options);
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  print({{"dim", frame.dim()}, {"checks", checks}, {"passed", report.passed()}});
  return report.passed() ? kExitOk : kExitFrame;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze, construct and verify quaternionic g-fusion frames"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Classification tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--require-frame", g.require_frame, "Exit 1 when the result is not a frame");
  app.add_option("-o,--output", g.output, "Where to write a resulting frame");
  app.fallthrough();

  std::string frame_path;
  std::string second_path;
  bool pullback = false;
  RandomSpec spec;

  auto* analyze = app.add_subcommand("analyze", "Frame bounds and classification");
  analyze->add_option("frame", frame_path, "Frame JSON")->required();
  auto* dual = app.add_subcommand("dual", "Canonical dual frame");
  dual->add_option("frame", frame_path, "Frame JSON")->required();
  auto* parseval = app.add_subcommand("parsevalize", "Parseval frame through S^-1/2");
  parseval->add_option("frame", frame_path, "Frame JSON")->required();
  auto* trans = app.add_subcommand("transform", "Image of the frame under an invertible U");
  trans->add_option("frame", frame_path, "Frame JSON")->required();
  trans->add_option("operator", second_path, "Matrix JSON for U")->required();
  trans->add_flag("--pullback", pullback, "Also print the guaranteed bounds of the input frame");
  auto* recon = app.add_subcommand("reconstruct", "Reconstruct a signal through the frame");
  recon->add_option("frame", frame_path, "Frame JSON")->required();
  recon->add_option("signal", second_path, "Signal JSON")->required();
  auto* rnd = app.add_subcommand("random", "Seeded random frame");
  rnd->add_option("--dim", spec.dim, "Ambient dimension n")->required();
  rnd->add_option("--components", spec.component_count, "Number of components")->required();
  rnd->add_option("--subspace-dim", spec.subspace_dim, "Dimension of each subspace")->required();
  rnd->add_option("--rows", spec.operator_rows, "Rows of each operator")->required();
  rnd->add_option("--seed", spec.seed, "64-bit seed");
  auto* ver = app.add_subcommand("verify", "Run the self-check suite on a frame");
  ver->add_option("frame", frame_path, "Frame JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(frame_path, g);
    if (*dual) return cmd_dual(frame_path, g);
    if (*parseval) return cmd_parsevalize(frame_path, g);
    if (*trans) return cmd_transform(frame_path, second_path, pullback, g);
    if (*recon) return cmd_reconstruct(frame_path, second_path, g);
    if (*rnd) return cmd_random(spec, g);
    if (*ver) return cmd_verify(frame_path, g);
  } catch (const Error& e) {
    std::cerr << "qframe: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "qframe: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitInput;
}
