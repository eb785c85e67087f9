// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances are fixed here.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>

#include "qframe/constructions.hpp"
#include "qframe/error.hpp"
#include "qframe/io.hpp"
#include "qframe/random.hpp"
#include "qframe/verify.hpp"
#include "support.hpp"

using namespace qframe;
using qframe::test::fixture;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome outcome(bool ok, const char* fmt, double a = 0, double b = 0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return {ok, buf};
}

// 1
Outcome quaternion_algebra() {
  constexpr double tol = 1e-12;
  Rng rng(1001);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = rng.quaternion(), q = rng.quaternion(), r = rng.quaternion();
    const Quaternion assoc = (p * q) * r - p * (q * r);
    worst = std::max(worst, modulus(assoc));
    worst = std::max(worst, std::abs(modulus(p * q) - modulus(p) * modulus(q)));
    worst = std::max(worst, modulus(q * inverse(q) - Quaternion::one()));
  }
  return outcome(worst < tol, "max defect %.3e over 1000 triples (tol 1e-12)", worst);
}

// 2
Outcome embedding_homomorphism() {
  Rng rng(1002);
  double product = 0.0, adj = 0.0;
  for (int t = 0; t < 100; ++t) {
    const QMatrix m = rng.matrix(5, 5), n = rng.matrix(5, 5);
    product = std::max(product, frobenius_norm(embed(m * n) - embed(m) * embed(n)));
    adj = std::max(adj, frobenius_norm(embed(adjoint(m)) - adjoint(embed(m))));
  }
  return outcome(product < 1e-10 && adj < 1e-15, "||embed(MN) - embed(M)embed(N)||_F <= %.3e, adjoint defect %.3e",
                 product, adj);
}

// 3
Outcome cauchy_schwarz() {
  Rng rng(1003);
  double worst = -1e300;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.next_u64() % 8;
    const QMatrix u = rng.vector(n), v = rng.vector(n);
    worst = std::max(worst, modulus(inner_product(u, v)) - norm(u) * norm(v));
  }
  return outcome(worst <= 1e-10, "max |<u,v>| - ||u|| ||v|| = %.3e over 1000 pairs", worst);
}

// 4
Outcome frame_operator_contract() {
  Rng rng(1004);
  double fact = 0.0, herm = 0.0, energy = 0.0;
  for (int t = 0; t < 50; ++t) {
    const GFusionFrame frame = test::random_test_frame(rng, 12);
    const QMatrix s = frame_operator(frame);
    const QMatrix tm = synthesis_matrix(frame);
    const double scale = std::max(1.0, frobenius_norm(s));
    fact = std::max(fact, frobenius_norm(s - tm * adjoint(tm)) / scale);
    herm = std::max(herm, frobenius_norm(s - adjoint(s)) / scale);
    for (int k = 0; k < 10; ++k) {
      const QMatrix f = rng.vector(frame.dim());
      const double direct = frame_energy(frame, f);
      const Quaternion quad = inner_product(s * f, f);
      energy = std::max(energy, modulus(quad - Quaternion(direct)) / std::max(1.0, direct));
    }
  }
  const bool ok = fact < 1e-10 && herm < 1e-10 && energy < 1e-10;
  char buf[200];
  std::snprintf(buf, sizeof buf, "S = T T* to %.2e, Hermitian to %.2e, energy identity to %.2e (50 frames)", fact, herm,
                energy);
  return {ok, buf};
}

// 5
Outcome doubled_basis() {
  const GFusionFrame f = load_frame(fixture("doubled_basis_h8.json")).frame;
  const FrameReport r = classify(f);
  const bool ok = r.is_tight && std::abs(r.bounds.lower - 2.0) < 1e-10 && std::abs(r.bounds.upper - 2.0) < 1e-10;
  return outcome(ok, "A = %.15g, B = %.15g", r.bounds.lower, r.bounds.upper);
}

// 6
Outcome repeated_first_axis() {
  const FrameBounds b = frame_bounds(load_frame(fixture("repeated_first_axis_h8.json")).frame);
  const bool ok = std::abs(b.lower - 1.0) < 1e-10 && std::abs(b.upper - 2.0) < 1e-10;
  return outcome(ok, "A = %.15g, B = %.15g", b.lower, b.upper);
}

// 7
Outcome parseval() {
  Rng rng(1007);
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const GFusionFrame p = parsevalize(test::random_test_frame(rng, 8));
    const QMatrix s = frame_operator(p);
    worst = std::max(worst, operator_norm(s - QMatrix::identity(p.dim())));
    if (!classify(p).is_parseval) return outcome(false, "parsevalize output not flagged Parseval");
  }
  // Flag against an independently evaluated ||S - I|| on frames with S = I + delta H.
  const double tol = 1e-6;
  int mismatches = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.next_u64() % 6;
    const QMatrix a = rng.matrix(n, n);
    QMatrix h = 0.5 * (a + adjoint(a));
    h *= 1.0 / operator_norm(h);
    const double ratios[] = {0.25, 0.9, 1.1, 4.0};
    const double delta = ratios[t % 4] * tol;
    const QMatrix op = hermitian_function(QMatrix::identity(n) + delta * h, SpectralFunction::Sqrt);
    const GFusionFrame g = from_g_frame({op});
    const double dist = operator_norm(frame_operator(g) - QMatrix::identity(n));
    if (classify(g, tol).is_parseval != (dist <= tol)) ++mismatches;
  }
  return outcome(worst < 1e-8 && mismatches == 0, "max ||S - I|| after parsevalize %.3e; flag mismatches %.0f",
                 worst, mismatches);
}

// 8
Outcome dual() {
  Rng rng(1008);
  double product = 0.0, bounds = 0.0;
  for (int t = 0; t < 50; ++t) {
    const GFusionFrame frame = test::random_test_frame(rng, 10);
    const QMatrix s = frame_operator(frame);
    const FrameBounds b = frame_bounds(frame);
    const GFusionFrame d = canonical_dual(frame);
    product = std::max(product, operator_norm(frame_operator(d) * s - QMatrix::identity(frame.dim())));
    const FrameBounds db = frame_bounds(d);
    bounds = std::max({bounds, std::abs(db.lower - 1.0 / b.upper) / std::max(1.0, 1.0 / b.upper),
                       std::abs(db.upper - 1.0 / b.lower) / std::max(1.0, 1.0 / b.lower)});
  }
  return outcome(product < 1e-8 && bounds < 1e-8, "||S_dual S - I|| <= %.3e, bound error %.3e (50 frames)", product,
                 bounds);
}

// 9
Outcome reconstruction() {
  Rng rng(1009);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const GFusionFrame frame = test::random_test_frame(rng, 10);
    for (int k = 0; k < 3; ++k) {
      const Reconstruction r = reconstruct_checked(frame, rng.vector(frame.dim()));
      worst = std::max({worst, r.residual, r.alternate_residual});
    }
  }
  return outcome(worst < 1e-8, "max relative residual %.3e (150 signals)", worst);
}

// 10
Outcome projection_identity() {
  Rng rng(1010);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.next_u64() % 8;
    worst = std::max(worst, projection_identity_defect(n, 1, rng.next_u64()));
  }
  return outcome(worst < 1e-10, "max ||P_V T* - P_V T* P_TV||_F / max(1, ||T||_F) = %.3e (100 pairs)", worst);
}

// 11
Outcome sandwich_and_containment() {
  Rng rng(1011);
  int sandwich_failures = 0, containment_failures = 0;
  for (int t = 0; t < 100; ++t) {
    const GFusionFrame frame = test::random_test_frame(rng, 6);
    const QMatrix u = test::random_invertible(rng, frame.dim());
    for (int k = 0; k < 5; ++k)
      if (!transform_sandwich(frame, u, rng.vector(frame.dim())).holds(1e-8)) ++sandwich_failures;
    try {
      (void)pullback_bounds_check(frame, u);
    } catch (const Error&) {
      ++containment_failures;
    }
  }
  return outcome(sandwich_failures == 0 && containment_failures == 0,
                 "sandwich failures %.0f / 500, containment failures %.0f / 100", sandwich_failures,
                 containment_failures);
}

// 12
Outcome onto_equivalence() {
  Rng rng(1012);
  int disagreements = 0, singular_frames = 0;
  for (int t = 0; t < 100; ++t) {
    const bool singular = t % 10 == 0;
    const GFusionFrame frame =
        singular ? test::singular_test_frame(rng, 2 + rng.next_u64() % 6, 8) : test::random_test_frame(rng, 8);
    const bool is_frame = classify(frame).is_frame;
    if (singular && is_frame) ++singular_frames;
    if (synthesis_is_onto(frame) != is_frame) ++disagreements;
  }
  return outcome(disagreements == 0 && singular_frames == 0,
                 "disagreements %.0f / 100; singular instances classified as frames %.0f / 10", disagreements,
                 singular_frames);
}

// 13
int cli(const std::string& args) {
  const std::string cmd = std::string(QFRAME_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_pipeline() {
  const auto tmp = std::filesystem::temp_directory_path() / "qframe_acceptance_dual.json";
  int pipeline_failures = 0;
  for (const char* name : {"parseval_quaternion_pair_h2.json", "doubled_basis_h8.json", "repeated_first_axis_h8.json"}) {
    const std::string path = fixture(name);
    if (cli("analyze --require-frame " + path) != 0) ++pipeline_failures;
    if (cli("dual " + path + " -o " + tmp.string()) != 0) ++pipeline_failures;
    if (cli("verify " + tmp.string()) != 0) ++pipeline_failures;
    if (cli("verify " + path) != 0) ++pipeline_failures;
  }
  std::filesystem::remove(tmp);
  const int corrupted = cli("verify " + fixture("negative_weight_h2.json"));
  const int singular = cli("verify " + fixture("singular_h2.json"));
  char buf[200];
  std::snprintf(buf, sizeof buf, "pipeline failures %d / 12, corrupted exit %d (want 2), singular exit %d (want 1)",
                pipeline_failures, corrupted, singular);
  return {pipeline_failures == 0 && corrupted == 2 && singular == 1, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"quaternion algebra", quaternion_algebra},
      {"embedding *-homomorphism", embedding_homomorphism},
      {"Cauchy-Schwarz", cauchy_schwarz},
      {"frame operator contract", frame_operator_contract},
      {"doubled basis of H^8 tight with bound 2", doubled_basis},
      {"repeated first axis in H^8 has bounds (1, 2)", repeated_first_axis},
      {"Parseval construction and flag", parseval},
      {"canonical dual operator and bounds", dual},
      {"reconstruction formula", reconstruction},
      {"projection identity", projection_identity},
      {"transform sandwich and pullback containment", sandwich_and_containment},
      {"synthesis onto iff frame", onto_equivalence},
      {"CLI end-to-end", cli_pipeline},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d  %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2f s\n", index - failures, index, secs);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
