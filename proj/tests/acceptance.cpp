// Acceptance suite: every release criterion exercised end to end at its
// documented tolerance, one pass/fail line each. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pgc/classify.hpp"
#include "pgc/errors.hpp"
#include "pgc/numerics.hpp"
#include "pgc/pipeline.hpp"
#include "pgc/reconstruct.hpp"
#include "pgc/report.hpp"
#include "pgc/specfile.hpp"

namespace fs = std::filesystem;
using namespace pgc;

namespace {

const std::string kBin = PGC_BIN;
const std::string kFixtures = PGC_FIXTURES;

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
    void require_le(double value, double bound, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: %.3e > %.3e", what.c_str(), value, bound);
        require(value <= bound, buf);
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Checker&)>& body) {
    Checker check;
    try {
        body(check);
    } catch (const std::exception& e) {
        check.ok = false;
        check.detail = std::string("exception: ") + e.what();
    }
    if (check.ok) {
        std::printf("[PASS] criterion %2d: %s\n", id, name.c_str());
    } else {
        std::printf("[FAIL] criterion %2d: %s -- %s\n", id, name.c_str(),
                    check.detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

double rel_err(double got, double want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

struct RoundTripCase {
    Expr kappa;
    Expr tau;
};

double roundtrip_sup_error(const RoundTripCase& c, int n) {
    IntrinsicSpec spec;
    spec.kappa = c.kappa;
    spec.tau = c.tau;
    spec.lo = 0.0;
    spec.hi = 2.0;
    const auto curve = reconstruct_curve(spec, n);
    const auto frames = analyze_samples(curve.to_samples());
    double sup = 0.0;
    for (const auto& f : frames) {
        sup = std::max(sup, std::abs(f.kappa - c.kappa.evaluate(f.s)));
        sup = std::max(sup, std::abs(f.tau - c.tau.evaluate(f.s)));
    }
    return sup;
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("pgc_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd =
        kBin + " " + args + " > /dev/null 2> " + (scratch_dir() / "err.txt").string();
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main() {
    const Tolerances tol;

    criterion(1, "apparatus of the constant-ratio fixture (1e-9 relative, < 1 s)",
              [&](Checker& check) {
                  const auto t0 = std::chrono::steady_clock::now();
                  const auto curve = fixtures::ratio_curve(0.5, 5.0);
                  const auto grid = sample_grid(curve, 1001);
                  const auto frames = frame_grid(curve, grid);
                  double sup_kappa = 0.0, sup_tau = 0.0;
                  for (const auto& f : frames) {
                      sup_kappa = std::max(
                          sup_kappa, std::abs(f.kappa - 1.0 / f.s) / (1.0 / f.s));
                      sup_tau = std::max(sup_tau,
                                         std::abs(f.tau + 2.0 / f.s) / (2.0 / f.s));
                  }
                  const double elapsed =
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
                  check.require_le(sup_kappa, 1e-9, "kappa relative error");
                  check.require_le(sup_tau, 1e-9, "tau relative error");
                  check.require_le(elapsed, 1.0, "runtime (s)");
              });

    criterion(2, "classification of the constant-ratio fixture (c3 = 3, not N-constant)",
              [&](Checker& check) {
                  const auto curve = fixtures::ratio_curve(0.5, 5.0);
                  const auto grid = sample_grid(curve, 1001);
                  const auto d = decompose(curve, grid, {});
                  const auto cr = classify_constant_ratio(d, tol.constancy_symbolic);
                  check.require(cr.verdict == Verdict::True, "constant-ratio verdict");
                  check.require_le(std::abs(cr.c3 - 3.0), 1e-6, "|c3 - 3|");
                  const auto frames = frame_grid(curve, grid);
                  const auto nc = detect_n_constant(d, frames, tol.constancy_symbolic);
                  check.require(nc.verdict == Verdict::False, "N-constant verdict");
                  double sup = 0.0;
                  for (size_t i = 0; i < grid.size(); ++i) {
                      const double want = grid[i] * grid[i] / 3.0;
                      sup = std::max(sup, std::abs(d.q[i] - want) / want);
                  }
                  check.require_le(sup, 1e-6, "q vs s^2/3 relative error");
              });

    criterion(3, "classification of the Salkowski fixture (N-constant, not constant-ratio)",
              [&](Checker& check) {
                  const CurveSpec spec =
                      load_curve_spec(kFixtures + "/example42.json");
                  check.require(spec.origin.x == 0.0 && spec.origin.y == 0.0 &&
                                    spec.origin.z == 0.0,
                                "origin is zero");
                  const auto curve = reconstruct_curve(intrinsic_of(spec), spec.samples);
                  const auto rederived = analyze_samples(curve.to_samples());
                  double sup_kappa = 0.0, sup_tau = 0.0;
                  for (const auto& f : rederived) {
                      sup_kappa = std::max(sup_kappa, std::abs(f.kappa - 1.0));
                      sup_tau = std::max(sup_tau, std::abs(f.tau - f.s));
                  }
                  check.require_le(sup_kappa, 1e-6, "kappa constancy");
                  check.require_le(sup_tau, 1e-6, "tau vs s");

                  const auto result = analyze_curve(spec, tol);
                  check.require(result.n_constant.verdict == Verdict::True,
                                "N-constant verdict");
                  check.require_le(result.n_constant.relative_deviation, 1e-3,
                                   "q relative deviation");
                  check.require(result.constant_ratio.verdict == Verdict::False,
                                "constant-ratio verdict is false");
              });

    criterion(4, "reconstruction round trip over 20 random curvature pairs (O(h^4))",
              [&](Checker& check) {
                  const auto t0 = std::chrono::steady_clock::now();
                  std::mt19937 rng(2024);
                  // Oscillatory enough that truncation dominates rounding at
                  // both grid sizes; the convergence-order check is blind
                  // inside the noise floor.
                  std::uniform_real_distribution<double> amp(0.3, 0.7);
                  std::uniform_real_distribution<double> base(0.5, 1.0);
                  std::uniform_real_distribution<double> camp(0.3, 0.8);
                  std::uniform_real_distribution<double> freq(8.0, 14.0);
                  double max_coarse = 0.0, max_fine = 0.0;
                  for (int trial = 0; trial < 20; ++trial) {
                      char kbuf[96], tbuf[96];
                      std::snprintf(kbuf, sizeof(kbuf), "1.5 + %.6f*sin(%.6f*s)",
                                    amp(rng), freq(rng));
                      std::snprintf(tbuf, sizeof(tbuf), "%.6f + %.6f*cos(%.6f*s)",
                                    base(rng), camp(rng), freq(rng));
                      RoundTripCase c{parse(kbuf, "s"), parse(tbuf, "s")};
                      const double coarse = roundtrip_sup_error(c, 2001);
                      const double fine = roundtrip_sup_error(c, 8001);
                      check.require_le(coarse, 1e-3, "sup error at n = 2001");
                      max_coarse = std::max(max_coarse, coarse);
                      max_fine = std::max(max_fine, fine);
                  }
                  check.require(max_fine * 8.0 <= max_coarse,
                                "error shrink under two grid doublings below 8x "
                                "(coarse " +
                                    std::to_string(max_coarse) + ", fine " +
                                    std::to_string(max_fine) + ")");
                  const double elapsed =
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
                  check.require_le(elapsed, 10.0, "runtime (s)");
              });

    criterion(5, "coefficient system master residuals on every fixture",
              [&](Checker& check) {
                  const std::vector<std::string> files = {
                      "/example41.json", "/example42.json", "/parabola.json"};
                  for (const auto& file : files) {
                      const CurveSpec spec = load_curve_spec(kFixtures + file);
                      const auto r = analyze_curve(spec, tol);
                      check.require_le(r.coefficient_residual_m1, 1e-5,
                                       file + " residual m1");
                      check.require_le(r.coefficient_residual_m2, 1e-5,
                                       file + " residual m2");
                      check.require_le(std::abs(r.t_constant.slope - 1.0), 1e-12,
                                       file + " m0 slope vs 1");
                      check.require(r.t_constant.verdict == Verdict::False,
                                    file + ": T-constant must be false");
                  }
              });

    criterion(6, "coefficient closed form against RK4 and the homogeneous solution",
              [&](Checker& check) {
                  IntrinsicSpec spec;
                  spec.kappa = parse("1", "s");
                  spec.tau = parse("1", "s");
                  spec.lo = 0.0;
                  spec.hi = 2.0;
                  const int n = 2001;
                  const auto closed = coefficient_closed_form(spec, n);
                  const auto marched = integrate_coefficients(spec, n);
                  double sup = 0.0;
                  for (size_t i = 0; i < closed.s.size(); ++i) {
                      sup = std::max({sup, std::abs(closed.m1[i] - marched.m1[i]),
                                      std::abs(closed.m2[i] - marched.m2[i])});
                  }
                  check.require_le(sup, 1e-6, "closed form vs RK4");

                  IntrinsicSpec homog;
                  homog.kappa = parse("0", "s");
                  homog.tau = parse("1", "s");
                  homog.lo = 0.0;
                  homog.hi = 2.0;
                  homog.c1 = 2.0;
                  homog.c2 = 0.5;
                  const auto h = coefficient_closed_form(homog, 201);
                  double sup_h = 0.0;
                  for (size_t i = 0; i < h.s.size(); ++i) {
                      const double t = h.t[i];
                      sup_h = std::max(
                          sup_h, std::abs(h.m2[i] - (2.0 * std::exp(t) -
                                                     0.5 * std::exp(-t))));
                  }
                  check.require_le(sup_h, 1e-12, "homogeneous case");
              });

    criterion(7, "normal-constant profile identity m2^2 - m1^2 = -c4",
              [&](Checker& check) {
                  std::mt19937 rng(7);
                  std::uniform_real_distribution<double> c4d(-2.0, 2.0);
                  std::uniform_real_distribution<double> c5d(-0.5, 0.5);
                  std::uniform_real_distribution<double> coef(0.3, 1.2);
                  for (int trial = 0; trial < 10; ++trial) {
                      char tbuf[96];
                      std::snprintf(tbuf, sizeof(tbuf), "%.6f + %.6f*sin(s)", coef(rng),
                                    coef(rng));
                      const double c4 = c4d(rng);
                      const auto prof = normal_constant_profile(parse(tbuf, "s"), c4,
                                                                c5d(rng), 0.0, 2.0, 501);
                      double sup = 0.0;
                      for (size_t i = 0; i < prof.s.size(); ++i) {
                          const double q =
                              prof.m2[i] * prof.m2[i] - prof.m1[i] * prof.m1[i];
                          sup = std::max(sup, std::abs(q + c4));
                      }
                      check.require_le(sup, 1e-9, "profile identity");
                  }
                  // c4 = 0 collapses to the first kind: m1 = -m2 exactly.
                  const auto flat =
                      normal_constant_profile(parse("1", "s"), 0.0, 0.0, 0.0, 2.0, 201);
                  double sup0 = 0.0;
                  for (size_t i = 0; i < flat.s.size(); ++i) {
                      sup0 = std::max(sup0, std::abs(flat.m1[i] + flat.m2[i]));
                  }
                  check.require_le(sup0, 1e-12, "degenerate c4 = 0 first kind");
              });

    criterion(8, "third-order tangent equation residuals and tau = 0 refusal",
              [&](Checker& check) {
                  const auto ratio = fixtures::ratio_curve(1.0, 4.0);
                  const auto res =
                      tangent_ode_residual(ratio, sample_grid(ratio, 1001));
                  check.require_le(std::max(res[0], res[1]), 1e-6,
                                   "graph-form fixture residual");

                  const auto salkowski = fixtures::salkowski(1.0, 0.5, 2.0);
                  const auto res2 = tangent_ode_residual(salkowski, 1001);
                  check.require_le(std::max(res2[0], res2[1]), 1e-5,
                                   "intrinsic fixture residual");

                  bool refused = false;
                  try {
                      tangent_ode_residual(fixtures::parabola(), {0.5, 1.0, 1.5});
                  } catch (const ZeroTorsionError&) {
                      refused = true;
                  }
                  check.require(refused, "tau = 0 input must be refused");
              });

    criterion(9, "kernel invariants: branch tables, motion invariance, frame metric",
              [&](Checker& check) {
                  check.require(scalar_product({1, 2, 3}, {2, 5, 7}) == 2.0, "g branch 1");
                  check.require(scalar_product({0, 3, 1}, {0, 2, 2}) == 4.0, "g branch 2");
                  check.require(norm({5, 1, 9}) == 5.0, "norm branch 1");
                  check.require(norm({0, 5, 3}) == 4.0, "norm branch 2");
                  check.require(norm({0, 2, 2}) == 0.0, "norm lightlike");
                  const GVector c = cross_product({1, 0, 0}, {0, 1, 0});
                  check.require(c.x == 0.0 && c.y == 0.0 && c.z == 1.0, "cross product");

                  const auto curve = fixtures::ratio_curve(1.0, 3.0);
                  std::mt19937 rng(17);
                  std::uniform_real_distribution<double> u(-1.0, 1.0);
                  double sup = 0.0;
                  for (int i = 0; i < 100; ++i) {
                      const Motion m{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
                      const GraphCurve moved = transform(curve, m);
                      for (double s : {1.2, 2.0, 2.8}) {
                          const auto before = frame_at(curve, s);
                          const auto after = frame_at(moved, s + m.a);
                          sup = std::max(sup, rel_err(after.kappa, before.kappa));
                          sup = std::max(sup, rel_err(after.tau, before.tau));
                      }
                  }
                  check.require_le(sup, 1e-9, "motion invariance of kappa, tau");

                  for (const auto& file :
                       {"/example41.json", "/example42.json", "/parabola.json"}) {
                      const auto r = analyze_curve(
                          load_curve_spec(kFixtures + std::string(file)), tol);
                      double frame_sup = 0.0;
                      for (const auto& f : r.frames) {
                          frame_sup = std::max(frame_sup,
                                               std::abs(scalar_product(f.N, f.N) + 1.0));
                          frame_sup = std::max(frame_sup,
                                               std::abs(scalar_product(f.B, f.B) - 1.0));
                          const double det =
                              f.T.x * (f.N.y * f.B.z - f.N.z * f.B.y);
                          frame_sup = std::max(frame_sup, std::abs(det - 1.0));
                      }
                      check.require_le(frame_sup, 1e-9,
                                       std::string(file) + " frame metric identities");
                  }
              });

    criterion(10, "discrepancy reporting and CLI contract",
              [&](Checker& check) {
                  // The circle fixture: predicate holds, the normal component
                  // is not constant, and that is flagged rather than asserted
                  // away or crashed on.
                  const auto r =
                      analyze_curve(load_curve_spec(kFixtures + "/parabola.json"), tol);
                  check.require(r.circle.verdict, "circle predicate");
                  check.require(!r.circle.q_constant, "normal length not constant");
                  check.require(r.n_constant.verdict == Verdict::False,
                                "no false N-constant verdict");
                  bool flagged = false;
                  for (const auto& w : r.warnings) {
                      if (w.find("circle") != std::string::npos) flagged = true;
                  }
                  check.require(flagged, "discrepancy warning present");

                  // Exit-code contract.
                  check.require(run_cli("analyze " + kFixtures + "/example41.json") == 0,
                                "exit 0 on success");
                  check.require(run_cli("analyze " + kFixtures + "/line.json") == 1,
                                "exit 1 on inadmissible input");
                  const fs::path bad = scratch_dir() / "bad.json";
                  {
                      std::ofstream out(bad);
                      out << R"({"form":"graph","y":"2*+x","z":"x^2/2","domain":[0,1]})";
                  }
                  check.require(run_cli("analyze " + bad.string()) == 2,
                                "exit 2 on parse error");
                  const fs::path crossing = scratch_dir() / "crossing.json";
                  {
                      std::ofstream out(crossing);
                      out << R"({"form":"intrinsic","kappa":"1","tau":"s - 1",)"
                          << R"("domain":[0,2]})";
                  }
                  check.require(
                      run_cli("reconstruct " + crossing.string() + " --mcoeffs") == 3,
                      "exit 3 on numeric failure");

                  // Byte-for-byte determinism across two runs.
                  const fs::path r1 = scratch_dir() / "r1.json";
                  const fs::path r2 = scratch_dir() / "r2.json";
                  const fs::path c1 = scratch_dir() / "c1.csv";
                  const fs::path c2 = scratch_dir() / "c2.csv";
                  check.require(run_cli("analyze " + kFixtures +
                                        "/example42.json --out " + r1.string() +
                                        " --csv " + c1.string()) == 0,
                                "first deterministic run");
                  check.require(run_cli("analyze " + kFixtures +
                                        "/example42.json --out " + r2.string() +
                                        " --csv " + c2.string()) == 0,
                                "second deterministic run");
                  check.require(slurp(r1) == slurp(r2) && !slurp(r1).empty(),
                                "reports byte-identical");
                  check.require(slurp(c1) == slurp(c2), "CSV byte-identical");
              });

    if (failures == 0) {
        std::printf("all %d acceptance criteria passed\n", 10);
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
