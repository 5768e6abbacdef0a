// Acceptance gate: ten behavioral criteria with pinned tolerances and time
// budgets. Prints one PASS/FAIL line per criterion and exits nonzero if any
// criterion fails. Randomized criteria use a fixed seed so every run checks
// the same sample.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "abcd/analysis.hpp"
#include "abcd/cavity.hpp"
#include "abcd/core.hpp"
#include "abcd/decomp.hpp"
#include "abcd/lorentz.hpp"
#include "abcd/multilayer.hpp"
#include "helpers.hpp"

namespace {

using abcd::CoreParams;
using abcd::RayMatrix;
using abcd::TraceClass;

int failures = 0;

struct Outcome {
    bool ok = true;
    double worst = 0.0;
    std::string note;
};

void expect(Outcome& o, bool condition, const char* what) {
    if (!condition) {
        o.ok = false;
        if (o.note.empty()) {
            o.note = what;
        }
    }
}

void track(Outcome& o, double err, double tol, const char* what) {
    o.worst = std::max(o.worst, err);
    expect(o, err <= tol, what);
}

template <typename Body>
void criterion(int id, const char* label, double budget_s, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) {
        ++failures;
    }
    std::printf("%s %2d  %-68s worst=%.2e  %.3fs\n", pass ? "PASS" : "FAIL", id, label,
                o.worst, secs);
    if (!o.ok && !o.note.empty()) {
        std::printf("         -> %s\n", o.note.c_str());
    }
    if (!in_time) {
        std::printf("         -> exceeded the %.1fs budget\n", budget_s);
    }
}

TraceClass class_of(int i) { return static_cast<TraceClass>(i % 3); }

double param_gap(const CoreParams& got, const CoreParams& want) {
    return std::max(std::abs(got.gamma - want.gamma), std::abs(got.eta - want.eta));
}

// ---- process helpers for the CLI criterion ----

std::string slurp(const std::string& path, bool* ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        *ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tmp = "/tmp/abcd_acc_" + std::to_string(::getpid()) + "_" +
                            std::to_string(counter++) + ".out";
    const std::string cmd = std::string("\"") + ABCD_CLI_PATH + "\" " + args + " >" + tmp +
                            " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    bool ok = true;
    r.out = slurp(tmp, &ok);
    std::remove(tmp.c_str());
    if (!ok) {
        r.code = -1;
    }
    return r;
}

}  // namespace

int main() {
    std::printf("acceptance gate\n---------------\n");

    // 1. Parameter round-trip through compose and extract: 10^4 random
    // cores, |gamma| <= 3, |eta| <= 3, all classes, error <= 1e-9.
    criterion(1, "core parameter round-trip, 1e4 random cores, err <= 1e-9", 1.0,
              [](Outcome& o) {
                  auto rng = testutil::make_rng(101);
                  for (int i = 0; i < 10000; ++i) {
                      const CoreParams p = testutil::random_core(rng, class_of(i));
                      const CoreParams back = abcd::extract_core_params(abcd::compose_core(p));
                      expect(o, back.cls == p.cls, "trace class changed");
                      expect(o, back.sign == p.sign, "sign changed");
                      if (p.cls == TraceClass::Parabolic) {
                          expect(o, back.orientation == p.orientation,
                                 "shear orientation changed");
                      }
                      track(o, param_gap(back, p), 1e-9, "parameter error above 1e-9");
                  }
              });

    // 2. The similarity factors multiply back to the core matrix within
    // 1e-10 entrywise over the same sampling.
    criterion(2, "similarity factors rebuild the core, err <= 1e-10", 1.0, [](Outcome& o) {
        auto rng = testutil::make_rng(101);
        for (int i = 0; i < 10000; ++i) {
            const CoreParams p = testutil::random_core(rng, class_of(i));
            const RayMatrix m = abcd::compose_core(p);
            const RayMatrix rebuilt =
                abcd::compose_wigner(abcd::wigner_decompose(abcd::extract_core_params(m)));
            track(o, testutil::max_diff(rebuilt, m), 1e-10, "entry error above 1e-10");
        }
    });

    // 3. Closed-form rotation-squeeze-rotation vs the literal product
    // (<= 1e-12) and its parameter inverse (<= 1e-9) on a 100x100 grid.
    criterion(3, "rotation-squeeze-rotation closed form and inverse on 1e4 grid", 1.0,
              [](Outcome& o) {
                  for (int i = 0; i < 100; ++i) {
                      for (int j = 0; j < 100; ++j) {
                          const abcd::BargmannParams b{-1.5 + 3.0 * i / 99.0,
                                                       -1.5 + 3.0 * j / 99.0};
                          const RayMatrix closed = abcd::compose_bargmann(b);
                          const RayMatrix literal = abcd::rotation(b.alpha) *
                                                    abcd::squeeze_offdiag(-2.0 * b.chi) *
                                                    abcd::rotation(b.alpha);
                          track(o, testutil::max_diff(closed, literal), 1e-12,
                                "closed form vs product above 1e-12");
                          const abcd::BargmannParams back = abcd::bargmann_decompose(closed);
                          const double gap = std::max(std::abs(back.alpha - b.alpha),
                                                      std::abs(back.chi - b.chi));
                          track(o, gap, 1e-9, "parameter inverse above 1e-9");
                      }
                  }
              });

    // 4. Closed-form n-th power vs iterated multiplication, relative to the
    // magnitude of the iterated result. Hyperbolic angles and rapidities are
    // sampled tighter so the N = 1000 iterated oracle stays representable.
    criterion(4, "closed-form powers match iterated products, rel err <= 1e-8", 2.0,
              [](Outcome& o) {
                  auto rng = testutil::make_rng(104);
                  for (const long n : {2L, 10L, 100L, 1000L}) {
                      for (int c = 0; c < 3; ++c) {
                          const TraceClass cls = class_of(c);
                          for (int i = 0; i < 100; ++i) {
                              const CoreParams p =
                                  cls == TraceClass::Hyperbolic
                                      ? testutil::random_core(rng, cls, 0.5, 1.5)
                                      : testutil::random_core(rng, cls);
                              const RayMatrix fast = abcd::compose_core(abcd::power(p, n));
                              const RayMatrix slow =
                                  testutil::power_oracle(abcd::compose_core(p), n);
                              track(o, testutil::rel_diff(fast, slow), 1e-8,
                                    "power error above 1e-8");
                          }
                      }
                  }
              });

    // 5. Cavity factorization: conjugated square rebuilds the round trip
    // (rel 1e-9), closed-form angle/rapidity match direct extraction
    // (1e-10), and the stability verdict flips across d = 2R.
    criterion(5, "cavity factorization, closed forms, stability flip", 1.0, [](Outcome& o) {
        auto rng = testutil::make_rng(105);
        for (int i = 0; i < 1000; ++i) {
            const double r = testutil::uniform(rng, 0.05, 5.0);
            const double u = testutil::uniform(rng, 1e-3, 1.0 - 1e-3);
            const abcd::CavitySpec spec{2.0 * r * u, r};

            const abcd::CavityFactorization f = abcd::cavity_factorize(spec);
            const RayMatrix rebuilt = f.unit_transform * f.half_trip * f.half_trip *
                                      abcd::inverse(f.unit_transform);
            track(o, testutil::rel_diff(rebuilt, abcd::round_trip(spec)), 1e-9,
                  "rebuilt round trip above rel 1e-9");

            const CoreParams closed = abcd::cavity_core(spec);
            const CoreParams extracted = abcd::extract_core_params(f.half_trip);
            expect(o, closed.cls == TraceClass::Elliptic, "stable cavity not elliptic");
            track(o, param_gap(closed, extracted), 1e-10,
                  "closed form vs extraction above 1e-10");
        }
        const double eps = 10.0 * abcd::kClassTol;
        for (const double r : {0.3, 1.0, 4.0}) {
            expect(o, abcd::is_stable({2.0 * r - eps, r}), "just-inside spec not stable");
            expect(o, !abcd::is_stable({2.0 * r + eps, r}), "just-outside spec stable");
        }
    });

    // 6. The complex period conjugates to the real chain: imaginary residue
    // <= 1e-12, real parts equal within 1e-12, and the four term-by-term
    // conjugation identities hold within 1e-13.
    criterion(6, "complex period conjugates to the real chain", 1.0, [](Outcome& o) {
        auto rng = testutil::make_rng(106);
        const abcd::ComplexMatrix c = abcd::similarity_c();
        const abcd::ComplexMatrix ci = abcd::similarity_c_inverse();
        const abcd::ComplexMatrix c1 = abcd::similarity_c1();
        const abcd::ComplexMatrix c1i = abcd::inverse(c1);
        const abcd::ComplexMatrix c2 = abcd::similarity_c2();
        const abcd::ComplexMatrix c2i = abcd::inverse(c2);
        for (int i = 0; i < 1000; ++i) {
            const abcd::LayerCycleSpec spec{testutil::uniform(rng, -3.14159, 3.14159),
                                            testutil::uniform(rng, -3.14159, 3.14159),
                                            testutil::uniform(rng, -2.0, 2.0)};
            const abcd::ComplexMatrix conj = c * abcd::cycle_matrix(spec) * ci;
            track(o, abcd::max_imag(conj), 1e-12, "imaginary residue above 1e-12");
            track(o, testutil::max_diff(abcd::real_part(conj), abcd::real_chain(spec)),
                  1e-12, "conjugated vs direct chain above 1e-12");

            const double x = testutil::uniform(rng, -3.0, 3.0);
            track(o,
                  testutil::max_diff(c1 * abcd::phase_matrix(x) * c1i,
                                     abcd::to_complex(abcd::rotation(x))),
                  1e-13, "phase-to-rotation identity above 1e-13");
            track(o,
                  testutil::max_diff(c1 * abcd::boundary_matrix(x) * c1i,
                                     abcd::boundary_matrix(x)),
                  1e-13, "boundary fixed-point identity above 1e-13");
            track(o,
                  testutil::max_diff(c2 * abcd::boundary_matrix(x) * c2i,
                                     abcd::to_complex(abcd::squeeze_diag(x))),
                  1e-13, "boundary-to-squeeze identity above 1e-13");
            track(o,
                  testutil::max_diff(c2 * abcd::to_complex(abcd::rotation(x)),
                                     abcd::to_complex(abcd::rotation(x)) * c2),
                  1e-13, "rotation commutation identity above 1e-13");
        }
    });

    // 7. Elliptic chains: closed-form angle and rapidity vs compose-then-
    // extract within 1e-10, on specs kept away from the trace boundary.
    criterion(7, "elliptic chain closed forms match extraction, err <= 1e-10", 1.0,
              [](Outcome& o) {
                  auto rng = testutil::make_rng(107);
                  int seen = 0;
                  while (seen < 1000) {
                      const abcd::LayerCycleSpec spec{
                          testutil::uniform(rng, -3.14159, 3.14159),
                          testutil::uniform(rng, -3.14159, 3.14159),
                          testutil::uniform(rng, -2.0, 2.0)};
                      const abcd::BargmannParams mid = abcd::bargmann_decompose(
                          abcd::squeeze_diag(spec.sigma) * abcd::rotation(spec.delta1) *
                          abcd::squeeze_diag(-spec.sigma));
                      const double angle = mid.alpha + spec.delta2 / 2.0;
                      const double half_trace = std::cosh(mid.chi) * std::cos(angle);
                      if (std::abs(half_trace) >= 1.0 - 1e-6) {
                          continue;
                      }
                      ++seen;
                      const CoreParams p = abcd::chain_wigner(spec);
                      expect(o, p.cls == TraceClass::Elliptic,
                             "restricted spec not elliptic");
                      const double theta_closed = 2.0 * std::acos(half_trace);
                      track(o, std::abs(theta_closed - std::abs(p.gamma)), 1e-10,
                            "closed-form angle above 1e-10");
                      const double num =
                          std::cosh(mid.chi) * std::sin(angle) + std::sinh(mid.chi);
                      const double den =
                          std::cosh(mid.chi) * std::sin(angle) - std::sinh(mid.chi);
                      const double eta_closed = 0.5 * std::log(num / den);
                      track(o, std::abs(eta_closed - p.eta), 1e-10,
                            "closed-form rapidity above 1e-10");
                  }
              });

    // 8. The lifted similarity fixes the massive four-momentum (rel 1e-10)
    // and every 4x4 constructor preserves the metric (1e-10).
    criterion(8, "4x4 lift fixes the massive momentum; metric preserved", 1.0,
              [](Outcome& o) {
                  for (int i = 0; i <= 60; ++i) {
                      const double eta = -3.0 + 0.1 * i;
                      for (int j = 0; j <= 60; ++j) {
                          const double theta = -3.0 + 0.1 * j;
                          const abcd::LorentzMatrix w = abcd::lift_wigner4(eta, theta);
                          for (const double m : {0.1, 1.0, 10.0}) {
                              const abcd::FourVector p = abcd::four_momentum_massive(m, eta);
                              const abcd::FourVector moved = w * p;
                              const abcd::FourVector diff{moved.x - p.x, moved.y - p.y,
                                                          moved.z - p.z, moved.t - p.t};
                              track(o,
                                    abcd::euclidean_norm(diff) / abcd::euclidean_norm(p),
                                    1e-10, "moved momentum above rel 1e-10");
                          }
                          track(o, abcd::metric_residual(w), 1e-10,
                                "lift metric residual above 1e-10");
                      }
                      track(o, abcd::metric_residual(abcd::rot4_y(eta)), 1e-10,
                            "rot4_y metric residual above 1e-10");
                      track(o, abcd::metric_residual(abcd::rot4_z(eta)), 1e-10,
                            "rot4_z metric residual above 1e-10");
                      track(o, abcd::metric_residual(abcd::boost4_x(eta)), 1e-10,
                            "boost4_x metric residual above 1e-10");
                      track(o, abcd::metric_residual(abcd::boost4_z(eta)), 1e-10,
                            "boost4_z metric residual above 1e-10");
                  }
              });

    // 9. The gauge-limit matrix fixes the light-like momentum (rel 1e-12)
    // and is additive in its parameter (1e-10).
    criterion(9, "gauge-limit matrix fixes (0,0,p,p); additive parameter", 1.0,
              [](Outcome& o) {
                  for (int i = 0; i <= 200; ++i) {
                      const double gamma = -5.0 + 0.05 * i;
                      const abcd::LorentzMatrix g = abcd::gauge_limit_matrix(gamma);
                      for (const double p : {0.5, 1.0, 7.0}) {
                          const abcd::FourVector light{0.0, 0.0, p, p};
                          const abcd::FourVector moved = g * light;
                          const abcd::FourVector diff{moved.x, moved.y, moved.z - p,
                                                      moved.t - p};
                          track(o,
                                abcd::euclidean_norm(diff) / abcd::euclidean_norm(light),
                                1e-12, "moved light-like momentum above rel 1e-12");
                      }
                  }
                  for (int i = 0; i <= 20; ++i) {
                      for (int j = 0; j <= 20; ++j) {
                          const double a = -5.0 + 0.5 * i;
                          const double b = -5.0 + 0.5 * j;
                          track(o,
                                testutil::max_diff(abcd::gauge_limit_matrix(a) *
                                                       abcd::gauge_limit_matrix(b),
                                                   abcd::gauge_limit_matrix(a + b)),
                                1e-10, "additivity above 1e-10");
                      }
                  }
              });

    // 10. CLI golden files: byte-identical reports across repeated runs and
    // against the checked-in goldens; unstable cavity exits 2.
    criterion(10, "CLI golden reports byte-stable; unstable cavity exits 2", 1.0,
              [](Outcome& o) {
                  const std::string golden = ABCD_GOLDEN_DIR;
                  const struct {
                      std::string args;
                      std::string file;
                  } cases[] = {
                      {"analyze \"" + golden + "/identity.json\"",
                       golden + "/identity.report.json"},
                      {"cavity --d 1 --r 1", golden + "/cavity_confocal.report.json"},
                      {"multilayer --delta1 1.5707963267948966 --delta2 "
                       "1.5707963267948966 --sigma 0",
                       golden + "/multilayer_quarter.report.json"},
                  };
                  for (const auto& c : cases) {
                      const RunResult first = run_cli(c.args);
                      const RunResult second = run_cli(c.args);
                      expect(o, first.code == 0, "golden command failed");
                      expect(o, first.out == second.out, "repeated runs differ");
                      bool readable = true;
                      const std::string want = slurp(c.file, &readable);
                      expect(o, readable, "golden file missing");
                      expect(o, first.out == want, "output differs from golden file");
                  }
                  const RunResult unstable = run_cli("cavity --d 3 --r 1");
                  expect(o, unstable.code == 2, "unstable cavity exit code not 2");
                  expect(o, unstable.out.find("UnstableCavity") != std::string::npos,
                         "UnstableCavity not named in the error");
              });

    std::printf("---------------\n%s\n", failures == 0 ? "ALL CRITERIA PASS"
                                                       : "CRITERIA FAILED");
    return failures == 0 ? 0 : 1;
}
