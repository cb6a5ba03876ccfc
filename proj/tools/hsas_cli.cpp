// Command-line front end over HSAS1 containers: transform pipelines, closed
// form demos and verification suites.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsas/features.hpp"
#include "hsas/fft.hpp"
#include "hsas/holo.hpp"
#include "hsas/noncomm.hpp"
#include "hsas/oracle.hpp"
#include "hsas/parallel.hpp"
#include "hsas/transform.hpp"

namespace {

using namespace hsas;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitVerify = 5;

int exit_code_for(errc c) {
  switch (c) {
    case errc::io_failure:
    case errc::magic_mismatch:
    case errc::truncated_payload:
    case errc::shape_mismatch:
      return kExitIo;
    case errc::negative_support:
    case errc::zero_divisor:
    case errc::convergence_failure:
    case errc::non_finite_sample:
      return kExitNumeric;
    default:
      return kExitConfig;
  }
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stod(cur));
  return out;
}

AnalyticGrid crop_analytic(const AnalyticGrid& a, const GridLattice& lat) {
  AnalyticGrid out;
  out.lattice = lat;
  for (const auto& comp : a.components) {
    GridSignal tmp{a.lattice, comp};
    out.components.push_back(crop_to(tmp, lat).data);
  }
  return out;
}

AnalyticGrid load_analytic_or_compute(const std::string& path) {
  HsasFile f = grid_read(path);
  if (f.kind == FileKind::analytic) return as_analytic(std::move(f));
  if (f.kind == FileKind::grid) return analytic_signal(as_grid(std::move(f)));
  fail(errc::shape_mismatch, "expected a grid or analytic container");
}

int cmd_transform(const std::string& in, const std::string& out, bool inverse) {
  if (inverse) {
    grid_write(out, hft_inverse(as_spectrum(grid_read(in))));
  } else {
    grid_write(out, hft_forward(as_grid(grid_read(in))));
  }
  return kExitOk;
}

int cmd_analytic(const std::string& in, const std::string& out, int pad) {
  GridSignal g = as_grid(grid_read(in));
  if (pad > 1) {
    const GridLattice original = g.lattice;
    grid_write(out, crop_analytic(analytic_signal(pad_zeros(g, pad)), original));
  } else {
    grid_write(out, analytic_signal(g));
  }
  return kExitOk;
}

int cmd_hilbert(const std::string& in, const std::string& out, const std::string& jbits, int pad) {
  GridSignal g = as_grid(grid_read(in));
  const Direction j = Direction::from_string(jbits);
  if (pad > 1) {
    const GridLattice original = g.lattice;
    grid_write(out, crop_to(partial_hilbert(pad_zeros(g, pad), j), original));
  } else {
    grid_write(out, partial_hilbert(g, j));
  }
  return kExitOk;
}

int cmd_amplitude(const std::string& in, const std::string& out) {
  grid_write(out, amplitude(load_analytic_or_compute(in)));
  return kExitOk;
}

int cmd_phase(const std::string& in, const std::string& out, const std::string& jbits) {
  const AnalyticGrid a = load_analytic_or_compute(in);
  const MaskedGrid p = phase(a, Direction::from_string(jbits));
  GridSignal masked = p.values;
  for (std::size_t i = 0; i < masked.data.size(); ++i)
    if (!p.defined[i]) masked.data[i] = std::numeric_limits<double>::quiet_NaN();
  grid_write(out, masked);
  return kExitOk;
}

int cmd_freq(const std::string& in, const std::string& out, const std::string& jbits) {
  const AnalyticGrid a = load_analytic_or_compute(in);
  const Direction j = Direction::from_string(jbits);
  const MaskedGrid nu = inst_frequency(phase(a, j), j);
  GridSignal masked = nu.values;
  for (std::size_t i = 0; i < masked.data.size(); ++i)
    if (!nu.defined[i]) masked.data[i] = std::numeric_limits<double>::quiet_NaN();
  grid_write(out, masked);
  return kExitOk;
}

int cmd_extend(const std::string& in, const std::string& at, const std::string& ys) {
  const HyperSpectrum s = as_spectrum(grid_read(in));
  const UpperPoint zeta(parse_doubles(at), parse_doubles(ys));
  const ScheffersElement v = holo_extend(s, zeta);
  for (std::size_t b = 0; b < v.size(); ++b)
    std::printf("e_%zu %.17g\n", b, v.coeffs[b]);
  return kExitOk;
}

int cmd_convert(const std::string& in, const std::string& out, const std::string& shape_csv) {
  const bool in_csv = in.size() > 4 && in.substr(in.size() - 4) == ".csv";
  const bool out_csv = out.size() > 4 && out.substr(out.size() - 4) == ".csv";
  if (in_csv == out_csv) fail(errc::bad_argument, "convert needs exactly one .csv side");
  if (in_csv) {
    if (shape_csv.empty()) fail(errc::bad_argument, "CSV import needs --shape N1[,N2]");
    std::vector<int> shape;
    for (double v : parse_doubles(shape_csv)) shape.push_back(static_cast<int>(v));
    GridLattice lat(shape, std::vector<double>(shape.size(), 0.0),
                    std::vector<double>(shape.size(), 1.0));
    grid_write(out, csv_read(in, lat));
  } else {
    csv_write(out, as_grid(grid_read(in)));
  }
  return kExitOk;
}

// --- demos --------------------------------------------------------------

int cmd_demo(const std::string& which, int n, const std::string& out_path) {
  const double pi = std::numbers::pi;
  GridLattice lat({1}, {0.0}, {1.0});
  double tol = 0.0;
  if (which == "cube") {
    const int nn = n > 0 ? n : 64;
    lat = GridLattice({nn, nn, nn}, {-1.0, -1.0, -1.0},
                      {2.0 / nn, 2.0 / nn, 2.0 / nn});
    tol = 1e-3;
  } else {
    const int nn = n > 0 ? n : 128;
    const double len = 2.0 * std::numbers::sqrt2 * pi;
    lat = GridLattice({nn, nn}, {0.0, 0.0}, {len / nn, len / nn});
    tol = 1e-8;
  }

  const ClosedFormField field = closed_form_field(which);
  const GridSignal g = grid_make(lat, field.signal);
  const GridSignal amp = amplitude(analytic_signal(g));

  // Compare against the closed form; for the cube only the interior is
  // meaningful (the Gaussian tail wraps at the box edge).
  double max_err = 0.0;
  std::vector<double> x(static_cast<std::size_t>(lat.dim));
  for (std::size_t i = 0; i < amp.data.size(); ++i) {
    lat.coordinates_of(i, x);
    if (which == "cube" && (std::abs(x[0]) > 0.5 || std::abs(x[1]) > 0.5 || std::abs(x[2]) > 0.5))
      continue;
    max_err = std::max(max_err, std::abs(amp.data[i] - field.amplitude(x)));
  }
  if (!out_path.empty()) grid_write(out_path, amp);
  std::printf("demo=%s n=%d max_error=%.3e tol=%.1e %s\n", which.c_str(), lat.shape[0], max_err,
              tol, max_err <= tol ? "ok" : "FAIL");
  return max_err <= tol ? kExitOk : kExitVerify;
}

// --- verification suites --------------------------------------------------

int verify_bedrosian() {
  bool ok = true;
  {
    const int n = 1024;
    GridLattice lat({n}, {-8.0}, {16.0 / n});
    const GridSignal f = grid_make(lat, [](std::span<const double> p) {
      return std::exp(-p[0] * p[0]);
    });
    const GridSignal g = grid_make(lat, [](std::span<const double> p) {
      return std::cos(4.0 * std::numbers::pi * p[0]);
    });
    const BedrosianReport rep = bedrosian_check(f, g, Direction::from_string("1"));
    std::printf("bedrosian d=1 rel_l2=%.3e hypotheses=%s\n", rep.rel_l2,
                rep.hypotheses_ok ? "ok" : "violated");
    ok = ok && rep.rel_l2 <= 1e-6 && rep.hypotheses_ok;
  }
  {
    const int n = 128;
    GridLattice lat({n, n}, {-8.0, -8.0}, {16.0 / n, 16.0 / n});
    const GridSignal f = grid_make(lat, [](std::span<const double> p) {
      return std::exp(-p[0] * p[0] - p[1] * p[1]);
    });
    const GridSignal g = grid_make(lat, [](std::span<const double> p) {
      return std::cos(4.0 * std::numbers::pi * p[0]) * std::cos(4.0 * std::numbers::pi * p[1]);
    });
    const BedrosianReport rep = bedrosian_check(f, g, Direction::from_string("11"));
    std::printf("bedrosian d=2 rel_l2=%.3e hypotheses=%s\n", rep.rel_l2,
                rep.hypotheses_ok ? "ok" : "violated");
    ok = ok && rep.rel_l2 <= 1e-6 && rep.hypotheses_ok;
  }
  return ok ? kExitOk : kExitVerify;
}

int verify_noncomm(int d, bool commutative) {
  const AlgebraSpec spec = commutative ? AlgebraSpec::scheffers(d) : AlgebraSpec::clifford(d);
  const OrderingReport rep = ordering_search(d, spec);
  std::fputs(rep.to_text().c_str(), stdout);
  return rep.consistent_count > 0 ? kExitOk : kExitVerify;
}

int verify_selftest();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercomplex analytic signal toolkit"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker thread cap (results are identical for any value)");

  std::string in, out, jbits = "1", at, ys, shape_csv, mode;
  bool inverse = false, commutative = false;
  int pad = 1, dim = 3, demo_n = 0;

  auto* transform = app.add_subcommand("transform", "hypercomplex Fourier transform of a grid");
  transform->add_option("input", in)->required();
  transform->add_option("output", out)->required();
  transform->add_flag("--inverse", inverse, "inverse transform of a spectrum");

  auto* analytic = app.add_subcommand("analytic", "analytic grid of a real grid");
  analytic->add_option("input", in)->required();
  analytic->add_option("output", out)->required();
  analytic->add_option("--pad", pad, "zero-pad factor per axis before transforming");

  auto* hilbert = app.add_subcommand("hilbert", "partial Hilbert transform");
  hilbert->add_option("input", in)->required();
  hilbert->add_option("output", out)->required();
  hilbert->add_option("--j", jbits, "direction bit string, axis 1 first")->required();
  hilbert->add_option("--pad", pad, "zero-pad factor per axis before transforming");

  auto* amp = app.add_subcommand("amplitude", "instantaneous amplitude");
  amp->add_option("input", in)->required();
  amp->add_option("output", out)->required();

  auto* ph = app.add_subcommand("phase", "instantaneous phase (masked samples become NaN)");
  ph->add_option("input", in)->required();
  ph->add_option("output", out)->required();
  ph->add_option("--j", jbits)->required();

  auto* freq = app.add_subcommand("freq", "instantaneous frequency");
  freq->add_option("input", in)->required();
  freq->add_option("output", out)->required();
  freq->add_option("--j", jbits)->required();

  auto* extend = app.add_subcommand("extend", "holomorphic extension of a restricted spectrum");
  extend->add_option("input", in)->required();
  extend->add_option("--at", at, "boundary coordinates x1,...,xd")->required();
  extend->add_option("--y", ys, "heights y1,...,yd")->required();

  auto* convert = app.add_subcommand("convert", "convert between HSAS1 and CSV (d <= 2)");
  convert->add_option("input", in)->required();
  convert->add_option("output", out)->required();
  convert->add_option("--shape", shape_csv, "lattice shape for CSV import");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("mode", mode)->required()->check(CLI::IsMember({"bedrosian", "noncomm", "selftest"}));
  verify->add_option("--d", dim, "dimension for the noncomm search");
  verify->add_flag("--commutative", commutative, "use the commutative algebra");

  auto* demo = app.add_subcommand("demo", "closed-form demo pipelines");
  demo->add_option("mode", mode)->required()->check(CLI::IsMember({"cube", "rotated", "lowdim"}));
  demo->add_option("--n", demo_n, "samples per axis");
  demo->add_option("--out", out, "write the amplitude grid here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  set_max_threads(threads);
  try {
    if (!in.empty() && in == out) fail(errc::bad_argument, "input and output paths must differ");
    if (*transform) return cmd_transform(in, out, inverse);
    if (*analytic) return cmd_analytic(in, out, pad);
    if (*hilbert) return cmd_hilbert(in, out, jbits, pad);
    if (*amp) return cmd_amplitude(in, out);
    if (*ph) return cmd_phase(in, out, jbits);
    if (*freq) return cmd_freq(in, out, jbits);
    if (*extend) return cmd_extend(in, at, ys);
    if (*convert) return cmd_convert(in, out, shape_csv);
    if (*demo) return cmd_demo(mode, demo_n, out);
    if (*verify) {
      if (mode == "bedrosian") return verify_bedrosian();
      if (mode == "noncomm") return verify_noncomm(dim, commutative);
      return verify_selftest();
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error code=%s msg=\"%s\"\n", errc_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error code=unexpected msg=\"%s\"\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}

namespace {

int verify_selftest() {
  int failures = 0;
  const auto check = [&](const char* name, bool ok, double measured) {
    std::printf("%-34s %s (%.3e)\n", name, ok ? "pass" : "FAIL", measured);
    if (!ok) ++failures;
  };
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  {  // blade table, d = 2
    bool ok = true;
    const int expect_sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, +1, -1, -1}, {+1, -1, -1, +1}};
    const unsigned expect_mask[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) {
        const auto p = sch_mul(ScheffersElement::blade(2, a), ScheffersElement::blade(2, b));
        ok = ok && p.coeffs[expect_mask[a][b]] == expect_sign[a][b];
      }
    check("algebra: S_2 table", ok, 0.0);
  }
  {  // commutativity/associativity, d = 4
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      ScheffersElement a(4), b(4), c(4);
      for (std::size_t i = 0; i < a.size(); ++i) {
        a.coeffs[i] = uni(rng);
        b.coeffs[i] = uni(rng);
        c.coeffs[i] = uni(rng);
      }
      const double comm = sch_norm(sch_mul(a, b) - sch_mul(b, a));
      const double assoc = sch_norm(sch_mul(sch_mul(a, b), c) - sch_mul(a, sch_mul(b, c)));
      const double scale = sch_norm(a) * sch_norm(b) * std::max(1.0, sch_norm(c));
      worst = std::max(worst, std::max(comm, assoc) / scale);
    }
    check("algebra: random S_4 products", worst <= 1e-12, worst);
  }
  {  // 1-D spectral identity
    const int n = 64;
    GridLattice lat({n}, {0.0}, {2.0 * std::numbers::pi / n});
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> amps(12), phs(12);
      for (int k = 0; k < 12; ++k) {
        amps[static_cast<std::size_t>(k)] = uni(rng);
        phs[static_cast<std::size_t>(k)] = uni(rng) * std::numbers::pi;
      }
      const GridSignal g = grid_make(lat, [&](std::span<const double> p) {
        double v = 0.0;
        for (int k = 1; k <= 12; ++k)
          v += amps[static_cast<std::size_t>(k - 1)] *
               std::cos(k * p[0] + phs[static_cast<std::size_t>(k - 1)]);
        return v;
      });
      const HyperSpectrum sf = hft_forward(g);
      const HyperSpectrum sh = hft_forward(partial_hilbert(g, Direction::from_string("1")));
      double norm = 0.0;
      for (int k = 0; k < n; ++k)
        norm = std::max(norm, std::hypot(sf.components[0][static_cast<std::size_t>(k)],
                                         sf.components[1][static_cast<std::size_t>(k)]));
      for (int k = 1; k < n; ++k) {
        if (k == n / 2) continue;
        const double s = lat.bin_frequency(1, k) > 0 ? 1.0 : -1.0;
        // -i sign(w) (a + i b) = s b - i s a with components (re, im) = (e0, e1)
        const double re = sf.components[0][static_cast<std::size_t>(k)];
        const double im = sf.components[1][static_cast<std::size_t>(k)];
        worst = std::max(worst, std::hypot(sh.components[0][static_cast<std::size_t>(k)] - s * im,
                                           sh.components[1][static_cast<std::size_t>(k)] + s * re) /
                                    norm);
      }
    }
    check("transform: multiplier identity", worst <= 1e-10, worst);
  }
  {  // positive support + component identity + round trip, d = 2
    const int n = 16;
    GridLattice lat({n, n}, {0.0, 0.0}, {1.0, 1.0});
    GridSignal g{lat, std::vector<double>(lat.size())};
    for (double& v : g.data) v = uni(rng);
    const AnalyticGrid a = analytic_signal(g);
    const double support = negative_support_ratio(hft_forward(a));
    check("transform: positive support", support <= 1e-10, support);

    double worst = 0.0;
    for (std::uint32_t bits = 1; bits < 4; ++bits) {
      const GridSignal h = partial_hilbert(g, Direction(2, bits));
      double diff = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < h.data.size(); ++i) {
        const double d = h.data[i] - a.components[bits][i];
        diff += d * d;
        norm += h.data[i] * h.data[i];
      }
      worst = std::max(worst, std::sqrt(diff / std::max(norm, 1e-300)));
    }
    check("transform: component identity", worst <= 1e-9, worst);

    const AnalyticGrid rt = hft_inverse(hft_forward(g));
    double diff = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < g.data.size(); ++i) {
      diff += (rt.components[0][i] - g.data[i]) * (rt.components[0][i] - g.data[i]);
      norm += g.data[i] * g.data[i];
    }
    check("transform: round trip", std::sqrt(diff / norm) <= 1e-10, std::sqrt(diff / norm));
  }
  {  // rotated closed form
    const int n = 64;
    const double len = 2.0 * std::numbers::sqrt2 * std::numbers::pi;
    GridLattice lat({n, n}, {0.0, 0.0}, {len / n, len / n});
    const GridSignal g = grid_make(lat, [](std::span<const double> p) {
      return oracle_rotated(p[0], p[1]).f;
    });
    const GridSignal amp = amplitude(analytic_signal(g));
    double worst = 0.0;
    std::vector<double> x(2);
    for (std::size_t i = 0; i < amp.data.size(); ++i) {
      lat.coordinates_of(i, x);
      worst = std::max(worst, std::abs(amp.data[i] - oracle_rotated(x[0], x[1]).amp));
    }
    check("features: rotated amplitude", worst <= 1e-8, worst);
  }
  {  // noncomm verdicts
    const bool ok = ordering_search(2, AlgebraSpec::clifford(2)).consistent_count >= 1 &&
                    ordering_search(3, AlgebraSpec::clifford(3)).consistent_count == 0 &&
                    ordering_search(3, AlgebraSpec::scheffers(3)).consistent_count >= 1;
    check("noncomm: ordering verdicts", ok, 0.0);
  }
  {  // quaternion cross-check
    const int n = 8;
    GridLattice lat({n, n}, {0.0, 0.0}, {1.0, 1.0});
    GridSignal g{lat, std::vector<double>(lat.size())};
    for (double& v : g.data) v = uni(rng);
    const AnalyticGrid qa = quaternion_analytic_2d(g);
    const AnalyticGrid sa = analytic_signal(g);
    double diff = 0.0, norm = 0.0;
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t i = 0; i < g.data.size(); ++i) {
        diff += (qa.components[b][i] - sa.components[b][i]) * (qa.components[b][i] - sa.components[b][i]);
        norm += sa.components[b][i] * sa.components[b][i];
      }
    check("noncomm: quaternion agreement", std::sqrt(diff / norm) <= 1e-9, std::sqrt(diff / norm));
  }
  {  // circle kernel vs frequency multiplier
    const int n = 64;
    GridLattice lat({n}, {0.0}, {2.0 * std::numbers::pi / n});
    double worst = 0.0;
    for (int k = 1; k <= 16; ++k) {
      const GridSignal c = grid_make(lat, [&](std::span<const double> p) { return std::cos(k * p[0]); });
      const GridSignal hc = circle_hilbert(c, Direction::from_string("1"));
      const GridSignal hm = partial_hilbert(c, Direction::from_string("1"));
      for (std::size_t i = 0; i < hc.data.size(); ++i)
        worst = std::max(worst, std::abs(hc.data[i] - hm.data[i]));
    }
    check("holo: circle kernel", worst <= 1e-8, worst);
  }
  {  // cauchy reproduction
    const PlaneSampler f = [](const PlanePoint& z) {
      return sch_mul(ScheffersElement::blade(2, 0, z[0].real()) + ScheffersElement::blade(2, 1, z[0].imag()),
                     ScheffersElement::blade(2, 0, z[1].real()) + ScheffersElement::blade(2, 2, z[1].imag()));
    };
    const PlanePoint center{{0.0, 0.0}, {0.0, 0.0}};
    const PlanePoint z{{0.3, 0.1}, {-0.2, 0.4}};
    const ScheffersElement inside = cauchy_polydisk(f, center, 1.0, z, Direction::from_string("11"), 32);
    const ScheffersElement direct = f(z);
    const double err = sch_norm(inside - direct);
    check("holo: cauchy reproduction", err <= 1e-10, err);
  }
  {  // mobius round trip
    const PlanePoint w{{0.2, 0.3}};
    const PlanePoint a{{0.1, 0.5}};
    const std::vector<double> theta{0.7};
    const PlanePoint v = mobius_to_upper(w, a, theta);
    // invert: w = E (v - a) / (v - conj(a))
    const std::complex<double> pole = std::polar(1.0, theta[0]);
    const std::complex<double> back = pole * (v[0] - a[0]) / (v[0] - std::conj(a[0]));
    const double err = std::abs(back - w[0]);
    check("holo: mobius round trip", err <= 1e-12, err);
  }
  std::printf("selftest %s (%d failure%s)\n", failures == 0 ? "passed" : "FAILED", failures,
              failures == 1 ? "" : "s");
  return failures == 0 ? kExitOk : kExitVerify;
}

}  // namespace
