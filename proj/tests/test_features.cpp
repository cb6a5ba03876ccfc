#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hsas/features.hpp"
#include "hsas/oracle.hpp"
#include "hsas/transform.hpp"

using namespace hsas;

namespace {

GridLattice periodic_square(int n, double length) {
  return GridLattice({n, n}, {0.0, 0.0}, {length / n, length / n});
}

}  // namespace

TEST_CASE("amplitude closed forms") {
  SUBCASE("aligned product has unit envelope") {
    const GridLattice lat = periodic_square(64, 2.0 * std::numbers::pi);
    const GridSignal g = grid_make(
        lat, [](std::span<const double> p) { return std::cos(p[0]) * std::cos(p[1]); });
    const GridSignal a = amplitude(analytic_signal(g));
    for (double v : a.data) CHECK(v == doctest::Approx(1.0).epsilon(1e-11));
  }
  SUBCASE("degenerate axis keeps unit envelope") {
    const GridLattice lat = periodic_square(64, 2.0 * std::numbers::pi);
    const GridSignal g = grid_make(lat, [](std::span<const double> p) { return std::cos(p[0]); });
    const GridSignal a = amplitude(analytic_signal(g));
    for (double v : a.data) CHECK(v == doctest::Approx(1.0).epsilon(1e-11));
  }
  SUBCASE("rotated product matches its non-constant closed form") {
    const GridLattice lat = periodic_square(128, 2.0 * std::numbers::sqrt2 * std::numbers::pi);
    const GridSignal g = grid_make(
        lat, [](std::span<const double> p) { return oracle_rotated(p[0], p[1]).f; });
    const GridSignal a = amplitude(analytic_signal(g));
    std::vector<double> x(2);
    for (std::size_t i = 0; i < a.data.size(); ++i) {
      lat.coordinates_of(i, x);
      CHECK(a.data[i] == doctest::Approx(oracle_rotated(x[0], x[1]).amp).epsilon(1e-9));
    }
  }
}

TEST_CASE("amplitude dominates every component") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const GridLattice lat({12, 12}, {0.0, 0.0}, {0.7, 0.4});
  GridSignal g{lat, std::vector<double>(lat.size())};
  for (double& v : g.data) v = uni(rng);
  const AnalyticGrid a = analytic_signal(g);
  const GridSignal amp = amplitude(a);
  for (const auto& comp : a.components)
    for (std::size_t i = 0; i < amp.data.size(); ++i)
      CHECK(amp.data[i] >= std::abs(comp[i]) * (1.0 - 1e-14));
}

TEST_CASE("instantaneous phase") {
  SUBCASE("rotating exponential has a linear phase") {
    const int n = 64;
    const GridLattice lat({n}, {0.0}, {2.0 * std::numbers::pi / n});
    const GridSignal g = grid_make(lat, [](std::span<const double> x) { return std::cos(3.0 * x[0]); });
    const MaskedGrid p = phase(analytic_signal(g), Direction::from_string("1"));
    for (int k = 0; k < n; ++k) {
      REQUIRE(p.defined[static_cast<std::size_t>(k)]);
      const double want = std::remainder(3.0 * lat.coordinate(1, k), 2.0 * std::numbers::pi);
      CHECK(std::remainder(p.values.data[static_cast<std::size_t>(k)] - want, 2.0 * std::numbers::pi) ==
            doctest::Approx(0.0).epsilon(1e-10));
    }
  }
  SUBCASE("zero signal is fully masked") {
    const GridLattice lat({8, 8}, {0.0, 0.0}, {1.0, 1.0});
    AnalyticGrid a{lat, std::vector<std::vector<double>>(4, std::vector<double>(lat.size(), 0.0))};
    const MaskedGrid p = phase(a, Direction::from_string("10"));
    for (auto d : p.defined) CHECK(d == 0);
  }
  SUBCASE("product field phase along the first axis") {
    const GridLattice lat = periodic_square(32, 2.0 * std::numbers::pi);
    const GridSignal g = grid_make(
        lat, [](std::span<const double> p) { return std::cos(p[0]) * std::cos(p[1]); });
    const MaskedGrid p = phase(analytic_signal(g), Direction::from_string("10"));
    std::vector<double> x(2);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (!p.defined[i]) continue;  // cos(y) zero crossings mask the sample
      lat.coordinates_of(i, x);
      // arctan(sin x cos y / cos x cos y) recovers x modulo pi
      CHECK(std::abs(std::remainder(p.values.data[i] - x[0], std::numbers::pi)) <= 1e-9);
    }
  }
}

TEST_CASE("instantaneous frequency") {
  SUBCASE("linear phase differentiates to a constant") {
    const int n = 64;
    const GridLattice lat({n}, {0.0}, {2.0 * std::numbers::pi / n});
    const GridSignal g = grid_make(lat, [](std::span<const double> x) { return std::cos(3.0 * x[0]); });
    const Direction j = Direction::from_string("1");
    const MaskedGrid nu = inst_frequency(phase(analytic_signal(g), j), j);
    // interior only; the wrap between last and first sample is not unwrapped
    for (int k = 1; k < n - 1; ++k) {
      REQUIRE(nu.defined[static_cast<std::size_t>(k)]);
      CHECK(nu.values.data[static_cast<std::size_t>(k)] == doctest::Approx(3.0).epsilon(1e-9));
    }
  }
  SUBCASE("2-D phase plane x gives unit frequency") {
    const GridLattice lat = periodic_square(32, 2.0 * std::numbers::pi);
    MaskedGrid p{GridSignal{lat, std::vector<double>(lat.size())},
                 std::vector<std::uint8_t>(lat.size(), 1)};
    std::vector<double> x(2);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      lat.coordinates_of(i, x);
      p.values.data[i] = x[0];
    }
    const MaskedGrid nu = inst_frequency(p, Direction::from_string("10"));
    const int n = lat.shape[0];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const std::size_t i = static_cast<std::size_t>(r * n + c);
        REQUIRE(nu.defined[i]);
        CHECK(nu.values.data[i] == doctest::Approx(1.0).epsilon(1e-12));
      }
  }
  SUBCASE("second-order convergence under spacing refinement") {
    // Quadratic phase: the central difference error scales like dx^2.
    const auto max_err = [](int n) {
      const GridLattice lat({n}, {0.0}, {1.0 / n});
      MaskedGrid p{GridSignal{lat, std::vector<double>(lat.size())},
                   std::vector<std::uint8_t>(lat.size(), 1)};
      for (int k = 0; k < n; ++k) {
        const double x = lat.coordinate(1, k);
        p.values.data[static_cast<std::size_t>(k)] = std::sin(2.0 * x);
      }
      const MaskedGrid nu = inst_frequency(p, Direction::from_string("1"));
      double worst = 0.0;
      for (int k = 1; k < n - 1; ++k) {
        const double x = lat.coordinate(1, k);
        worst = std::max(worst,
                         std::abs(nu.values.data[static_cast<std::size_t>(k)] - 2.0 * std::cos(2.0 * x)));
      }
      return worst;
    };
    const double coarse = max_err(128);
    const double fine = max_err(256);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.15));
  }
  SUBCASE("narrowband carrier is recovered") {
    const int n = 512;
    const GridLattice lat({n}, {-8.0}, {16.0 / n});
    const GridSignal g = grid_make(lat, [](std::span<const double> x) {
      return std::exp(-x[0] * x[0] / 16.0) * std::cos(10.0 * x[0]);
    });
    const Direction j = Direction::from_string("1");
    const MaskedGrid nu = inst_frequency(phase(analytic_signal(g), j), j);
    for (int k = n / 4; k < 3 * n / 4; ++k) {
      REQUIRE(nu.defined[static_cast<std::size_t>(k)]);
      CHECK(std::abs(nu.values.data[static_cast<std::size_t>(k)] - 10.0) <= 1e-2);
    }
  }
  SUBCASE("too few samples along the axis") {
    const GridLattice lat({2}, {0.0}, {1.0});
    MaskedGrid p{GridSignal{lat, {0.0, 0.1}}, {1, 1}};
    CHECK_THROWS_AS(inst_frequency(p, Direction::from_string("1")), Error);
  }
}

TEST_CASE("narrowband construction") {
  SUBCASE("unit amplitude with linear phases") {
    const GridLattice lat = periodic_square(16, 2.0 * std::numbers::pi);
    const GridSignal a = grid_make(lat, [](std::span<const double>) { return 1.0; });
    std::vector<GridSignal> phases;
    for (int axis = 0; axis < 2; ++axis) {
      GridSignal p{lat, std::vector<double>(lat.size())};
      std::vector<double> x(2);
      for (std::size_t i = 0; i < lat.size(); ++i) {
        lat.coordinates_of(i, x);
        p.data[i] = (axis == 0 ? 2.0 : 3.0) * x[static_cast<std::size_t>(axis)];
      }
      phases.push_back(std::move(p));
    }
    const AnalyticGrid c = narrowband_construct(a, phases);
    std::vector<double> x(2);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      lat.coordinates_of(i, x);
      CHECK(c.components[0][i] ==
            doctest::Approx(std::cos(2 * x[0]) * std::cos(3 * x[1])).epsilon(1e-13));
      CHECK(c.components[3][i] ==
            doctest::Approx(std::sin(2 * x[0]) * std::sin(3 * x[1])).epsilon(1e-13));
    }
    const GridSignal amp = amplitude(c);
    for (double v : amp.data) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("envelope equals |A| for any phases") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    const GridLattice lat({9, 7}, {0.0, 0.0}, {1.0, 1.0});
    GridSignal a{lat, std::vector<double>(lat.size())};
    std::vector<GridSignal> phases(2, GridSignal{lat, std::vector<double>(lat.size())});
    for (std::size_t i = 0; i < lat.size(); ++i) {
      a.data[i] = uni(rng);
      phases[0].data[i] = uni(rng);
      phases[1].data[i] = uni(rng);
    }
    const GridSignal amp = amplitude(narrowband_construct(a, phases));
    for (std::size_t i = 0; i < lat.size(); ++i)
      CHECK(amp.data[i] == doctest::Approx(std::abs(a.data[i])).epsilon(1e-12));
  }
  SUBCASE("zero amplitude gives the zero grid") {
    const GridLattice lat({4, 4}, {0.0, 0.0}, {1.0, 1.0});
    const GridSignal zero{lat, std::vector<double>(lat.size(), 0.0)};
    const std::vector<GridSignal> phases(2, GridSignal{lat, std::vector<double>(lat.size(), 0.5)});
    const AnalyticGrid c = narrowband_construct(zero, phases);
    for (const auto& comp : c.components)
      for (double v : comp) CHECK(v == 0.0);
  }
  SUBCASE("matches the transform pipeline when bands separate") {
    const int n = 256;
    const GridLattice lat({n, n}, {-8.0, -8.0}, {16.0 / n, 16.0 / n});
    const double w1 = 4.0 * std::numbers::pi, w2 = 3.0 * std::numbers::pi;
    const GridSignal a = grid_make(lat, [](std::span<const double> p) {
      return std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2.0);
    });
    std::vector<GridSignal> phases(2, GridSignal{lat, std::vector<double>(lat.size())});
    std::vector<double> x(2);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      lat.coordinates_of(i, x);
      phases[0].data[i] = w1 * x[0];
      phases[1].data[i] = w2 * x[1];
    }
    const AnalyticGrid direct = narrowband_construct(a, phases);

    const GridSignal product = grid_make(lat, [&](std::span<const double> p) {
      return std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2.0) * std::cos(w1 * p[0]) * std::cos(w2 * p[1]);
    });
    const AnalyticGrid pipeline = analytic_signal(product);
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t i = 0; i < lat.size(); ++i)
        CHECK(std::abs(direct.components[b][i] - pipeline.components[b][i]) <= 1e-6);
  }
}

TEST_CASE("bedrosian identity") {
  SUBCASE("separated bands in one dimension") {
    const int n = 1024;
    const GridLattice lat({n}, {-8.0}, {16.0 / n});
    const GridSignal f = grid_make(lat, [](std::span<const double> p) {
      return std::exp(-p[0] * p[0]);
    });
    const GridSignal g = grid_make(lat, [](std::span<const double> p) {
      return std::cos(4.0 * std::numbers::pi * p[0]);
    });
    const BedrosianReport rep = bedrosian_check(f, g, Direction::from_string("1"));
    CHECK(rep.rel_l2 <= 1e-6);
    CHECK(rep.rel_max <= 1e-6);
    CHECK(rep.hypotheses_ok);
    REQUIRE(rep.low_edge.size() == 1);
    CHECK(rep.low_edge[0] < rep.high_edge[0]);
  }
  SUBCASE("constant low-pass factor commutes exactly") {
    const int n = 128;
    const GridLattice lat({n}, {0.0}, {2.0 * std::numbers::pi / n});
    for (double c : {1.0, 2.0}) {
      const GridSignal f = grid_make(lat, [&](std::span<const double>) { return c; });
      const GridSignal g = grid_make(lat, [](std::span<const double> p) {
        return std::cos(5.0 * p[0]) + 0.25 * std::sin(9.0 * p[0]);
      });
      const BedrosianReport rep = bedrosian_check(f, g, Direction::from_string("1"));
      CHECK(rep.max_abs == 0.0);
    }
  }
  SUBCASE("overlapping spectra are reported as violated") {
    const int n = 256;
    const GridLattice lat({n}, {-8.0}, {16.0 / n});
    // Wide-band factor: its band reaches past the carrier.
    const GridSignal f = grid_make(lat, [](std::span<const double> p) {
      return std::exp(-16.0 * p[0] * p[0]);
    });
    const GridSignal g = grid_make(lat, [](std::span<const double> p) {
      return std::cos(2.0 * std::numbers::pi * p[0]);
    });
    const BedrosianReport rep = bedrosian_check(f, g, Direction::from_string("1"));
    CHECK(!rep.hypotheses_ok);
    CHECK(rep.rel_l2 > 1e-6);
  }
}

TEST_CASE("envelope report bundles the per-direction features") {
  const GridLattice lat = periodic_square(16, 2.0 * std::numbers::pi);
  const GridSignal g = grid_make(
      lat, [](std::span<const double> p) { return std::cos(p[0]) * std::cos(2.0 * p[1]); });
  const EnvelopeReport rep = envelope_report(analytic_signal(g));
  CHECK(rep.directions.size() == 3);
  CHECK(rep.phases.size() == 3);
  CHECK(rep.frequencies.size() == 3);
  for (double v : rep.amplitude.data) CHECK(v == doctest::Approx(1.0).epsilon(1e-11));
}
