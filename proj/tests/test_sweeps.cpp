#include "urdd/sweeps.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

using namespace urdd;

TEST_CASE("zero-error grid point is exact for any UR sequence") {
  for (int n : {4, 8, 20}) {
    const double f = point_fidelity(symmetric_ur(n), 2 * n, 0.0, 0.0, 4.0);
    CHECK(1.0 - f < 1e-10);
  }
}

TEST_CASE("fidelity map is symmetric in the detuning sign for symmetric UR") {
  for (int n : {4, 8, 10}) {
    const PhaseSequence seq = symmetric_ur(n);
    for (auto [x, y] : {std::pair{0.23, 0.11}, std::pair{0.4, -0.2}, std::pair{0.07, 0.31}}) {
      const double plus = point_fidelity(seq, 40, x, y, 4.0);
      const double minus = point_fidelity(seq, 40, -x, y, 4.0);
      CHECK(std::abs(plus - minus) < 1e-10);
    }
  }
}

TEST_CASE("total pulse count must divide into whole periods") {
  CHECK_THROWS_AS(point_fidelity(symmetric_ur(8), 30, 0.1, 0.1, 4.0), std::domain_error);
  SweepGrid bad;
  bad.nx = 1;
  CHECK_THROWS_AS(fidelity_map(symmetric_ur(4), 8, bad, 4.0), std::domain_error);
  bad = SweepGrid{};
  bad.detuning_lo = 0.5;
  bad.detuning_hi = -0.5;
  CHECK_THROWS_AS(fidelity_map(symmetric_ur(4), 8, bad, 4.0), std::domain_error);
}

TEST_CASE("thread count does not change any map value") {
  SweepGrid grid;
  grid.detuning_lo = -0.3;
  grid.detuning_hi = 0.3;
  grid.amplitude_lo = -0.2;
  grid.amplitude_hi = 0.2;
  grid.nx = 7;
  grid.ny = 5;
  const MapResult serial = fidelity_map(symmetric_ur(4), 24, grid, 4.0, 1);
  const MapResult threaded = fidelity_map(symmetric_ur(4), 24, grid, 4.0, 3);
  REQUIRE(serial.values.size() == threaded.values.size());
  for (std::size_t i = 0; i < serial.values.size(); ++i) {
    CHECK(serial.values[i] == threaded.values[i]);
  }
  for (double f : serial.values) {
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("longer UR sequences dominate pointwise near the center") {
  // Each pair is compared at an equal total pulse count (a common multiple
  // of both orders near 120). Holds on the |x|,|y| <= 0.08 box; a wider
  // +-0.15 box fails near its corners (violations up to ~1e-2 for the
  // UR4/UR8 pair), so the verified region is pinned here.
  SweepGrid box;
  box.detuning_lo = -0.08;
  box.detuning_hi = 0.08;
  box.amplitude_lo = -0.08;
  box.amplitude_hi = 0.08;
  box.nx = 9;
  box.ny = 9;
  struct Pair {
    int n;
    int total_pulses;
  };
  for (const Pair& pr : {Pair{4, 120}, Pair{8, 120}, Pair{12, 96}, Pair{16, 80}}) {
    const MapResult low = fidelity_map(symmetric_ur(pr.n), pr.total_pulses, box, 4.0, 4);
    const MapResult high = fidelity_map(symmetric_ur(pr.n + 4), pr.total_pulses, box, 4.0, 4);
    for (int ix = 0; ix < box.nx; ++ix) {
      for (int iy = 0; iy < box.ny; ++iy) {
        const double eps_low = 1.0 - low.at(ix, iy);
        const double eps_high = 1.0 - high.at(ix, iy);
        CHECK(eps_high <= eps_low + 1e-12);
      }
    }
  }
}

TEST_CASE("comparison table orderings at a moderate error point") {
  const std::vector<PhaseSequence> seqs = {
      symmetric_ur(8), symmetric_ur(20), baseline(BaselineName::Xy4),
      baseline(BaselineName::KddXy4), baseline(BaselineName::Cpmg)};

  const auto zero = comparison_table(seqs, 120, 0.0, 0.0, 4.0);
  for (const auto& row : zero) CHECK(row.infidelity < 1e-10);

  const auto rows = comparison_table(seqs, 120, 0.2, 0.2, 4.0);
  REQUIRE(rows.size() == 5);
  const double ur8 = rows[0].infidelity;
  const double ur20 = rows[1].infidelity;
  const double xy4 = rows[2].infidelity;
  const double kdd_xy4 = rows[3].infidelity;
  const double cpmg = rows[4].infidelity;

  CHECK(ur20 < kdd_xy4);
  CHECK(ur8 < xy4);
  // frozen regression for the CPMG reference point
  CHECK(cpmg == doctest::Approx(0.48784753906574685).epsilon(1e-6));
  CHECK(cpmg > 1e-2);
}

TEST_CASE("scaling fits recover n/2 and flag degenerate points") {
  std::vector<double> p_list;
  for (int i = 0; i < 10; ++i) {
    p_list.push_back(1.0 - 0.05 * std::pow(5.0, i / 9.0));  // 1-p in [0.05, 0.25]
  }
  const std::vector<int> orders = {2, 4, 8};
  const auto fits = scaling_fit(orders, p_list, {0.1, 0.07});
  REQUIRE(fits.size() == 3);
  for (const auto& fit : fits) {
    CHECK(!fit.degenerate);
    CHECK(std::abs(fit.slope - 0.5 * fit.n) < 0.02);
  }

  // alpha + delta at the UR4 sine node: every error vanishes
  const std::vector<int> just4 = {4};
  const auto node = scaling_fit(just4, p_list, {std::numbers::pi, 0.0});
  REQUIRE(node.size() == 1);
  CHECK(node[0].degenerate);
  CHECK(node[0].points_used == 0);
}

TEST_CASE("map CSV format is stable") {
  MapResult map;
  map.grid = {0.0, 1.0, 0.0, 1.0, 2, 2};
  map.values = {1.0, 0.5, 0.25, 0.125};
  std::ostringstream os;
  write_map_csv(map, os);
  CHECK(os.str() ==
        "det_over_rabi,amp_error,fidelity\n"
        "0,0,1\n"
        "0,1,0.5\n"
        "1,0,0.25\n"
        "1,1,0.125\n");
}

TEST_CASE("PGM heatmap header and range") {
  MapResult map;
  map.grid = {0.0, 1.0, 0.0, 1.0, 3, 2};
  map.values = {0.9999, 1.0, 0.5, 0.0, 1.0 - 1e-13, 0.25};
  std::ostringstream os;
  write_map_pgm(map, os);
  std::istringstream in(os.str());
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  CHECK(magic == "P2");
  CHECK(w == 3);
  CHECK(h == 2);
  CHECK(maxval == 65535);
  int count = 0;
  int pixel = 0;
  int first = -1;
  while (in >> pixel) {
    if (first < 0) first = pixel;
    CHECK(pixel >= 0);
    CHECK(pixel <= 65535);
    ++count;
  }
  CHECK(count == 6);
  // top-left pixel is the highest-amplitude row of the first detuning: F = 1 -> saturated
  CHECK(first == 65535);
}
