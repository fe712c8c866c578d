#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "dissension/errors.hpp"
#include "dissension/measures.hpp"
#include "dissension/random_states.hpp"
#include "dissension/reference.hpp"
#include "oracle.hpp"

using namespace dissension;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

const DensityMatrix& ghz() {
  static const DensityMatrix rho = make_state(StateSpec::ghz());
  return rho;
}

const DensityMatrix& w() {
  static const DensityMatrix rho = make_state(StateSpec::w());
  return rho;
}

const DensityMatrix& noise() {
  static const DensityMatrix rho(ComplexMatrix::identity(8) / 8.0);
  return rho;
}

DensityMatrix bell() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> v{r, 0, 0, r};
  return DensityMatrix(ComplexMatrix::projector(v));
}

}  // namespace

TEST_CASE("measurement bases", "[measures]") {
  const double t = 0.7;
  const SingleQubitBasis single(t);
  const TwoQubitBasis pair(t);
  CHECK(max_abs_deviation(single.projectors()[0] + single.projectors()[1], ComplexMatrix::identity(2)) <= 1e-15);
  ComplexMatrix sum(4);
  for (const auto& p : pair.projectors()) sum += p;
  CHECK(max_abs_deviation(sum, ComplexMatrix::identity(4)) <= 1e-15);
  CHECK(single.projectors()[0](0, 0).real() == Approx(std::cos(t) * std::cos(t)));
  CHECK(single.projectors()[0](0, 1).real() == Approx(std::cos(t) * std::sin(t)));
  CHECK(pair.projectors()[0](0, 3).real() == Approx(std::cos(t) * std::sin(t)));
  CHECK(pair.projectors()[2](1, 2).real() == Approx(std::cos(t) * std::sin(t)));
  CHECK(pair.angle() == t);
}

TEST_CASE("entropies", "[measures]") {
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::identity(2) / 2.0)) == Approx(1.0).margin(1e-12));
  CHECK(von_neumann_entropy(ghz()) == Approx(0.0).margin(1e-9));
  CHECK(von_neumann_entropy(w()) == Approx(0.0).margin(1e-9));
  CHECK(von_neumann_entropy(partial_trace(w(), {0})) == Approx(std::log2(3.0) - 2.0 / 3).margin(1e-12));
  CHECK(von_neumann_entropy(partial_trace(w(), {0})) == Approx(0.9183).margin(1e-3));
  CHECK(subsystem_entropy(w(), {0, 1}) == Approx(reference::w_pair_entropy()).margin(1e-12));
  CHECK(subsystem_entropy(ghz(), {0, 1, 2}) == Approx(0.0).margin(1e-9));

  CHECK(shannon_pair(0.5, 0.5) == Approx(1.0));
  CHECK(shannon_pair(1, 0) == Approx(0.0).margin(1e-15));
  CHECK(shannon_pair(0.25, 0.75) == Approx(0.811278).margin(1e-6));
  CHECK(shannon_pair(2, 2) == Approx(-4.0));  // not normalized
  CHECK(shannon_pair(0, 0) == 0.0);
  CHECK_THROWS_AS(shannon_pair(-0.1, 1.1), NegativeArgument);
}

TEST_CASE("conditional entropy", "[measures]") {
  for (double t : {0.0, 0.4, kPi / 4, 2.0}) {
    CHECK(conditional_entropy(ghz(), {0, 1}, {2}, t) == Approx(0.0).margin(1e-9));
    CHECK(conditional_entropy(ghz(), {1, 2}, {0}, t) == Approx(0.0).margin(1e-9));
  }
  CHECK(conditional_entropy(ghz(), {0}, {1}, kPi / 4) == Approx(1.0).margin(1e-9));
  CHECK(conditional_entropy(ghz(), {0}, {1}, 0.0) == Approx(0.0).margin(1e-9));
  CHECK(conditional_entropy(w(), {0}, {1}, 0.0) == Approx(reference::w_conditional_analytic(0.0)).margin(1e-9));

  SECTION("agrees with the brute-force oracle") {
    std::mt19937_64 rng(5);
    const std::vector<std::pair<std::vector<Qubit>, std::vector<Qubit>>> cuts{
        {{0}, {1}}, {{2}, {0}}, {{0, 1}, {2}}, {{2, 0}, {1}}, {{0}, {1, 2}}, {{1}, {2, 0}}};
    for (int trial = 0; trial < 6; ++trial) {
      const DensityMatrix rho = random_mixed_state(3, rng);
      const auto dense = oracle::from(rho);
      for (const auto& [kept, measured] : cuts) {
        for (double t : {0.0, 0.3, 1.9}) {
          CHECK(conditional_entropy(rho, kept, measured, t) ==
                Approx(oracle::conditional(dense, kept, measured, t)).margin(1e-9));
        }
      }
    }
  }

  SECTION("errors") {
    CHECK_THROWS_AS(conditional_entropy(ghz(), {0}, {0}, 0.0), BadSubset);
    CHECK_THROWS_AS(conditional_entropy(ghz(), {0}, {}, 0.0), BadSubset);
    CHECK_THROWS_AS(conditional_entropy(ghz(), {}, {1}, 0.0), BadSubset);
    CHECK_THROWS_AS(conditional_entropy(ghz(), {0}, {5}, 0.0), BadSubset);
    CHECK_THROWS_AS(conditional_entropy(ghz(), {0}, {1, 2, 0}, 0.0), BadSubset);
  }
}

TEST_CASE("two-party measures", "[measures]") {
  const DensityMatrix ghz_xy = partial_trace(ghz(), {0, 1});
  const DensityMatrix white(ComplexMatrix::identity(4) / 4.0);

  CHECK(mutual_information_2(ghz_xy, kPi / 4) == Approx(0.0).margin(1e-9));
  CHECK(mutual_information_2(ghz_xy, 0.0) == Approx(1.0).margin(1e-9));
  for (double t : {0.0, 0.8, 2.5}) {
    CHECK(mutual_information_2(white, t) == Approx(0.0).margin(1e-9));
    CHECK(discord(white, {0}, {1}, t) == Approx(0.0).margin(1e-9));
  }

  const auto classical = min_discord(ghz_xy, {0}, {1});
  CHECK(classical.value == Approx(0.0).margin(1e-6));
  CHECK(std::min(classical.argmin_t, std::abs(classical.argmin_t - kPi)) <= 1e-3);

  const auto split = min_discord(ghz(), {0}, {1, 2});
  CHECK(split.value == Approx(1.0).margin(1e-6));

  // A Bell state has one bit of discord at every angle.
  for (double t : {0.0, 1.0}) CHECK(discord(bell(), {0}, {1}, t) == Approx(1.0).margin(1e-9));

  CHECK_THROWS_AS(mutual_information_2(ghz_xy, 0.0, 0, 0), BadSubset);
}

TEST_CASE("concurrence", "[measures]") {
  CHECK(concurrence(bell()) == Approx(1.0).margin(1e-9));
  CHECK(concurrence(DensityMatrix(ComplexMatrix::diagonal({1, 0, 0, 0}))) == Approx(0.0).margin(1e-9));
  CHECK(concurrence(DensityMatrix(ComplexMatrix::identity(4) / 4.0)) == Approx(0.0).margin(1e-9));
  const DensityMatrix yz = partial_trace(make_state(StateSpec::biseparable(0.4)), {1, 2});
  CHECK(concurrence(yz) == Approx(0.6).margin(1e-9));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_mixed_state(2, rng);
    CHECK(concurrence(rho) == Approx(oracle::concurrence(oracle::from(rho))).margin(1e-8));
    const DensityMatrix pure = random_pure_state(2, rng);
    CHECK(concurrence(pure) == Approx(oracle::concurrence(oracle::from(pure))).margin(1e-8));
  }
  CHECK_THROWS_AS(concurrence(ghz()), InvalidParam);
}

TEST_CASE("three-party measures at fixed angles", "[measures]") {
  const QubitLabeling l;

  CHECK(J3(ghz()) == Approx(0.0).margin(1e-9));
  CHECK(J3(w()) == Approx(0.0).margin(1e-9));
  CHECK(J3(noise()) == Approx(0.0).margin(1e-9));

  SECTION("J3 of mixed GHZ from closed-form spectra") {
    const double a = 0.5;
    auto h = [](std::initializer_list<std::pair<double, int>> spec) {
      double s = 0;
      for (auto [p, mult] : spec)
        if (p > 0) s -= mult * p * std::log2(p);
      return s;
    };
    const double pair = h({{(1 + a) / 4, 2}, {(1 - a) / 4, 2}});
    const double triple = h({{(1 + 7 * a) / 8, 1}, {(1 - a) / 8, 7}});
    CHECK(J3(make_state(StateSpec::mixed_ghz(a))) == Approx(3 - 3 * pair + triple).margin(1e-9));
  }

  CHECK(I3(ghz(), l, kPi / 4) == Approx(-3.0).margin(1e-9));
  CHECK(I3(ghz(), l, 0.0) == Approx(1.0).margin(1e-9));
  CHECK(K3(w(), l, 0.6) == Approx(std::log2(3.0) - 2.0 / 3).margin(1e-9));
  for (double t : {0.0, 0.5, 1.7, 3.0}) {
    CHECK(I3(noise(), l, t) == Approx(0.0).margin(1e-9));
    CHECK(K3(ghz(), l, t) == Approx(1.0).margin(1e-9));
    CHECK(K3(noise(), l, t) == Approx(0.0).margin(1e-9));
    CHECK(D1(make_state(StateSpec::mixed_ghz(0.0)), l, t) == Approx(0.0).margin(1e-9));
    CHECK(D2(ghz(), l, t) == Approx(1.0).margin(1e-9));
    CHECK(d1_via_discords(noise(), l, t) == Approx(0.0).margin(1e-9));
  }
  CHECK(d1_via_discords(ghz(), l, kPi / 4) == Approx(-3.0).margin(1e-9));
  CHECK(D1(w(), l, 0.0) == Approx(reference::w_d1_analytic(0.0)).margin(1e-9));

  SECTION("biseparable D2 vanishes with the product qubit as X") {
    for (double a : {0.0, 0.1, 0.25, 0.4, 0.5})
      for (double t : {0.0, 0.9, 2.2})
        for (const QubitLabeling lab : {QubitLabeling{0, 1, 2}, QubitLabeling{0, 2, 1}})
          CHECK(D2(make_state(StateSpec::biseparable(a)), lab, t) == Approx(0.0).margin(1e-9));
  }

  SECTION("oracle agreement on random states") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = random_mixed_state(3, rng);
      const auto dense = oracle::from(rho);
      for (const QubitLabeling lab : {QubitLabeling{0, 1, 2}, QubitLabeling{2, 0, 1}, QubitLabeling{1, 2, 0}}) {
        CHECK(J3(rho, lab) == Approx(oracle::J3(dense, lab)).margin(1e-9));
        for (double t : {0.0, 0.3, 2.4}) {
          CHECK(I3(rho, lab, t) == Approx(oracle::I3(dense, lab, t)).margin(1e-9));
          CHECK(K3(rho, lab, t) == Approx(oracle::K3(dense, lab, t)).margin(1e-9));
          CHECK(D1(rho, lab, t) == Approx(oracle::D1(dense, lab, t)).margin(1e-9));
          CHECK(D2(rho, lab, t) == Approx(oracle::D2(dense, lab, t)).margin(1e-9));
          CHECK(d1_via_discords(rho, lab, t) == Approx(D1(rho, lab, t)).margin(1e-9));
        }
      }
    }
  }

  SECTION("errors") {
    CHECK_THROWS_AS(D1(ghz(), QubitLabeling{0, 0, 2}, 0.0), InvalidParam);
    CHECK_THROWS_AS(D2(ghz(), QubitLabeling{0, 1, 3}, 0.0), InvalidParam);
    CHECK_THROWS_AS(J3(DensityMatrix(ComplexMatrix::identity(4) / 4.0)), InvalidParam);
  }
}

TEST_CASE("minimized dissensions", "[measures]") {
  const auto g1 = delta1(ghz());
  CHECK(g1.value == Approx(-3.0).margin(0.01));
  // D1 of GHZ has period pi/2, so any of the four minima is acceptable.
  CHECK(std::abs(std::remainder(g1.argmin_t - kPi / 4, kPi / 2)) <= 1e-3);
  CHECK(delta2(ghz()).value == Approx(1.0).margin(1e-6));

  const auto w1 = delta1(w());
  CHECK(w1.value == Approx(-1.74).margin(0.01));
  CHECK(delta2(w()).value == Approx(0.92).margin(0.005));
  CHECK(w1.evaluations > w1.grid_points);

  SECTION("independent angles never do worse than a shared angle") {
    for (const auto& rho : {ghz(), w(), make_state(StateSpec::mixed_w(0.6))}) {
      const auto shared = delta1(rho);
      const auto free = delta1_independent(rho);
      CHECK(free.value <= shared.value + 1e-9);
      CHECK(D1_independent(rho, {}, free.argmin) == Approx(free.value).margin(1e-9));
    }
  }

  SECTION("D1_independent reduces to D1 with equal angles") {
    std::mt19937_64 rng(17);
    const DensityMatrix rho = random_mixed_state(3, rng);
    for (double t : {0.2, 1.3})
      CHECK(D1_independent(rho, {}, {t, t, t}) == Approx(D1(rho, {}, t)).margin(1e-12));
  }
}

TEST_CASE("negative three-variable mutual information", "[measures]") {
  const auto demo = negative_mi_demo();
  CHECK(demo.i2 == Approx(0.0).margin(1e-9));
  CHECK(demo.cond_mi == Approx(2.0).margin(1e-9));
  CHECK(demo.i3 == Approx(-2.0).margin(1e-9));

  const auto at_zero = three_variable_mi(ghz(), {}, 0.0);
  CHECK(at_zero.i2 == Approx(1.0).margin(1e-9));
  CHECK(at_zero.cond_mi == Approx(0.0).margin(1e-9));
  CHECK(at_zero.i3 == Approx(1.0).margin(1e-9));

  for (double t : {0.0, 1.0}) {
    const auto n = three_variable_mi(noise(), {}, t);
    CHECK(n.i2 == Approx(0.0).margin(1e-9));
    CHECK(n.cond_mi == Approx(0.0).margin(1e-9));
    CHECK(n.i3 == Approx(0.0).margin(1e-9));
  }
}

TEST_CASE("measure dispatch", "[measures]") {
  CHECK(parse_measure("D1") == Measure::D1);
  CHECK(parse_measure("discord") == Measure::discord);
  CHECK(to_string(Measure::K3) == "K3");
  CHECK_THROWS_AS(parse_measure("D3"), InvalidParam);
  CHECK_FALSE(measure_uses_angle(Measure::J3));
  CHECK(measure_uses_angle(Measure::D2));

  CHECK(evaluate_measure(Measure::D2, ghz(), {}, 0.3) == Approx(1.0).margin(1e-9));
  CHECK(evaluate_measure(Measure::I2, ghz(), {}, 0.0) == Approx(1.0).margin(1e-9));
  CHECK(evaluate_measure(Measure::discord, ghz(), {}, 0.0) == Approx(1.0).margin(1e-9));

  const auto v = compute_measure(Measure::J3, w(), {}, 0.0, "w");
  CHECK_FALSE(v.t);
  CHECK(v.state_descriptor == "w");
  CHECK(compute_measure(Measure::D1, w(), {}, 0.5).t == 0.5);

  const DensityMatrix pair = partial_trace(ghz(), {0, 1});
  CHECK(evaluate_measure(Measure::I2, pair, {}, 0.0) == Approx(1.0).margin(1e-9));
  CHECK_THROWS_AS(evaluate_measure(Measure::D1, pair, {}, 0.0), InvalidParam);

  CHECK(minimize_measure(Measure::D2, w(), {}).value == Approx(0.92).margin(0.005));
  CHECK_THROWS_AS(minimize_measure(Measure::J3, w(), {}), InvalidParam);
}
