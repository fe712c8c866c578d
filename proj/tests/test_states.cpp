#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "dissension/errors.hpp"
#include "dissension/measures.hpp"
#include "dissension/random_states.hpp"
#include "dissension/states.hpp"

using namespace dissension;
using Catch::Approx;

namespace {

ComplexMatrix ket_bra(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix m(dim);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("make_state families", "[states]") {
  SECTION("ghz") {
    const DensityMatrix ghz = make_state(StateSpec::ghz());
    ComplexMatrix expected(8);
    expected(0, 0) = expected(0, 7) = expected(7, 0) = expected(7, 7) = 0.5;
    CHECK(max_abs_deviation(ghz.matrix(), expected) <= 1e-15);
    CHECK(ghz.num_qubits() == 3);
  }
  SECTION("mixed ghz at a = 0 is white noise") {
    CHECK(max_abs_deviation(make_state(StateSpec::mixed_ghz(0.0)).matrix(), ComplexMatrix::identity(8) / 8.0) <=
          1e-15);
  }
  SECTION("biseparable matches the product form 2a|0>|phi+><..| + 2b|0>|psi-><..|") {
    for (double a : {0.0, 0.1, 0.25, 0.4, 0.5}) {
      const double b = 0.5 - a;
      const double r = 1.0 / std::sqrt(2.0);
      const std::array<Complex, 4> phi{r, 0, 0, r};
      const std::array<Complex, 4> psi{0, r, -r, 0};
      const ComplexMatrix zero = ComplexMatrix::diagonal({1, 0});
      const ComplexMatrix expected = kron(zero, 2 * a * ComplexMatrix::projector(phi)) +
                                     kron(zero, 2 * b * ComplexMatrix::projector(psi));
      CHECK(max_abs_deviation(make_state(StateSpec::biseparable(a)).matrix(), expected) <= 1e-15);
    }
  }
  SECTION("pure families have top eigenvalue 1") {
    for (const auto& spec : {StateSpec::ghz(), StateSpec::w(), StateSpec::mixed_ghz(1.0), StateSpec::mixed_w(1.0)}) {
      CHECK(hermitian_eigenvalues(make_state(spec).matrix()).values.front() == Approx(1.0).margin(1e-9));
    }
  }
  SECTION("every family output is a valid state") {
    for (double a : {0.0, 0.3, 0.7, 1.0}) {
      CHECK(diagnose_state(make_state(StateSpec::mixed_ghz(a)).matrix()).valid());
      CHECK(diagnose_state(make_state(StateSpec::mixed_w(a)).matrix()).valid());
      CHECK(diagnose_state(make_state(StateSpec::biseparable(a / 2)).matrix()).valid());
    }
  }
  SECTION("parameter errors") {
    CHECK_THROWS_AS(make_state(StateSpec::mixed_ghz(1.2)), InvalidParam);
    CHECK_THROWS_AS(make_state(StateSpec::mixed_w(-0.1)), InvalidParam);
    CHECK_THROWS_AS(make_state(StateSpec::biseparable(0.6)), InvalidParam);
    CHECK_THROWS_AS(make_state(StateSpec::mixed_ghz(std::nan(""))), InvalidParam);
    CHECK_THROWS_AS(make_state(StateSpec::pure({1.0, 1.0})), InvalidParam);
    CHECK_THROWS_AS(make_state(StateSpec::pure({1.0, 0.0, 0.0})), InvalidParam);
    CHECK_THROWS_AS(make_state(StateSpec::raw(ComplexMatrix::identity(2))), NotAState);
    CHECK_NOTHROW(make_state(StateSpec::pure({Complex(0, 1), 0.0})));
  }
}

TEST_CASE("DensityMatrix validation", "[states]") {
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::identity(8) / 8.0));
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(3) / 3.0), NotAState);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({1.5, -0.5})), NotAState);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.0, 0.5}}), NotAState);
  // Round-off sized negative eigenvalues are tolerated.
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::diagonal({1.0 + 5e-10, -5e-10})));

  const auto d = diagnose_state(ComplexMatrix::identity(2) * 0.75);
  CHECK_FALSE(d.valid());
  CHECK(d.trace_deviation == Approx(0.5));
  CHECK(*d.violation == "trace deviation 0.5");
}

TEST_CASE("partial_trace reductions", "[states]") {
  const DensityMatrix ghz = make_state(StateSpec::ghz());
  const DensityMatrix w = make_state(StateSpec::w());
  for (Qubit q : {0, 1, 2}) {
    CHECK(max_abs_deviation(partial_trace(ghz, {q}).matrix(), ComplexMatrix::identity(2) / 2.0) <= 1e-12);
    CHECK(max_abs_deviation(partial_trace(w, {q}).matrix(), ComplexMatrix::diagonal({2.0 / 3, 1.0 / 3})) <= 1e-12);
  }

  SECTION("mixed W pair reduction") {
    for (double a : {0.0, 0.3, 0.7, 1.0}) {
      ComplexMatrix expected = ComplexMatrix::diagonal({(3 + a) / 12, (3 + a) / 12, (3 + a) / 12, (1 - a) / 4});
      expected(1, 2) = expected(2, 1) = a / 3;
      const DensityMatrix rho = make_state(StateSpec::mixed_w(a));
      CHECK(max_abs_deviation(partial_trace(rho, {0, 1}).matrix(), expected) <= 1e-12);
    }
  }

  SECTION("listed order sets the output ordering") {
    // |100><100| reduced to (2, 0) is |01><01|.
    const DensityMatrix rho(ket_bra(8, 4, 4));
    CHECK(partial_trace(rho, {2, 0}).matrix() == ket_bra(4, 1, 1));
    CHECK(partial_trace(rho, {0, 2}).matrix() == ket_bra(4, 2, 2));
  }

  SECTION("single call equals successive traces") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
      const DensityMatrix rho = random_mixed_state(3, rng);
      const DensityMatrix once = partial_trace(rho, {0});
      const DensityMatrix twice = partial_trace(partial_trace(rho, {0, 1}), {0});
      CHECK(max_abs_deviation(once.matrix(), twice.matrix()) <= 1e-12);
      CHECK(std::abs(trace(partial_trace(rho, {1, 2}).matrix()) - 1.0) <= 1e-12);
      CHECK(diagnose_state(partial_trace(rho, {2, 0}).matrix()).valid());
    }
  }

  SECTION("mixed GHZ single-qubit reductions are white noise") {
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0})
      for (Qubit q : {0, 1, 2})
        CHECK(max_abs_deviation(partial_trace(make_state(StateSpec::mixed_ghz(a)), {q}).matrix(),
                                ComplexMatrix::identity(2) / 2.0) <= 1e-12);
  }

  SECTION("bad subsets") {
    CHECK_THROWS_AS(partial_trace(ghz, {}), BadSubset);
    CHECK_THROWS_AS(partial_trace(ghz, {0, 0}), BadSubset);
    CHECK_THROWS_AS(partial_trace(ghz, {3}), BadSubset);
    CHECK_THROWS_AS(partial_trace(ghz, {-1}), BadSubset);
    CHECK_THROWS_AS(partial_trace(ghz, {0, 1, 2}), BadSubset);
  }
}

TEST_CASE("project", "[states]") {
  const DensityMatrix ghz = make_state(StateSpec::ghz());

  SECTION("computational basis on X") {
    const auto out = project(ghz, embed_operator(ComplexMatrix::diagonal({1, 0}), {0}, 3));
    CHECK(out.probability == Approx(0.5).margin(1e-15));
    REQUIRE(out.post_state);
    CHECK(max_abs_deviation(out.post_state->matrix(), ket_bra(8, 0, 0)) <= 1e-15);
  }
  SECTION("identity leaves the state alone") {
    const auto out = project(ghz, ComplexMatrix::identity(8));
    CHECK(out.probability == Approx(1.0));
    CHECK(max_abs_deviation(out.post_state->matrix(), ghz.matrix()) <= 1e-15);
  }
  SECTION("Hadamard-like outcome on Z leaves XY in a Bell state") {
    const SingleQubitBasis basis(std::numbers::pi / 4);
    const auto out = project(ghz, embed_operator(basis.projectors()[0], {2}, 3));
    CHECK(out.probability == Approx(0.5).margin(1e-12));
    const DensityMatrix xy = partial_trace(*out.post_state, {0, 1});
    const double r = 1.0 / std::sqrt(2.0);
    const std::array<Complex, 4> bell{r, 0, 0, r};
    CHECK(max_abs_deviation(xy.matrix(), ComplexMatrix::projector(bell)) <= 1e-12);
  }
  SECTION("unreachable branch has no post state") {
    const auto out = project(ghz, embed_operator(ket_bra(4, 1, 1), {0, 1}, 3));
    CHECK(out.probability == Approx(0.0).margin(1e-15));
    CHECK_FALSE(out.post_state);
  }
  SECTION("complete family sums to one") {
    std::mt19937_64 rng(2);
    const DensityMatrix rho = random_mixed_state(3, rng);
    const TwoQubitBasis basis(0.37);
    double total = 0;
    ComplexMatrix dephased(8);
    for (const auto& p : basis.projectors()) {
      const ComplexMatrix full = embed_operator(p, {1, 2}, 3);
      total += project(rho, full).probability;
      dephased += full * rho.matrix() * full;
    }
    CHECK(total == Approx(1.0).margin(1e-9));
    CHECK(std::abs(trace(dephased) - 1.0) <= 1e-9);
  }
  SECTION("rejects non-projectors") {
    CHECK_THROWS_AS(project(ghz, ComplexMatrix::identity(8) * 2.0), NotProjector);
    CHECK_THROWS_AS(project(ghz, embed_operator(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, {0}, 3)), NotProjector);
    CHECK_THROWS_AS(project(ghz, ComplexMatrix::identity(4)), NotProjector);
  }
}

TEST_CASE("embed_operator", "[states]") {
  CHECK(embed_operator(pauli::z(), {1}, 3) == ComplexMatrix::diagonal({1, 1, -1, -1, 1, 1, -1, -1}));
  for (Qubit q : {0, 1, 2}) CHECK(embed_operator(ComplexMatrix::identity(2), {q}, 3) == ComplexMatrix::identity(8));
  CHECK(embed_operator(ComplexMatrix::diagonal({1, 0}), {0}, 3) == ComplexMatrix::diagonal({1, 1, 1, 1, 0, 0, 0, 0}));
  // Ordered targets: acting as X (x) Z on (2, 0) equals Z (x) I (x) X.
  CHECK(embed_operator(kron(pauli::x(), pauli::z()), {2, 0}, 3) ==
        kron(pauli::z(), kron(ComplexMatrix::identity(2), pauli::x())));
  CHECK_THROWS_AS(embed_operator(pauli::z(), {1, 2}, 3), BadSubset);
  CHECK_THROWS_AS(embed_operator(pauli::z(), {4}, 3), BadSubset);
  CHECK_THROWS_AS(embed_operator(ComplexMatrix::identity(4), {1, 1}, 3), BadSubset);
}
