#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "qb3/states.hpp"
#include "support.hpp"

using namespace qb3;
using test::max_amp_diff;
using test::random_state;

TEST_SUITE("states") {

TEST_CASE("inner products") {
  SUBCASE("ghz and w have disjoint support") {
    CHECK(std::abs(inner_product(PureState3Q::ghz(), PureState3Q::w())) == 0.0);
  }

  SUBCASE("every state has unit self-overlap") {
    RngStream rng(1, test::kStream + 10);
    for (int rep = 0; rep < 100; ++rep) {
      const PureState3Q s = random_state(rng);
      CHECK(std::abs(inner_product(s, s) - 1.0) <= 1e-12);
    }
  }

  SUBCASE("conjugate-linear in the first argument") {
    const PureState3Q a = PureState3Q::ghz();
    const PureState3Q b = PureState3Q::w_tilde();
    const PureState3Q bp = b.with_global_phase(std::polar(1.0, 0.7));
    CHECK(std::abs(inner_product(bp, a) - std::conj(inner_product(a, bp))) <= 1e-15);
  }

  SUBCASE("symmetric fiducial vectors overlap at cos(theta/2)") {
    for (double half : {0.3, std::numbers::pi / 4, 1.4}) {
      const SymmetricCoeffs e1({cplx(1.0), 0.0, 0.0, 0.0});
      const SymmetricCoeffs tilted({cplx(std::cos(half)), cplx(std::sin(half)), 0.0, 0.0});
      const cplx ov = inner_product(e1, tilted);
      CHECK(std::abs(ov - std::cos(half)) <= 1e-15);
      // The embedding preserves it.
      const cplx ov8 = inner_product(embed_symmetric(e1), embed_symmetric(tilted));
      CHECK(std::abs(ov8 - ov) <= 1e-14);
    }
  }
}

TEST_CASE("normalization") {
  SUBCASE("scalar multiples collapse to the same state") {
    std::array<cplx, 8> twice{};
    twice[0] = 2.0;
    CHECK(max_amp_diff(normalized(twice), PureState3Q::basis(0, 0, 0)) == 0.0);
  }

  SUBCASE("unnormalized ghz input") {
    std::array<cplx, 8> raw{};
    raw[0] = 1.0;
    raw[7] = 1.0;
    CHECK(max_amp_diff(normalized(raw), PureState3Q::ghz()) <= 1e-16);
  }

  SUBCASE("zero vector is rejected") {
    CHECK_THROWS_AS(normalized(std::array<cplx, 8>{}), std::invalid_argument);
  }

  SUBCASE("non-finite amplitude is rejected") {
    std::array<cplx, 8> raw{};
    raw[3] = cplx(0.0, std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(normalized(raw), std::invalid_argument);
  }
}

TEST_CASE("symmetric embedding") {
  SUBCASE("basis cases") {
    CHECK(max_amp_diff(embed_symmetric(SymmetricCoeffs({cplx(1.0), 0.0, 0.0, 0.0})),
                       PureState3Q::basis(0, 0, 0)) == 0.0);
    CHECK(max_amp_diff(embed_symmetric(SymmetricCoeffs({0.0, 0.0, cplx(1.0), 0.0})),
                       PureState3Q::w_tilde()) <= 1e-16);
    CHECK(max_amp_diff(embed_symmetric(SymmetricCoeffs({0.0, cplx(1.0), 0.0, 0.0})),
                       PureState3Q::w()) <= 1e-16);
  }

  SUBCASE("isometry on random coefficient pairs") {
    RngStream rng(1, test::kStream + 11);
    double worst = 0.0;
    for (int rep = 0; rep < 10000; ++rep) {
      std::array<cplx, 4> c1, c2;
      for (auto& v : c1) v = rng.complex_gaussian();
      for (auto& v : c2) v = rng.complex_gaussian();
      const SymmetricCoeffs s1(c1), s2(c2);
      const cplx in4 = inner_product(s1, s2);
      const cplx in8 = inner_product(embed_symmetric(s1), embed_symmetric(s2));
      worst = std::max(worst, std::abs(in4 - in8));
    }
    CHECK(worst <= 1e-14);
  }

  SUBCASE("embedded states are permutation invariant") {
    RngStream rng(1, test::kStream + 12);
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int rep = 0; rep < 50; ++rep) {
      std::array<cplx, 4> c;
      for (auto& v : c) v = rng.complex_gaussian();
      const PureState3Q s = embed_symmetric(SymmetricCoeffs(c));
      for (const auto& p : perms) CHECK(max_amp_diff(s.permuted(p), s) == 0.0);
    }
  }
}

TEST_CASE("qubit relabeling") {
  SUBCASE("moves basis kets as the index map dictates") {
    // perm[new] = old: with perm = {1, 2, 0} the new (i', j', k') reads
    // old (j, k, i), so |011> -> amp(0,1,1) lands at new index (1,1,0).
    const PureState3Q s = PureState3Q::basis(0, 1, 1);
    CHECK(max_amp_diff(s.permuted({1, 2, 0}), PureState3Q::basis(1, 1, 0)) == 0.0);
    CHECK(max_amp_diff(s.permuted({0, 2, 1}), PureState3Q::basis(0, 1, 1)) == 0.0);
    CHECK(max_amp_diff(s.permuted({2, 1, 0}), PureState3Q::basis(1, 1, 0)) == 0.0);
  }

  SUBCASE("identity permutation is a no-op") {
    RngStream rng(1, test::kStream + 13);
    const PureState3Q s = random_state(rng);
    CHECK(max_amp_diff(s.permuted({0, 1, 2}), s) == 0.0);
  }

  SUBCASE("invalid permutations are rejected") {
    CHECK_THROWS_AS(PureState3Q::ghz().permuted({0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PureState3Q::ghz().permuted({0, 1, 3}), std::invalid_argument);
  }
}

TEST_CASE("unitary application") {
  RngStream rng(1, test::kStream + 14);
  CMatrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;

  SUBCASE("bit flip on each qubit") {
    const PureState3Q s = PureState3Q::basis(0, 0, 0);
    CHECK(max_amp_diff(apply_single_qubit(s, Qubit::A, x), PureState3Q::basis(1, 0, 0)) == 0.0);
    CHECK(max_amp_diff(apply_single_qubit(s, Qubit::B, x), PureState3Q::basis(0, 1, 0)) == 0.0);
    CHECK(max_amp_diff(apply_single_qubit(s, Qubit::C, x), PureState3Q::basis(0, 0, 1)) == 0.0);
  }

  SUBCASE("single-qubit action matches the kronecker product") {
    const CMatrix u = test::random_unitary(2, rng);
    const CMatrix i2 = CMatrix::identity(2);
    const PureState3Q s = random_state(rng);
    const std::array<CMatrix, 3> full = {test::kron(test::kron(u, i2), i2),
                                         test::kron(test::kron(i2, u), i2),
                                         test::kron(test::kron(i2, i2), u)};
    for (int q = 0; q < 3; ++q) {
      CHECK(max_amp_diff(apply_single_qubit(s, Qubit(q), u), apply_unitary(s, full[q])) <= 1e-14);
    }
  }

  SUBCASE("norm is preserved") {
    const CMatrix u = test::random_unitary(8, rng);
    const PureState3Q s = apply_unitary(random_state(rng), u);
    CHECK(std::abs(inner_product(s, s) - 1.0) <= 1e-12);
  }

  SUBCASE("non-unitary input is rejected") {
    CMatrix bad = CMatrix::identity(2);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(apply_single_qubit(PureState3Q::ghz(), Qubit::A, bad), std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(PureState3Q::ghz(), 2.0 * CMatrix::identity(8)),
                    std::invalid_argument);
  }
}

TEST_CASE("text round trip") {
  SUBCASE("named states parse") {
    CHECK(max_amp_diff(parse_state_text("ghz"), PureState3Q::ghz()) == 0.0);
    CHECK(max_amp_diff(parse_state_text("w"), PureState3Q::w()) == 0.0);
    CHECK(max_amp_diff(parse_state_text("wtilde"), PureState3Q::w_tilde()) == 0.0);
  }

  SUBCASE("format then parse reproduces the amplitudes") {
    RngStream rng(1, test::kStream + 15);
    for (int rep = 0; rep < 50; ++rep) {
      const PureState3Q s = random_state(rng);
      CHECK(max_amp_diff(parse_state_text(format_state_text(s)), s) <= 1e-15);
    }
  }

  SUBCASE("unnormalized input text is normalized") {
    const PureState3Q s = parse_state_text("1,0 0,0 0,0 0,0 0,0 0,0 0,0 0,-1");
    CHECK(std::abs(s.amp(0, 0, 0) - cplx(std::numbers::sqrt2 / 2)) <= 1e-15);
    CHECK(std::abs(s.amp(1, 1, 1) - cplx(0.0, -std::numbers::sqrt2 / 2)) <= 1e-15);
  }

  SUBCASE("errors identify the offending token") {
    CHECK_THROWS_WITH_AS(parse_state_text("1,0 0,0"), doctest::Contains("expected 8"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_state_text("1,0 0,0 0,0 zap,0 0,0 0,0 0,0 0,0"),
                         doctest::Contains("token 4"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_state_text("1,0 0,0 0,0 0,0 0,0 0,0 0,0 0,1junk"),
                         doctest::Contains("token 8"), std::invalid_argument);
  }
}

}  // TEST_SUITE
