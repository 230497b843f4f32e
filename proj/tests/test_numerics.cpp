#include <algorithm>
#include <complex>
#include <limits>
#include <vector>

#include "doctest.h"
#include "qb3/numerics.hpp"
#include "qb3/sampling.hpp"
#include "support.hpp"

using namespace qb3;
using test::det_cofactor;
using test::ginibre;

TEST_SUITE("numerics") {

TEST_CASE("matrix product") {
  RngStream rng(1, test::kStream);

  SUBCASE("identity is neutral") {
    const CMatrix a = ginibre(4, rng);
    CHECK(max_abs_diff(CMatrix::identity(4) * a, a) == 0.0);
    CHECK(max_abs_diff(a * CMatrix::identity(4), a) == 0.0);
  }

  SUBCASE("pauli y squares to the identity") {
    CHECK(max_abs_diff(pauli_y() * pauli_y(), CMatrix::identity(2)) == 0.0);
  }

  SUBCASE("matches the naive triple loop") {
    for (int rep = 0; rep < 20; ++rep) {
      const CMatrix a = ginibre(4, rng);
      const CMatrix b = ginibre(4, rng);
      CMatrix ref(4, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          for (std::size_t k = 0; k < 4; ++k) ref(r, c) += a(r, k) * b(k, c);
      CHECK(max_abs_diff(a * b, ref) <= 1e-14);
    }
  }

  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(CMatrix(2, 3) * CMatrix(2, 3), std::invalid_argument);
  }
}

TEST_CASE("qr decomposition") {
  RngStream rng(1, test::kStream + 1);

  SUBCASE("identity factors trivially") {
    const QrResult qr = qr_decompose(CMatrix::identity(4));
    CHECK(max_abs_diff(qr.q, CMatrix::identity(4)) <= 1e-15);
    CHECK(max_abs_diff(qr.r, CMatrix::identity(4)) <= 1e-15);
  }

  SUBCASE("positive diagonal matrix is its own r") {
    CMatrix d(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = 0.5;
    d(2, 2) = 7.0;
    const QrResult qr = qr_decompose(d);
    CHECK(max_abs_diff(qr.q, CMatrix::identity(3)) <= 1e-15);
    CHECK(max_abs_diff(qr.r, d) <= 1e-15);
  }

  SUBCASE("random input: unitary q, reconstruction, nonnegative real diagonal") {
    for (int rep = 0; rep < 50; ++rep) {
      const CMatrix a = ginibre(4, rng);
      const QrResult qr = qr_decompose(a);
      CHECK(max_abs_diff(qr.q.adjoint() * qr.q, CMatrix::identity(4)) < 1e-12);
      CHECK(max_abs_diff(qr.q * qr.r, a) < 1e-12);
      for (std::size_t i = 0; i < 4; ++i) {
        // The phase fix leaves rounding dust in the imaginary part.
        CHECK(std::abs(qr.r(i, i).imag()) <= 1e-13);
        CHECK(qr.r(i, i).real() >= 0.0);
      }
    }
  }
}

TEST_CASE("eigenvalues") {
  RngStream rng(1, test::kStream + 2);

  SUBCASE("diagonal matrix returns its diagonal") {
    CMatrix d(4, 4);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 4.0;
    d(3, 3) = 1.0;
    std::vector<cplx> ev = eigenvalues(d);
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    const double expected[] = {1.0, 1.0, 3.0, 4.0};
    REQUIRE(ev.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(ev[i].real() - expected[i]) <= 1e-12);
      CHECK(std::abs(ev[i].imag()) <= 1e-12);
    }
  }

  SUBCASE("identity has eigenvalue 1 with multiplicity 4") {
    for (cplx ev : eigenvalues(CMatrix::identity(4))) CHECK(std::abs(ev - 1.0) <= 1e-13);
  }

  SUBCASE("reproduces the characteristic polynomial at probe points") {
    // The spectrum determines p(z) = det(zI - A) = prod (z - lambda_i);
    // evaluating the determinant by cofactor expansion is independent of the
    // QR iteration, so agreement at generic probes validates the solver.
    for (int rep = 0; rep < 10; ++rep) {
      const CMatrix a = ginibre(4, rng);
      const std::vector<cplx> ev = eigenvalues(a);
      for (int p = 0; p < 4; ++p) {
        const cplx z = 3.0 * std::exp(cplx(0.0, 1.7 * p + 0.3));
        CMatrix shifted = cplx(-1.0) * a;
        for (std::size_t i = 0; i < 4; ++i) shifted(i, i) += z;
        cplx prod = 1.0;
        for (cplx l : ev) prod *= z - l;
        const cplx ref = det_cofactor(shifted);
        CHECK(std::abs(prod - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
      }
    }
  }

  SUBCASE("trace and determinant identities across sizes") {
    for (std::size_t n : {2u, 4u, 8u}) {
      for (int rep = 0; rep < 334; ++rep) {
        const CMatrix a = ginibre(n, rng);
        const std::vector<cplx> ev = eigenvalues(a);
        cplx sum = 0.0, prod = 1.0;
        for (cplx l : ev) {
          sum += l;
          prod *= l;
        }
        const cplx tr = a.trace();
        const cplx det = determinant(a);
        CHECK(std::abs(sum - tr) <= 1e-10 * std::max(1.0, std::abs(tr)));
        CHECK(std::abs(prod - det) <= 1e-10 * std::max(1.0, std::abs(det)));
      }
    }
  }

  SUBCASE("hermitian psd input gives a clean real spectrum") {
    for (int rep = 0; rep < 100; ++rep) {
      const CMatrix g = ginibre(4, rng);
      CMatrix rho = g * g.adjoint();
      const cplx tr = rho.trace();
      rho = (1.0 / tr) * rho;
      for (cplx ev : eigenvalues(rho)) {
        CHECK(std::abs(ev.imag()) < 1e-10);
        CHECK(ev.real() > -1e-10);
      }
    }
  }
}

TEST_CASE("determinant") {
  RngStream rng(1, test::kStream + 3);

  SUBCASE("identity") { CHECK(std::abs(determinant(CMatrix::identity(2)) - 1.0) == 0.0); }

  SUBCASE("pauli y") { CHECK(std::abs(determinant(pauli_y()) - cplx(-1.0)) <= 1e-15); }

  SUBCASE("matches cofactor expansion") {
    for (int rep = 0; rep < 50; ++rep) {
      const CMatrix a = ginibre(4, rng);
      const cplx ref = det_cofactor(a);
      CHECK(std::abs(determinant(a) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("finiteness guard") {
  CMatrix a(2, 2);
  a(0, 0) = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(a.require_finite("test"), std::invalid_argument);
}

}  // TEST_SUITE
