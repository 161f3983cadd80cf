#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tavis/closed_form.hpp"
#include "tavis/oracle.hpp"
#include "tavis/verify.hpp"

using namespace tavis;

namespace {

// exp(-i s [[0, c], [c, 0]]) computed by the Taylor oracle.
ComplexMatrix two_level(double coupling, double s) {
  ComplexMatrix k(2, 2);
  k << 0.0, coupling, coupling, 0.0;
  return oracle::expm_taylor(Complex(0.0, -s) * k);
}

CompositeOperator b2_sector_oracle(double t, double g, const FockSpace& space) {
  return exp_sector(b2_generator(space), sectors_from_weights(spin_two_weights(), space.cutoff()),
                    Complex(0.0, -t * g));
}

}  // namespace

TEST_CASE("coefficients at m = 0") {
  const CoefficientSet c = coefficients(0);
  const double r6 = std::sqrt(6.0);
  CHECK(c.d == 9.0);
  CHECK(c.lambda_plus == doctest::Approx(14.0).epsilon(1e-15));
  CHECK(c.lambda_minus == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(c.u_plus == 0.0);
  CHECK(c.u_minus == -3.0);
  CHECK(std::abs(c.v_plus - r6) < 1e-14);
  CHECK(std::abs(c.v_minus + 2.0 * r6) < 1e-14);
  CHECK(std::abs(c.w_plus - 3.0 * r6) < 1e-14);
  CHECK(std::abs(c.w_minus) < 1e-14);
}

TEST_CASE("coefficients at m = 1 and m = -1") {
  CHECK(coefficients(1).d == 17.0);
  const CoefficientSet c = coefficients(-1);
  CHECK(c.d == 9.0);
  CHECK(c.lambda_plus == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(c.lambda_minus == doctest::Approx(-14.0).epsilon(1e-15));
  CHECK(c.u_plus == 0.0);
  CHECK(c.u_minus == -3.0);
}

TEST_CASE("coefficient set invariants over a range of integers") {
  for (int m = -30; m <= 30; ++m) {
    const CoefficientSet c = coefficients(m);
    CHECK(c.d >= 8.0);
    CHECK(c.sqrt_d > 0.0);
    CHECK(c.lambda_plus > c.lambda_minus);
    CHECK(std::abs(c.lambda_plus - c.lambda_minus - 6.0 * c.sqrt_d) < 1e-12);
    CHECK(std::abs(c.u_plus * c.u_minus + double(m) * m + m) < 1e-9);
    CHECK(c.lambda_plus != 0.0);
    CHECK(c.lambda_minus != 0.0);
  }
}

TEST_CASE("analytically forced scalar values") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  std::uniform_real_distribution<double> coupling(0.0, 2.0);
  for (int k = 0; k < 10; ++k) {
    const double t = time(rng);
    const double g = coupling(rng);
    CHECK(std::abs(scalar_family(t, g, -2)[Coefficient::fm2] - 1.0) < 1e-14);
    CHECK(std::abs(scalar_family(t, g, 1)[Coefficient::f2] - 1.0) < 1e-14);
    CHECK(std::abs(scalar_family(0.0, g, k - 3)[Coefficient::h0]) == 0.0);

    // 2x2 sector {(S3=-1, 0 photons), (S3=-2, 1 photon)} = [[0, 2], [2, 0]].
    const ComplexMatrix exact = two_level(2.0, t * g);
    CHECK(std::abs(scalar_family(t, g, -1)[Coefficient::fm1] - exact(0, 0)) < 1e-12);
    CHECK(std::abs(scalar_family(t, g, -1)[Coefficient::fm1] - std::cos(2.0 * t * g)) < 1e-12);
    CHECK(std::abs(scalar_family(t, g, -1)[Coefficient::Fm1] - exact(0, 1) / Complex(0.0, -2.0)) <
          1e-12);
    CHECK(std::abs(scalar_family(t, g, -1)[Coefficient::Fm1] - std::sin(2.0 * t * g) / 2.0) < 1e-12);
  }
}

TEST_CASE("corrected scalars are real") {
  for (int m = -4; m <= 20; ++m) {
    const ScalarFamily s = scalar_family(1.3, 0.9, m);
    for (const Complex& v : s.values) CHECK(v.imag() == 0.0);
  }
}

TEST_CASE("printed F_{-1} is complex at m = -1 and fails the sector check") {
  const Complex printed = scalar_family(1.0, 1.0, -1, Transcription::verbatim())[Coefficient::Fm1];
  CHECK(std::abs(printed.imag()) > 0.1);
  CHECK(fm1_sector_residual(1.0, 1.0, true) >= 0.1);
  CHECK(fm1_sector_residual(1.0, 1.0, false) < 1e-9);
}

TEST_CASE("printed f0 prefactor fails against the exact sector") {
  CHECK(f0_sector_residual(1.0, 1.0, true) >= 0.1);
  CHECK(f0_sector_residual(1.0, 1.0, false) < 1e-9);
  // Exactly half the printed deviation from 1.
  for (int m = 0; m < 6; ++m) {
    const double printed = scalar_family(0.7, 1.0, m, Transcription::verbatim())[Coefficient::f0].real();
    const double fixed = scalar_family(0.7, 1.0, m)[Coefficient::f0].real();
    CHECK(std::abs((fixed - 1.0) - 0.5 * (printed - 1.0)) < 1e-12);
  }
}

TEST_CASE("grids follow the printed checkerboard") {
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      const bool even = (r + c) % 2 == 0;
      CHECK(b2_cos_grid()[r][c].present == even);
      CHECK(b2_sin_grid()[r][c].present == !even);
    }
  }
  // Prefactors: -2i on the outer sin entries, -i/2 on the inner ones.
  CHECK(b2_sin_grid()[0][1].prefactor == Complex(0.0, -2.0));
  CHECK(b2_sin_grid()[1][2].prefactor == Complex(0.0, -0.5));
  CHECK(b2_cos_grid()[4][0].ladder_power == 4);
  CHECK(b2_cos_grid()[4][0].side == LadderSide::raise);
  CHECK(checkerboard_violation(1.7, 0.6, FockSpace(12)) == 0.0);
}

TEST_CASE("exp_b2 special cases") {
  const FockSpace space(14);
  CHECK(max_abs_diff(exp_b2(0.0, 1.3, space), ComplexMatrix::Identity(70, 70)) < 1e-14);

  // (S3 = -2, 0 photons) is annihilated by B2.
  const ComplexMatrix u = exp_b2(2.3, 0.8, space);
  const Index bottom = 4 * 14;
  ComplexVector e = ComplexVector::Zero(70);
  e(bottom) = 1.0;
  CHECK((u * e - e).norm() < 1e-14);
}

TEST_CASE("exp_b2 matches the sector oracle") {
  const FockSpace space(40);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  std::uniform_real_distribution<double> coupling(0.0, 2.0);
  for (int k = 0; k < 6; ++k) {
    const double t = time(rng);
    const double g = coupling(rng);
    CHECK(exp_b2_oracle_residual(t, g, space) < 1e-9);
  }
}

TEST_CASE("exp_b2 is unitary on every guard-band sector") {
  const FockSpace space(24);
  const ComplexMatrix u = exp_b2(3.1, 1.4, space);
  for (const SectorBasis& s : sectors_from_weights(spin_two_weights(), 24)) {
    // Sector fully below the guard band: largest photon count is key/2.
    if (s.key / 2 >= space.safe_levels()) continue;
    const ComplexMatrix local = restrict_to(u, s.indices);
    CHECK(max_abs_diff(local.adjoint() * local, ComplexMatrix::Identity(s.dim(), s.dim())) < 1e-10);
  }
}

TEST_CASE("exp_b1") {
  const FockSpace space(16);
  CHECK(max_abs_diff(exp_b1(0.0, 1.0, space), ComplexMatrix::Identity(48, 48)) == 0.0);

  const ComplexMatrix u = exp_b1(1.9, 0.7, space);
  // Bottom row with 0 photons is annihilated by B1.
  CHECK(std::abs(u(2 * 16, 2 * 16) - 1.0) < 1e-15);

  // {(middle, 0), (bottom, 1)} rotates with angle sqrt(2) t g.
  const ComplexMatrix exact = two_level(std::sqrt(2.0), 1.9 * 0.7);
  CHECK(std::abs(u(16, 16) - exact(0, 0)) < 1e-14);
  CHECK(std::abs(u(16, 2 * 16 + 1) - exact(0, 1)) < 1e-14);

  // Whole operator against the sector oracle, including the truncated top.
  const ComplexMatrix ref = exp_sector(b1_generator(space),
                                       sectors_from_weights(spin_one_weights(), 16),
                                       Complex(0.0, -1.9 * 0.7));
  CHECK(max_abs_diff(u, ref) < 1e-12);
}

TEST_CASE("u_interaction_n4") {
  const FockSpace space(20);
  CHECK(max_abs_diff(u_interaction_n4(0.0, 1.0, space), ComplexMatrix::Identity(320, 320)) < 1e-14);
  CHECK(max_abs_diff(u_interaction_n4(2.0, 0.0, space), ComplexMatrix::Identity(320, 320)) < 1e-14);
  CHECK(u_interaction_oracle_residual(1.7, 0.9, space) < 1e-9);
}

TEST_CASE("u_interaction_n4 invariants") {
  const FockSpace space(20);
  const std::vector<Index> mask = guard_band_mask(16, space);
  const ComplexMatrix e = excitation_operator(AtomRegister(4), space);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  std::uniform_real_distribution<double> coupling(0.0, 2.0);
  for (int k = 0; k < 5; ++k) {
    const double t1 = time(rng);
    const double t2 = time(rng);
    const double g = coupling(rng);
    const ComplexMatrix u1 = u_interaction_n4(t1, g, space);
    const ComplexMatrix u2 = u_interaction_n4(t2, g, space);
    CHECK(op_norm_diff(u1.adjoint() * u1, ComplexMatrix::Identity(320, 320), mask) < 1e-10);
    CHECK(op_norm_diff(u1 * u2, u_interaction_n4(t1 + t2, g, space), mask) < 1e-9);
    CHECK(op_norm_diff(u1 * e, e * u1, mask) < 1e-10);
  }
}

TEST_CASE("generator recovery converges at first order") {
  const FockSpace space(12);
  const double g = 0.8;
  const std::vector<Index> mask = guard_band_mask(16, space);
  const ComplexMatrix a4 = interaction(AtomRegister(4), space);
  auto error = [&](double h) {
    const ComplexMatrix approx =
        (u_interaction_n4(h, g, space) - ComplexMatrix::Identity(192, 192)) / Complex(0.0, -h * g);
    return op_norm_diff(approx, a4, mask);
  };
  const double e1 = error(1e-3);
  const double e2 = error(5e-4);
  CHECK(e1 < 1e-2);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("u_full") {
  ModelParams p;
  p.omega = p.delta = 1.2;
  p.g = 0.0;
  p.space = FockSpace(12);
  const AtomRegister reg(4);

  const ComplexMatrix free = u_full(0.9, p);
  for (int b = 0; b < 16; ++b)
    for (int n = 0; n < 12; ++n) {
      const Index i = b * 12 + n;
      CHECK(std::abs(free(i, i) - std::exp(Complex(0.0, -0.9 * 1.2 * (0.5 * reg.twice_s3(b) + n)))) <
            1e-13);
    }
  CHECK((free - free.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-14);

  p.g = 0.7;
  CHECK(max_abs_diff(u_full(0.0, p), ComplexMatrix::Identity(192, 192)) < 1e-14);

  p.delta = 1.0;
  CHECK_THROWS_AS(u_full(1.0, p), ResonanceError);
}

TEST_CASE("u_full routes fewer atoms to the oracle") {
  ModelParams p;
  p.atoms = 2;
  p.omega = p.delta = 0.9;
  p.g = 1.1;
  p.space = FockSpace(10);
  CHECK(max_abs_diff(u_full(1.3, p), u_oracle(1.3, p)) == 0.0);
}

TEST_CASE("Schroedinger residual of the closed form") {
  ModelParams p;
  p.omega = p.delta = p.g = 1.0;
  p.space = FockSpace(12);
  CHECK(schrodinger_residual(p, 0.7, 1e-4) < 1e-6);
  // Pure finite-difference error: shrinking h tenfold divides it by 100.
  p.space = FockSpace(32);
  const double ratio = schrodinger_residual(p, 0.7, 1e-4) / schrodinger_residual(p, 0.7, 1e-5);
  CHECK(ratio == doctest::Approx(100.0).epsilon(0.05));
}
