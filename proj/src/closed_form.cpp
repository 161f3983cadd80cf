#include "tavis/closed_form.hpp"

#include <cmath>

#include "tavis/oracle.hpp"

namespace tavis {

CoefficientSet coefficients(int m) {
  const double md = m;
  const double d = 4.0 * md * md + 4.0 * md + 9.0;
  const double root = std::sqrt(d);
  const double k = std::sqrt(1.5);
  return {m,
          d,
          root,
          10.0 * md + 5.0 + 3.0 * root,
          10.0 * md + 5.0 - 3.0 * root,
          0.5 * (-3.0 + root),
          0.5 * (-3.0 - root),
          k * (2.0 * md - 1.0 + root),
          k * (2.0 * md - 1.0 - root),
          k * (2.0 * md + 3.0 + root),
          k * (2.0 * md + 3.0 - root)};
}

const char* coefficient_name(Coefficient c) {
  static constexpr const char* kNames[kCoefficientCount] = {
      "f2", "f1", "f0", "f-1", "f-2", "h1", "h0", "h-1", "k0", "F1", "F-1", "H1", "H0", "H-1"};
  return kNames[static_cast<int>(c)];
}

namespace {

// (cos(x sqrt(lambda)) - 1) / lambda. lambda_pm(m) never vanishes for integer m.
double cos_minus_one_over(double lambda, double x) {
  return (entire_cos(lambda, x) - 1.0) / lambda;
}

}  // namespace

ScalarFamily scalar_family(double t, double g, int m, Transcription form) {
  const CoefficientSet c = coefficients(m);
  const double x = t * g;
  const double lp = c.lambda_plus;
  const double lm = c.lambda_minus;

  const double cos_p = entire_cos(lp, x);
  const double cos_m = entire_cos(lm, x);
  const double qp = cos_minus_one_over(lp, x);
  const double qm = cos_minus_one_over(lm, x);
  const double sp = entire_sinc(lp, x);
  const double sm = entire_sinc(lm, x);
  const double inv = 1.0 / c.sqrt_d;
  const double md = m;

  ScalarFamily out;
  auto set = [&out](Coefficient k, Complex v) { out.values[static_cast<std::size_t>(k)] = v; };

  set(Coefficient::f2, 1.0 + 4.0 * (md - 1.0) * (c.u_plus * qp - c.u_minus * qm) * inv);
  set(Coefficient::f1, (c.u_plus * cos_p - c.u_minus * cos_m) * inv);
  const double f0_prefactor = form.printed_f0 ? 2.0 : 1.0;
  set(Coefficient::f0,
      1.0 + f0_prefactor * (c.v_plus * c.w_plus * qp - c.v_minus * c.w_minus * qm) * inv);
  // f_{-1} and f_{-2} pair u+ with the lambda_- cosine on purpose.
  set(Coefficient::fm1, (c.u_plus * cos_m - c.u_minus * cos_p) * inv);
  set(Coefficient::fm2, 1.0 + 4.0 * (md + 2.0) * (c.u_plus * qm - c.u_minus * qp) * inv);
  set(Coefficient::h1, 2.0 * (c.v_plus * qp - c.v_minus * qm) * inv);
  set(Coefficient::h0, (cos_p - cos_m) * inv);
  set(Coefficient::hm1, 2.0 * (c.w_plus * qp - c.w_minus * qm) * inv);
  set(Coefficient::k0, 4.0 * (qp - qm) * inv);

  set(Coefficient::F1, (c.u_plus * sp - c.u_minus * sm) * inv);
  if (form.printed_fm1_sin) {
    const Complex root_p = std::sqrt(Complex(lp, 0.0));
    const Complex root_m = std::sqrt(Complex(lm, 0.0));
    set(Coefficient::Fm1, (c.u_plus / root_p * std::sin(x * root_m) -
                           c.u_minus / root_m * std::sin(x * root_p)) *
                              inv);
  } else {
    set(Coefficient::Fm1, (c.u_plus * sm - c.u_minus * sp) * inv);
  }
  set(Coefficient::H1, 2.0 * (c.v_plus * sp - c.v_minus * sm) * inv);
  set(Coefficient::H0, (sp - sm) * inv);
  set(Coefficient::Hm1, 2.0 * (c.w_plus * sp - c.w_minus * sm) * inv);
  return out;
}

namespace {

using C = Coefficient;
using S = LadderSide;

constexpr B2Entry kNone{};

constexpr B2Entry cos_entry(C c, int shift, int power, S side) {
  return {true, c, Complex(1.0, 0.0), shift, power, side};
}

constexpr B2Entry sin_entry(C c, double scale, int shift, int power, S side) {
  return {true, c, Complex(0.0, -scale), shift, power, side};
}

}  // namespace

const B2Grid& b2_cos_grid() {
  static const B2Grid grid = {{
      {cos_entry(C::f2, 2, 0, S::diagonal), kNone, cos_entry(C::h1, 2, 2, S::lower), kNone,
       cos_entry(C::k0, 2, 4, S::lower)},
      {kNone, cos_entry(C::f1, 1, 0, S::diagonal), kNone, cos_entry(C::h0, 1, 2, S::lower),
       kNone},
      {cos_entry(C::h1, 0, 2, S::raise), kNone, cos_entry(C::f0, 0, 0, S::diagonal), kNone,
       cos_entry(C::hm1, 0, 2, S::lower)},
      {kNone, cos_entry(C::h0, -1, 2, S::raise), kNone, cos_entry(C::fm1, -1, 0, S::diagonal),
       kNone},
      {cos_entry(C::k0, -2, 4, S::raise), kNone, cos_entry(C::hm1, -2, 2, S::raise), kNone,
       cos_entry(C::fm2, -2, 0, S::diagonal)},
  }};
  return grid;
}

const B2Grid& b2_sin_grid() {
  static const B2Grid grid = {{
      {kNone, sin_entry(C::F1, 2.0, 2, 1, S::lower), kNone, sin_entry(C::H0, 2.0, 2, 3, S::lower),
       kNone},
      {sin_entry(C::F1, 2.0, 1, 1, S::raise), kNone, sin_entry(C::H1, 0.5, 1, 1, S::lower), kNone,
       sin_entry(C::H0, 2.0, 1, 3, S::lower)},
      {kNone, sin_entry(C::H1, 0.5, 0, 1, S::raise), kNone, sin_entry(C::Hm1, 0.5, 0, 1, S::lower),
       kNone},
      {sin_entry(C::H0, 2.0, -1, 3, S::raise), kNone, sin_entry(C::Hm1, 0.5, -1, 1, S::raise),
       kNone, sin_entry(C::Fm1, 2.0, -1, 1, S::lower)},
      {kNone, sin_entry(C::H0, 2.0, -2, 3, S::raise), kNone, sin_entry(C::Fm1, 2.0, -2, 1, S::raise),
       kNone},
  }};
  return grid;
}

CompositeOperator exp_b2_part(double t, double g, const FockSpace& space, const B2Grid& grid,
                              Transcription form) {
  const Index m = space.cutoff();
  CompositeOperator out = CompositeOperator::Zero(5 * m, 5 * m);
  for (Index r = 0; r < 5; ++r) {
    for (Index c = 0; c < 5; ++c) {
      const B2Entry& e = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!e.present) continue;
      const NumberFunction fn{
          [=](int arg) { return scalar_family(t, g, arg, form)[e.coeff]; },
          coefficient_name(e.coeff)};
      out.block(r * m, c * m, m, m) =
          e.prefactor * number_fn_term(space, fn, e.shift, e.ladder_power, e.side);
    }
  }
  return out;
}

CompositeOperator exp_b2(double t, double g, const FockSpace& space, Transcription form) {
  return exp_b2_part(t, g, space, b2_cos_grid(), form) +
         exp_b2_part(t, g, space, b2_sin_grid(), form);
}

CompositeOperator exp_b1(double t, double g, const FockSpace& space) {
  const int m = space.cutoff();
  const double s = t * g;
  CompositeOperator out = CompositeOperator::Zero(3 * m, 3 * m);

  // Row k carries S3 = 1 - k; sector e holds (k, p = e - 1 + k).
  for (int e = -1; e <= m; ++e) {
    std::vector<Index> members;
    std::vector<int> photons;
    for (int k = 0; k < 3; ++k) {
      const int p = e - 1 + k;
      if (p < 0 || p >= m) continue;
      members.push_back(static_cast<Index>(k) * m + p);
      photons.push_back(p);
    }
    const Index dim = static_cast<Index>(members.size());
    if (dim == 0) continue;

    // Couplings sqrt(2) a between neighbouring rows: <k,p| sqrt2 a |k+1,p+1>.
    ComplexMatrix gen = ComplexMatrix::Zero(dim, dim);
    double nu2 = 0.0;
    for (Index i = 0; i + 1 < dim; ++i) {
      if (members[static_cast<std::size_t>(i + 1)] / m != members[static_cast<std::size_t>(i)] / m + 1) {
        continue;
      }
      const double w = std::sqrt(2.0 * (photons[static_cast<std::size_t>(i)] + 1));
      gen(i, i + 1) = w;
      gen(i + 1, i) = w;
      nu2 += w * w;
    }
    ComplexMatrix local = ComplexMatrix::Identity(dim, dim);
    if (nu2 > 0.0) {
      // Path generators with zero diagonal satisfy K^3 = nu^2 K.
      local += Complex(0.0, -entire_sinc(nu2, s)) * gen +
               ((entire_cos(nu2, s) - 1.0) / nu2) * (gen * gen);
    }
    for (Index i = 0; i < dim; ++i) {
      for (Index j = 0; j < dim; ++j) {
        out(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]) = local(i, j);
      }
    }
  }
  return out;
}

CompositeOperator u_interaction_n4(double t, double g, const FockSpace& space,
                                   Transcription form) {
  const Index m = space.cutoff();
  const CompositeOperator b1 = exp_b1(t, g, space);
  const CompositeOperator b2 = exp_b2(t, g, space, form);

  CompositeOperator blocks = CompositeOperator::Zero(16 * m, 16 * m);
  for (const BlockDescriptor& desc : four_atom_layout()) {
    const Index off = desc.offset * m;
    const Index len = desc.size * m;
    switch (desc.kind) {
      case BlockKind::zero:
        blocks.block(off, off, len, len).setIdentity();
        break;
      case BlockKind::spin_one:
        blocks.block(off, off, len, len) = b1;
        break;
      case BlockKind::spin_two:
        blocks.block(off, off, len, len) = b2;
        break;
    }
  }
  const ComplexMatrix t_mat = transform_t();
  return atomic_sandwich(t_mat, blocks, t_mat.adjoint(), space.cutoff());
}

CompositeOperator u_full(double t, const ModelParams& p, Transcription form) {
  if (!p.resonant()) {
    throw ResonanceError(
        "closed-form evolution requires resonance (delta == omega); use the oracle "
        "method for detuned parameters");
  }
  if (p.atoms != 4) return u_oracle(t, p);

  const AtomRegister reg = p.reg();
  const int m = p.space.cutoff();
  CompositeOperator u = u_interaction_n4(t, p.g, p.space, form);
  for (int b = 0; b < reg.levels(); ++b) {
    for (int n = 0; n < m; ++n) {
      const double energy = p.omega * (0.5 * reg.twice_s3(b) + n);
      u.row(static_cast<Index>(b) * m + n) *= std::exp(Complex(0.0, -t * energy));
    }
  }
  return u;
}

}  // namespace tavis
