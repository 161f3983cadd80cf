#ifndef TAVIS_CLOSED_FORM_HPP
#define TAVIS_CLOSED_FORM_HPP

#include <array>
#include <stdexcept>

#include "tavis/fock.hpp"
#include "tavis/tc_model.hpp"

namespace tavis {

/// Scalars shared by every entry of exp(-itg B2), evaluated at photon
/// argument m:
///   d = 4m^2 + 4m + 9,  lambda_pm = 10m + 5 pm 3 sqrt(d),
///   u_pm = (-3 pm sqrt(d)) / 2,
///   v_pm = sqrt(3/2) (2m - 1 pm sqrt(d)),  w_pm = sqrt(3/2) (2m + 3 pm sqrt(d)).
struct CoefficientSet {
  int m;
  double d;
  double sqrt_d;
  double lambda_plus;
  double lambda_minus;
  double u_plus;
  double u_minus;
  double v_plus;
  double v_minus;
  double w_plus;
  double w_minus;
};

CoefficientSet coefficients(int m);

/// The fourteen coefficient functions of exp(-itg B2). Lower case names sit on
/// the cos-grid, capitalized ones on the sin-grid; `m` suffix means minus.
enum class Coefficient { f2, f1, f0, fm1, fm2, h1, h0, hm1, k0, F1, Fm1, H1, H0, Hm1 };
inline constexpr int kCoefficientCount = 14;

const char* coefficient_name(Coefficient c);

/// Selects between the corrected coefficient formulas (default) and the
/// formulas exactly as printed. Two printed formulas disagree with exact
/// exponentiation:
///  - F_{-1}: printed as {(u+/sqrt l+) sin(tg sqrt l-) - (u-/sqrt l-) sin(tg sqrt l+)}/sqrt d.
///    The corrected form pairs each sine with its own root:
///    {u+ sin(tg sqrt l-)/sqrt l- - u- sin(tg sqrt l+)/sqrt l+}/sqrt d.
///  - f_0: printed with prefactor 2 on the braces; the exact prefactor is 1.
struct Transcription {
  bool printed_fm1_sin = false;
  bool printed_f0 = false;

  static Transcription corrected() { return {}; }
  static Transcription verbatim() { return {true, true}; }
};

struct ScalarFamily {
  std::array<Complex, kCoefficientCount> values{};

  Complex operator[](Coefficient c) const { return values[static_cast<std::size_t>(c)]; }
};

/// Every coefficient function at argument m for time t and coupling g.
/// Negative lambda is handled by the entire continuations of cos and sinc, so
/// corrected values are real. The printed F_{-1} uses complex square roots.
ScalarFamily scalar_family(double t, double g, int m,
                           Transcription form = Transcription::corrected());

/// One entry of the printed 5x5 operator-valued matrix: prefactor * c(N + shift)
/// times a ladder power.
struct B2Entry {
  bool present = false;
  Coefficient coeff = Coefficient::f2;
  Complex prefactor{1.0, 0.0};
  int shift = 0;
  int ladder_power = 0;
  LadderSide side = LadderSide::diagonal;
};

using B2Grid = std::array<std::array<B2Entry, 5>, 5>;

/// The cosine grid (f, h, k entries).
const B2Grid& b2_cos_grid();
/// The sine grid (-2i F, -2i H0, -(i/2) H entries).
const B2Grid& b2_sin_grid();

/// exp(-itg B2) on the 5 x cutoff space, assembled from the two grids.
CompositeOperator exp_b2(double t, double g, const FockSpace& space,
                         Transcription form = Transcription::corrected());

/// Only one of the two grids, for checkerboard checks.
CompositeOperator exp_b2_part(double t, double g, const FockSpace& space, const B2Grid& grid,
                              Transcription form = Transcription::corrected());

/// exp(-itg B1) on the 3 x cutoff space, exponentiated analytically sector by
/// sector (each sector has at most three states).
CompositeOperator exp_b1(double t, double g, const FockSpace& space);

/// exp(-itg A4) = (T x 1) [1 + e^{-itgB1} + 1 + e^{-itgB1} + e^{-itgB1} + e^{-itgB2}] (T x 1)^dagger.
CompositeOperator u_interaction_n4(double t, double g, const FockSpace& space,
                                   Transcription form = Transcription::corrected());

class ResonanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// U(t) = (e^{-it omega S3} x e^{-it omega N}) e^{-itg A_n} at resonance.
/// Four atoms use the closed form; fewer atoms route to the sector oracle.
/// Throws ResonanceError when delta != omega.
CompositeOperator u_full(double t, const ModelParams& p,
                         Transcription form = Transcription::corrected());

}  // namespace tavis

#endif  // TAVIS_CLOSED_FORM_HPP
