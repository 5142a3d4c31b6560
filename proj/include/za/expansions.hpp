#pragma once

#include <map>
#include <optional>
#include <vector>

#include "za/eval.hpp"
#include "za/jet.hpp"
#include "za/sigma_rational.hpp"

namespace za {

enum class Regime { region1, confluent, small_eta, large_eta_mirror, sqrt_region, sqrt_mirror };

struct ExpansionInput {
    StripPoint s;
    Real eta;
    int N;
    double epsilon_margin;
    Regime regime;
};

// Returns a human-readable description of the violated precondition, or
// nothing when the input satisfies its regime.
std::optional<std::string> validate_regime(const ExpansionInput& in, const Config& cfg);

// c_0..c_K of the sqrt(v)-expansion of (1 - i rho(v))^sigma / rho(v), built by
// ramified series reversion of v = rho - i log(1 - i rho).
std::vector<Complex> ck_coefficients(int K, const Real& sigma);

// a_0..a_{N-1} from the recurrence
// i eta (n+1) a_{n+1} = (sigma - n - 1) a_n - (i t / eta^2) a_{n-2}.
std::vector<Complex> an_coefficients(const StripPoint& s, const Real& eta, int N);

// Lazy table of Li_m(e^{i theta}) for one fixed angle.
class PolylogTable {
  public:
    PolylogTable(Real theta, double delta) : theta_(std::move(theta)), delta_(delta) {}
    const Complex& li(int m);
    const Real& theta() const { return theta_; }

  private:
    Real theta_;
    double delta_;
    std::map<int, Complex> cache_;
};

enum class OpSide { upper, lower };  // evaluation at z = +i eta vs z = -i eta

// The double sum over n >= n_start, j < N of e^{-n z - i t ln z} times the
// j-fold operator term, at z = +-i eta. The n-sums are only conditionally
// convergent and are evaluated through their polylogarithm expansions: a
// geometric x = t/eta expansion when eta > t, exact partial fractions when
// eta == t.
Complex operator_sum(const StripPoint& s, const Real& eta, int N, OpSide side, long n_start,
                     PolylogTable& table, const Config& cfg);

// Taylor coefficients at 0 of the steepest-descent quotients
// phi(z) = e^{(s-1)log(1+z/(i eta)) - i t z^2/(2 eta^2) - [t/eta] z} / (e^z - e^{-i eta})
// psi(z) = e^{-s log(1+ i eta z/(2 pi t)) + i eta^2 z^2/(8 pi^2 t) - [eta/2 pi] z} / (e^z - e^{2 pi i t/eta})
Jet phi_series_coeffs(const StripPoint& s, const Real& eta, int K, const Config& cfg);
Jet psi_series_coeffs(const StripPoint& s, const Real& eta, int K, const Config& cfg);

// ---- the five regime evaluators ------------------------------------------

// (1+eps) t < eta. N == 3 uses the explicit polylog closed form (the one the
// verification tables are built from); other N use the generic expansion.
EvalResult zeta_region1(const StripPoint& s, const Real& eta, int N, const Config& cfg);
// generic path for any N >= 2 (full polylog k-sums)
EvalResult zeta_region1_expansion(const StripPoint& s, const Real& eta, int N, const Config& cfg);

// eta = t
EvalResult zeta_confluent(const StripPoint& s, int N, const Config& cfg);
// explicit N=3 form (equal to the generic path at N=3, two code paths)
EvalResult zeta_confluent_closed3(const StripPoint& s, const Config& cfg);

// 1 < eta < sqrt(t)
EvalResult zeta_small_eta(const StripPoint& s, const Real& eta, int N, const Config& cfg);
// 2 pi sqrt(t) < eta < (2 pi/eps) t
EvalResult zeta_large_eta_mirror(const StripPoint& s, const Real& eta, int N, const Config& cfg);

// eps sqrt(t) < eta < t. tau_rational: force Phi's closed form with
// tau = -p/q; autodetected when absent.
EvalResult zeta_sqrt_region(const StripPoint& s, const Real& eta, int N, const Config& cfg,
                            std::optional<std::pair<long, long>> tau_rational = std::nullopt);
// 2 pi < eta < sqrt(t)/eps
EvalResult zeta_sqrt_mirror(const StripPoint& s, const Real& eta, int N, const Config& cfg);

// S_N(s, eta) together with the full boundary term
// e^{-i pi s} Gamma(1-s) e^{i pi (s-1)/2} eta^{s-1} E(eta) S_N used by both
// the sqrt-region evaluator and the Theorem-5.3-style sums.
Complex sqrt_region_boundary_term(const StripPoint& s, const Real& eta, int N, const Config& cfg,
                                  std::optional<std::pair<long, long>> tau_rational = std::nullopt);

// Everything past the main sum and the power term, per regime; used to
// assemble the partial-sum relations.
Complex region1_rest_expansion(const StripPoint& s, const Real& eta, int N, const Config& cfg);
Complex region1_rest_closed3(const StripPoint& s, const Real& eta, const Config& cfg);
Complex confluent_rest(const StripPoint& s, int N, const Config& cfg);
Complex confluent_rest_closed3(const StripPoint& s, const Config& cfg);

// predicted error magnitudes (constant-1 convention)
Real predicted_error_region1(const StripPoint& s, const Real& eta, int N, bool closed3);
Real predicted_error_confluent(const StripPoint& s, int N, bool closed3);
Real predicted_error_small_eta(const StripPoint& s, const Real& eta, int N, const Config& cfg);
Real predicted_error_large_eta_mirror(const StripPoint& s, const Real& eta, int N, const Config& cfg);
Real predicted_error_sqrt_region(const StripPoint& s, const Real& eta, int N);
Real predicted_error_sqrt_mirror(const StripPoint& s, const Real& eta, int N);

}  // namespace za
