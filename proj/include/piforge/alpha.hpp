#pragma once

#include <string_view>

#include "piforge/big_real.hpp"
#include "piforge/elliptic.hpp"
#include "piforge/rational.hpp"

namespace piforge {

/// How an alpha value was obtained.
enum class AlphaRoute { direct, via4r, via9r, via25r };

std::string_view route_name(AlphaRoute route);
/// Accepts "direct", "4r", "9r", "25r".
AlphaRoute parse_route(std::string_view text);

/// Elliptic alpha function value a(r).
///
/// `residual` is the defining residual the route had to satisfy: zero for
/// direct evaluation, the modulus relation for via4r, the quartic for via9r
/// and the multiplier quintic for via25r.
struct AlphaValue {
  ExactRational r;
  BigReal value;
  AlphaRoute route = AlphaRoute::direct;
  Bits prec = kDefaultPrecision;
  BigReal residual;
};

/// Multiplier m_p = K[r] / K[p^2 r].
struct MultiplierValue {
  long p = 0;
  ExactRational r;
  BigReal m;
};

/// a(r) = pi / (4 K^2) - sqrt(r) (E/K - 1) at the singular modulus k_r.
AlphaValue alpha_direct(const ExactRational& r, Bits prec);

/// a(4r) = (1 + k_4r)^2 a(r) - 2 sqrt(r) k_4r.
AlphaValue alpha_4r(const AlphaValue& a_r, Bits prec);

/// The same step with k_r in place of k_4r. This form is wrong (off by about
/// 0.3 at r = 1); it is kept so tests can show that it fails.
BigReal alpha_4r_with_base_modulus(const AlphaValue& a_r, Bits prec);

/// Root M of 27 M^4 - 18 M^2 - 8 (1 - 2 k_r^2) M - 1 selected for the
/// cubic reduction, together with diagnostics.
struct CubicMultiplier {
  BigReal M;
  BigReal target;        ///< K[9r] / K[r], the value the root must track
  BigReal residual;      ///< |quartic(M)|
  BigReal runner_up_gap; ///< relative distance to the next real root
};

/// Isolates all quartic roots and keeps the real one closest to K[9r]/K[r].
/// Retries at doubled isolation precision when two roots are closer than
/// 2^-16 relative; throws RootSelectionError if that does not help.
CubicMultiplier cubic_multiplier(const ExactRational& r, Bits prec);

/// a(9r) from a(r) through the cubic modular relation.
AlphaValue alpha_9r(const AlphaValue& a_r, Bits prec);

/// P(q) = 1 - 24 sum_{n>=1} n q^n / (1 - q^n), tail below 2^-(prec+8).
BigReal eisenstein_p(const BigReal& q, Bits prec);

/// T_{p,r} = P(q^2) - p P(q^(2p)), q = e^(-pi sqrt(r)).
BigReal t_sum(long p, const ExactRational& r, Bits prec);

/// K[r] / K[p^2 r]. For p = 5 the value is also checked against the
/// algebraic form from k_r, k_25r and against the multiplier quintic;
/// a failed check throws VerificationError.
MultiplierValue multiplier(long p, const ExactRational& r, Bits prec);

/// m5 = w/k + w'/k' - w w'/(k k') with w = sqrt(k_r k_25r), w' = sqrt(k'_r k'_25r).
BigReal quintic_multiplier_algebraic(const ModulusContext& ctx_r, const ModulusContext& ctx_25r);

/// (5u - 1)^5 (1 - u) - 256 k^2 k'^2 u at u = 1/m, i.e. u = K[25r]/K[r].
/// The quintic is satisfied by the reciprocal of the K[r]/K[25r] multiplier;
/// at m itself the residual is about -586 for r = 1.
BigReal quintic_multiplier_residual(const BigReal& m, const ModulusContext& ctx_r);

/// a(25r) from a(r) via the Rogers-Ramanujan bracket R^-5(q^2) + R^5(q^2):
///   3 a(25r)/(m^2 sqrt r) - 3 a(r)/sqrt r
///     = 5 (1 + k_25r^2)/m^2 - (1 + k_r^2) - 2^(2/3) A^(-5/6) (k k')^(2/3) [R^5 + R^-5].
AlphaValue alpha_25r(const AlphaValue& a_r, Bits prec);

/// a(r) by the given route: direct, or by reducing a(r/4), a(r/9), a(r/25).
AlphaValue alpha_by_route(AlphaRoute route, const ExactRational& r, Bits prec);

}  // namespace piforge
