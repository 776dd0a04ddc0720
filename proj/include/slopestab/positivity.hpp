#pragma once

/**
 * @file positivity.hpp
 * @brief Ampleness verdicts and Seshadri bounds for the parameterized families.
 *
 * On C x C the plane spanned by f and delta' is described exactly:
 *   l_s = s f + delta'   is ample iff s > q,
 *   L_t = t f - delta'   is ample iff t > s_C.
 * On X2 ampleness is only ever certified by a sufficient condition
 * (nef pullback plus a positive multiple of the ample K_X2).
 */

#include <optional>
#include <string>
#include <vector>

#include "slopestab/numerics.hpp"
#include "slopestab/surfaces.hpp"

namespace slopestab {

enum class AmpleStatus { Ample, NotAmple, AmpleCertified, Unknown };

std::string_view to_string(AmpleStatus status);

struct AmpleVerdict {
  AmpleStatus status = AmpleStatus::Unknown;
  std::string certificate;

  bool ample() const { return status == AmpleStatus::Ample || status == AmpleStatus::AmpleCertified; }
};

/// Certified information about sup{c : L - cZ ample}.
struct SeshadriBound {
  Rational lower;
  std::optional<Rational> upper;
  bool exact = false;
  /// False when the inputs fall outside every region where a bound is proven.
  bool certified = true;
  /// Evaluated at a non-ample boundary polarization as a limit.
  bool boundary_limit = false;
  std::string note;

  /// Bound for (mL, Z): every value scales by m.
  SeshadriBound scaled(const Rational& m) const;
};

/// Whether s_C-dependent quantities may be evaluated at the ample-cone boundary s = q.
enum class Evaluation { Strict, BoundaryLimit };

AmpleVerdict ample_ls(long q, const Rational& s);
AmpleVerdict ample_Lt(const ProductSurfaceParams& params, const Rational& t);

/// Ampleness of a f + b delta' on C x C, normalized into the l_s or L_t family by the sign of b.
AmpleVerdict ample_product_class(const ProductSurfaceParams& params, const Rational& f_coeff,
                                 const Rational& delta_coeff);
AmpleVerdict ample_product_class(const ProductSurfaceParams& params, const SurfaceModel& product,
                                 const DivisorClass& cls);

/// epsilon(D, l_s) = (s + s_C)/(1 + s_C), or certified bounds on it.
SeshadriBound seshadri_diagonal(const ProductSurfaceParams& params, const Rational& s,
                                Evaluation mode = Evaluation::Strict);

/// epsilon(Z2, t f2 - delta2' + eps K) >= 1 on the certified region t >= q/(k-1), eps > 0.
SeshadriBound seshadri_lower_bound_Z2(const KodairaParams& params, const Rational& t, const Rational& eps);
/// epsilon(D2, s f2 + delta2' + eps K) >= 1 on the certified region s >= q, eps > 0.
SeshadriBound seshadri_lower_bound_D2(const KodairaParams& params, const Rational& s, const Rational& eps,
                                      Evaluation mode = Evaluation::Strict);

/// t f2 - delta2' + eps K_X2.
AmpleVerdict ample_L2(const KodairaParams& params, const Rational& t, const Rational& eps);
/// s f2 + delta2' + eps K_X2.
AmpleVerdict ample_l2(const KodairaParams& params, const Rational& s, const Rational& eps);

struct ConeRay {
  std::string family;  // "l_s" or "L_t"
  Rational threshold_lo;
  Rational threshold_hi;
  bool exact;
};

struct ConeCell {
  Rational s_coeff;
  Rational delta_coeff;
  AmpleStatus status;
};

struct ConeSection {
  std::vector<ConeRay> rays;
  /// Row-major: s_coeff ascending, then delta_coeff ascending.
  std::vector<ConeCell> grid;
};

/// Boundary rays and a samples x samples membership grid over s_coeff in [0, extent], delta_coeff in [-1, 1].
ConeSection cone_section(const ProductSurfaceParams& params, const Rational& extent, int samples);

}  // namespace slopestab
