#include "slopestab/positivity.hpp"

#include "slopestab/error.hpp"

namespace slopestab {

std::string_view to_string(AmpleStatus status) {
  switch (status) {
    case AmpleStatus::Ample: return "Ample";
    case AmpleStatus::NotAmple: return "NotAmple";
    case AmpleStatus::AmpleCertified: return "AmpleCertified";
    case AmpleStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

SeshadriBound SeshadriBound::scaled(const Rational& m) const {
  SeshadriBound out = *this;
  out.lower = lower * m;
  if (upper) out.upper = *upper * m;
  return out;
}

AmpleVerdict ample_ls(long q, const Rational& s) {
  if (q < 2) throw Error(ErrorCode::ParamError, "genus q must be at least 2");
  if (s > Rational(q)) return {AmpleStatus::Ample, "Nakai: l_s^2 = 2(s^2-q) > 0 and l_s.D = 2s-2q > 0"};
  return {AmpleStatus::NotAmple, "l_s.D = 2s-2q <= 0 on the diagonal"};
}

AmpleVerdict ample_Lt(const ProductSurfaceParams& params, const Rational& t) {
  const KouvidakisBounds sc = kouvidakis_bounds(params);
  const std::string range = sc.exact() ? "s_C = " + sc.lo.str() : "s_C in [" + sc.lo.str() + ", " + sc.hi.str() + "]";
  if (sc.hi.compare(t) < 0) return {AmpleStatus::Ample, "t > " + range};
  if (sc.lo.compare(t) >= 0) return {AmpleStatus::NotAmple, "t <= " + range};
  return {AmpleStatus::Unknown, "t inside unresolved range " + range};
}

AmpleVerdict ample_product_class(const ProductSurfaceParams& params, const Rational& f_coeff,
                                 const Rational& delta_coeff) {
  const int sign = delta_coeff.sign();
  if (sign > 0) {
    AmpleVerdict v = ample_ls(params.q, f_coeff / delta_coeff);
    v.certificate = "positive multiple of l_s, s = " + (f_coeff / delta_coeff).str() + "; " + v.certificate;
    return v;
  }
  if (sign < 0) {
    AmpleVerdict v = ample_Lt(params, f_coeff / -delta_coeff);
    v.certificate = "positive multiple of L_t, t = " + (f_coeff / -delta_coeff).str() + "; " + v.certificate;
    return v;
  }
  if (f_coeff.sign() > 0) return {AmpleStatus::Ample, "positive multiple of f"};
  return {AmpleStatus::NotAmple, "non-positive multiple of f"};
}

AmpleVerdict ample_product_class(const ProductSurfaceParams& params, const SurfaceModel& product,
                                 const DivisorClass& cls) {
  if (!product.owns(cls)) throw Error(ErrorCode::SurfaceMismatch, "class does not live on " + product.name());
  return ample_product_class(params, cls.coeff("f"), cls.coeff("delta_prime"));
}

SeshadriBound seshadri_diagonal(const ProductSurfaceParams& params, const Rational& s, Evaluation mode) {
  params.validate();
  const Rational q(params.q);
  const bool boundary = (s == q);
  if (s < q || (boundary && mode == Evaluation::Strict)) {
    throw Error(ErrorCode::NotAmplePolarization, "l_s needs s > q, got s = " + s.str());
  }
  const KouvidakisBounds sc = kouvidakis_bounds(params);
  // (s + x)/(1 + x) decreases in x for s > 1, so the upper bound on s_C gives the lower bound.
  const auto value = [&](const Rational& x) { return (s + x) / (Rational(1) + x); };
  SeshadriBound out;
  out.lower = value(sc.hi.upper());
  out.upper = value(sc.lo.lower());
  out.exact = sc.exact();
  out.boundary_limit = boundary;
  out.note = out.exact ? "(s + s_C)/(1 + s_C)" : "bounds from s_C range";
  if (boundary) out.note += ", boundary limit s = q";
  return out;
}

SeshadriBound seshadri_lower_bound_Z2(const KodairaParams& params, const Rational& t, const Rational& eps) {
  params.validate();
  if (eps.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  SeshadriBound out;
  out.lower = Rational(0);
  if (!params.has_valid_k()) {
    out.certified = false;
    out.note = "needs k with 2 <= k-1 and (k-1)^2 < q";
    return out;
  }
  const Rational threshold = Rational(params.q) / Rational(*params.k - 1);
  if (t < threshold) {
    out.certified = false;
    out.note = "t below q/(k-1) = " + threshold.str();
    return out;
  }
  out.lower = Rational(1);
  out.note = "L - Z2 = pullback of (t-k+1)f plus eps K is ample";
  return out;
}

SeshadriBound seshadri_lower_bound_D2(const KodairaParams& params, const Rational& s, const Rational& eps,
                                      Evaluation mode) {
  params.validate();
  if (eps.sign() < 0) throw Error(ErrorCode::InvalidArgument, "eps must be non-negative");
  SeshadriBound out;
  out.lower = Rational(0);
  const Rational q(params.q);
  if (s < q) {
    out.certified = false;
    out.note = "s below q";
    return out;
  }
  if (eps.is_zero()) {
    if (mode == Evaluation::Strict) {
      out.certified = false;
      out.note = "eps = 0 is only admitted as a boundary limit";
      return out;
    }
    out.boundary_limit = true;
  }
  out.lower = Rational(1);
  out.note = "l - D2 = pullback of (s-1)f plus eps K is ample";
  if (out.boundary_limit) out.note += ", boundary limit eps = 0";
  return out;
}

AmpleVerdict ample_L2(const KodairaParams& params, const Rational& t, const Rational& eps) {
  params.validate();
  if (!params.has_valid_k()) return {AmpleStatus::Unknown, "no branched-cover degree k for C"};
  const Rational threshold = Rational(params.q) / Rational(*params.k - 1);
  if (eps.sign() <= 0) return {AmpleStatus::Unknown, "certificate needs eps > 0"};
  if (t < threshold) return {AmpleStatus::Unknown, "t below q/(k-1) = " + threshold.str() + "; s_eps not computed"};
  return {AmpleStatus::AmpleCertified, "nef pullback of L_t (t >= q/(k-1)) plus eps K_X2 with K_X2 ample"};
}

AmpleVerdict ample_l2(const KodairaParams& params, const Rational& s, const Rational& eps) {
  params.validate();
  if (eps.sign() <= 0) return {AmpleStatus::Unknown, "certificate needs eps > 0"};
  if (s < Rational(params.q)) return {AmpleStatus::Unknown, "s below q"};
  return {AmpleStatus::AmpleCertified, "nef pullback of l_s (s >= q) plus eps K_X2 with K_X2 ample"};
}

ConeSection cone_section(const ProductSurfaceParams& params, const Rational& extent, int samples) {
  if (extent.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "extent must be positive");
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
  const KouvidakisBounds sc = kouvidakis_bounds(params);
  ConeSection out;
  out.rays.push_back({"l_s", Rational(params.q), Rational(params.q), true});
  out.rays.push_back({"L_t", sc.lo.lower(), sc.hi.upper(), sc.exact()});
  const Rational steps(samples - 1);
  for (int i = 0; i < samples; ++i) {
    const Rational s = extent * Rational(i) / steps;
    for (int j = 0; j < samples; ++j) {
      const Rational delta = Rational(-1) + Rational(2 * j) / steps;
      out.grid.push_back({s, delta, ample_product_class(params, s, delta).status});
    }
  }
  return out;
}

}  // namespace slopestab
