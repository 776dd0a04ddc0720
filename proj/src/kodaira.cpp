#include "slopestab/kodaira.hpp"

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

BigInt exact_integer(const Rational& x, const std::string& what) {
  if (!x.is_integer()) throw Error(ErrorCode::ParamError, what + " is not an integer: " + x.str());
  return x.numerator();
}

}  // namespace

KodairaInvariants invariants(const KodairaParams& params, bool include_branch_terms) {
  params.validate();
  const BigInt q(params.q);
  const BigInt r(params.r);
  const BigInt g = include_branch_terms ? BigInt(params.group_order) : BigInt(0);

  KodairaInvariants out;
  out.d = params.d();
  out.p = params.p();

  // 2g_F - 2 = r(2q - 2) + (r - 1)|G|
  const BigInt branch = (r - 1) * BigInt(params.group_order);
  if (branch % 2 != 0) throw Error(ErrorCode::ParamError, "(r-1)|G| is odd, fiber genus not integral");
  out.fiber_genus = (r * (2 * q - 2) + branch) / 2 + 1;

  const BigInt p1 = out.p - 1;
  out.euler = 4 * r * p1 * (q - 1) + 2 * p1 * (r - 1) * g;
  const Rational k2 = Rational(BigInt(8) * r * p1 * (q - 1) + BigInt(4) * (r - 1) * p1 * g) +
                      Rational(BigInt(2) * (r * r - 1), r) * Rational(BigInt((q - 1) * out.d * g));
  out.K_squared = exact_integer(k2, "K^2");
  out.signature = exact_integer(Rational(out.K_squared - 2 * out.euler, BigInt(3)), "signature");
  if (params.d_override) out.note = "d overridden to " + out.d.get_str() + "; p re-derived from 2p-2 = d(2q-2)";
  return out;
}

BigInt invariants_from_lattice(const KodairaParams& params) {
  const SurfaceModel x2 = kodaira_surface(params);
  return exact_integer(x2.pair(x2.canonical(), x2.canonical()), "K^2 on the lattice");
}

}  // namespace slopestab
