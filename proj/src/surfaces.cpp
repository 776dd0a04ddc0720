#include "slopestab/surfaces.hpp"

#include <memory>

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool valid_branched_degree(long q, long k) { return k - 1 >= 2 && (k - 1) * (k - 1) < q; }

std::string kodaira_name(const KodairaParams& p, const std::string& prefix) {
  return prefix + "(q=" + std::to_string(p.q) + ",r=" + std::to_string(p.r) + ",|G|=" +
         std::to_string(p.group_order) + ",d=" + p.d().get_str() + ")";
}

ModelParams kodaira_model_params(const KodairaParams& p) {
  ModelParams mp;
  mp.q = p.q;
  mp.k = p.k;
  mp.r = p.r;
  mp.group_order = p.group_order;
  mp.d = p.d();
  mp.p = p.p();
  mp.fixed_point_free_assumed = p.fixed_point_free;
  mp.d_overridden = p.d_override.has_value();
  return mp;
}

}  // namespace

// ---------------------------------------------------------------- parameters

void ProductSurfaceParams::validate() const {
  if (q < 2) throw Error(ErrorCode::ParamError, "genus q must be at least 2");
  std::visit(overloaded{
                 [&](const BranchedCover& b) {
                   if (!valid_branched_degree(q, b.k)) {
                     throw Error(ErrorCode::ParamError, "branched cover needs 2 <= k-1 and (k-1)^2 < q");
                   }
                 },
                 [](const GeneralModuli&) {},
                 [&](const UserBounds& u) {
                   const Rational qr(q);
                   const Rational ceiling = qr / Rational(isqrt(BigInt(q)));
                   if (u.lo.sign() <= 0 || u.lo * u.lo < qr) throw Error(ErrorCode::ParamError, "s_C lower bound below sqrt(q)");
                   if (u.hi > ceiling) throw Error(ErrorCode::ParamError, "s_C upper bound above q/floor(sqrt(q))");
                   if (u.lo > u.hi) throw Error(ErrorCode::ParamError, "s_C bounds out of order");
                 },
             },
             sc_mode);
}

std::optional<long> ProductSurfaceParams::k() const {
  if (const auto* b = std::get_if<BranchedCover>(&sc_mode)) return b->k;
  return std::nullopt;
}

std::string ProductSurfaceParams::mode_name() const {
  return std::visit(overloaded{
                        [](const BranchedCover& b) { return "branched_cover(k=" + std::to_string(b.k) + ")"; },
                        [](const GeneralModuli&) { return std::string("general_moduli"); },
                        [](const UserBounds& u) { return "user_bounds(" + u.lo.str() + "," + u.hi.str() + ")"; },
                    },
                    sc_mode);
}

bool KouvidakisBounds::exact() const { return lo.is_exact() && hi.is_exact() && lo.value() == hi.value(); }

KouvidakisBounds kouvidakis_bounds(const ProductSurfaceParams& params, const Rational& tol) {
  params.validate();
  const Rational q(params.q);
  return std::visit(overloaded{
                        [&](const BranchedCover& b) {
                          const Rational sc = q / Rational(b.k - 1);
                          return KouvidakisBounds{RealPoint::exact(sc), RealPoint::exact(sc)};
                        },
                        [&](const GeneralModuli&) {
                          const BigInt root = isqrt(BigInt(params.q));
                          const RealPoint hi = RealPoint::exact(q / Rational(root));
                          if (root * root == params.q) return KouvidakisBounds{hi, hi};
                          const Polynomial x2_minus_q = Polynomial::quadratic(Rational(1), Rational(0), -q);
                          RealPoint lo = RealPoint::enclosed(x2_minus_q, Rational(root), Rational(root + 1)).refined(tol);
                          return KouvidakisBounds{lo, hi};
                        },
                        [&](const UserBounds& u) {
                          return KouvidakisBounds{RealPoint::exact(u.lo), RealPoint::exact(u.hi)};
                        },
                    },
                    params.sc_mode);
}

void KodairaParams::validate() const {
  if (q < 2) throw Error(ErrorCode::ParamError, "genus q must be at least 2");
  if (r < 2) throw Error(ErrorCode::ParamError, "cover degree r must be at least 2");
  if (group_order < 1) throw Error(ErrorCode::ParamError, "group order must be positive");
  if (group_order % r != 0) throw Error(ErrorCode::ParamError, "r must divide |G|");
  if (d_override && *d_override <= 0) throw Error(ErrorCode::ParamError, "cover degree d must be positive");
  if (k && !valid_branched_degree(q, *k)) throw Error(ErrorCode::ParamError, "k needs 2 <= k-1 and (k-1)^2 < q");
}

BigInt KodairaParams::d() const {
  if (d_override) return *d_override;
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(2 * q));
  return out;
}

BigInt KodairaParams::p() const { return d() * (q - 1) + 1; }

bool KodairaParams::has_valid_k() const { return k && valid_branched_degree(q, *k); }

// ---------------------------------------------------------------- models

SurfaceModel product_surface(const ProductSurfaceParams& params) {
  params.validate();
  const long q = params.q;
  auto form = std::make_shared<const IntersectionForm>(
      "CxC(q=" + std::to_string(q) + ")", std::vector<std::string>{"f", "delta_prime"},
      std::vector<std::vector<Rational>>{{Rational(2), Rational(0)}, {Rational(0), Rational(-2 * q)}});
  const DivisorClass f = DivisorClass::basis(form, "f");
  const DivisorClass dp = DivisorClass::basis(form, "delta_prime");

  std::map<std::string, DivisorClass> named{{"f", f}, {"delta_prime", dp}, {"D", f + dp}};
  if (auto k = params.k()) named.emplace("Z", Rational(*k - 1) * f - dp);

  ModelParams mp;
  mp.q = q;
  mp.k = params.k();
  mp.sc_mode = params.mode_name();
  return SurfaceModel(form, Rational(2 * q - 2) * f, std::move(named), mp);
}

SurfaceModel cover_surface(const KodairaParams& params) {
  params.validate();
  const Rational d(params.d());
  const Rational g(params.group_order);
  const Rational graph_sq(graph_self_intersection(params.d(), BigInt(2 - 2 * params.q)));
  // Sigma is |G| disjoint graphs of degree-d maps; graph_h is one of them.
  const std::vector<std::vector<Rational>> gram{
      {Rational(0), Rational(1), d, d * g},
      {Rational(1), Rational(0), Rational(1), g},
      {d, Rational(1), graph_sq, graph_sq},
      {d * g, g, graph_sq, graph_sq * g},
  };
  auto form = std::make_shared<const IntersectionForm>(
      kodaira_name(params, "BxC"), std::vector<std::string>{"B0", "C0", "graph_h", "Sigma"}, gram);
  const DivisorClass b0 = DivisorClass::basis(form, "B0");
  const DivisorClass c0 = DivisorClass::basis(form, "C0");
  const DivisorClass graph = DivisorClass::basis(form, "graph_h");
  const DivisorClass f1 = d * c0 + b0;
  const DivisorClass dp1 = graph - f1;

  std::map<std::string, DivisorClass> named{
      {"f1", f1}, {"delta1_prime", dp1}, {"D1", graph}, {"Sigma", DivisorClass::basis(form, "Sigma")}};
  if (params.has_valid_k()) named.emplace("Z1", Rational(*params.k - 1) * f1 - dp1);

  return SurfaceModel(form, Rational(2 * params.q - 2) * f1, std::move(named), kodaira_model_params(params));
}

SurfaceModel kodaira_surface(const KodairaParams& params) {
  const SurfaceModel base = cover_surface(params);
  const Rational r(params.r);
  std::vector<std::vector<Rational>> gram(4, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) gram[i][j] = r * base.form()->gram(i, j);
  }
  auto form = std::make_shared<const IntersectionForm>(
      kodaira_name(params, "X2"), std::vector<std::string>{"pb_B0", "pb_C0", "pb_graph_h", "pb_Sigma"}, gram);
  const Rational d(params.d());
  const DivisorClass f2 = d * DivisorClass::basis(form, "pb_C0") + DivisorClass::basis(form, "pb_B0");
  const DivisorClass graph = DivisorClass::basis(form, "pb_graph_h");
  const DivisorClass dp2 = graph - f2;
  const DivisorClass pb_k1 = Rational(2 * params.q - 2) * f2;
  const DivisorClass ramification = ((r - Rational(1)) / r) * DivisorClass::basis(form, "pb_Sigma");

  std::map<std::string, DivisorClass> named{
      {"f2", f2}, {"delta2_prime", dp2}, {"D2", f2 + dp2}, {"R", ramification}, {"pb_K1", pb_k1}};
  if (params.has_valid_k()) named.emplace("Z2", Rational(*params.k - 1) * f2 - dp2);

  return SurfaceModel(form, pb_k1 + ramification, std::move(named), kodaira_model_params(params));
}

BigInt graph_self_intersection(const BigInt& d, const BigInt& euler_n) { return d * euler_n; }

DivisorClass pullback_to_cover(const SurfaceModel& product, const SurfaceModel& cover, const DivisorClass& cls) {
  if (!product.owns(cls)) throw Error(ErrorCode::SurfaceMismatch, "class does not live on " + product.name());
  if (product.params().q != cover.params().q || !cover.has_named("f1")) {
    throw Error(ErrorCode::SurfaceMismatch, cover.name() + " does not cover " + product.name());
  }
  return cls.coeff("f") * cover.named("f1") + cls.coeff("delta_prime") * cover.named("delta1_prime");
}

DivisorClass pullback_to_kodaira(const SurfaceModel& cover, const SurfaceModel& kodaira, const DivisorClass& cls) {
  if (!cover.owns(cls)) throw Error(ErrorCode::SurfaceMismatch, "class does not live on " + cover.name());
  const auto& cp = cover.params();
  const auto& kp = kodaira.params();
  if (!kodaira.has_named("R") || cp.q != kp.q || cp.d != kp.d || cp.group_order != kp.group_order) {
    throw Error(ErrorCode::SurfaceMismatch, kodaira.name() + " is not a cyclic cover of " + cover.name());
  }
  return DivisorClass(kodaira.form(), cls.coefficients());
}

}  // namespace slopestab
