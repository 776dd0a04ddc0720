#include "slopestab/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

std::uint64_t next_surface_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (!a.same_surface(b)) {
    throw Error(ErrorCode::SurfaceMismatch,
                "classes live on '" + a.form()->surface_name() + "' and '" + b.form()->surface_name() + "'");
  }
}

}  // namespace

IntersectionForm::IntersectionForm(std::string surface_name, std::vector<std::string> basis,
                                   std::vector<std::vector<Rational>> gram)
    : name_(std::move(surface_name)), id_(next_surface_id()), basis_(std::move(basis)), gram_(std::move(gram)) {
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != basis_.size()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate basis label on " + name_);
  }
  if (gram_.size() != basis_.size()) throw Error(ErrorCode::InvalidArgument, "gram matrix has wrong size");
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != basis_.size()) throw Error(ErrorCode::InvalidArgument, "gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorCode::InvalidArgument, "gram matrix is not symmetric");
    }
  }
}

std::optional<std::size_t> IntersectionForm::find(std::string_view label) const {
  const auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t IntersectionForm::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::InvalidArgument, "label '" + std::string(label) + "' is not in the basis of " + name_);
}

// ---------------------------------------------------------------- DivisorClass

DivisorClass::DivisorClass(FormPtr form, std::vector<Rational> coeffs)
    : form_(std::move(form)), coeffs_(std::move(coeffs)) {
  if (!form_) throw Error(ErrorCode::InvalidArgument, "divisor class without a surface");
  if (coeffs_.size() != form_->rank()) throw Error(ErrorCode::InvalidArgument, "coefficient count != basis rank");
}

DivisorClass DivisorClass::zero(const FormPtr& form) {
  return DivisorClass(form, std::vector<Rational>(form->rank()));
}

DivisorClass DivisorClass::basis(const FormPtr& form, std::string_view label) {
  DivisorClass c = zero(form);
  c.coeffs_[form->index_of(label)] = Rational(1);
  return c;
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

DivisorClass DivisorClass::operator-() const { return Rational(-1) * *this; }

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return DivisorClass(a.form_, std::move(out));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

DivisorClass operator*(const Rational& k, const DivisorClass& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= k;
  return DivisorClass(a.form_, std::move(out));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.same_surface(b) && a.coeffs_ == b.coeffs_;
}

std::string DivisorClass::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational a = c.abs();
    if (a != Rational(1)) out += a.str() + "*";
    out += form_->basis()[i];
  }
  return out.empty() ? "0" : out;
}

Rational pair(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  const auto& form = *a.form();
  Rational total(0);
  for (std::size_t i = 0; i < form.rank(); ++i) {
    if (a.coefficients()[i].is_zero()) continue;
    Rational row(0);
    for (std::size_t j = 0; j < form.rank(); ++j) row += form.gram(i, j) * b.coefficients()[j];
    total += a.coefficients()[i] * row;
  }
  return total;
}

Rational self_intersection(const DivisorClass& a) { return pair(a, a); }

DivisorClass linear_combination(const FormPtr& form, std::span<const Term> terms) {
  DivisorClass acc = DivisorClass::zero(form);
  for (const auto& [k, c] : terms) acc = acc + k * c;
  return acc;
}

// ---------------------------------------------------------------- SurfaceModel

SurfaceModel::SurfaceModel(FormPtr form, DivisorClass canonical, std::map<std::string, DivisorClass> named,
                           ModelParams params)
    : form_(std::move(form)), canonical_(std::move(canonical)), named_(named.begin(), named.end()), params_(std::move(params)) {
  if (!owns(canonical_)) throw Error(ErrorCode::SurfaceMismatch, "canonical class lives on another surface");
  for (const auto& [name, cls] : named_) {
    if (!owns(cls)) throw Error(ErrorCode::SurfaceMismatch, "class '" + name + "' lives on another surface");
  }
}

const DivisorClass& SurfaceModel::named(std::string_view name) const {
  const auto it = named_.find(name);
  if (it == named_.end()) {
    throw Error(ErrorCode::InvalidArgument, "no class named '" + std::string(name) + "' on " + this->name());
  }
  return it->second;
}

bool SurfaceModel::has_named(std::string_view name) const { return named_.find(name) != named_.end(); }

DivisorClass SurfaceModel::make(std::initializer_list<std::pair<std::string_view, Rational>> coeffs) const {
  DivisorClass acc = zero();
  for (const auto& [label, k] : coeffs) acc = acc + k * basis_class(label);
  return acc;
}

DivisorClass SurfaceModel::linear_combination(std::span<const Term> terms) const {
  return slopestab::linear_combination(form_, terms);
}

Rational SurfaceModel::pair(const DivisorClass& a, const DivisorClass& b) const {
  if (!owns(a) || !owns(b)) throw Error(ErrorCode::SurfaceMismatch, "class does not live on " + name());
  return slopestab::pair(a, b);
}

}  // namespace slopestab
