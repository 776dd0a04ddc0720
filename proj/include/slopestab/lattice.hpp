#pragma once

/**
 * @file lattice.hpp
 * @brief Divisor classes on a finite named sublattice of N^1 with a symmetric intersection form.
 *
 * A DivisorClass shares ownership of the IntersectionForm it lives on. Two
 * classes belong to the same surface iff they point at the same form;
 * pairing classes from different surfaces throws SurfaceMismatch.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slopestab/numerics.hpp"

namespace slopestab {

class IntersectionForm {
 public:
  /// Throws InvalidArgument unless labels are unique and `gram` is square and symmetric.
  IntersectionForm(std::string surface_name, std::vector<std::string> basis,
                   std::vector<std::vector<Rational>> gram);

  const std::string& surface_name() const { return name_; }
  std::uint64_t id() const { return id_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InvalidArgument for an unknown label.
  std::size_t index_of(std::string_view label) const;
  const Rational& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }

 private:
  std::string name_;
  std::uint64_t id_;
  std::vector<std::string> basis_;
  std::vector<std::vector<Rational>> gram_;
};

using FormPtr = std::shared_ptr<const IntersectionForm>;

class DivisorClass {
 public:
  DivisorClass(FormPtr form, std::vector<Rational> coeffs);

  static DivisorClass zero(const FormPtr& form);
  static DivisorClass basis(const FormPtr& form, std::string_view label);

  const FormPtr& form() const { return form_; }
  std::uint64_t surface_id() const { return form_->id(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coeff(std::string_view label) const { return coeffs_[form_->index_of(label)]; }
  bool same_surface(const DivisorClass& other) const { return form_ == other.form_; }
  bool is_zero() const;

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Rational& k, const DivisorClass& a);
  /// Same surface and same coefficients.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

  /// e.g. "3*f + delta_prime".
  std::string str() const;

 private:
  FormPtr form_;
  std::vector<Rational> coeffs_;
};

/// Bilinear symmetric pairing through the Gram matrix.
Rational pair(const DivisorClass& a, const DivisorClass& b);
Rational self_intersection(const DivisorClass& a);

using Term = std::pair<Rational, DivisorClass>;

/// Coefficient-wise sum on `form`; an empty list yields the zero class.
DivisorClass linear_combination(const FormPtr& form, std::span<const Term> terms);

/// Parameters a surface model was built from; unused fields stay empty.
struct ModelParams {
  long q = 0;
  std::optional<long> k;
  std::optional<long> r;
  std::optional<long> group_order;
  std::optional<BigInt> d;
  std::optional<BigInt> p;
  std::string sc_mode;
  bool fixed_point_free_assumed = false;
  bool d_overridden = false;
};

/// Named basis, Gram matrix, canonical class, distinguished classes and parameters.
class SurfaceModel {
 public:
  SurfaceModel(FormPtr form, DivisorClass canonical, std::map<std::string, DivisorClass> named,
               ModelParams params);

  const FormPtr& form() const { return form_; }
  const std::string& name() const { return form_->surface_name(); }
  const DivisorClass& canonical() const { return canonical_; }
  const ModelParams& params() const { return params_; }

  /// Class of a single basis element.
  DivisorClass basis_class(std::string_view label) const { return DivisorClass::basis(form_, label); }
  /// Distinguished class such as "D", "Z", "f2"; throws InvalidArgument when absent.
  const DivisorClass& named(std::string_view name) const;
  bool has_named(std::string_view name) const;
  const std::map<std::string, DivisorClass, std::less<>>& named_classes() const { return named_; }

  /// Builds a class from (label, coefficient) pairs over this surface's basis.
  DivisorClass make(std::initializer_list<std::pair<std::string_view, Rational>> coeffs) const;
  DivisorClass zero() const { return DivisorClass::zero(form_); }
  DivisorClass linear_combination(std::span<const Term> terms) const;

  /// Pairing with both classes checked to live on this surface.
  Rational pair(const DivisorClass& a, const DivisorClass& b) const;
  bool owns(const DivisorClass& c) const { return c.form() == form_; }

 private:
  FormPtr form_;
  DivisorClass canonical_;
  std::map<std::string, DivisorClass, std::less<>> named_;
  ModelParams params_;
};

}  // namespace slopestab
