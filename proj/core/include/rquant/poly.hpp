#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rquant/rational.hpp"

namespace rquant {

/// Ordered set of parameter names. Shared between polynomials so that the
/// common case of equal universes is a pointer comparison.
using Universe = std::shared_ptr<const std::vector<std::string>>;

[[nodiscard]] Universe make_universe(std::vector<std::string> names);
[[nodiscard]] const Universe& empty_universe();

/// Union of two universes: the parameters of `a` in order, followed by the
/// parameters of `b` not already in `a`. Returns one of the inputs when the
/// result equals it.
[[nodiscard]] Universe merge_universes(const Universe& a, const Universe& b);

/// Monomial as a sparse exponent vector: (parameter index, exponent > 0)
/// pairs sorted by index. Indices refer to the owning polynomial's universe.
struct Monomial {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

  [[nodiscard]] bool is_one() const { return factors.empty(); }
  [[nodiscard]] std::uint32_t degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lexicographic comparison over universe order; returns <0, 0, >0.
/// A larger exponent on an earlier parameter makes the monomial larger.
[[nodiscard]] int compare_monomials(const Monomial& a, const Monomial& b);
[[nodiscard]] Monomial multiply_monomials(const Monomial& a, const Monomial& b);

/// Multivariate polynomial with exact rational coefficients in named
/// parameters. Terms are stored in descending lexicographic order with no
/// zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  Poly() : vars_(empty_universe()) {}
  Poly(Rational constant);  // NOLINT: constants promote implicitly
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  Poly(int constant) : Poly(Rational(constant)) {}   // NOLINT

  /// The polynomial `name` over the universe {name}.
  static Poly variable(const std::string& name);
  /// The polynomial `name` over `universe`; throws std::invalid_argument if
  /// the name is not in the universe.
  static Poly variable(const std::string& name, const Universe& universe);

  /// Parses the canonical text form, e.g. "3/2*lambda^2 - 1/4". Parameters
  /// are looked up in `universe`; without one, the universe is built in order
  /// of first appearance. Throws std::invalid_argument on malformed text.
  static Poly parse(std::string_view text, const Universe& universe = nullptr);

  [[nodiscard]] const Universe& universe() const { return vars_; }
  [[nodiscard]] const std::vector<std::string>& params() const { return *vars_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// The value of a constant polynomial; nullopt when a parameter occurs.
  [[nodiscard]] std::optional<Rational> constant_value() const;
  /// Names of the parameters that actually occur, in universe order.
  [[nodiscard]] std::vector<std::string> used_params() const;
  [[nodiscard]] std::uint32_t total_degree() const;

  /// The same polynomial over a superset universe. Throws
  /// std::invalid_argument if an occurring parameter is missing from it.
  [[nodiscard]] Poly with_universe(const Universe& universe) const;

  /// Canonical text form. Zero prints as "0".
  [[nodiscard]] std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);

  /// Equality of the underlying polynomials; universes may differ.
  friend bool operator==(const Poly& a, const Poly& b);

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  Poly(Universe vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}
  void add_scaled(const Poly& o, const Rational& factor);
  static void normalize(std::vector<Term>& terms);

  Universe vars_;
  std::vector<Term> terms_;

  friend Poly substitute(const Poly&, const std::map<std::string, Poly>&);
};

/// Exact partial evaluation at rational values.
[[nodiscard]] Poly substitute(const Poly& p, const std::map<std::string, Rational>& bindings);
/// Replaces parameters by polynomials (e.g. theta -> -theta).
[[nodiscard]] Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);

/// Expresses every polynomial in `polys` over one common universe.
void unify_universes(std::vector<Poly>& polys);

}  // namespace rquant
