#pragma once

// Class functions with exact cyclotomic values and the character calculus
// built on them.
//
// A ClassFunction lives on a Subgroup (its domain) and is held either as a
// table of values on the domain's conjugacy-class representatives, or as a
// pure evaluation rule Element -> CycNumber for domains too large to
// enumerate.  Every operation accepts both forms.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charprod/cyclotomic.hpp"
#include "charprod/products.hpp"
#include "charprod/subgroup.hpp"

namespace charprod {

class ClassFunction {
 public:
  using Rule = std::function<CycNumber(const Element&)>;

  ClassFunction() = default;

  static ClassFunction from_class_values(Subgroup domain, std::vector<CycNumber> values,
                                         std::string label = {}, const Limits& limits = {});
  static ClassFunction from_rule(Subgroup domain, Rule rule, std::string label = {});
  /// Tabulates `rule` on class representatives when the domain is enumerable.
  static ClassFunction tabulate(Subgroup domain, const Rule& rule, std::string label = {},
                                const Limits& limits = {});

  bool valid() const { return impl_ != nullptr; }
  const Subgroup& domain() const { return impl_->domain; }
  bool tabulated() const { return impl_->tabulated; }
  /// Values on domain().classes(); only for tabulated functions.
  const std::vector<CycNumber>& class_values() const;
  const std::string& label() const { return impl_->label; }

  CycNumber operator()(const Element& g) const;
  CycNumber degree() const;
  /// lcm of the value conductors when tabulated, the domain exponent otherwise.
  std::uint32_t conductor() const;

  ClassFunction relabeled(std::string label) const;
  /// Tabulated copy; throws EnumerationBoundExceeded when the domain is too large.
  ClassFunction materialized(const Limits& limits = {}) const;

 private:
  struct Impl {
    Subgroup domain;
    bool tabulated = false;
    std::vector<CycNumber> values;
    Rule rule;
    std::string label;
  };
  std::shared_ptr<const Impl> impl_;
};

struct Constituent {
  ClassFunction character;
  std::int64_t multiplicity = 0;
};

struct Decomposition {
  std::vector<std::int64_t> multiplicities;  // one per candidate, in candidate order
  std::vector<Constituent> constituents;     // the candidates with positive multiplicity
  ClassFunction residual;                    // chi - sum n_i phi_i
  bool residual_zero = false;
  bool probabilistic = false;  // residual checked on a sample only

  /// Number of distinct constituents.
  std::size_t eta() const { return constituents.size(); }
};

struct Comparison {
  bool equal = true;
  bool probabilistic = false;
  std::optional<Element> witness;  // first element where the values differ
  CycNumber lhs;
  CycNumber rhs;
};

ClassFunction trivial_character(const Subgroup& g, const Limits& limits = {});
ClassFunction zero_function(const Subgroup& g, const Limits& limits = {});

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& sub, const Limits& limits = {});
/// Pointwise product; GroupMismatch unless both share a domain.
ClassFunction product(const ClassFunction& a, const ClassFunction& b);
ClassFunction sum(const ClassFunction& a, const ClassFunction& b);
ClassFunction difference(const ClassFunction& a, const ClassFunction& b);
ClassFunction scaled(const ClassFunction& a, const Rational& c);
/// Pointwise k-th power (the k-th power of a linear character).
ClassFunction power(const ClassFunction& a, std::int64_t k);

/// Induction to a subgroup G of the same parent containing mu's domain H,
/// evaluated with a right transversal T of H in G:
///     mu^G(x) = sum_{t in T} mu°(t x t^-1).
/// This overload enumerates G and returns a tabulated function.
ClassFunction induce(const ClassFunction& mu, const Subgroup& g, const Limits& limits = {});
/// Rule-form induction with a caller-supplied right transversal.
ClassFunction induce(const ClassFunction& mu, const Subgroup& g, std::vector<Element> transversal,
                     std::string label = {});

/// Psi(sigma tau) = psi(sigma) on G = top |x base.
ClassFunction inflate(const ClassFunction& psi, const SemidirectProduct& g);

/// QE = {sigma tau : sigma in Q, tau in base} inside G = top |x base.
Subgroup stabilizer_product_subgroup(const SemidirectProduct& g, const Subgroup& q);

/// (phi lambda)(sigma tau) = phi(sigma) lambda(tau) on QE.  Throws
/// StabilizerViolation when a generator of Q moves lambda.
ClassFunction extend_over_stabilizer(const ClassFunction& phi, const ClassFunction& lambda,
                                     const SemidirectProduct& g, const Subgroup& qe);

/// (1/|G|) sum_g a(g) conj(b(g)), computed class-wise.
Rational inner_product(const ClassFunction& a, const ClassFunction& b, const Limits& limits = {});
/// inner_product asserted to be a non-negative integer (IntegralityViolation otherwise).
std::int64_t multiplicity(const ClassFunction& a, const ClassFunction& b, const Limits& limits = {});
bool is_irreducible(const ClassFunction& chi, const Limits& limits = {});

Decomposition decompose_against(const ClassFunction& chi, const std::vector<ClassFunction>& candidates,
                                const Limits& limits = {});

/// Exact comparison on class representatives when the domain is enumerable,
/// otherwise on a deterministic sample (flagged probabilistic).
Comparison compare(const ClassFunction& a, const ClassFunction& b, const Limits& limits = {},
                   std::size_t samples = 64);

/// All linear characters of an abelian group, trivial character first.
std::vector<ClassFunction> linear_characters(const Subgroup& a, const Limits& limits = {});

/// On E = (Z_p)^m with the coordinate unit vectors as basis: the linear
/// character sending basis vector s to zeta_p and the others to 1.
ClassFunction dual_basis_character(GroupPtr e, std::size_t s, std::uint32_t p);

/// (psi x theta)(g, h) = psi(g) theta(h) on G x G.
ClassFunction outer_product(const ClassFunction& psi, const ClassFunction& theta,
                            const DiagonalEmbedding& d, const Limits& limits = {});

/// {sigma in acting : lambda(sigma^-1 x sigma) = lambda(x) for every generator x
/// of lambda's domain}, where lambda's domain is normalized by `acting`.
std::vector<Element> conjugation_stabilizer(const Subgroup& acting, const ClassFunction& lambda,
                                            const Limits& limits = {});
/// {sigma in acting : lambda(x^sigma) = lambda(x) for every generator x of the module}.
std::vector<Element> action_stabilizer(const Subgroup& acting, const GroupAction& action,
                                       const ClassFunction& lambda, const Limits& limits = {});

/// Random conjugation test of class constancy; returns the first failing
/// element pair (x, g) if any.
std::optional<std::pair<Element, Element>> spot_check_class_function(const ClassFunction& chi,
                                                                     std::size_t samples = 32,
                                                                     std::uint64_t seed = 7);

/// Uniform random element when enumerable, otherwise a random word in the generators.
Element random_subgroup_element(const Subgroup& h, std::mt19937_64& rng, const Limits& limits = {});

}  // namespace charprod
