#pragma once

// Executable versions of the constructions that turn a decomposition of a
// restriction psi_Q into a decomposition of a product of two irreducible
// characters Psi*Theta of a larger p-group.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charprod/character.hpp"
#include "charprod/products.hpp"

namespace charprod {

/// Permutation module E = (Z_p)^[P:Q] on the right cosets of Q, with the
/// linear character lambda = zeta_p on the coset Q and 1 on the others.
/// The stabilizer of lambda in P is exactly Q.
struct Lemma1Output {
  GroupPtr P;
  Subgroup Q;
  std::uint32_t prime = 0;
  CosetAction cosets;
  GroupPtr E;
  ActionPtr action;
  std::size_t base_point = 0;
  ClassFunction lambda;

  std::size_t rank() const { return cosets.degree(); }
};

/// `prime` may be left 0 when |P| > 1; it is then read off |P|.
Lemma1Output lemma1(GroupPtr p, const Subgroup& q, const Limits& limits = {}, std::uint32_t prime = 0);

/// Stabilizer of lambda in P, recomputed by enumerating P.
std::vector<Element> lemma1_stabilizer(const Lemma1Output& out, const Limits& limits = {});

struct Example1Params {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t t = 1;
  std::vector<std::int64_t> n;  // n_1 .. n_{k-1}

  std::size_t k() const { return n.size() + 1; }
  /// n_k = p^r - sum n_i.
  std::int64_t last() const;
  /// (n_1, ..., n_{k-1}, n_k).
  std::vector<std::int64_t> multiplicities() const;
  json to_json() const;
  static Example1Params from_json(const json& j);
};

/// Throws NotPrime or ConstraintViolation (naming the violated inequality).
void validate(const Example1Params& params);

struct Example1Output {
  Example1Params params;
  WreathProduct wreath;  // P = Z_{p^t} wr Z_{p^r}
  Subgroup N;
  Element c;             // generator of Z_{p^t}
  ClassFunction alpha;   // alpha(c) = zeta_{p^t}
  ClassFunction lambda;  // (alpha, 1, ..., 1) on N
  std::vector<ClassFunction> lambdas;  // lambda_i: alpha in coordinate i
  ClassFunction psi;     // lambda^P
  Element q;
  Subgroup Q;            // <q>
  ClassFunction delta;   // delta(q) = alpha(c)
  std::vector<ClassFunction> constituents;  // delta, delta^2, ..., delta^{k-1}, 1_Q
  std::vector<std::int64_t> multiplicities;

  const GroupPtr& P() const { return wreath.group(); }
};

Example1Output example1(const Example1Params& params, const Limits& limits = {});

struct TheoremBOutput {
  GroupPtr P;
  Subgroup Q;
  ClassFunction psi;
  ClassFunction psi_Q;
  bool psi_irreducibility_checked = false;
  Decomposition restriction;          // psi_Q against the candidate list
  std::vector<ClassFunction> phis;    // constituents with n_i > 0, candidate order
  std::vector<std::int64_t> multiplicities;

  Lemma1Output lemma;
  SemidirectProduct G;                // P |x E
  Subgroup QE;
  std::vector<Element> transversal;   // right transversal of QE in G (inside P)
  ClassFunction Psi;                  // inflation of psi
  ClassFunction Theta;                // (1_Q lambda)^G
  std::vector<ClassFunction> Phis;    // (phi_i lambda)^G

  std::size_t k() const { return phis.size(); }
  std::uint64_t index() const { return lemma.rank(); }
};

/// psi must be an irreducible character of P (checked when P is enumerable)
/// and Q a proper subgroup.  Without `phis`, Irr(Q) is computed.
TheoremBOutput theorem_b(GroupPtr p, const Subgroup& q, const ClassFunction& psi,
                         std::optional<std::vector<ClassFunction>> phis = std::nullopt,
                         const Limits& limits = {});

std::pair<Example1Output, TheoremBOutput> theorem_a(const Example1Params& params,
                                                    const Limits& limits = {});

/// (psi x theta) restricted to D(G) and carried back along g -> (g,g) equals
/// psi*theta, checked on every element of G.
bool product_as_diagonal_restriction(GroupPtr g, const ClassFunction& psi, const ClassFunction& theta,
                                     const Limits& limits = {});

}  // namespace charprod
