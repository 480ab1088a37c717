#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charprod/constructions.hpp"
#include "charprod/report.hpp"

namespace charprod {

enum class Mode { Structural, Full, Auto };

Mode parse_mode(const std::string& s);
std::string to_string(Mode m);

/// <psi_Q, delta^j> and <psi_Q, 1_Q> against the expected multiplicities
/// (the construction's own unless `expected` is given), the residual, and
/// the norm identity <psi_Q, psi_Q> = sum n_i^2.
VerificationReport verify_restriction(const Example1Output& ex, const Limits& limits = {},
                                      const std::optional<std::vector<std::int64_t>>& expected = std::nullopt);

/// Degree of psi, |Q|, distinct delta^i, stabilizer of lambda equal to N,
/// psi_N = sum lambda_i, and irreducibility of psi.
VerificationReport verify_example1_claims(const Example1Output& ex, const Limits& limits = {});

/// Structural tier: degree bookkeeping, norms of the phi_i on Q, the
/// restriction decomposition over Q, the Lemma 1 stabilizer, and the product
/// identity on a deterministic sample of G.  Full tier (|G| <= max_enum)
/// adds the product identity on every class of G, norms and orthogonality of
/// the Phi_i, <Psi Theta, Phi_i> = n_i and eta = k.
VerificationReport verify_product(const TheoremBOutput& tb, Mode mode, const Limits& limits = {},
                                  const std::optional<std::vector<std::int64_t>>& expected = std::nullopt);

/// product_as_diagonal_restriction for every ordered pair of irreducibles of g.
VerificationReport verify_diagonal(GroupPtr g, const std::string& name, const Limits& limits = {});

/// Extraspecial group of order 27 (exponent 3): eta of every product of two
/// faithful irreducibles.  Experimental.
VerificationReport edith1_spotcheck(const Limits& limits = {});

/// Heisenberg group mod 3, as Z_3 |x (Z_3)^2 with (x, y)^j = (x, y + j x).
GroupPtr heisenberg27();

/// Elements of G on which the sampled structural checks are evaluated:
/// the identity, random elements of QE, and random elements of G.
std::vector<Element> product_sample(const TheoremBOutput& tb, std::size_t count, const Limits& limits = {});

}  // namespace charprod
