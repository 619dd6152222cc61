#pragma once

#include "jetcalc/compare.hpp"

#include <optional>
#include <random>

namespace jetcalc {

/// Truncated Hasse derivation built from an extended connection: the
/// order-i component sends a to the symmetric class of
/// (1/i) T_{i-1}(D(a)); order 0 is the identity, order 1 is D.
/// The values on the ring variables are cached.
struct HasseDerivation {
	uint32_t order = 0;
	ExtendedConnection source;
	Derivation deriv;
	std::vector<std::vector<TensorElement>> var_values; // var_values[i][v] in Sym^i, i >= 1

	const TensorElement &var_value(uint32_t i, size_t v) const { return var_values[i][v]; }
};

/// Requires order <= source order + 1.
HasseDerivation hasse_from_extended(const ExtendedConnection &t, const Derivation &d,
                                    uint32_t order, const GradedContext &ctx);

/// Order-i component on an arbitrary polynomial (order 0 returns the
/// scalar itself).
TensorElement hasse_apply(const HasseDerivation &h, const Polynomial &a, uint32_t i,
                          const GradedContext &ctx);

struct HasseAxiomFailure {
	uint32_t order;
	Polynomial a, b;
};

struct HasseAxiomReport {
	size_t pairs_checked = 0;
	std::optional<HasseAxiomFailure> failure;
	bool ok() const { return !failure.has_value(); }
};

/// Convolution multiplicativity h_i(ab) = sum_j h_j(a) h_{i-j}(b) on
/// seeded random homogeneous pairs with weights up to weight_cap,
/// for every order i up to the truncation.
HasseAxiomReport check_hasse_axioms(const HasseDerivation &h, size_t pair_budget, uint64_t seed,
                                    int weight_cap, const GradedContext &ctx);

/// Random homogeneous polynomial of weight <= cap with small coefficients;
/// shared by the randomized checks.
Polynomial random_homogeneous(std::mt19937_64 &rng, int weight_cap, const RingPresentation &ring);

/// Degree-filtered algebra automorphism of the symmetric algebra induced
/// by a comparison map: the degree-q part acts on positive symmetric
/// degrees as the unweighted slotwise substitution and kills scalars for
/// q >= 1; degree 0 is the identity.
struct AlgebraAutomorphism {
	ComparisonMap comparison;
};

/// Requires the comparison to start at the identity.
AlgebraAutomorphism automorphism_from_comparison(ComparisonMap lambda, const GradedContext &ctx);

/// The degree-q graded part applied to a symmetric element (length 0 =
/// scalar input).
TensorElement apply_automorphism(const AlgebraAutomorphism &phi, uint32_t q,
                                 const TensorElement &w, const GradedContext &ctx);

/// Whether the second Hasse derivation equals the automorphism applied to
/// the first, checked on all ring variables through the given order.
bool verify_equivalence(const HasseDerivation &h, const HasseDerivation &h2,
                        const AlgebraAutomorphism &phi, uint32_t order, const GradedContext &ctx);

/// Computes the three pairwise comparison automorphisms and checks that
/// the closing composition matches, on module generators through the given
/// order. All three sources must be flat below their (equal) orders and
/// share the derivation; mismatched data throws.
bool cocycle_check(const HasseDerivation &h1, const HasseDerivation &h2, const HasseDerivation &h3,
                   uint32_t order, const GradedContext &ctx);

/// Closed form of the Hasse components for a derivation on a free module
/// with commuting coefficient derivations: the order-q value on a is the
/// sum over length-q generator words of the iterated coefficient
/// derivatives of a divided by q factorial. Independent of the extended
/// connection machinery; used as a cross-check.
TensorElement hasse_commuting_closed_form(const Derivation &d, const Polynomial &a, uint32_t q,
                                          const GradedContext &ctx);

} // namespace jetcalc
