#pragma once

#include "jetcalc/connection.hpp"

namespace jetcalc {

/// Order-truncated extended connection: for each i = 0..order one value
/// per generator in the length-(i+1) semi-symmetric space, with the order-0
/// values the generators themselves. Application to arbitrary module
/// elements is determined by the higher Leibniz rule
///   T_i(a m) = a T_i(m) + sum_{j=1..i} (1/j) T_{j-1}(D(a)) T_{i-j}(m).
struct ExtendedConnection {
	uint32_t order = 0;
	std::vector<std::vector<TensorElement>> values; // values[i][gen], SemiSym length i+1

	const TensorElement &value(uint32_t i, size_t gen) const { return values[i][gen]; }

	/// Copy truncated to a lower order.
	ExtendedConnection truncated(uint32_t new_order) const;
};

/// Builds the iterated extension of a connection: order-i values are the
/// i-fold slotwise insertions divided by i factorial.
ExtendedConnection iterate_connection(const Connection &c, uint32_t order, const Derivation &d,
                                      const GradedContext &ctx);

/// Recursive higher-Leibniz evaluation of the order-i component on an
/// arbitrary module element.
TensorElement apply_extended(const ExtendedConnection &t, uint32_t i, const ModuleElement &m,
                             const Derivation &d, const GradedContext &ctx);

/// Checks (a) order-0 values are the generators, (b) every order kills
/// every module relation, (c) product coherence: evaluating on x*(y*g)
/// through the higher Leibniz rule agrees with evaluating on (x*y)*g.
ValidationReport validate_extended(const ExtendedConnection &t, const Derivation &d,
                                   const GradedContext &ctx);

/// Flatness of the extension: every order lands in the symmetrized part on
/// the derivation values of all ring variables.
bool is_flat_extended(const ExtendedConnection &t, const Derivation &d, const GradedContext &ctx);

/// Degree-j extension of T to two-letter words,
///   pair_extension(T, j)(m1 m2) = sum_{i=0..j} T_i(m1) T_{j-i}(m2),
/// evaluated on polynomial coefficients through the twisted rule
///   P_j(a w) = a P_j(w) + sum_{i=1..j} (1/(j+1-i)) T_{j-i}(D(a)) P_{i-1}(w).
/// Requires j + 1 <= t.order + 1, i.e. j <= order.
TensorElement pair_extension(const ExtendedConnection &t, uint32_t j, const TensorElement &w,
                             const Derivation &d, const GradedContext &ctx);

/// Extends a flat connection to a flat extended connection of the given
/// order. Each induction step builds the iterated candidate, compares it
/// with the current truncation, and corrects the top order with the
/// switch-operator projection so that the flatness identity
///   (i - switch)((i+1) T_i - pair_extension(T, i-1)((1 - switch) T_1)) = 0
/// holds at every order. Throws std::invalid_argument when the connection
/// is not flat, naming a failing variable.
ExtendedConnection extend_flat(const Connection &c, uint32_t order, const Derivation &d,
                               const GradedContext &ctx);

} // namespace jetcalc
