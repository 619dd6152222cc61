#pragma once

#include "jetcalc/derivation.hpp"

namespace jetcalc {

/// Connection attached to a derivation: one degree-2 tensor value per
/// module generator, extended to the whole module by the twisted Leibniz
/// rule  value(a m) = D(a) (x) m + a value(m).
struct Connection {
	int degree = 0;
	std::vector<TensorElement> values; // one per generator, length 2, Tensor tag

	const TensorElement &value(size_t gen) const { return values[gen]; }
};

/// Twisted Leibniz evaluation on an arbitrary module element.
/// Representative independent once validate_connection passes.
TensorElement apply_connection(const Connection &c, const ModuleElement &m, const Derivation &d,
                               const GradedContext &ctx);

/// For each module relation, zero-tests the twisted Leibniz expansion of
/// the connection on the relation; also reports inhomogeneous values.
ValidationReport validate_connection(const Connection &c, const Derivation &d,
                                     const GradedContext &ctx);

/// Flatness: the composite of the connection with the derivation lands in
/// the symmetrized part of degree 2 on every ring variable. That suffices
/// for the whole ring: on a product,
///   cD(ab) = a cD(b) + b cD(a) + D(a)D(b) + D(b)D(a),
/// and the last two terms form a switch-star image, so flatness on factors
/// propagates; variables generate the ring over the constants.
bool is_flat_connection(const Connection &c, const Derivation &d, const GradedContext &ctx);

/// Slotwise insertion of the connection on words of the semi-symmetric
/// space, extended over coefficients by  nabla(a w) = D(a) w + a nabla(w).
/// Raises the length by one.
TensorElement nabla(const Connection &c, const TensorElement &w, const Derivation &d,
                    const GradedContext &ctx);

} // namespace jetcalc
