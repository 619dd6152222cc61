#pragma once

#include "jetcalc/extended.hpp"

namespace jetcalc {

/// Module-linear comparison data between two extended connections: one
/// value per generator in each length-(i+1) semi-symmetric space, with the
/// order-0 values the generators (the identity).
struct ComparisonMap {
	uint32_t order = 0;
	std::vector<std::vector<TensorElement>> values; // values[i][gen], SemiSym length i+1

	static ComparisonMap identity(uint32_t order, const GradedContext &ctx);

	const TensorElement &value(uint32_t i, size_t gen) const { return values[i][gen]; }

	/// Module-linear application of the order-i part.
	TensorElement apply(uint32_t i, const ModuleElement &m, const GradedContext &ctx) const;
};

/// Degree-q generating map on a length-p element (p >= 1): the sum over
/// all compositions i_1+..+i_p = q of the slotwise products
/// lambda_{i_1}(m_1) .. lambda_{i_p}(m_p), each weighted by (i_p + 1).
TensorElement slotwise_substitute(const ComparisonMap &lambda, uint32_t q, const TensorElement &w,
                                  const GradedContext &ctx);

/// Same sum without the last-slot weight; the symmetric-space variant.
TensorElement slotwise_substitute_sym(const ComparisonMap &lambda, uint32_t q,
                                      const TensorElement &w, const GradedContext &ctx);

/// The unique comparison map carrying the first extension onto the second:
///   S_i = sum_{l=0..i} slotwise_substitute(lambda, i-l) o T_l
/// for every i up to the common order. Requires the first argument to be
/// flat below its order (checked). Verifies module-linearity of every
/// computed order on the relations and on variable products, and throws
/// std::logic_error when that fails (one of the inputs is then not an
/// extended connection).
ComparisonMap compare_extended(const ExtendedConnection &t, const ExtendedConnection &s,
                               const Derivation &d, const GradedContext &ctx);

} // namespace jetcalc
