#pragma once

#include "jetcalc/hasse.hpp"

namespace jetcalc {

/// Element of the order-N truncated jet algebra: one symmetric component
/// per degree 0..N, degree 0 being a ring element.
struct JetElement {
	std::vector<TensorElement> comps; // comps[i] in Sym^i

	uint32_t order() const { return uint32_t(comps.size()) - 1; }
	static JetElement zero(uint32_t order, size_t nvars);
};

/// Componentwise convolution product, truncated above the order.
JetElement jet_product(const JetElement &u, const JetElement &v, uint32_t order);

/// The jet of a polynomial under a Hasse derivation:
/// (a, h_1(a), .., h_N(a)). An algebra map into the jet algebra.
JetElement jet_expansion(const HasseDerivation &h, const Polynomial &a, uint32_t order,
                         const GradedContext &ctx);

/// Order-lowering truncation; its kernel is exactly the top symmetric
/// component.
JetElement jet_truncate(const JetElement &u);

bool is_zero(const JetElement &u, const GradedContext &ctx);
bool equal(const JetElement &u, const JetElement &v, const GradedContext &ctx);

} // namespace jetcalc
