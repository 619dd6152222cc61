#include "jetcalc/jets.hpp"

#include <stdexcept>

namespace jetcalc {

JetElement JetElement::zero(uint32_t order, size_t)
{
	JetElement u;
	for (uint32_t i = 0; i <= order; ++i)
		u.comps.push_back(TensorElement::zero(Space::Sym, i));
	return u;
}

JetElement jet_product(const JetElement &u, const JetElement &v, uint32_t order)
{
	if (u.order() < order || v.order() < order)
		throw std::invalid_argument("jet_product: operands shorter than the order");
	JetElement w;
	for (uint32_t k = 0; k <= order; ++k) {
		TensorElement c = TensorElement::zero(Space::Sym, k);
		for (uint32_t i = 0; i <= k; ++i)
			c += graded_product(u.comps[i], v.comps[k - i]);
		w.comps.push_back(std::move(c));
	}
	return w;
}

JetElement jet_expansion(const HasseDerivation &h, const Polynomial &a, uint32_t order,
                         const GradedContext &ctx)
{
	if (order > h.order)
		throw std::invalid_argument("jet_expansion: order exceeds the Hasse truncation");
	JetElement u;
	for (uint32_t i = 0; i <= order; ++i)
		u.comps.push_back(hasse_apply(h, a, i, ctx));
	return u;
}

JetElement jet_truncate(const JetElement &u)
{
	if (u.comps.empty())
		throw std::invalid_argument("jet_truncate: empty jet");
	JetElement v = u;
	v.comps.pop_back();
	return v;
}

bool is_zero(const JetElement &u, const GradedContext &ctx)
{
	for (auto &c : u.comps)
		if (!is_zero(c, ctx))
			return false;
	return true;
}

bool equal(const JetElement &u, const JetElement &v, const GradedContext &ctx)
{
	if (u.comps.size() != v.comps.size())
		return false;
	for (size_t i = 0; i < u.comps.size(); ++i)
		if (!is_zero(u.comps[i] - v.comps[i], ctx))
			return false;
	return true;
}

} // namespace jetcalc
