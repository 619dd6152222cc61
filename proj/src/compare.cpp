#include "jetcalc/compare.hpp"

#include <stdexcept>

namespace jetcalc {

ComparisonMap ComparisonMap::identity(uint32_t order, const GradedContext &ctx)
{
	ComparisonMap m;
	m.order = order;
	m.values.resize(order + 1);
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		m.values[0].push_back(TensorElement::word(Space::SemiSym, Word{uint32_t(g)},
		                                          Polynomial::constant(1, ctx.nvars())));
		for (uint32_t i = 1; i <= order; ++i)
			m.values[i].push_back(TensorElement::zero(Space::SemiSym, i + 1));
	}
	return m;
}

TensorElement ComparisonMap::apply(uint32_t i, const ModuleElement &m, const GradedContext &ctx) const
{
	if (i > order)
		throw std::invalid_argument("comparison map: order exceeds the truncation");
	TensorElement out = TensorElement::zero(Space::SemiSym, i + 1);
	for (size_t g = 0; g < ctx.ngens(); ++g)
		if (!m.coeffs[g].is_zero())
			out += value(i, g) * m.coeffs[g];
	return out;
}

namespace {

TensorElement substitute(const ComparisonMap &lambda, uint32_t q, const TensorElement &w,
                         bool weighted, Space out_space, const GradedContext &ctx)
{
	if (w.length < 1)
		throw std::invalid_argument("slotwise substitution needs length >= 1");
	const uint32_t p = w.length;
	TensorElement out = TensorElement::zero(out_space, p + q);
	for (auto &[word, c] : w.terms) {
		// walk all compositions i_1+..+i_p = q with parts at most the order
		std::vector<uint32_t> parts(p, 0);
		auto emit = [&](auto &self, uint32_t slot, uint32_t left, const TensorElement &acc) -> void {
			if (slot + 1 == p) {
				if (left > lambda.order)
					return;
				parts[slot] = left;
				TensorElement prod = graded_product(acc, lambda.value(left, word[slot]));
				Rational f = weighted ? Rational(left + 1) : Rational(1);
				out += prod * (c * f);
				return;
			}
			for (uint32_t k = 0; k <= left && k <= lambda.order; ++k) {
				parts[slot] = k;
				self(self, slot + 1, left - k, graded_product(acc, lambda.value(k, word[slot])));
			}
		};
		TensorElement unit = TensorElement::scalar(Space::Sym, Polynomial::constant(1, ctx.nvars()));
		emit(emit, 0, q, unit);
	}
	return out;
}

} // namespace

TensorElement slotwise_substitute(const ComparisonMap &lambda, uint32_t q, const TensorElement &w,
                                  const GradedContext &ctx)
{
	return substitute(lambda, q, w, true, Space::SemiSym, ctx);
}

TensorElement slotwise_substitute_sym(const ComparisonMap &lambda, uint32_t q,
                                      const TensorElement &w, const GradedContext &ctx)
{
	return substitute(lambda, q, w, false, Space::Sym, ctx);
}

ComparisonMap compare_extended(const ExtendedConnection &t, const ExtendedConnection &s,
                               const Derivation &d, const GradedContext &ctx)
{
	if (t.order != s.order)
		throw std::invalid_argument("compare_extended: truncation orders differ");
	for (uint32_t i = 1; i + 1 <= t.order; ++i)
		for (size_t v = 0; v < ctx.nvars(); ++v)
			if (!in_symmetrized_part(apply_extended(t, i, d.value(v), d, ctx), ctx))
				throw std::invalid_argument("compare_extended: reference not flat at order " +
				                            std::to_string(i) + " on D(" + ctx.ring().vars[v].name + ")");

	ComparisonMap lambda = ComparisonMap::identity(0, ctx);
	for (uint32_t i = 1; i <= t.order; ++i) {
		lambda.values.emplace_back();
		for (size_t g = 0; g < ctx.ngens(); ++g) {
			TensorElement r = TensorElement::zero(Space::SemiSym, i + 1);
			for (uint32_t l = 1; l + 1 <= i; ++l)
				r += slotwise_substitute(lambda, i - l, t.value(l, g), ctx);
			lambda.values[i].push_back((s.value(i, g) - r - t.value(i, g)) *
			                           (Rational(1) / Rational(i + 1)));
		}
		lambda.order = i;

		for (size_t r = 0; r < ctx.module().relations.size(); ++r)
			if (!is_zero(lambda.apply(i, ModuleElement{ctx.module().relations[r]}, ctx), ctx))
				throw std::logic_error("comparison map not module-linear on relation " +
				                       std::to_string(r + 1) + " at order " + std::to_string(i));

		// no Leibniz terms: the defining difference must scale module-linearly
		// under every variable, otherwise one input is not an extended connection
		for (size_t v = 0; v < ctx.nvars(); ++v)
			for (size_t g = 0; g < ctx.ngens(); ++g) {
				Polynomial xv = Polynomial::variable(v, ctx.nvars());
				ModuleElement xg = ModuleElement::generator(g, ctx.ngens(), ctx.nvars()) * xv;
				TensorElement diff = apply_extended(s, i, xg, d, ctx) - apply_extended(t, i, xg, d, ctx);
				for (uint32_t l = 1; l + 1 <= i; ++l)
					diff -= slotwise_substitute(lambda, i - l, apply_extended(t, l, xg, d, ctx), ctx);
				diff -= lambda.value(i, g) * (xv * Rational(i + 1));
				if (!is_zero(diff, ctx))
					throw std::logic_error("comparison map has Leibniz terms at order " + std::to_string(i) +
					                       " on " + ctx.ring().vars[v].name + "*" + ctx.module().gens[g].name);
			}
	}
	return lambda;
}

} // namespace jetcalc
