#include "jetcalc/derivation.hpp"

namespace jetcalc {

ModuleElement apply_derivation(const Derivation &d, const Polynomial &a, const GradedContext &ctx)
{
	ModuleElement out = ModuleElement::zero(ctx.ngens());
	for (size_t v = 0; v < ctx.nvars(); ++v) {
		Polynomial pa = a.derivative(v);
		if (!pa.is_zero())
			out += d.value(v) * pa;
	}
	return out;
}

ValidationReport validate_derivation(const Derivation &d, const GradedContext &ctx)
{
	ValidationReport report;
	const auto &ring = ctx.ring();
	if (d.values.size() != ctx.nvars()) {
		report.add("derivation", "one value per ring variable required");
		return report;
	}
	for (size_t v = 0; v < ctx.nvars(); ++v) {
		int want = ring.vars[v].weight + d.degree;
		for (size_t g = 0; g < ctx.ngens(); ++g) {
			const Polynomial &c = d.values[v].coeffs[g];
			if (c.is_zero())
				continue;
			auto w = homogeneous_weight(c, ring);
			if (!w || *w + ctx.module().gens[g].weight != want)
				report.add("D(" + ring.vars[v].name + ")",
				           "value not homogeneous of weight " + std::to_string(want));
		}
	}
	if (!report.ok())
		return report;
	for (size_t i = 0; i < ring.ideal.size(); ++i) {
		if (!is_zero(apply_derivation(d, ring.ideal[i], ctx), ctx))
			report.add("ideal generator " + std::to_string(i + 1),
			           "derivation does not vanish on the ideal");
	}
	return report;
}

} // namespace jetcalc
