#include "jetcalc/connection.hpp"

#include <stdexcept>

namespace jetcalc {

TensorElement apply_connection(const Connection &c, const ModuleElement &m, const Derivation &d,
                               const GradedContext &ctx)
{
	TensorElement out = TensorElement::zero(Space::Tensor, 2);
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		const Polynomial &a = m.coeffs[g];
		if (a.is_zero())
			continue;
		out += c.value(g) * a;
		ModuleElement da = apply_derivation(d, a, ctx);
		for (size_t l = 0; l < ctx.ngens(); ++l)
			if (!da.coeffs[l].is_zero())
				out.add_term(Word{uint32_t(l), uint32_t(g)}, da.coeffs[l]);
	}
	return out;
}

ValidationReport validate_connection(const Connection &c, const Derivation &d,
                                     const GradedContext &ctx)
{
	ValidationReport report;
	const auto &mod = ctx.module();
	if (c.values.size() != ctx.ngens()) {
		report.add("connection", "one value per module generator required");
		return report;
	}
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		if (c.value(g).length != 2) {
			report.add("G(" + mod.gens[g].name + ")", "value must be a length-2 tensor");
			return report;
		}
		int want = mod.gens[g].weight + c.degree;
		for (auto &[W, piece] : graded_split(c.value(g), ctx))
			if (W != want)
				report.add("G(" + mod.gens[g].name + ")",
				           "value not homogeneous of weight " + std::to_string(want));
	}
	if (!report.ok())
		return report;
	for (size_t r = 0; r < mod.relations.size(); ++r) {
		ModuleElement rel{mod.relations[r]};
		if (!is_zero(apply_connection(c, rel, d, ctx), ctx))
			report.add("module relation " + std::to_string(r + 1),
			           "connection values disagree across the relation");
	}
	return report;
}

bool is_flat_connection(const Connection &c, const Derivation &d, const GradedContext &ctx)
{
	for (size_t v = 0; v < ctx.nvars(); ++v) {
		TensorElement w = apply_connection(c, d.value(v), d, ctx);
		if (!in_symmetrized_part(project(w, Space::SemiSym), ctx))
			return false;
	}
	return true;
}

TensorElement nabla(const Connection &c, const TensorElement &t, const Derivation &d,
                    const GradedContext &ctx)
{
	if (t.length < 1)
		throw std::invalid_argument("nabla needs length >= 1");
	TensorElement out = TensorElement::zero(Space::SemiSym, t.length + 1);
	for (auto &[w, a] : t.terms) {
		// D(a) w
		ModuleElement da = apply_derivation(d, a, ctx);
		for (size_t l = 0; l < ctx.ngens(); ++l) {
			if (da.coeffs[l].is_zero())
				continue;
			Word v;
			v.reserve(w.size() + 1);
			v.push_back(uint32_t(l));
			v.insert(v.end(), w.begin(), w.end());
			out.add_term(v, da.coeffs[l]);
		}
		// a * sum over slots of the inserted connection value
		for (size_t i = 0; i < w.size(); ++i) {
			for (auto &[gw, gp] : c.value(w[i]).terms) {
				Word v;
				v.reserve(w.size() + 1);
				v.insert(v.end(), w.begin(), w.begin() + i);
				v.insert(v.end(), gw.begin(), gw.end());
				v.insert(v.end(), w.begin() + i + 1, w.end());
				out.add_term(v, a * gp);
			}
		}
	}
	return out;
}

} // namespace jetcalc
