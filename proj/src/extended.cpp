#include "jetcalc/extended.hpp"

#include "jetcalc/compare.hpp"

#include <stdexcept>

namespace jetcalc {

ExtendedConnection ExtendedConnection::truncated(uint32_t new_order) const
{
	if (new_order > order)
		throw std::invalid_argument("truncation above the stored order");
	ExtendedConnection t;
	t.order = new_order;
	t.values.assign(values.begin(), values.begin() + new_order + 1);
	return t;
}

ExtendedConnection iterate_connection(const Connection &c, uint32_t order, const Derivation &d,
                                      const GradedContext &ctx)
{
	ExtendedConnection t;
	t.order = order;
	t.values.resize(order + 1);
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		TensorElement cur =
		    TensorElement::word(Space::SemiSym, Word{uint32_t(g)}, Polynomial::constant(1, ctx.nvars()));
		t.values[0].push_back(cur);
		for (uint32_t q = 1; q <= order; ++q) {
			cur = nabla(c, cur, d, ctx) * (Rational(1) / Rational(q));
			t.values[q].push_back(cur);
		}
	}
	return t;
}

TensorElement apply_extended(const ExtendedConnection &t, uint32_t i, const ModuleElement &m,
                             const Derivation &d, const GradedContext &ctx)
{
	if (i > t.order)
		throw std::invalid_argument("apply_extended: order exceeds the truncation");
	TensorElement out = TensorElement::zero(Space::SemiSym, i + 1);
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		const Polynomial &a = m.coeffs[g];
		if (a.is_zero())
			continue;
		out += t.value(i, g) * a;
		if (i == 0)
			continue;
		ModuleElement da = apply_derivation(d, a, ctx);
		if (da.is_identically_zero())
			continue;
		for (uint32_t j = 1; j <= i; ++j)
			out += graded_product(apply_extended(t, j - 1, da, d, ctx), t.value(i - j, g)) *
			       (Rational(1) / Rational(j));
	}
	return out;
}

TensorElement pair_extension(const ExtendedConnection &t, uint32_t j, const TensorElement &w,
                             const Derivation &d, const GradedContext &ctx)
{
	if (w.length != 2)
		throw std::invalid_argument("pair_extension acts on length-2 tensors");
	if (j > t.order)
		throw std::invalid_argument("pair_extension: degree exceeds the truncation");
	auto direct = [&](uint32_t k, uint32_t a, uint32_t b) {
		TensorElement sum = TensorElement::zero(Space::SemiSym, k + 2);
		for (uint32_t i = 0; i <= k; ++i)
			sum += graded_product(t.value(i, a), t.value(k - i, b));
		return sum;
	};
	TensorElement out = TensorElement::zero(Space::SemiSym, j + 2);
	for (auto &[word, c] : w.terms) {
		out += direct(j, word[0], word[1]) * c;
		ModuleElement dc = apply_derivation(d, c, ctx);
		if (dc.is_identically_zero())
			continue;
		for (uint32_t i = 1; i <= j; ++i)
			out += graded_product(apply_extended(t, j - i, dc, d, ctx), direct(i - 1, word[0], word[1])) *
			       (Rational(1) / Rational(j + 1 - i));
	}
	return out;
}

ValidationReport validate_extended(const ExtendedConnection &t, const Derivation &d,
                                   const GradedContext &ctx)
{
	ValidationReport report;
	const auto &mod = ctx.module();
	if (t.values.size() != t.order + 1 ||
	    std::any_of(t.values.begin(), t.values.end(),
	                [&](const auto &v) { return v.size() != ctx.ngens(); })) {
		report.add("extended connection", "value table does not match order and generator count");
		return report;
	}
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		TensorElement unit = TensorElement::word(Space::SemiSym, Word{uint32_t(g)},
		                                         Polynomial::constant(1, ctx.nvars()));
		if (!is_zero(t.value(0, g) - unit, ctx))
			report.add("order 0", "value on " + mod.gens[g].name + " is not the generator");
	}
	for (size_t r = 0; r < mod.relations.size(); ++r) {
		ModuleElement rel{mod.relations[r]};
		for (uint32_t i = 1; i <= t.order; ++i)
			if (!is_zero(apply_extended(t, i, rel, d, ctx), ctx))
				report.add("order " + std::to_string(i),
				           "not well defined on module relation " + std::to_string(r + 1));
	}
	// product coherence: the two Leibniz routes through x*(y*g) and (x*y)*g
	// must agree; this is where tampered top-order values surface.
	for (uint32_t i = 1; i <= t.order; ++i) {
		for (size_t v = 0; v < ctx.nvars(); ++v)
			for (size_t u = 0; u < ctx.nvars(); ++u)
				for (size_t g = 0; g < ctx.ngens(); ++g) {
					Polynomial xv = Polynomial::variable(v, ctx.nvars());
					Polynomial xu = Polynomial::variable(u, ctx.nvars());
					ModuleElement inner = ModuleElement::generator(g, ctx.ngens(), ctx.nvars()) * xu;
					ModuleElement whole = inner * xv;
					TensorElement lhs = apply_extended(t, i, whole, d, ctx);
					TensorElement rhs = apply_extended(t, i, inner, d, ctx) * xv;
					ModuleElement dv = apply_derivation(d, xv, ctx);
					for (uint32_t j = 1; j <= i; ++j)
						rhs += graded_product(apply_extended(t, j - 1, dv, d, ctx),
						                      apply_extended(t, i - j, inner, d, ctx)) *
						       (Rational(1) / Rational(j));
					if (!is_zero(lhs - rhs, ctx)) {
						report.add("order " + std::to_string(i),
						           "product coherence fails on " + ctx.ring().vars[v].name + "*" +
						               ctx.ring().vars[u].name + "*" + mod.gens[g].name);
					}
				}
	}
	return report;
}

bool is_flat_extended(const ExtendedConnection &t, const Derivation &d, const GradedContext &ctx)
{
	for (uint32_t i = 1; i <= t.order; ++i)
		for (size_t v = 0; v < ctx.nvars(); ++v)
			if (!in_symmetrized_part(apply_extended(t, i, d.value(v), d, ctx), ctx))
				return false;
	return true;
}

ExtendedConnection extend_flat(const Connection &c, uint32_t order, const Derivation &d,
                               const GradedContext &ctx)
{
	for (size_t v = 0; v < ctx.nvars(); ++v) {
		TensorElement w = apply_connection(c, d.value(v), d, ctx);
		if (!in_symmetrized_part(project(w, Space::SemiSym), ctx))
			throw std::invalid_argument("connection is not flat on D(" + ctx.ring().vars[v].name + ")");
	}

	ExtendedConnection t;
	t.order = order;
	t.values.resize(order + 1);
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		t.values[0].push_back(TensorElement::word(Space::SemiSym, Word{uint32_t(g)},
		                                          Polynomial::constant(1, ctx.nvars())));
		if (order >= 1)
			t.values[1].push_back(project(c.value(g), Space::SemiSym));
	}
	if (order <= 1)
		return t;

	ExtendedConnection s = iterate_connection(c, order, d, ctx);
	ComparisonMap lambda = ComparisonMap::identity(0, ctx);

	for (uint32_t n = 2; n <= order; ++n) {
		ExtendedConnection head = t.truncated(n - 1);

		// comparison of the iterated candidate with the current truncation
		lambda.values.emplace_back();
		for (size_t g = 0; g < ctx.ngens(); ++g) {
			TensorElement r = TensorElement::zero(Space::SemiSym, n);
			for (uint32_t l = 1; l + 1 <= n - 1; ++l)
				r += slotwise_substitute(lambda, n - 1 - l, head.value(l, g), ctx);
			lambda.values[n - 1].push_back((s.value(n - 1, g) - r - head.value(n - 1, g)) *
			                               (Rational(1) / Rational(n)));
		}
		lambda.order = n - 1;
		for (size_t r = 0; r < ctx.module().relations.size(); ++r)
			if (!is_zero(lambda.apply(n - 1, ModuleElement{ctx.module().relations[r]}, ctx), ctx))
				throw std::logic_error("flat extension: comparison map not module-linear on relation " +
				                       std::to_string(r + 1));

		for (size_t g = 0; g < ctx.ngens(); ++g) {
			// iterated candidate transported along the comparison map
			TensorElement u = s.value(n, g);
			for (uint32_t l = 1; l <= n - 1; ++l)
				u -= slotwise_substitute(lambda, n - l, head.value(l, g), ctx);

			// correction that enforces the switch identity at the top order
			TensorElement om = project(c.value(g), Space::SemiSym);
			om = om - switch_op(om);
			TensorElement tm = pair_extension(head, n - 1, om, d, ctx) * (Rational(1) / Rational(n + 1));
			TensorElement vdiff = u - tm;
			t.values[n].push_back(u - (vdiff * Rational(n) - switch_op(vdiff)) *
			                              (Rational(1) / Rational(n + 1)));
		}

		for (size_t r = 0; r < ctx.module().relations.size(); ++r)
			if (!is_zero(apply_extended(t.truncated(n), n, ModuleElement{ctx.module().relations[r]}, d, ctx),
			             ctx))
				throw std::logic_error("flat extension: order " + std::to_string(n) +
				                       " not well defined on relation " + std::to_string(r + 1));
	}
	return t;
}

} // namespace jetcalc
