#include "jetcalc/hasse.hpp"

#include <stdexcept>

namespace jetcalc {

HasseDerivation hasse_from_extended(const ExtendedConnection &t, const Derivation &d,
                                    uint32_t order, const GradedContext &ctx)
{
	if (order > t.order + 1)
		throw std::invalid_argument("hasse_from_extended: order exceeds source order + 1");
	HasseDerivation h;
	h.order = order;
	h.source = t;
	h.deriv = d;
	h.var_values.resize(order + 1);
	for (uint32_t i = 1; i <= order; ++i)
		for (size_t v = 0; v < ctx.nvars(); ++v)
			h.var_values[i].push_back(
			    project(apply_extended(t, i - 1, d.value(v), d, ctx), Space::Sym) *
			    (Rational(1) / Rational(i)));
	return h;
}

TensorElement hasse_apply(const HasseDerivation &h, const Polynomial &a, uint32_t i,
                          const GradedContext &ctx)
{
	if (i > h.order)
		throw std::invalid_argument("hasse_apply: order exceeds the truncation");
	if (i == 0)
		return TensorElement::scalar(Space::Sym, a);
	ModuleElement da = apply_derivation(h.deriv, a, ctx);
	return project(apply_extended(h.source, i - 1, da, h.deriv, ctx), Space::Sym) *
	       (Rational(1) / Rational(i));
}

Polynomial random_homogeneous(std::mt19937_64 &rng, int weight_cap, const RingPresentation &ring)
{
	std::uniform_int_distribution<int> wdist(1, weight_cap);
	for (int attempt = 0; attempt < 200; ++attempt) {
		int w = wdist(rng);
		auto mons = weighted_monomials(w, ring);
		if (mons.empty())
			continue;
		std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
		std::uniform_int_distribution<int> cdist(1, 6);
		size_t nterms = 1 + pick(rng) % std::min<size_t>(3, mons.size());
		Polynomial p;
		for (size_t k = 0; k < nterms; ++k) {
			int c = cdist(rng);
			p.add_term(mons[pick(rng)], Rational(c <= 3 ? c : 3 - c)); // -2..3, never 0
		}
		if (!p.is_zero())
			return p;
	}
	throw std::runtime_error("random_homogeneous: no monomials below the weight cap");
}

HasseAxiomReport check_hasse_axioms(const HasseDerivation &h, size_t pair_budget, uint64_t seed,
                                    int weight_cap, const GradedContext &ctx)
{
	HasseAxiomReport report;
	std::mt19937_64 rng(seed);
	for (size_t n = 0; n < pair_budget; ++n) {
		Polynomial a = random_homogeneous(rng, weight_cap, ctx.ring());
		Polynomial b = random_homogeneous(rng, weight_cap, ctx.ring());
		report.pairs_checked += 1;
		for (uint32_t i = 1; i <= h.order; ++i) {
			TensorElement lhs = hasse_apply(h, a * b, i, ctx);
			for (uint32_t j = 0; j <= i; ++j)
				lhs -= graded_product(hasse_apply(h, a, j, ctx), hasse_apply(h, b, i - j, ctx));
			if (!is_zero(lhs, ctx)) {
				report.failure = HasseAxiomFailure{i, a, b};
				return report;
			}
		}
	}
	return report;
}

AlgebraAutomorphism automorphism_from_comparison(ComparisonMap lambda, const GradedContext &ctx)
{
	for (size_t g = 0; g < ctx.ngens(); ++g) {
		TensorElement unit = TensorElement::word(Space::SemiSym, Word{uint32_t(g)},
		                                         Polynomial::constant(1, ctx.nvars()));
		if (!is_zero(lambda.value(0, g) - unit, ctx))
			throw std::invalid_argument("automorphism needs an identity-based comparison map");
	}
	return AlgebraAutomorphism{std::move(lambda)};
}

TensorElement apply_automorphism(const AlgebraAutomorphism &phi, uint32_t q,
                                 const TensorElement &w, const GradedContext &ctx)
{
	if (w.length == 0)
		return q == 0 ? w : TensorElement::zero(Space::Sym, q);
	return slotwise_substitute_sym(phi.comparison, q, w, ctx);
}

bool verify_equivalence(const HasseDerivation &h, const HasseDerivation &h2,
                        const AlgebraAutomorphism &phi, uint32_t order, const GradedContext &ctx)
{
	if (h.order < order || h2.order < order || phi.comparison.order + 1 < order)
		throw std::invalid_argument("verify_equivalence: truncations too short for the order");
	for (uint32_t i = 1; i <= order; ++i)
		for (size_t v = 0; v < ctx.nvars(); ++v) {
			TensorElement diff = h2.var_value(i, v);
			for (uint32_t j = 1; j <= i; ++j)
				diff -= apply_automorphism(phi, i - j, h.var_value(j, v), ctx);
			if (!is_zero(diff, ctx))
				return false;
		}
	return true;
}

bool cocycle_check(const HasseDerivation &h1, const HasseDerivation &h2, const HasseDerivation &h3,
                   uint32_t order, const GradedContext &ctx)
{
	const HasseDerivation *hs[3] = {&h1, &h2, &h3};
	for (auto *h : hs) {
		if (h->source.order != h1.source.order)
			throw std::invalid_argument("cocycle_check: source orders differ");
		if (h->deriv.values.size() != ctx.nvars() ||
		    h->source.values[0].size() != ctx.ngens())
			throw std::invalid_argument("cocycle_check: presentation mismatch");
		for (size_t v = 0; v < ctx.nvars(); ++v)
			if (!equal(h->deriv.value(v), h1.deriv.value(v), ctx))
				throw std::invalid_argument("cocycle_check: derivations differ");
	}
	ComparisonMap l12 = compare_extended(h1.source, h2.source, h1.deriv, ctx);
	ComparisonMap l23 = compare_extended(h2.source, h3.source, h1.deriv, ctx);
	ComparisonMap l13 = compare_extended(h1.source, h3.source, h1.deriv, ctx);
	for (uint32_t q = 0; q + 1 <= order && q <= l13.order; ++q)
		for (size_t g = 0; g < ctx.ngens(); ++g) {
			TensorElement unit = TensorElement::word(Space::Sym, Word{uint32_t(g)},
			                                         Polynomial::constant(1, ctx.nvars()));
			TensorElement lhs = TensorElement::zero(Space::Sym, q + 1);
			for (uint32_t b = 0; b <= q; ++b)
				lhs += slotwise_substitute_sym(l23, q - b, slotwise_substitute_sym(l12, b, unit, ctx),
				                               ctx);
			TensorElement rhs = slotwise_substitute_sym(l13, q, unit, ctx);
			if (!is_zero(lhs - rhs, ctx))
				return false;
		}
	return true;
}

TensorElement hasse_commuting_closed_form(const Derivation &d, const Polynomial &a, uint32_t q,
                                          const GradedContext &ctx)
{
	if (ctx.module().relations.size() != 0 || !ctx.ring().ideal.empty())
		throw std::invalid_argument("closed form needs a free module over a free ring");
	if (q == 0)
		return TensorElement::scalar(Space::Sym, a);
	// coefficient derivations a -> coefficient of g in D(a)
	auto coeff_der = [&](size_t g, const Polynomial &p) {
		return apply_derivation(d, p, ctx).coeffs[g];
	};
	Rational qfact = 1;
	for (uint32_t k = 2; k <= q; ++k)
		qfact *= k;
	TensorElement out = TensorElement::zero(Space::Sym, q);
	Word word(q, 0);
	while (true) {
		Polynomial p = a;
		for (uint32_t k = 0; k < q && !p.is_zero(); ++k)
			p = coeff_der(word[k], p);
		if (!p.is_zero())
			out += TensorElement::word(Space::Sym, word, p * (Rational(1) / qfact));
		size_t i = q;
		bool done = true;
		while (i > 0) {
			--i;
			if (++word[i] < ctx.ngens()) {
				done = false;
				break;
			}
			word[i] = 0;
		}
		if (done)
			break;
	}
	return out;
}

} // namespace jetcalc
