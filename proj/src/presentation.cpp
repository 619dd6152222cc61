#include "jetcalc/presentation.hpp"

namespace jetcalc {

ModuleElement ModuleElement::generator(size_t g, size_t ngens, size_t nvars)
{
	ModuleElement m = zero(ngens);
	m.coeffs[g] = Polynomial::constant(1, nvars);
	return m;
}

bool ModuleElement::is_identically_zero() const
{
	for (auto &c : coeffs)
		if (!c.is_zero())
			return false;
	return true;
}

ModuleElement ModuleElement::operator+(const ModuleElement &o) const
{
	ModuleElement r = *this;
	r += o;
	return r;
}

ModuleElement &ModuleElement::operator+=(const ModuleElement &o)
{
	for (size_t i = 0; i < coeffs.size(); ++i)
		coeffs[i] += o.coeffs[i];
	return *this;
}

ModuleElement ModuleElement::operator-(const ModuleElement &o) const
{
	ModuleElement r = *this;
	for (size_t i = 0; i < coeffs.size(); ++i)
		r.coeffs[i] -= o.coeffs[i];
	return r;
}

ModuleElement ModuleElement::operator*(const Polynomial &p) const
{
	ModuleElement r = *this;
	for (auto &c : r.coeffs)
		c = c * p;
	return r;
}

ModuleElement ModuleElement::operator*(const Rational &c) const
{
	ModuleElement r = *this;
	for (auto &k : r.coeffs)
		k = k * c;
	return r;
}

static void enumerate_monomials(int w, size_t v, const RingPresentation &ring, Monomial &cur,
                                std::vector<Monomial> &out)
{
	if (v == ring.nvars()) {
		if (w == 0)
			out.push_back(cur);
		return;
	}
	int vw = ring.vars[v].weight;
	for (int e = 0; e * vw <= w; ++e) {
		cur.exps[v] = uint32_t(e);
		enumerate_monomials(w - e * vw, v + 1, ring, cur, out);
	}
	cur.exps[v] = 0;
}

std::vector<Monomial> weighted_monomials(int w, const RingPresentation &ring)
{
	std::vector<Monomial> out;
	if (w < 0)
		return out;
	Monomial cur = Monomial::one(ring.nvars());
	enumerate_monomials(w, 0, ring, cur, out);
	std::sort(out.begin(), out.end());
	return out;
}

std::map<int, Polynomial> graded_split(const Polynomial &p, const RingPresentation &ring)
{
	std::map<int, Polynomial> parts;
	for (auto &[m, c] : p.terms())
		parts[ring.weight(m)].add_term(m, c);
	return parts;
}

std::optional<int> homogeneous_weight(const Polynomial &p, const RingPresentation &ring)
{
	if (p.is_zero())
		return std::nullopt;
	auto parts = graded_split(p, ring);
	if (parts.size() != 1)
		return std::nullopt;
	return parts.begin()->first;
}

ValidationReport validate_presentation(const RingPresentation &ring, const ModulePresentation &mod)
{
	ValidationReport report;
	for (auto &v : ring.vars)
		if (v.weight < 1)
			report.add("ring variable " + v.name, "non-positive weight");
	for (size_t i = 0; i < ring.ideal.size(); ++i) {
		const Polynomial &f = ring.ideal[i];
		if (f.is_zero()) {
			report.add("ideal generator " + std::to_string(i + 1), "identically zero");
			continue;
		}
		if (!homogeneous_weight(f, ring))
			report.add("ideal generator " + std::to_string(i + 1), "not weighted-homogeneous");
	}
	for (size_t r = 0; r < mod.relations.size(); ++r) {
		const auto &rel = mod.relations[r];
		std::string where = "module relation " + std::to_string(r + 1);
		if (rel.size() != mod.ngens()) {
			report.add(where, "coefficient vector length does not match generator count");
			continue;
		}
		std::optional<int> relweight;
		bool bad = false;
		for (size_t g = 0; g < rel.size(); ++g) {
			if (rel[g].is_zero())
				continue;
			auto w = homogeneous_weight(rel[g], ring);
			if (!w) {
				report.add(where, "coefficient of " + mod.gens[g].name + " not homogeneous");
				bad = true;
				continue;
			}
			int total = *w + mod.gens[g].weight;
			if (relweight && *relweight != total) {
				bad = true;
				report.add(where, "mixed weights across generators");
			}
			relweight = total;
		}
		if (!bad && !relweight)
			report.add(where, "identically zero");
	}
	return report;
}

} // namespace jetcalc
