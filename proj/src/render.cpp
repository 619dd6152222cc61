#include "jetcalc/render.hpp"

#include <algorithm>
#include <sstream>

namespace jetcalc {

namespace {

std::string render_monomial(const Monomial &m, const RingPresentation &ring)
{
	std::string out;
	for (size_t v = 0; v < m.exps.size(); ++v) {
		if (m.exps[v] == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += ring.vars[v].name;
		if (m.exps[v] > 1)
			out += "^" + std::to_string(m.exps[v]);
	}
	return out;
}

std::string render_word(const Word &w, const ModulePresentation &mod)
{
	std::string out;
	for (size_t i = 0; i < w.size(); ++i) {
		if (i > 0)
			out += "@";
		out += mod.gens[w[i]].name;
	}
	return out;
}

struct RenderedTerm {
	bool negative;
	std::string body;
};

RenderedTerm render_term(const Rational &coeff, const Monomial &m, const Word &w,
                         const RingPresentation &ring, const ModulePresentation &mod)
{
	Rational a = coeff < 0 ? Rational(-coeff) : coeff;
	std::string mon = render_monomial(m, ring);
	std::string word = render_word(w, mod);
	bool scaled = (a != 1) || !mon.empty();
	std::string body;
	if (a != 1 || (mon.empty() && word.empty()))
		body = to_string(a);
	if (!mon.empty())
		body += (body.empty() ? "" : "*") + mon;
	if (!word.empty()) {
		std::string wpart = (w.size() >= 2 && scaled) ? "(" + word + ")" : word;
		body += (body.empty() ? "" : "*") + wpart;
	}
	return {coeff < 0, body};
}

std::string join_terms(std::vector<RenderedTerm> terms)
{
	if (terms.empty())
		return "0";
	std::string out;
	for (size_t i = 0; i < terms.size(); ++i) {
		if (i == 0)
			out += terms[i].negative ? "-" : "";
		else
			out += terms[i].negative ? " - " : " + ";
		out += terms[i].body;
	}
	return out;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial &p,
                                                        const RingPresentation &ring)
{
	std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
	std::stable_sort(ts.begin(), ts.end(), [&](const auto &a, const auto &b) {
		int wa = ring.weight(a.first), wb = ring.weight(b.first);
		return wa != wb ? wa < wb : a.first < b.first;
	});
	return ts;
}

} // namespace

std::string render_expression(const Polynomial &p, const RingPresentation &ring)
{
	ModulePresentation none;
	std::vector<RenderedTerm> terms;
	for (auto &[m, c] : sorted_terms(p, ring))
		terms.push_back(render_term(c, m, Word{}, ring, none));
	return join_terms(std::move(terms));
}

std::string render_expression(const TensorElement &t, const RingPresentation &ring,
                              const ModulePresentation &mod)
{
	std::vector<RenderedTerm> terms;
	for (auto &[w, p] : t.terms)
		for (auto &[m, c] : sorted_terms(p, ring))
			terms.push_back(render_term(c, m, w, ring, mod));
	return join_terms(std::move(terms));
}

std::string render_expression(const ModuleElement &m, const RingPresentation &ring,
                              const ModulePresentation &mod)
{
	return render_expression(tensor_of(m), ring, mod);
}

std::string render_scenario(const Scenario &s)
{
	std::ostringstream out;
	out << "[ring]\n";
	out << "vars:";
	for (size_t v = 0; v < s.ring.vars.size(); ++v)
		out << (v ? ", " : " ") << s.ring.vars[v].name << ":" << s.ring.vars[v].weight;
	out << "\n";
	if (!s.ring.ideal.empty()) {
		out << "ideal:";
		for (size_t i = 0; i < s.ring.ideal.size(); ++i)
			out << (i ? ", " : " ") << render_expression(s.ring.ideal[i], s.ring);
		out << "\n";
	}
	out << "\n[module]\n";
	out << "gens:";
	for (size_t g = 0; g < s.module.gens.size(); ++g)
		out << (g ? ", " : " ") << s.module.gens[g].name << ":" << s.module.gens[g].weight;
	out << "\n";
	if (!s.module.relations.empty()) {
		out << "rels:";
		for (size_t r = 0; r < s.module.relations.size(); ++r)
			out << (r ? ", " : " ")
			    << render_expression(ModuleElement{s.module.relations[r]}, s.ring, s.module);
		out << "\n";
	}
	out << "\n[derivation]\n";
	out << "degree: " << s.derivation.degree << "\n";
	for (size_t v = 0; v < s.ring.vars.size(); ++v)
		out << "D(" << s.ring.vars[v].name
		    << ") = " << render_expression(s.derivation.values[v], s.ring, s.module) << "\n";
	if (s.connection) {
		out << "\n[connection]\n";
		out << "degree: " << s.connection->degree << "\n";
		for (size_t g = 0; g < s.module.gens.size(); ++g)
			out << "G(" << s.module.gens[g].name
			    << ") = " << render_expression(s.connection->values[g], s.ring, s.module) << "\n";
	}
	ScenarioOptions defaults;
	if (!(s.options == defaults)) {
		out << "\n[options]\n";
		if (s.options.order != defaults.order)
			out << "order: " << s.options.order << "\n";
		if (s.options.degree)
			out << "degree: " << *s.options.degree << "\n";
		if (s.options.seed != defaults.seed)
			out << "seed: " << s.options.seed << "\n";
	}
	return out.str();
}

} // namespace jetcalc
