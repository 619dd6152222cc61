#include "jetcalc/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcalc {

std::string space_name(Space s)
{
	switch (s) {
	case Space::Tensor:
		return "tensor";
	case Space::Sym:
		return "sym";
	case Space::Alt:
		return "alt";
	case Space::SemiSym:
		return "semisym";
	}
	return "?";
}

TensorElement TensorElement::scalar(Space s, const Polynomial &p)
{
	TensorElement t{s, 0, {}};
	t.add_term(Word{}, p);
	return t;
}

TensorElement TensorElement::word(Space s, Word w, const Polynomial &coeff)
{
	TensorElement t{s, uint32_t(w.size()), {}};
	t.add_term(w, coeff);
	return t;
}

bool TensorElement::is_identically_zero() const
{
	for (auto &[w, p] : terms)
		if (!p.is_zero())
			return false;
	return true;
}

void TensorElement::add_term(const Word &w, const Polynomial &p)
{
	if (p.is_zero())
		return;
	auto [it, fresh] = terms.try_emplace(w, p);
	if (!fresh) {
		it->second += p;
		if (it->second.is_zero())
			terms.erase(it);
	}
}

TensorElement TensorElement::operator+(const TensorElement &o) const
{
	TensorElement r = *this;
	r += o;
	return r;
}

TensorElement &TensorElement::operator+=(const TensorElement &o)
{
	if (length != o.length)
		throw std::invalid_argument("tensor length mismatch in sum");
	for (auto &[w, p] : o.terms)
		add_term(w, p);
	return *this;
}

TensorElement TensorElement::operator-(const TensorElement &o) const
{
	TensorElement r = *this;
	r -= o;
	return r;
}

TensorElement &TensorElement::operator-=(const TensorElement &o)
{
	if (length != o.length)
		throw std::invalid_argument("tensor length mismatch in difference");
	for (auto &[w, p] : o.terms)
		add_term(w, -p);
	return *this;
}

TensorElement TensorElement::operator-() const
{
	TensorElement r{space, length, {}};
	for (auto &[w, p] : terms)
		r.terms.emplace(w, -p);
	return r;
}

TensorElement TensorElement::operator*(const Polynomial &p) const
{
	TensorElement r{space, length, {}};
	for (auto &[w, q] : terms)
		r.add_term(w, q * p);
	return r;
}

TensorElement TensorElement::operator*(const Rational &c) const
{
	TensorElement r{space, length, {}};
	if (c == 0)
		return r;
	for (auto &[w, q] : terms)
		r.terms.emplace(w, q * c);
	return r;
}

TensorElement tensor_of(const ModuleElement &m, Space s)
{
	TensorElement t{s, 1, {}};
	for (size_t g = 0; g < m.coeffs.size(); ++g)
		t.add_term(Word{uint32_t(g)}, m.coeffs[g]);
	return t;
}

ModuleElement module_of(const TensorElement &t, size_t ngens)
{
	if (t.length != 1)
		throw std::invalid_argument("module_of needs a length-1 tensor");
	ModuleElement m = ModuleElement::zero(ngens);
	for (auto &[w, p] : t.terms)
		m.coeffs[w[0]] += p;
	return m;
}

TensorElement graded_product(const TensorElement &a, const TensorElement &b)
{
	if (b.length == 0 && (a.space == Space::SemiSym || a.space == Space::Tensor) && a.length > 0)
		throw std::invalid_argument("graded_product: scalar right factor with a positional space tag");
	TensorElement r{b.length > 0 ? b.space : a.space, a.length + b.length, {}};
	for (auto &[wa, pa] : a.terms)
		for (auto &[wb, pb] : b.terms) {
			Word w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			r.add_term(w, pa * pb);
		}
	return r;
}

TensorElement switch_op(const TensorElement &t)
{
	if (t.space != Space::SemiSym)
		throw std::invalid_argument("switch operator is defined on the semi-symmetric space");
	const uint32_t n = t.length;
	if (n < 1)
		throw std::invalid_argument("switch operator needs length >= 1");
	TensorElement r = TensorElement::zero(t.space, n);
	if (n == 1)
		return r;
	for (auto &[w, p] : t.terms) {
		for (uint32_t i = 1; i <= n - 1; ++i) {
			// last i letters reversed, then the first n-i letters
			Word v;
			v.reserve(n);
			for (uint32_t k = 0; k < i; ++k)
				v.push_back(w[n - 1 - k]);
			for (uint32_t k = 0; k + i < n; ++k)
				v.push_back(w[k]);
			r.add_term(v, p);
		}
	}
	return r;
}

TensorElement switch_star(const TensorElement &t)
{
	return t + switch_op(t);
}

TensorElement project(const TensorElement &t, Space target)
{
	bool ok = (t.space == target) || (t.space == Space::Tensor) ||
	          (t.space == Space::SemiSym && target == Space::Sym);
	if (!ok)
		throw std::invalid_argument("project: " + space_name(target) + " is not a quotient of " +
		                            space_name(t.space));
	TensorElement r = t;
	r.space = target;
	return r;
}

std::pair<Word, int> canonical_word(Space s, const Word &w)
{
	switch (s) {
	case Space::Tensor:
		return {w, 1};
	case Space::Sym: {
		Word v = w;
		std::sort(v.begin(), v.end());
		return {v, 1};
	}
	case Space::SemiSym: {
		Word v = w;
		if (v.size() > 1)
			std::sort(v.begin(), v.end() - 1);
		return {v, 1};
	}
	case Space::Alt: {
		Word v = w;
		int sign = 1;
		// insertion sort, tracking the permutation sign
		for (size_t i = 1; i < v.size(); ++i)
			for (size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
				std::swap(v[j - 1], v[j]);
				sign = -sign;
			}
		for (size_t i = 1; i < v.size(); ++i)
			if (v[i] == v[i - 1])
				return {v, 0};
		return {v, sign};
	}
	}
	return {w, 1};
}

int word_weight(const Word &w, const ModulePresentation &mod)
{
	int s = 0;
	for (auto g : w)
		s += mod.gens[g].weight;
	return s;
}

} // namespace jetcalc
