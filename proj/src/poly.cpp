#include "jetcalc/poly.hpp"

namespace jetcalc {

Polynomial Polynomial::constant(const Rational &c, size_t nvars)
{
	Polynomial p;
	p.add_term(Monomial::one(nvars), c);
	return p;
}

Polynomial Polynomial::variable(size_t v, size_t nvars)
{
	Polynomial p;
	p.add_term(Monomial::var(v, nvars), 1);
	return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rational &c)
{
	Polynomial p;
	p.add_term(m, c);
	return p;
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(m, c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Polynomial Polynomial::operator+(const Polynomial &o) const
{
	Polynomial r = *this;
	r += o;
	return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
	for (auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Polynomial Polynomial::operator-(const Polynomial &o) const
{
	Polynomial r = *this;
	r -= o;
	return r;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
	for (auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Polynomial Polynomial::operator-() const
{
	Polynomial r;
	for (auto &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const
{
	Polynomial r;
	for (auto &[m1, c1] : terms_)
		for (auto &[m2, c2] : o.terms_)
			r.add_term(m1 * m2, c1 * c2);
	return r;
}

Polynomial Polynomial::operator*(const Rational &c) const
{
	Polynomial r;
	if (c == 0)
		return r;
	for (auto &[m, k] : terms_)
		r.terms_.emplace(m, k * c);
	return r;
}

Rational Polynomial::constant_part() const
{
	for (auto &[m, c] : terms_)
		if (m.is_one())
			return c;
	return 0;
}

Polynomial Polynomial::derivative(size_t v) const
{
	Polynomial r;
	for (auto &[m, c] : terms_) {
		if (m.exps[v] == 0)
			continue;
		Monomial n = m;
		n.exps[v] -= 1;
		r.add_term(n, c * Rational(m.exps[v]));
	}
	return r;
}

Polynomial Polynomial::pow(uint32_t e, size_t nvars) const
{
	Polynomial r = constant(1, nvars);
	for (uint32_t i = 0; i < e; ++i)
		r = r * (*this);
	return r;
}

void Polynomial::strip()
{
	for (auto it = terms_.begin(); it != terms_.end();)
		it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

} // namespace jetcalc
