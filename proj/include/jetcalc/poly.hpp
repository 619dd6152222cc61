#pragma once

#include "jetcalc/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace jetcalc {

/// Exponent vector over the ambient variables. The ambient presentation
/// fixes the vector length; all monomials of one computation share it.
struct Monomial {
	std::vector<uint32_t> exps;

	static Monomial one(size_t nvars) { return Monomial{std::vector<uint32_t>(nvars, 0)}; }
	static Monomial var(size_t v, size_t nvars)
	{
		Monomial m = one(nvars);
		m.exps[v] = 1;
		return m;
	}

	bool is_one() const
	{
		for (auto e : exps)
			if (e != 0)
				return false;
		return true;
	}

	uint32_t total_degree() const
	{
		uint32_t d = 0;
		for (auto e : exps)
			d += e;
		return d;
	}

	Monomial operator*(const Monomial &o) const
	{
		Monomial r = *this;
		for (size_t i = 0; i < exps.size(); ++i)
			r.exps[i] += o.exps[i];
		return r;
	}

	auto operator<=>(const Monomial &) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficient is ever stored.
class Polynomial {
  public:
	Polynomial() = default;
	explicit Polynomial(std::map<Monomial, Rational> terms) : terms_(std::move(terms)) { strip(); }

	static Polynomial zero() { return Polynomial(); }
	static Polynomial constant(const Rational &c, size_t nvars);
	static Polynomial variable(size_t v, size_t nvars);
	static Polynomial monomial(Monomial m, const Rational &c = 1);

	bool is_zero() const { return terms_.empty(); }
	const std::map<Monomial, Rational> &terms() const { return terms_; }

	void add_term(const Monomial &m, const Rational &c);

	Polynomial operator+(const Polynomial &o) const;
	Polynomial operator-(const Polynomial &o) const;
	Polynomial operator-() const;
	Polynomial operator*(const Polynomial &o) const;
	Polynomial operator*(const Rational &c) const;

	Polynomial &operator+=(const Polynomial &o);
	Polynomial &operator-=(const Polynomial &o);

	bool operator==(const Polynomial &o) const { return terms_ == o.terms_; }

	/// Coefficient of the constant monomial (0 if absent); only meaningful
	/// when the polynomial is known to be constant.
	Rational constant_part() const;

	/// Formal partial derivative with respect to variable v.
	Polynomial derivative(size_t v) const;

	Polynomial pow(uint32_t e, size_t nvars) const;

  private:
	std::map<Monomial, Rational> terms_;
	void strip();
};

} // namespace jetcalc
