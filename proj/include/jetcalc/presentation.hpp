#pragma once

#include "jetcalc/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcalc {

/// Ambient ring Q[x_1..x_k]/I with positive integer weights on the
/// variables and a weighted-homogeneous ideal. The base ring of constants
/// is always Q.
struct RingPresentation {
	struct Var {
		std::string name;
		int weight = 1;
	};

	std::vector<Var> vars;
	std::vector<Polynomial> ideal;

	size_t nvars() const { return vars.size(); }

	int weight(const Monomial &m) const
	{
		int w = 0;
		for (size_t v = 0; v < vars.size(); ++v)
			w += int(m.exps[v]) * vars[v].weight;
		return w;
	}

	std::optional<size_t> find_var(const std::string &name) const
	{
		for (size_t v = 0; v < vars.size(); ++v)
			if (vars[v].name == name)
				return v;
		return std::nullopt;
	}
};

/// Finitely presented graded module: free generators with integer weights
/// modulo homogeneous relation vectors (one coefficient per generator).
struct ModulePresentation {
	struct Gen {
		std::string name;
		int weight = 0;
	};

	std::vector<Gen> gens;
	std::vector<std::vector<Polynomial>> relations;

	size_t ngens() const { return gens.size(); }

	std::optional<size_t> find_gen(const std::string &name) const
	{
		for (size_t g = 0; g < gens.size(); ++g)
			if (gens[g].name == name)
				return g;
		return std::nullopt;
	}
};

/// Element of the module, one polynomial coefficient per generator.
/// Equality is modulo the relation submodule and the ideal; see is_zero()
/// in zero.hpp for the decision procedure.
struct ModuleElement {
	std::vector<Polynomial> coeffs;

	static ModuleElement zero(size_t ngens) { return ModuleElement{std::vector<Polynomial>(ngens)}; }
	static ModuleElement generator(size_t g, size_t ngens, size_t nvars);

	bool is_identically_zero() const;

	ModuleElement operator+(const ModuleElement &o) const;
	ModuleElement operator-(const ModuleElement &o) const;
	ModuleElement operator*(const Polynomial &p) const;
	ModuleElement operator*(const Rational &c) const;
	ModuleElement &operator+=(const ModuleElement &o);
};

/// All monomials of the given weight, sorted by exponent vector.
/// Finite because every variable weight is >= 1; empty for w < 0.
std::vector<Monomial> weighted_monomials(int w, const RingPresentation &ring);

/// Partition of the terms of p by monomial weight. Parts sum to p and each
/// part is weighted-homogeneous.
std::map<int, Polynomial> graded_split(const Polynomial &p, const RingPresentation &ring);

/// Weight of a homogeneous polynomial; nullopt if p is zero or mixes weights.
std::optional<int> homogeneous_weight(const Polynomial &p, const RingPresentation &ring);

struct ValidationIssue {
	std::string where;
	std::string message;
};

struct ValidationReport {
	std::vector<ValidationIssue> issues;
	bool ok() const { return issues.empty(); }
	void add(std::string where, std::string message)
	{
		issues.push_back({std::move(where), std::move(message)});
	}
};

/// Reports every violated presentation invariant: non-positive variable
/// weight, non-homogeneous ideal generator, non-homogeneous relation,
/// malformed relation vector. Never throws.
ValidationReport validate_presentation(const RingPresentation &ring, const ModulePresentation &mod);

} // namespace jetcalc
