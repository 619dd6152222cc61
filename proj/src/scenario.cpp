#include "jetcalc/scenario.hpp"

namespace jetcalc {

bool operator==(const RingPresentation &a, const RingPresentation &b)
{
	if (a.vars.size() != b.vars.size() || a.ideal.size() != b.ideal.size())
		return false;
	for (size_t i = 0; i < a.vars.size(); ++i)
		if (a.vars[i].name != b.vars[i].name || a.vars[i].weight != b.vars[i].weight)
			return false;
	for (size_t i = 0; i < a.ideal.size(); ++i)
		if (!(a.ideal[i] == b.ideal[i]))
			return false;
	return true;
}

bool operator==(const ModulePresentation &a, const ModulePresentation &b)
{
	if (a.gens.size() != b.gens.size() || a.relations.size() != b.relations.size())
		return false;
	for (size_t i = 0; i < a.gens.size(); ++i)
		if (a.gens[i].name != b.gens[i].name || a.gens[i].weight != b.gens[i].weight)
			return false;
	for (size_t i = 0; i < a.relations.size(); ++i) {
		if (a.relations[i].size() != b.relations[i].size())
			return false;
		for (size_t g = 0; g < a.relations[i].size(); ++g)
			if (!(a.relations[i][g] == b.relations[i][g]))
				return false;
	}
	return true;
}

bool operator==(const Derivation &a, const Derivation &b)
{
	if (a.degree != b.degree || a.values.size() != b.values.size())
		return false;
	for (size_t v = 0; v < a.values.size(); ++v)
		if (!(a.values[v].coeffs == b.values[v].coeffs))
			return false;
	return true;
}

bool operator==(const Connection &a, const Connection &b)
{
	if (a.degree != b.degree || a.values.size() != b.values.size())
		return false;
	for (size_t g = 0; g < a.values.size(); ++g)
		if (!(a.values[g].terms == b.values[g].terms))
			return false;
	return true;
}

bool operator==(const Scenario &a, const Scenario &b)
{
	if (!(a.ring == b.ring && a.module == b.module && a.derivation == b.derivation &&
	      a.options == b.options))
		return false;
	if (a.connection.has_value() != b.connection.has_value())
		return false;
	return !a.connection || *a.connection == *b.connection;
}

} // namespace jetcalc
