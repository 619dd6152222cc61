#pragma once

#include "jetcalc/connection.hpp"

#include <optional>

namespace jetcalc {

struct ScenarioOptions {
	uint32_t order = 5;
	std::optional<int> degree; // connection search degree
	uint64_t seed = 0;

	bool operator==(const ScenarioOptions &) const = default;
};

/// Parsed input: presentations, a derivation, an optional connection, and
/// options. All name references are resolved at parse time.
struct Scenario {
	RingPresentation ring;
	ModulePresentation module;
	Derivation derivation;
	std::optional<Connection> connection;
	ScenarioOptions options;
};

bool operator==(const RingPresentation &a, const RingPresentation &b);
bool operator==(const ModulePresentation &a, const ModulePresentation &b);
bool operator==(const Derivation &a, const Derivation &b);
bool operator==(const Connection &a, const Connection &b);
bool operator==(const Scenario &a, const Scenario &b);

inline GradedContext make_context(const Scenario &s) { return GradedContext(s.ring, s.module); }

} // namespace jetcalc
