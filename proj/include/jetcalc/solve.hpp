#pragma once

#include "jetcalc/connection.hpp"

#include <string>

namespace jetcalc {

/// Affine-linear feasibility over the rationals, with tensor-valued
/// unknowns ranging over whole graded pieces and constraints of the form
/// "affine expression vanishes modulo the relation space of a graded
/// piece". Membership enters through slack coordinates over the reduced
/// relation rows, so a solution certificate is a genuine preimage.
class AffineSystem {
  public:
	explicit AffineSystem(const GradedContext &ctx) : ctx_(ctx) {}

	struct LinearTerm {
		size_t unknown;
		Polynomial scale;
	};

	/// Unknown tensor ranging over the graded piece (space, length, weight).
	size_t add_unknown(Space space, uint32_t length, int weight);

	/// Constrains constant + sum_k scale_k * unknown_k (optionally
	/// post-composed with 1 - switch) to vanish in the given graded piece.
	void require_zero(Space space, uint32_t length, int weight, TensorElement constant,
	                  std::vector<LinearTerm> terms, bool one_minus_switch = false,
	                  std::string label = "");

	struct Outcome {
		bool feasible = false;
		std::vector<TensorElement> assignment; // one per unknown when feasible

		std::string obstruction_label;
		int obstruction_weight = 0;
		TensorElement obstruction_residual; // reduced constant of the blocking constraint
	};

	/// Deterministic: unknown coordinates are eliminated in declaration
	/// order, free coordinates are set to zero. On infeasibility the
	/// constraints are replayed in ascending weight order and the first
	/// blocking one is reported with its reduced residual.
	Outcome solve() const;

  private:
	struct UnknownSpec {
		Space space;
		uint32_t length;
		int weight;
		size_t offset; // column offset
		size_t dim;
	};
	struct Constraint {
		Space space;
		uint32_t length;
		int weight;
		TensorElement constant;
		std::vector<LinearTerm> terms;
		bool one_minus_switch;
		std::string label;
	};

	const GradedContext &ctx_;
	std::vector<UnknownSpec> unknowns_;
	std::vector<Constraint> constraints_;
	size_t ncols_ = 0;
};

/// Result of the connection existence search at one degree.
struct ConnectionSearch {
	bool feasible = false;
	Connection connection; // witness when feasible

	// infeasibility diagnostics
	std::string obstruction_check;
	int obstruction_weight = 0;
	TensorElement obstruction; // residual obstruction class, length 2
	/// True when the blocking graded piece is already infeasible with the
	/// unknowns of the derivation's own degree, which rules out
	/// connections of every degree, homogeneous or not.
	bool absolute = false;
};

/// Searches for a connection of the given degree on the presentation:
/// the generator values are unknowns, the relation equations and
/// (optionally) the symmetrized-part conditions on the derivation values
/// become affine constraints. Free coordinates of an underdetermined
/// solution are set to zero.
ConnectionSearch solve_connection(const Derivation &d, int conn_degree, bool require_flat,
                                  const GradedContext &ctx);

} // namespace jetcalc
