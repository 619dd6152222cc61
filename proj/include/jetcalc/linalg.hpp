#pragma once

#include "jetcalc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jetcalc {

using QVec = std::vector<Rational>;

/// Row space in reduced echelon form, grown one vector at a time.
/// Deterministic: pivots are always the leftmost nonzero coordinate.
class RowSpan {
  public:
	explicit RowSpan(size_t dim) : dim_(dim) {}

	size_t dim() const { return dim_; }
	size_t rank() const { return rows_.size(); }
	const std::vector<QVec> &rows() const { return rows_; }

	/// Reduces v against the current rows; the residual has zeros in all
	/// pivot columns.
	QVec reduce(QVec v) const;

	bool contains(const QVec &v) const;

	/// Reduces and, if a nonzero residual remains, adjoins it.
	/// Returns true when the rank grew.
	bool insert(QVec v);

  private:
	size_t dim_;
	std::vector<QVec> rows_;
	std::vector<size_t> pivots_; // ascending
};

/// One solution of A x = b with free variables set to zero, or nullopt
/// when the system is inconsistent. Columns are eliminated left to right,
/// so the result is deterministic for a fixed column order.
std::optional<QVec> solve_linear(std::vector<QVec> rows, QVec rhs, size_t ncols);

} // namespace jetcalc
