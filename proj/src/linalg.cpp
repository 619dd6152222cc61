#include "jetcalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcalc {

QVec RowSpan::reduce(QVec v) const
{
	if (v.size() != dim_)
		throw std::invalid_argument("RowSpan: dimension mismatch");
	for (size_t r = 0; r < rows_.size(); ++r) {
		const Rational &c = v[pivots_[r]];
		if (c == 0)
			continue;
		Rational f = c; // rows are pivot-normalized
		const QVec &row = rows_[r];
		for (size_t j = pivots_[r]; j < dim_; ++j)
			if (row[j] != 0)
				v[j] -= f * row[j];
	}
	return v;
}

bool RowSpan::contains(const QVec &v) const
{
	QVec res = reduce(v);
	return std::all_of(res.begin(), res.end(), [](const Rational &c) { return c == 0; });
}

bool RowSpan::insert(QVec v)
{
	v = reduce(std::move(v));
	size_t p = 0;
	while (p < dim_ && v[p] == 0)
		++p;
	if (p == dim_)
		return false;
	Rational inv = Rational(1) / v[p];
	for (size_t j = p; j < dim_; ++j)
		if (v[j] != 0)
			v[j] *= inv;
	// back-substitute into earlier rows so the form stays fully reduced
	for (size_t r = 0; r < rows_.size(); ++r) {
		Rational c = rows_[r][p];
		if (c == 0)
			continue;
		for (size_t j = p; j < dim_; ++j)
			if (v[j] != 0)
				rows_[r][j] -= c * v[j];
	}
	size_t pos = 0;
	while (pos < pivots_.size() && pivots_[pos] < p)
		++pos;
	rows_.insert(rows_.begin() + pos, std::move(v));
	pivots_.insert(pivots_.begin() + pos, p);
	return true;
}

std::optional<QVec> solve_linear(std::vector<QVec> rows, QVec rhs, size_t ncols)
{
	const size_t nrows = rows.size();
	std::vector<size_t> pivot_col;
	size_t rank = 0;
	for (size_t col = 0; col < ncols && rank < nrows; ++col) {
		size_t sel = rank;
		while (sel < nrows && rows[sel][col] == 0)
			++sel;
		if (sel == nrows)
			continue;
		std::swap(rows[sel], rows[rank]);
		std::swap(rhs[sel], rhs[rank]);
		Rational inv = Rational(1) / rows[rank][col];
		for (size_t j = col; j < ncols; ++j)
			if (rows[rank][j] != 0)
				rows[rank][j] *= inv;
		rhs[rank] *= inv;
		for (size_t r = 0; r < nrows; ++r) {
			if (r == rank || rows[r][col] == 0)
				continue;
			Rational f = rows[r][col];
			for (size_t j = col; j < ncols; ++j)
				if (rows[rank][j] != 0)
					rows[r][j] -= f * rows[rank][j];
			rhs[r] -= f * rhs[rank];
		}
		pivot_col.push_back(col);
		++rank;
	}
	for (size_t r = rank; r < nrows; ++r)
		if (rhs[r] != 0)
			return std::nullopt;
	QVec x(ncols, 0);
	for (size_t r = 0; r < rank; ++r)
		x[pivot_col[r]] = rhs[r];
	return x;
}

} // namespace jetcalc
