#include "jetcalc/solve.hpp"

#include "jetcalc/zero.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jetcalc {

size_t AffineSystem::add_unknown(Space space, uint32_t length, int weight)
{
	const Slice &sl = ctx_.slice(space, length, weight);
	unknowns_.push_back({space, length, weight, ncols_, sl.dim});
	ncols_ += sl.dim;
	return unknowns_.size() - 1;
}

void AffineSystem::require_zero(Space space, uint32_t length, int weight, TensorElement constant,
                                std::vector<LinearTerm> terms, bool one_minus_switch,
                                std::string label)
{
	constraints_.push_back({space, length, weight, std::move(constant), std::move(terms),
	                        one_minus_switch, std::move(label)});
}

namespace {

TensorElement one_minus_switch_of(const TensorElement &t)
{
	TensorElement u = project(t, Space::SemiSym);
	return u - switch_op(u);
}

} // namespace

AffineSystem::Outcome AffineSystem::solve() const
{
	std::vector<size_t> order(constraints_.size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
		return constraints_[a].weight < constraints_[b].weight;
	});

	// dense block per constraint: rows over the constraint's graded piece,
	// columns over [unknown coordinates | per-constraint slacks]
	struct Block {
		const Constraint *c = nullptr;
		const Slice *slice = nullptr;
		QVec rhs;                            // -(encoded constant)
		std::map<size_t, QVec> unknown_cols; // global unknown column -> entries
		std::vector<QVec> slack_cols;
	};
	std::vector<Block> blocks;
	for (size_t idx : order) {
		const Constraint &c = constraints_[idx];
		Block b;
		b.c = &c;
		b.slice = &ctx_.slice(c.space, c.length, c.weight);
		TensorElement constant = c.one_minus_switch ? one_minus_switch_of(c.constant) : c.constant;
		QVec enc = b.slice->encode(constant);
		b.rhs.resize(enc.size());
		for (size_t k = 0; k < enc.size(); ++k)
			b.rhs[k] = -enc[k];
		for (const LinearTerm &term : c.terms) {
			if (term.scale.is_zero())
				continue;
			const UnknownSpec &u = unknowns_[term.unknown];
			const Slice &usl = ctx_.slice(u.space, u.length, u.weight);
			for (size_t wi = 0; wi < usl.words.size(); ++wi)
				for (size_t mi = 0; mi < usl.mons[wi].size(); ++mi) {
					TensorElement e = TensorElement::word(c.space, usl.words[wi],
					                                      term.scale * Polynomial::monomial(usl.mons[wi][mi]));
					if (c.one_minus_switch)
						e = one_minus_switch_of(e);
					QVec col = b.slice->encode(e);
					size_t gcol = u.offset + usl.offset[wi] + mi;
					auto [it, fresh] = b.unknown_cols.try_emplace(gcol, std::move(col));
					if (!fresh)
						for (size_t k = 0; k < it->second.size(); ++k)
							it->second[k] += col[k];
				}
		}
		for (const QVec &row : b.slice->relations.rows()) {
			QVec col(row.size());
			for (size_t k = 0; k < row.size(); ++k)
				col[k] = -row[k];
			b.slack_cols.push_back(std::move(col));
		}
		blocks.push_back(std::move(b));
	}

	auto assemble = [&](size_t nblocks) {
		// global columns: unknown coords first, then slacks of the used blocks
		size_t ncols = ncols_;
		std::vector<size_t> slack_offset(nblocks);
		size_t nrows = 0;
		for (size_t k = 0; k < nblocks; ++k) {
			slack_offset[k] = ncols;
			ncols += blocks[k].slack_cols.size();
			nrows += blocks[k].rhs.size();
		}
		std::vector<QVec> rows(nrows, QVec(ncols, Rational(0)));
		QVec rhs(nrows, Rational(0));
		size_t row0 = 0;
		for (size_t k = 0; k < nblocks; ++k) {
			const Block &b = blocks[k];
			for (size_t r = 0; r < b.rhs.size(); ++r)
				rhs[row0 + r] = b.rhs[r];
			for (auto &[gcol, col] : b.unknown_cols)
				for (size_t r = 0; r < col.size(); ++r)
					rows[row0 + r][gcol] = col[r];
			for (size_t sc = 0; sc < b.slack_cols.size(); ++sc)
				for (size_t r = 0; r < b.slack_cols[sc].size(); ++r)
					rows[row0 + r][slack_offset[k] + sc] = b.slack_cols[sc][r];
			row0 += b.rhs.size();
		}
		return std::pair{std::move(rows), std::pair{std::move(rhs), ncols}};
	};

	Outcome out;
	auto [rows, rest] = assemble(blocks.size());
	auto solution = solve_linear(std::move(rows), std::move(rest.first), rest.second);
	if (solution) {
		out.feasible = true;
		for (const UnknownSpec &u : unknowns_) {
			const Slice &usl = ctx_.slice(u.space, u.length, u.weight);
			QVec coords(solution->begin() + u.offset, solution->begin() + u.offset + u.dim);
			out.assignment.push_back(usl.decode(coords));
		}
		return out;
	}

	// replay prefixes to find the first blocking constraint, then reduce its
	// constant against everything that constraint can reach on its own
	size_t blocking = blocks.size();
	for (size_t k = 1; k <= blocks.size(); ++k) {
		auto [prows, prest] = assemble(k);
		if (!solve_linear(std::move(prows), std::move(prest.first), prest.second)) {
			blocking = k - 1;
			break;
		}
	}
	const Block &b = blocks[blocking];
	RowSpan reach(b.rhs.size());
	for (auto &[gcol, col] : b.unknown_cols)
		reach.insert(col);
	for (auto &col : b.slack_cols)
		reach.insert(col);
	QVec residual = reach.reduce(b.slice->encode(
	    b.c->one_minus_switch ? one_minus_switch_of(b.c->constant) : b.c->constant));
	out.feasible = false;
	out.obstruction_label = b.c->label;
	out.obstruction_weight = b.c->weight;
	out.obstruction_residual = b.slice->decode(residual);
	return out;
}

ConnectionSearch solve_connection(const Derivation &d, int conn_degree, bool require_flat,
                                  const GradedContext &ctx)
{
	const auto &ring = ctx.ring();
	const auto &mod = ctx.module();

	auto build = [&](int degree, std::optional<size_t> only_relation, bool with_flat) {
		AffineSystem sys(ctx);
		std::vector<size_t> u;
		for (size_t g = 0; g < ctx.ngens(); ++g)
			u.push_back(sys.add_unknown(Space::Tensor, 2, mod.gens[g].weight + degree));
		for (size_t r = 0; r < mod.relations.size(); ++r) {
			if (only_relation && *only_relation != r)
				continue;
			const auto &rel = mod.relations[r];
			TensorElement constant = TensorElement::zero(Space::Tensor, 2);
			std::vector<AffineSystem::LinearTerm> terms;
			std::optional<int> relweight;
			for (size_t g = 0; g < rel.size(); ++g) {
				if (rel[g].is_zero())
					continue;
				relweight = *homogeneous_weight(rel[g], ring) + mod.gens[g].weight;
				ModuleElement da = apply_derivation(d, rel[g], ctx);
				for (size_t l = 0; l < ctx.ngens(); ++l)
					if (!da.coeffs[l].is_zero())
						constant.add_term(Word{uint32_t(l), uint32_t(g)}, da.coeffs[l]);
				terms.push_back({u[g], rel[g]});
			}
			if (!relweight)
				continue;
			sys.require_zero(Space::Tensor, 2, *relweight + degree, std::move(constant),
			                 std::move(terms), false, "relation " + std::to_string(r + 1));
		}
		if (with_flat) {
			for (size_t v = 0; v < ctx.nvars(); ++v) {
				const ModuleElement &dv = d.value(v);
				TensorElement constant = TensorElement::zero(Space::SemiSym, 2);
				std::vector<AffineSystem::LinearTerm> terms;
				for (size_t g = 0; g < ctx.ngens(); ++g) {
					if (dv.coeffs[g].is_zero())
						continue;
					ModuleElement da = apply_derivation(d, dv.coeffs[g], ctx);
					for (size_t l = 0; l < ctx.ngens(); ++l)
						if (!da.coeffs[l].is_zero())
							constant.add_term(Word{uint32_t(l), uint32_t(g)}, da.coeffs[l]);
					terms.push_back({u[g], dv.coeffs[g]});
				}
				sys.require_zero(Space::SemiSym, 2, ring.vars[v].weight + d.degree + degree,
				                 std::move(constant), std::move(terms), true,
				                 "flat D(" + ring.vars[v].name + ")");
			}
		}
		return sys;
	};

	AffineSystem::Outcome out = build(conn_degree, std::nullopt, require_flat).solve();
	ConnectionSearch res;
	if (out.feasible) {
		res.feasible = true;
		res.connection.degree = conn_degree;
		for (auto &t : out.assignment) {
			TensorElement v = t;
			v.space = Space::Tensor;
			res.connection.values.push_back(std::move(v));
		}
		return res;
	}
	res.feasible = false;
	res.obstruction_check = out.obstruction_label;
	res.obstruction_weight = out.obstruction_weight;
	res.obstruction = out.obstruction_residual;
	res.obstruction.space = Space::Tensor;
	// Degree independence: a blocking relation equation only involves the
	// degree-(derivation degree) part of any candidate, so if that graded
	// system is infeasible standing alone, no connection of any degree can
	// exist.
	if (out.obstruction_label.rfind("relation ", 0) == 0) {
		size_t r = std::stoul(out.obstruction_label.substr(9)) - 1;
		auto alone = build(d.degree, r, false).solve();
		res.absolute = !alone.feasible;
	}
	return res;
}

} // namespace jetcalc
