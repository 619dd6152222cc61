#include "jetcalc/zero.hpp"

#include <set>
#include <stdexcept>

namespace jetcalc {

namespace {

std::vector<Word> raw_words(uint32_t length, size_t ngens)
{
	std::vector<Word> out;
	if (length == 0) {
		out.push_back(Word{});
		return out;
	}
	Word w(length, 0);
	while (true) {
		out.push_back(w);
		size_t i = length;
		while (i > 0) {
			--i;
			if (++w[i] < ngens)
				break;
			w[i] = 0;
			if (i == 0)
				return out;
		}
	}
}

int relation_weight(const std::vector<Polynomial> &rel, const RingPresentation &ring,
                    const ModulePresentation &mod)
{
	for (size_t g = 0; g < rel.size(); ++g) {
		if (rel[g].is_zero())
			continue;
		auto w = homogeneous_weight(rel[g], ring);
		if (!w)
			throw std::logic_error("non-homogeneous module relation in graded slice");
		return *w + mod.gens[g].weight;
	}
	throw std::logic_error("zero module relation in graded slice");
}

TensorElement insert_relation(Space s, const std::vector<Polynomial> &rel, const Word &frame,
                              uint32_t slot)
{
	TensorElement e = TensorElement::zero(s, uint32_t(frame.size()) + 1);
	for (size_t g = 0; g < rel.size(); ++g) {
		if (rel[g].is_zero())
			continue;
		Word w;
		w.reserve(frame.size() + 1);
		w.insert(w.end(), frame.begin(), frame.begin() + slot);
		w.push_back(uint32_t(g));
		w.insert(w.end(), frame.begin() + slot, frame.end());
		e.add_term(w, rel[g]);
	}
	return e;
}

/// (slot, frame) pairs whose canonical insertions span all insertions of
/// the given space. Full tensor and alternating spaces enumerate
/// everything; symmetric spaces collapse equivalent slots and frames.
std::vector<std::pair<uint32_t, Word>> insertion_frames(Space s, uint32_t n, size_t ngens)
{
	std::vector<std::pair<uint32_t, Word>> out;
	if (n == 0)
		return out;
	auto frames = raw_words(n - 1, ngens);
	auto push_canonical = [&](uint32_t slot, Space frame_space) {
		std::set<Word> seen;
		for (auto &f : frames) {
			auto [cf, sign] = canonical_word(frame_space, f);
			if (sign != 0 && seen.insert(cf).second)
				out.emplace_back(slot, cf);
		}
	};
	switch (s) {
	case Space::Tensor:
	case Space::Alt:
		for (uint32_t slot = 0; slot < n; ++slot)
			for (auto &f : frames)
				out.emplace_back(slot, f);
		break;
	case Space::Sym:
		push_canonical(n - 1, Space::Sym);
		break;
	case Space::SemiSym:
		push_canonical(n - 1, Space::Sym);
		if (n >= 2)
			push_canonical(0, Space::SemiSym);
		break;
	}
	return out;
}

} // namespace

QVec Slice::encode(const TensorElement &t) const
{
	QVec v(dim, Rational(0));
	for (auto &[w, p] : t.terms) {
		auto [cw, sign] = canonical_word(space, w);
		if (sign == 0)
			continue;
		auto wi = word_index.find(cw);
		if (wi == word_index.end())
			throw std::logic_error("slice encode: word outside graded piece");
		for (auto &[m, c] : p.terms()) {
			auto mi = mon_index[wi->second].find(m);
			if (mi == mon_index[wi->second].end())
				throw std::logic_error("slice encode: weight mismatch");
			v[offset[wi->second] + mi->second] += (sign > 0) ? c : -c;
		}
	}
	return v;
}

TensorElement Slice::decode(const QVec &v) const
{
	TensorElement t = TensorElement::zero(space, length);
	for (size_t wi = 0; wi < words.size(); ++wi)
		for (size_t k = 0; k < mons[wi].size(); ++k) {
			const Rational &c = v[offset[wi] + k];
			if (c != 0)
				t.add_term(words[wi], Polynomial::monomial(mons[wi][k], c));
		}
	return t;
}

const Slice &GradedContext::slice(Space s, uint32_t length, int weight) const
{
	std::scoped_lock lock(mutex_);
	auto key = std::make_tuple(int(s), length, weight);
	auto it = slices_.find(key);
	if (it == slices_.end())
		it = slices_.emplace(key, build_slice(s, length, weight)).first;
	return *it->second;
}

std::unique_ptr<Slice> GradedContext::build_slice(Space s, uint32_t n, int W) const
{
	auto sl = std::make_unique<Slice>();
	sl->space = s;
	sl->length = n;
	sl->weight = W;

	std::set<Word> canon;
	for (auto &w : raw_words(n, module_.ngens())) {
		auto [cw, sign] = canonical_word(s, w);
		if (sign != 0)
			canon.insert(cw);
	}
	for (auto &cw : canon) {
		auto ms = weighted_monomials(W - word_weight(cw, module_), ring_);
		if (ms.empty())
			continue;
		sl->word_index.emplace(cw, sl->words.size());
		sl->words.push_back(cw);
		sl->offset.push_back(sl->dim);
		std::map<Monomial, size_t> idx;
		for (size_t k = 0; k < ms.size(); ++k)
			idx.emplace(ms[k], k);
		sl->mon_index.push_back(std::move(idx));
		sl->dim += ms.size();
		sl->mons.push_back(std::move(ms));
	}

	sl->relations = RowSpan(sl->dim);
	if (sl->dim == 0)
		return sl;

	if (n >= 1) {
		auto slots = insertion_frames(s, n, module_.ngens());
		for (auto &rel : module_.relations) {
			int d = relation_weight(rel, ring_, module_);
			for (auto &[slot, frame] : slots) {
				int mw = W - d - word_weight(frame, module_);
				auto ms = weighted_monomials(mw, ring_);
				if (ms.empty())
					continue;
				TensorElement e = insert_relation(s, rel, frame, slot);
				for (auto &m : ms)
					sl->relations.insert(sl->encode(e * Polynomial::monomial(m)));
			}
		}
	}
	for (auto &f : ring_.ideal) {
		auto df = homogeneous_weight(f, ring_);
		if (!df)
			throw std::logic_error("non-homogeneous ideal generator in graded slice");
		for (auto &cw : sl->words) {
			int mw = W - *df - word_weight(cw, module_);
			for (auto &m : weighted_monomials(mw, ring_))
				sl->relations.insert(sl->encode(TensorElement::word(s, cw, f * Polynomial::monomial(m))));
		}
	}
	return sl;
}

std::map<int, TensorElement> graded_split(const TensorElement &t, const GradedContext &ctx)
{
	std::map<int, TensorElement> pieces;
	for (auto &[w, p] : t.terms) {
		int ww = word_weight(w, ctx.module());
		for (auto &[weight, part] : graded_split(p, ctx.ring())) {
			auto [it, fresh] = pieces.try_emplace(weight + ww, TensorElement::zero(t.space, t.length));
			it->second.add_term(w, part);
		}
	}
	return pieces;
}

bool is_zero(const TensorElement &t, const GradedContext &ctx)
{
	if (t.is_identically_zero())
		return true;
	for (auto &[W, piece] : graded_split(t, ctx)) {
		const Slice &sl = ctx.slice(t.space, t.length, W);
		if (!sl.relations.contains(sl.encode(piece)))
			return false;
	}
	return true;
}

bool is_zero(const ModuleElement &m, const GradedContext &ctx)
{
	return is_zero(tensor_of(m, Space::Sym), ctx);
}

bool equal(const TensorElement &a, const TensorElement &b, const GradedContext &ctx)
{
	return is_zero(a - b, ctx);
}

bool equal(const ModuleElement &a, const ModuleElement &b, const GradedContext &ctx)
{
	return is_zero(a - b, ctx);
}

bool in_symmetrized_part(const TensorElement &w, const GradedContext &ctx)
{
	if (w.length < 1)
		throw std::invalid_argument("symmetrized-part test needs length >= 1");
	TensorElement u = project(w, Space::SemiSym);
	return is_zero(u * Rational(int(u.length) - 1) - switch_op(u), ctx);
}

std::vector<TensorElement> relation_space_basis(int W, uint32_t n, Space space,
                                                const GradedContext &ctx)
{
	std::vector<TensorElement> out;
	const auto &ring = ctx.ring();
	const auto &mod = ctx.module();
	auto mons_for = [&](int mw) { return weighted_monomials(mw, ring); };

	if (n >= 1) {
		auto frames = raw_words(n - 1, mod.ngens());
		for (auto &rel : mod.relations) {
			int d = relation_weight(rel, ring, mod);
			for (uint32_t slot = 0; slot < n; ++slot)
				for (auto &frame : frames) {
					TensorElement e = insert_relation(space, rel, frame, slot);
					for (auto &m : mons_for(W - d - word_weight(frame, mod)))
						out.push_back(e * Polynomial::monomial(m));
				}
		}
	}
	for (auto &f : ring.ideal) {
		auto df = homogeneous_weight(f, ring);
		if (!df)
			continue;
		for (auto &w : raw_words(n, mod.ngens()))
			for (auto &m : mons_for(W - *df - word_weight(w, mod)))
				out.push_back(TensorElement::word(space, w, f * Polynomial::monomial(m)));
	}
	// symmetry relations of the tagged space, adjacent transpositions
	uint32_t sym_slots = 0;
	if (space == Space::Sym || space == Space::Alt)
		sym_slots = (n >= 2) ? n - 1 : 0;
	else if (space == Space::SemiSym)
		sym_slots = (n >= 3) ? n - 2 : 0;
	if (sym_slots > 0) {
		for (auto &w : raw_words(n, mod.ngens())) {
			auto ms = mons_for(W - word_weight(w, mod));
			if (ms.empty())
				continue;
			for (uint32_t i = 0; i < sym_slots; ++i) {
				Word v = w;
				std::swap(v[i], v[i + 1]);
				for (auto &m : ms) {
					Polynomial pm = Polynomial::monomial(m);
					if (space == Space::Alt) {
						TensorElement e = TensorElement::word(space, w, pm);
						if (v == w)
							out.push_back(e); // repeated adjacent letter
						else
							out.push_back(e + TensorElement::word(space, v, pm));
					} else if (v != w) {
						out.push_back(TensorElement::word(space, w, pm) -
						              TensorElement::word(space, v, pm));
					}
				}
			}
		}
	}
	return out;
}

} // namespace jetcalc
