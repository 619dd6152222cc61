#pragma once

#include "jetcalc/linalg.hpp"
#include "jetcalc/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace jetcalc {

/// One graded piece of a word space: the finite-dimensional Q-vector space
/// spanned by (monomial, canonical word) pairs of total weight `weight`,
/// together with the reduced row form of its relation subspace.
struct Slice {
	Space space = Space::Tensor;
	uint32_t length = 0;
	int weight = 0;

	std::vector<Word> words; // canonical words, ascending
	std::map<Word, size_t> word_index;
	std::vector<std::vector<Monomial>> mons; // per word, ascending
	std::vector<std::map<Monomial, size_t>> mon_index;
	std::vector<size_t> offset; // basis offset per word
	size_t dim = 0;

	RowSpan relations{0};

	size_t index(size_t wi, const Monomial &m) const { return offset[wi] + mon_index[wi].at(m); }

	/// Dense coordinates of a homogeneous element of this slice.
	QVec encode(const TensorElement &t) const;
	TensorElement decode(const QVec &v) const;
};

/// Presentation pair plus a memo of graded slices. All public operations
/// are pure functions of the presentations; the memo is guarded and only
/// caches derived data.
class GradedContext {
  public:
	GradedContext(RingPresentation ring, ModulePresentation mod)
	    : ring_(std::move(ring)), module_(std::move(mod))
	{
	}

	const RingPresentation &ring() const { return ring_; }
	const ModulePresentation &module() const { return module_; }
	size_t ngens() const { return module_.ngens(); }
	size_t nvars() const { return ring_.nvars(); }

	const Slice &slice(Space s, uint32_t length, int weight) const;

  private:
	RingPresentation ring_;
	ModulePresentation module_;
	mutable std::mutex mutex_;
	mutable std::map<std::tuple<int, uint32_t, int>, std::unique_ptr<Slice>> slices_;

	std::unique_ptr<Slice> build_slice(Space s, uint32_t length, int weight) const;
};

/// Splits a tensor into weighted-homogeneous pieces,
/// weight(term) = weight(monomial) + weight(word).
std::map<int, TensorElement> graded_split(const TensorElement &t, const GradedContext &ctx);

/// Decides equality with zero modulo the relation space of the tagged
/// word space, one graded piece at a time.
bool is_zero(const TensorElement &t, const GradedContext &ctx);
bool is_zero(const ModuleElement &m, const GradedContext &ctx);
bool equal(const TensorElement &a, const TensorElement &b, const GradedContext &ctx);
bool equal(const ModuleElement &a, const ModuleElement &b, const GradedContext &ctx);

/// Membership in the symmetrized part of the semi-symmetric space, decided
/// through its kernel characterization: w lies in the symmetrized part of
/// degree n iff (n - switch_star)(w) vanishes.
bool in_symmetrized_part(const TensorElement &w, const GradedContext &ctx);

/// Raw spanning set of the weight-W relations among length-n words:
/// slot insertions of module relations, ideal multiples of words, and the
/// symmetry relations of the space (adjacent transpositions; for Alt also
/// repeated-letter words), each times the monomials of complementary
/// weight.
std::vector<TensorElement> relation_space_basis(int target_weight, uint32_t length, Space space,
                                                const GradedContext &ctx);

} // namespace jetcalc
