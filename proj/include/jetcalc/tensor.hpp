#pragma once

#include "jetcalc/presentation.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace jetcalc {

/// The four word spaces carried on one tensor representation:
///   Tensor  - length-n tensor power, no symmetry;
///   Sym     - symmetric quotient, all slots commute;
///   Alt     - alternating quotient;
///   SemiSym - all slots but the last commute (degree n part is the
///             symmetric power of degree n-1 tensored with the module).
/// Elements are always stored in raw word coordinates; the space tag only
/// selects the relation space used by zero tests.
enum class Space { Tensor, Sym, Alt, SemiSym };

std::string space_name(Space s);

using Word = std::vector<uint32_t>;

/// Linear combination of length-n generator words with polynomial
/// coefficients. n = 0 elements are ring elements (single empty word),
/// n = 1 elements are module elements.
struct TensorElement {
	Space space = Space::Tensor;
	uint32_t length = 0;
	std::map<Word, Polynomial> terms;

	static TensorElement zero(Space s, uint32_t length) { return TensorElement{s, length, {}}; }
	static TensorElement scalar(Space s, const Polynomial &p);
	static TensorElement word(Space s, Word w, const Polynomial &coeff);

	bool is_identically_zero() const;

	void add_term(const Word &w, const Polynomial &p);

	TensorElement operator+(const TensorElement &o) const;
	TensorElement operator-(const TensorElement &o) const;
	TensorElement operator-() const;
	TensorElement operator*(const Polynomial &p) const;
	TensorElement operator*(const Rational &c) const;
	TensorElement &operator+=(const TensorElement &o);
	TensorElement &operator-=(const TensorElement &o);
};

/// Length-1 tensor carrying a module element, and back.
TensorElement tensor_of(const ModuleElement &m, Space s = Space::SemiSym);
ModuleElement module_of(const TensorElement &t, size_t ngens);

/// Graded product by word concatenation; the final letter of b stays
/// final. Accepts a of any length >= 0 (length 0 acts as a scalar); b must
/// have length >= 1 when the result carries a SemiSym or Tensor tag.
TensorElement graded_product(const TensorElement &a, const TensorElement &b);

/// The switch operator on the semi-symmetric space, extended linearly over
/// polynomial coefficients. On a word m_1..m_n it returns the sum over
/// i = 1..n-1 of  m_n m_{n-1} .. m_{n-i+1} m_1 m_2 .. m_{n-i};
/// on length-1 elements it is zero.
TensorElement switch_op(const TensorElement &w);

/// 1 + switch_op.
TensorElement switch_star(const TensorElement &w);

/// Retags an element into a quotient of its current space
/// (Tensor -> Sym/Alt/SemiSym, SemiSym -> Sym). Terms are unchanged.
TensorElement project(const TensorElement &w, Space target);

/// Canonical representative of a word under the symmetry of the space.
/// Returns the representative and a sign; sign 0 means the word itself is
/// zero in the space (repeated letter in Alt).
std::pair<Word, int> canonical_word(Space s, const Word &w);

int word_weight(const Word &w, const ModulePresentation &mod);

} // namespace jetcalc
