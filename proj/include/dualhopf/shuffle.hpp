#pragma once

#include <string>
#include <vector>

#include "dualhopf/linear.hpp"

namespace dualhopf {

/// Letters over {x0, x1}; `true` stands for x1.
using BinaryWord = std::vector<bool>;

/// ρ([s1,...,sk]) = x0^{s1-1} x1 ... x0^{sk-1} x1
BinaryWord encode_word(const Composition& w);
/// Inverse of encode_word. The input must be empty or end in x1.
Composition decode_word(const BinaryWord& letters);
/// "x0x1x1" style rendering; the empty word renders as "e".
std::string binary_word_str(const BinaryWord& letters);

/// ⧢_{>=1} by the generalized Euler decomposition, memoized on word pairs.
Element shuffle_ge1(const Element& x, const Element& y);
/// ⧢_{<=0} by the J-Leibniz recursion on the left factor, memoized on word pairs.
Element shuffle_le0(const Element& x, const Element& y);
/// Dispatches on the common sector; mixed sectors throw SpaceMismatchError.
Element shuffle(const Element& x, const Element& y);

/// Product of two basis words in the given sector.
Element shuffle_words(const Composition& u, const Composition& v, Sector sector);

/// ⧢_{>=1} computed by brute-force interleaving of the binary encodings.
/// Shares no code with shuffle_ge1.
Element word_shuffle_oracle(const Element& x, const Element& y);

/// (a ⊗ b)(c ⊗ d) = (a c) ⊗ (b d), bilinearly, in the tensors' common sector.
Tensor tensor_shuffle(const Tensor& a, const Tensor& b);

}  // namespace dualhopf
