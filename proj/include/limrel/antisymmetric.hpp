#pragma once

#include "limrel/abelian_group.hpp"

namespace limrel {

/// Presentation of ⊗̃^d(A): the tensor power of the presentation of A modulo
/// a⊗b = −b⊗a in every pair of adjacent slots. Generators are words of
/// length d over the generators of `a`, in lexicographic order.
PresentedGroup antisym_presentation(int d, const PresentedGroup& a);

/// Presentation of Λ^d(A); generators are strictly increasing words.
PresentedGroup exterior_presentation(int d, const PresentedGroup& a);

/// The canonical surjection ⊗̃^d(A) ↠ Λ^d(A) on generators (word ↦ ±sorted word, or 0).
IntMatrix antisym_to_exterior(int d, std::size_t generators);

/// Ker(coker(r1) -> coker(r2)) for a map f: Z^a -> Z^b carrying im(r1) into im(r2).
FinAbGroup kernel_of_induced_map(const IntMatrix& f, const IntMatrix& r1, const IntMatrix& r2);

FinAbGroup antisym_power(int d, const FinAbGroup& a);
FinAbGroup antisym_power(int d, const PresentedGroup& a);

/// ASK^d(A) = Ker(⊗̃^d(A) ↠ Λ^d(A)).
FinAbGroup ask_power(int d, const FinAbGroup& a);
FinAbGroup ask_power(int d, const PresentedGroup& a);

/// The map induced on ⊗̃^d generators by f: Z^n -> Z^m (the d-fold Kronecker power).
/// Throws InvariantViolation if it does not preserve the antisymmetry relations.
IntMatrix antisym_induced_map(int d, const IntMatrix& f);

}  // namespace limrel
