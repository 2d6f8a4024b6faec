#pragma once

#include <cstdint>
#include <vector>

namespace affdim {

/// Word over the alphabet {0,...,N-1}; the associated matrix product runs
/// right to left: letters (i_1,...,i_n) stand for A_{i_n} ... A_{i_1}.
struct Word {
    std::vector<uint8_t> letters;
    int length() const { return static_cast<int>(letters.size()); }
};

/// One cyclic-rotation equivalence class of words, represented by its
/// lexicographically minimal rotation.  class_size is the number of
/// distinct rotations, i.e. the minimal period; summing class_size over
/// all classes of length n gives N^n.
struct NecklaceClass {
    Word representative;
    long class_size = 0;
};

/// All rotation classes of length-n words over {0,...,N-1}, in
/// lexicographic order of their representatives (FKM enumeration).
std::vector<NecklaceClass> enumerate_necklaces(int N, int n);

/// All N^n words of length n in lexicographic order (class_size 1 each);
/// the unreduced summation mode.
std::vector<NecklaceClass> enumerate_all_words(int N, int n);

}  // namespace affdim
