#ifndef TLC_SYNTACTIC_HPP
#define TLC_SYNTACTIC_HPP

#include <string_view>
#include <vector>

#include "tlc/automata.hpp"
#include "tlc/limits.hpp"
#include "tlc/monoid.hpp"

namespace tlc {

/// A monoid morphism A* -> M, given by the images of the letters and
/// extended to words by multiplication (the empty word maps to the
/// identity).
struct Morphism {
  std::vector<char> alphabet;
  MonoidPtr codomain;
  std::vector<int> letter_image;  // parallel to alphabet

  int letter_index(char a) const;  // -1 when absent
  int image_of_letter(char a) const;
  int image_of_word(std::string_view w) const;

  /// Elements reachable as images of words: the submonoid generated by the
  /// letter images together with the identity.
  std::vector<int> image_elements() const;

  bool is_surjective() const;

  /// Same morphism with the codomain cut down (and re-indexed) to the image
  /// submonoid. Identity on morphisms that are already surjective, up to
  /// element renaming.
  Morphism restricted_to_image() const;
};

/// A regular language presented as a morphism plus the accepting element
/// subset: w is in L iff the image of w lands in `accepting`.
struct RecognizedLanguage {
  Morphism morphism;
  std::vector<int> accepting;  // sorted

  bool contains(std::string_view w) const;
};

/// Computes the syntactic morphism of the language of `d` as the transition
/// monoid of the minimal automaton: elements are the distinct state
/// transformations induced by words, the identity is the identity
/// transformation, and the accepting set collects the transformations that
/// send the initial state into an accepting one. The input is minimized
/// first, so the result is the syntactic monoid itself.
///
/// Throws MonoidLimitError when the monoid exceeds `limits.max_monoid`.
RecognizedLanguage syntactic_morphism(const Dfa& d, const Limits& limits = {});

/// Image of all nonempty words, sorted: the least subset containing the
/// letter images and closed under multiplication.
std::vector<int> syntactic_semigroup(const RecognizedLanguage& lang);

/// True when no two distinct elements of the codomain are equivalent under
/// all two-sided contexts relative to `accepting`, i.e. the recognizer is
/// the syntactic morphism of its own language (up to renaming). Decided by
/// partition refinement on the codomain.
bool is_syntactic(const RecognizedLanguage& lang);

/// The automaton reading words through `m` and accepting on `accept`:
/// states are monoid elements, the initial state is the identity. Not
/// minimal in general; useful as a recognizer for morphism-defined
/// languages.
Dfa morphism_automaton(const Morphism& m, const std::vector<int>& accept);

}  // namespace tlc

#endif  // TLC_SYNTACTIC_HPP
