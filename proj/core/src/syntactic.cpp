#include "tlc/syntactic.hpp"

#include <algorithm>
#include <map>

#include "tlc/errors.hpp"

namespace tlc {

int Morphism::letter_index(char a) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == a) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int Morphism::image_of_letter(char a) const {
  const int i = letter_index(a);
  if (i < 0) {
    throw UnknownLetterError(a);
  }
  return letter_image[i];
}

int Morphism::image_of_word(std::string_view w) const {
  int acc = codomain->identity();
  for (char a : w) {
    acc = codomain->mul(acc, image_of_letter(a));
  }
  return acc;
}

std::vector<int> Morphism::image_elements() const {
  return SubMonoid::generated(codomain, letter_image, codomain->identity()).elements();
}

bool Morphism::is_surjective() const {
  return static_cast<int>(image_elements().size()) == codomain->size();
}

Morphism Morphism::restricted_to_image() const {
  const std::vector<int> image = image_elements();
  std::vector<int> new_index(codomain->size(), -1);
  for (std::size_t i = 0; i < image.size(); ++i) {
    new_index[image[i]] = static_cast<int>(i);
  }
  const int k = static_cast<int>(image.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      table[static_cast<std::size_t>(s) * k + t] = new_index[codomain->mul(image[s], image[t])];
    }
  }
  Morphism out;
  out.alphabet = alphabet;
  out.codomain = FiniteMonoid::trusted(k, std::move(table), new_index[codomain->identity()]);
  out.letter_image.reserve(letter_image.size());
  for (int img : letter_image) {
    out.letter_image.push_back(new_index[img]);
  }
  return out;
}

bool RecognizedLanguage::contains(std::string_view w) const {
  return std::binary_search(accepting.begin(), accepting.end(), morphism.image_of_word(w));
}

RecognizedLanguage syntactic_morphism(const Dfa& input, const Limits& limits) {
  const Dfa d = minimize(input);
  const int nq = d.states;
  const int nletters = static_cast<int>(d.alphabet.size());

  // Saturate the set of state transformations generated by the letters.
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> fns;
  // Back-pointers: element i > 0 was discovered as parent * letter.
  std::vector<int> parent, via_letter;

  auto intern = [&](std::vector<int> f, int from, int letter) {
    auto it = index.find(f);
    if (it != index.end()) {
      return it->second;
    }
    const int id = static_cast<int>(fns.size());
    if (id >= limits.max_monoid) {
      throw MonoidLimitError(limits.max_monoid);
    }
    index.emplace(f, id);
    fns.push_back(std::move(f));
    parent.push_back(from);
    via_letter.push_back(letter);
    return id;
  };

  std::vector<int> id_fn(nq);
  for (int q = 0; q < nq; ++q) {
    id_fn[q] = q;
  }
  intern(std::move(id_fn), -1, -1);

  std::vector<int> letter_fn(nletters);
  for (int a = 0; a < nletters; ++a) {
    std::vector<int> f(nq);
    for (int q = 0; q < nq; ++q) {
      f[q] = d.step(q, a);
    }
    letter_fn[a] = intern(std::move(f), 0, a);
  }

  // step[s][a] = index of (word of s followed by letter a).
  std::vector<int> step;
  for (std::size_t s = 0; s < fns.size(); ++s) {
    for (int a = 0; a < nletters; ++a) {
      std::vector<int> f(nq);
      for (int q = 0; q < nq; ++q) {
        f[q] = fns[letter_fn[a]][fns[s][q]];
      }
      step.push_back(intern(std::move(f), static_cast<int>(s), a));
    }
  }
  const int n = static_cast<int>(fns.size());

  // Full table from the generator steps: t was discovered as parent(t)*a,
  // so s*t = (s*parent(t))*a. Discovery order guarantees parents first.
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    table[static_cast<std::size_t>(s) * n + 0] = s;  // element 0 is the identity
  }
  for (int t = 1; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      const int sp = table[static_cast<std::size_t>(s) * n + parent[t]];
      table[static_cast<std::size_t>(s) * n + t] =
          step[static_cast<std::size_t>(sp) * nletters + via_letter[t]];
    }
  }

  RecognizedLanguage lang;
  lang.morphism.alphabet = d.alphabet;
  lang.morphism.codomain = FiniteMonoid::trusted(n, std::move(table), 0);
  lang.morphism.letter_image = letter_fn;
  for (int s = 0; s < n; ++s) {
    if (d.accepting[fns[s][d.initial]]) {
      lang.accepting.push_back(s);
    }
  }
  return lang;
}

std::vector<int> syntactic_semigroup(const RecognizedLanguage& lang) {
  const Morphism& m = lang.morphism;
  const FiniteMonoid& mon = *m.codomain;
  std::vector<bool> seen(mon.size(), false);
  std::vector<int> out;
  std::vector<int> queue;
  for (int g : m.letter_image) {
    if (!seen[g]) {
      seen[g] = true;
      out.push_back(g);
      queue.push_back(g);
    }
  }
  // Every nonempty word is a letter followed by a (possibly empty) word, so
  // closing under right multiplication by letters reaches all of them.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int g : m.letter_image) {
      const int p = mon.mul(queue[i], g);
      if (!seen[p]) {
        seen[p] = true;
        out.push_back(p);
        queue.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_syntactic(const RecognizedLanguage& lang) {
  const FiniteMonoid& m = *lang.morphism.codomain;
  const int n = m.size();
  // Coarsest congruence refining the accepting/rejecting split; the
  // recognizer is syntactic exactly when that congruence is equality.
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) {
    cls[s] = std::binary_search(lang.accepting.begin(), lang.accepting.end(), s) ? 1 : 0;
  }
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    std::vector<int> sig(2 * n + 1);
    for (int s = 0; s < n; ++s) {
      sig[0] = cls[s];
      for (int u = 0; u < n; ++u) {
        sig[1 + u] = cls[m.mul(s, u)];
        sig[1 + n + u] = cls[m.mul(u, s)];
      }
      next[s] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
    }
    if (next == cls) {
      return static_cast<int>(ids.size()) == n;
    }
    cls = std::move(next);
  }
}

Dfa morphism_automaton(const Morphism& m, const std::vector<int>& accept) {
  Dfa d;
  d.alphabet = m.alphabet;
  d.states = m.codomain->size();
  d.initial = m.codomain->identity();
  d.accepting.assign(d.states, false);
  for (int s : accept) {
    d.accepting[s] = true;
  }
  d.delta.resize(static_cast<std::size_t>(d.states) * m.alphabet.size());
  for (int q = 0; q < d.states; ++q) {
    for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
      d.delta[static_cast<std::size_t>(q) * m.alphabet.size() + a] = m.codomain->mul(q, m.letter_image[a]);
    }
  }
  return d;
}

}  // namespace tlc
