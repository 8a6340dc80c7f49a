#include "tlc/pairs.hpp"

#include <algorithm>
#include <deque>

#include "tlc/errors.hpp"

namespace tlc {

ClassSpec ClassSpec::custom(Morphism eta) {
  ClassSpec spec(Kind::Custom);
  spec.custom_ = check_surjective(eta).morphism;
  return spec;
}

std::string ClassSpec::name() const {
  switch (kind_) {
    case Kind::ST:
      return "st";
    case Kind::DD:
      return "dd";
    case Kind::AT:
      return "at";
    case Kind::Custom:
      return "custom";
  }
  return "?";
}

Morphism ClassSpec::morphism_for(const std::vector<char>& alphabet) const {
  if (kind_ != Kind::Custom) {
    return canonical_morphism(kind_, alphabet);
  }
  std::vector<char> a = alphabet, b = custom_->alphabet;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw AlphabetMismatchError();
  }
  return *custom_;
}

Morphism canonical_morphism(ClassSpec::Kind kind, const std::vector<char>& alphabet) {
  if (alphabet.empty()) {
    throw InputError("alphabet must not be empty");
  }
  Morphism m;
  m.alphabet = alphabet;
  switch (kind) {
    case ClassSpec::Kind::ST: {
      m.codomain = FiniteMonoid::trusted(1, {0}, 0);
      m.letter_image.assign(alphabet.size(), 0);
      return m;
    }
    case ClassSpec::Kind::DD: {
      // {1, 0}: distinguishes the empty word from everything else.
      m.codomain = FiniteMonoid::trusted(2, {0, 1, 1, 1}, 0);
      m.letter_image.assign(alphabet.size(), 1);
      return m;
    }
    case ClassSpec::Kind::AT: {
      // Subsets of the alphabet under union; a word maps to its content.
      const int k = static_cast<int>(alphabet.size());
      if (k > 16) {
        throw InputError("alphabet too large for the content monoid");
      }
      const int n = 1 << k;
      std::vector<int> table(static_cast<std::size_t>(n) * n);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          table[static_cast<std::size_t>(s) * n + t] = s | t;
        }
      }
      m.codomain = FiniteMonoid::trusted(n, std::move(table), 0);
      m.letter_image.resize(alphabet.size());
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        m.letter_image[i] = 1 << i;
      }
      return m;
    }
    case ClassSpec::Kind::Custom:
      break;
  }
  throw InputError("no canonical morphism for a custom class");
}

SurjectivityResult check_surjective(const Morphism& m) {
  if (m.is_surjective()) {
    return {true, m};
  }
  return {false, m.restricted_to_image()};
}

PairSet::PairSet(int m_size, MonoidPtr eta_codomain, std::vector<bool> relation,
                 std::string provenance)
    : m_size_(m_size),
      eta_codomain_(std::move(eta_codomain)),
      relation_(std::move(relation)),
      provenance_(std::move(provenance)) {
  const int n = eta_codomain_->size();
  pair_mat_.assign(static_cast<std::size_t>(m_size_) * m_size_, false);
  std::vector<int> bucket;
  for (int r = 0; r < n; ++r) {
    bucket.clear();
    for (int s = 0; s < m_size_; ++s) {
      if (relation_[static_cast<std::size_t>(s) * n + r]) {
        bucket.push_back(s);
      }
    }
    for (int s : bucket) {
      for (int t : bucket) {
        pair_mat_[static_cast<std::size_t>(s) * m_size_ + t] = true;
      }
    }
  }
}

std::vector<std::pair<int, int>> PairSet::pairs_sorted() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < m_size_; ++s) {
    for (int t = 0; t < m_size_; ++t) {
      if (contains(s, t)) {
        out.emplace_back(s, t);
      }
    }
  }
  return out;
}

PairSet eta_pairs(const Morphism& alpha, const Morphism& eta, std::string provenance) {
  std::vector<char> a = alpha.alphabet, b = eta.alphabet;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw AlphabetMismatchError();
  }

  const FiniteMonoid& m = *alpha.codomain;
  const FiniteMonoid& n = *eta.codomain;
  const int nn = n.size();

  std::vector<std::pair<int, int>> gens;
  gens.reserve(alpha.alphabet.size());
  for (char c : alpha.alphabet) {
    gens.emplace_back(alpha.image_of_letter(c), eta.image_of_letter(c));
  }

  std::vector<bool> reached(static_cast<std::size_t>(m.size()) * nn, false);
  std::deque<std::pair<int, int>> queue;
  auto visit = [&](int s, int r) {
    std::vector<bool>::reference bit = reached[static_cast<std::size_t>(s) * nn + r];
    if (!bit) {
      bit = true;
      queue.emplace_back(s, r);
    }
  };
  visit(m.identity(), n.identity());
  while (!queue.empty()) {
    const auto [s, r] = queue.front();
    queue.pop_front();
    for (const auto& [gs, gr] : gens) {
      visit(m.mul(s, gs), n.mul(r, gr));
    }
  }
  return PairSet(m.size(), eta.codomain, std::move(reached), std::move(provenance));
}

PairSet c_pairs(const Morphism& alpha, const ClassSpec& spec) {
  return eta_pairs(alpha, spec.morphism_for(alpha.alphabet), spec.name());
}

}  // namespace tlc
