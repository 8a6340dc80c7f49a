#include "tlc/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tlc/errors.hpp"
#include "tlc/json_io.hpp"
#include "tlc/regex.hpp"

namespace tlc::checks {

void SuiteResult::check(bool ok_, const std::string& what) {
  ++checks;
  if (!ok_) {
    ++failures;
    if (messages.size() < 16) {
      messages.push_back(what);
    }
  }
}

namespace {

template <typename Fn>
void for_words(const std::vector<char>& alphabet, int maxlen, Fn&& fn) {
  std::vector<std::string> layer{""};
  for (int len = 0; len <= maxlen; ++len) {
    for (const std::string& w : layer) {
      fn(w);
    }
    if (len == maxlen) {
      break;
    }
    std::vector<std::string> next;
    next.reserve(layer.size() * alphabet.size());
    for (const std::string& w : layer) {
      for (char a : alphabet) {
        next.push_back(w + a);
      }
    }
    layer = std::move(next);
  }
}

std::string repeat(const std::string& w, int k) {
  std::string out;
  out.reserve(w.size() * k);
  for (int i = 0; i < k; ++i) {
    out += w;
  }
  return out;
}

}  // namespace

NamedLanguage compile_language(const std::string& name, const std::string& regex,
                               const std::vector<char>& alphabet, const Limits& limits) {
  Dfa d = compile(parse_regex(regex, alphabet), alphabet, limits);
  RecognizedLanguage lang = syntactic_morphism(d, limits);
  return NamedLanguage{name, std::move(d), std::move(lang)};
}

RegexPtr random_regex(std::mt19937_64& rng, const std::vector<char>& alphabet, int depth) {
  auto letter = [&] { return Regex::lit(alphabet[rng() % alphabet.size()]); };
  if (depth <= 0) {
    return rng() % 8 == 0 ? Regex::epsilon() : letter();
  }
  switch (rng() % 16) {
    case 0:
    case 1:
      return letter();
    case 2:
      return Regex::epsilon();
    case 3:
    case 4:
    case 5:
    case 6:
    case 7:
      return Regex::concat(random_regex(rng, alphabet, depth - 1),
                           random_regex(rng, alphabet, depth - 1));
    case 8:
    case 9:
      return Regex::alt(random_regex(rng, alphabet, depth - 1),
                        random_regex(rng, alphabet, depth - 1));
    case 10:
    case 11:
    case 12:
      return Regex::star(random_regex(rng, alphabet, depth - 1));
    case 13:
      return Regex::plus(random_regex(rng, alphabet, depth - 1));
    case 14:
      return Regex::inter(random_regex(rng, alphabet, depth - 1),
                          random_regex(rng, alphabet, depth - 1));
    default:
      return Regex::complement(random_regex(rng, alphabet, depth - 1));
  }
}

std::string random_word(std::mt19937_64& rng, const std::vector<char>& alphabet, int maxlen) {
  const int len = static_cast<int>(rng() % (maxlen + 1));
  std::string w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) {
    w += alphabet[rng() % alphabet.size()];
  }
  return w;
}

std::optional<NamedLanguage> random_language(std::mt19937_64& rng,
                                             const std::vector<char>& alphabet, int max_states,
                                             int max_monoid, int attempts) {
  Limits limits;
  limits.max_dfa_states = std::max(64, max_states * 16);
  limits.max_monoid = max_monoid;
  for (int i = 0; i < attempts; ++i) {
    const RegexPtr re = random_regex(rng, alphabet, 3 + static_cast<int>(rng() % 3));
    try {
      Dfa d = compile(re, alphabet, limits);
      if (d.states > max_states) {
        continue;
      }
      RecognizedLanguage lang = syntactic_morphism(d, limits);
      return NamedLanguage{to_string(re), std::move(d), std::move(lang)};
    } catch (const ResourceLimitError&) {
      continue;
    }
  }
  return std::nullopt;
}

FormulaPtr random_formula(std::mt19937_64& rng, const Morphism& eta, int max_rank,
                          bool pure_future) {
  auto atom = [&]() -> FormulaPtr {
    switch (rng() % 8) {
      case 0:
        return Formula::make_true();
      case 1:
        return Formula::make_false();
      case 2:
        return Formula::min();
      case 3:
        return Formula::max();
      default:
        return Formula::letter_atom(eta.alphabet[rng() % eta.alphabet.size()]);
    }
  };
  if (max_rank <= 0) {
    switch (rng() % 4) {
      case 0:
        return Formula::negate(atom());
      case 1:
        return Formula::conj(atom(), atom());
      case 2:
        return Formula::disj(atom(), atom());
      default:
        return atom();
    }
  }
  switch (rng() % 8) {
    case 0:
      return atom();
    case 1:
      return Formula::negate(random_formula(rng, eta, max_rank, pure_future));
    case 2:
      return Formula::conj(random_formula(rng, eta, max_rank, pure_future),
                           random_formula(rng, eta, max_rank, pure_future));
    case 3:
      return Formula::disj(random_formula(rng, eta, max_rank, pure_future),
                           random_formula(rng, eta, max_rank, pure_future));
    default: {
      // Payload: the inverse image of a random element subset.
      const int n = eta.codomain->size();
      std::vector<int> accept;
      std::string src = "<eta:{";
      for (int r = 0; r < n; ++r) {
        if (rng() & 1) {
          if (!accept.empty()) {
            src += ',';
          }
          src += std::to_string(r);
          accept.push_back(r);
        }
      }
      src += "}>";
      auto payload = std::make_shared<const ModalPayload>(
          ModalPayload{std::move(src), morphism_automaton(eta, accept)});
      FormulaPtr sub = random_formula(rng, eta, max_rank - 1, pure_future);
      if (pure_future || (rng() & 1)) {
        return Formula::finally(std::move(payload), std::move(sub));
      }
      return Formula::previously(std::move(payload), std::move(sub));
    }
  }
}

FormulaPtr random_regex_formula(std::mt19937_64& rng, const std::vector<char>& alphabet,
                                int max_rank) {
  auto atom = [&]() -> FormulaPtr {
    switch (rng() % 8) {
      case 0:
        return Formula::make_true();
      case 1:
        return Formula::make_false();
      case 2:
        return Formula::min();
      case 3:
        return Formula::max();
      default:
        return Formula::letter_atom(alphabet[rng() % alphabet.size()]);
    }
  };
  if (max_rank <= 0) {
    switch (rng() % 4) {
      case 0:
        return Formula::negate(atom());
      case 1:
        return Formula::conj(atom(), atom());
      case 2:
        return Formula::disj(atom(), atom());
      default:
        return atom();
    }
  }
  switch (rng() % 8) {
    case 0:
      return atom();
    case 1:
      return Formula::negate(random_regex_formula(rng, alphabet, max_rank));
    case 2:
      return Formula::conj(random_regex_formula(rng, alphabet, max_rank),
                           random_regex_formula(rng, alphabet, max_rank));
    case 3:
      return Formula::disj(random_regex_formula(rng, alphabet, max_rank),
                           random_regex_formula(rng, alphabet, max_rank));
    default: {
      Limits limits;
      limits.max_dfa_states = 128;
      RegexPtr re = random_regex(rng, alphabet, 2);
      Dfa payload;
      try {
        payload = compile(re, alphabet, limits);
      } catch (const ResourceLimitError&) {
        re = parse_regex("_*", alphabet);
        payload = compile(re, alphabet, limits);
      }
      auto p = std::make_shared<const ModalPayload>(ModalPayload{to_string(re), std::move(payload)});
      FormulaPtr sub = random_regex_formula(rng, alphabet, max_rank - 1);
      if (rng() & 1) {
        return Formula::finally(std::move(p), std::move(sub));
      }
      return Formula::previously(std::move(p), std::move(sub));
    }
  }
}

std::vector<bool> enumerated_pairs(const Morphism& alpha, const Morphism& eta, int max_len) {
  const int m = alpha.codomain->size();
  const int n = eta.codomain->size();
  std::vector<std::set<int>> bucket(n);
  for_words(alpha.alphabet, max_len, [&](const std::string& w) {
    bucket[eta.image_of_word(w)].insert(alpha.image_of_word(w));
  });
  std::vector<bool> mat(static_cast<std::size_t>(m) * m, false);
  for (const auto& b : bucket) {
    for (int s : b) {
      for (int t : b) {
        mat[static_cast<std::size_t>(s) * m + t] = true;
      }
    }
  }
  return mat;
}

CongruenceComparison compare_congruence(const Dfa& input, const RecognizedLanguage& lang,
                                        int max_word_len) {
  CongruenceComparison cmp;
  const Dfa d = minimize(input);
  const int nq = d.states;
  cmp.monoid_size = lang.morphism.codomain->size();

  auto walk = [&](int q, const std::string& w) {
    for (char c : w) {
      q = d.step(q, d.letter_index(c));
    }
    return q;
  };

  // Acceptance profile of every state over explicit context words of
  // length <= nq. On a minimal automaton these profiles are distinct, so
  // two words are congruent exactly when they produce the same profile
  // from every state.
  std::vector<std::vector<bool>> profile(nq);
  for_words(d.alphabet, nq, [&](const std::string& y) {
    for (int q = 0; q < nq; ++q) {
      profile[q].push_back(d.accepting[walk(q, y)]);
    }
  });
  std::map<std::vector<bool>, int> profile_id;
  for (int q = 0; q < nq; ++q) {
    profile_id.emplace(profile[q], static_cast<int>(profile_id.size()));
  }
  if (static_cast<int>(profile_id.size()) != nq) {
    cmp.profiles_separate_states = false;
    return cmp;
  }

  std::map<std::vector<int>, int> classes;
  std::vector<int> class_image;
  cmp.image_well_defined = true;
  for_words(d.alphabet, max_word_len, [&](const std::string& u) {
    std::vector<int> sig(nq);
    for (int q = 0; q < nq; ++q) {
      sig[q] = profile_id.at(profile[walk(q, u)]);
    }
    const int img = lang.morphism.image_of_word(u);
    auto [it, fresh] = classes.emplace(std::move(sig), static_cast<int>(class_image.size()));
    if (fresh) {
      class_image.push_back(img);
    } else if (class_image[it->second] != img) {
      cmp.image_well_defined = false;
    }
  });
  cmp.classes = static_cast<int>(classes.size());
  const std::set<int> images(class_image.begin(), class_image.end());
  cmp.image_injective = images.size() == class_image.size();
  return cmp;
}

bool witness_reproduces(Property p, const FiniteMonoid& m, const OrbitWitness& w) {
  auto matches = [&](int lhs, int rhs) { return lhs == w.lhs && rhs == w.rhs && lhs != rhs; };
  auto da_sides = [&](int s, int t) {
    const int x = m.omega(m.mul(s, t));
    return std::pair<int, int>{x, m.mul(m.mul(x, t), x)};
  };
  auto l_sides = [&](int s, int t) {
    const int x = m.omega(m.mul(s, t));
    return std::pair<int, int>{m.mul(t, x), x};
  };
  auto r_sides = [&](int s, int t) {
    const int x = m.omega(m.mul(s, t));
    return std::pair<int, int>{m.mul(x, s), x};
  };
  auto esete_sides = [&](auto rhs_of) {
    const int ese = m.mul(m.mul(w.e, w.s), w.e);
    const int ete = m.mul(m.mul(w.e, w.t), w.e);
    const int x = m.mul(ese, m.mul(w.t, w.e));
    const int xw = m.omega(x);
    return std::pair<int, int>{m.mul(xw, x), rhs_of(xw, ese, ete)};
  };
  switch (p) {
    case Property::TL:
    case Property::DaGlobal:
    case Property::LocalDa:
    case Property::MeDa: {
      const auto [l, r] = da_sides(w.s, w.t);
      return matches(l, r);
    }
    case Property::TL_F: {
      const auto [l, r] = l_sides(w.s, w.t);
      return matches(l, r);
    }
    case Property::TL_P: {
      const auto [l, r] = r_sides(w.s, w.t);
      return matches(l, r);
    }
    case Property::TL_FP: {
      const auto [ll, lr] = l_sides(w.s, w.t);
      const auto [rl, rr] = r_sides(w.s, w.t);
      return matches(ll, lr) || matches(rl, rr);
    }
    case Property::UPolBPol: {
      const auto [l, r] =
          esete_sides([&](int xw, int, int ete) { return m.mul(m.mul(xw, ete), xw); });
      return matches(l, r);
    }
    case Property::RPolBPol: {
      const auto [l, r] = esete_sides([&](int xw, int, int ete) { return m.mul(ete, xw); });
      return matches(l, r);
    }
    case Property::LPolBPol: {
      const auto [l, r] = esete_sides([&](int xw, int ese, int) { return m.mul(xw, ese); });
      return matches(l, r);
    }
  }
  return false;
}

SuiteResult monoid_law_suite(std::uint64_t seed, int n_random) {
  SuiteResult r{"monoid-laws"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n_random; ++i) {
    const std::vector<char> alphabet = make_alphabet(i % 2 == 0 ? "ab" : "abc");
    const auto nl = random_language(rng, alphabet, 6, 120, 400);
    if (!nl) {
      r.check(false, "random language generator exhausted its attempts");
      continue;
    }
    const MonoidPtr mp = nl->lang.morphism.codomain;
    const FiniteMonoid& m = *mp;
    const std::string& name = nl->name;

    for (int s = 0; s < m.size(); ++s) {
      const int e = m.omega(s);
      r.check(m.mul(e, e) == e, name + ": omega power is not idempotent");
      r.check(m.omega(e) == e, name + ": omega is not a fixpoint on idempotents");
      bool is_power = false;
      int p = s;
      for (int k = 1; k <= m.size() + 1; ++k) {
        if (p == e) {
          is_power = true;
          break;
        }
        p = m.mul(p, s);
      }
      r.check(is_power, name + ": omega power is not a positive power");
    }

    const GreenData g = green(m);
    if (m.size() <= 8) {
      for (int s = 0; s < m.size(); ++s) {
        for (int t = 0; t < m.size(); ++t) {
          bool bf_j = false, bf_l = false, bf_r = false;
          for (int x = 0; x < m.size(); ++x) {
            if (m.mul(x, t) == s) {
              bf_l = true;
            }
            if (m.mul(t, x) == s) {
              bf_r = true;
            }
            for (int y = 0; y < m.size(); ++y) {
              if (m.mul(m.mul(x, t), y) == s) {
                bf_j = true;
              }
            }
          }
          r.check(g.leq_j(s, t) == bf_j && g.leq_l(s, t) == bf_l && g.leq_r(s, t) == bf_r,
                  name + ": Green preorder disagrees with brute force");
        }
      }
    }

    const std::vector<int> depth = j_depths(g);
    r.check(depth[m.identity()] == 0, name + ": identity must have depth 0");
    for (int s = 0; s < m.size(); ++s) {
      for (int t = 0; t < m.size(); ++t) {
        if (g.leq_j(s, t) && depth[s] < depth[t]) {
          r.check(false, name + ": J-depth is not monotone");
        }
      }
    }

    std::vector<int> all(m.size());
    for (int s = 0; s < m.size(); ++s) {
      all[s] = s;
    }
    const SubMonoid whole = SubMonoid::checked(mp, std::move(all), m.identity());
    const bool jt = !check_j_trivial(whole).has_value();
    const bool lt = !check_l_trivial(whole).has_value();
    const bool rt = !check_r_trivial(whole).has_value();
    r.check(jt == (lt && rt), name + ": J-trivial must equal L-trivial and R-trivial");
    if (jt) {
      r.check(!check_da(whole).has_value(), name + ": J-trivial monoid must satisfy the DA equation");
    }
  }
  return r;
}

SuiteResult stability_suite(std::uint64_t seed, int n_monoids) {
  SuiteResult r{"stability"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n_monoids; ++i) {
    const std::vector<char> alphabet = make_alphabet(i % 2 == 0 ? "ab" : "abc");
    const auto nl = random_language(rng, alphabet, 7, 160, 400);
    if (!nl) {
      r.check(false, "random language generator exhausted its attempts");
      continue;
    }
    const FiniteMonoid& m = *nl->lang.morphism.codomain;
    const GreenData g = green(m);
    for (int s = 0; s < m.size(); ++s) {
      for (int t = 0; t < m.size(); ++t) {
        if (g.equiv_j(s, t) && g.leq_r(s, t)) {
          r.check(g.equiv_r(s, t), nl->name + ": J-equivalent with <=R must be R-equivalent");
        }
      }
    }
  }
  return r;
}

SuiteResult congruence_suite(const std::vector<NamedLanguage>& langs, int max_word_len,
                             int max_states) {
  SuiteResult r{"congruence-oracle"};
  for (const NamedLanguage& nl : langs) {
    if (nl.dfa.states > max_states) {
      continue;
    }
    const CongruenceComparison cmp = compare_congruence(nl.dfa, nl.lang, max_word_len);
    r.check(cmp.profiles_separate_states, nl.name + ": context profiles do not separate states");
    r.check(cmp.classes == cmp.monoid_size,
            nl.name + ": quotient has " + std::to_string(cmp.classes) + " classes but monoid has " +
                std::to_string(cmp.monoid_size));
    r.check(cmp.image_well_defined, nl.name + ": words in one class with different images");
    r.check(cmp.image_injective, nl.name + ": distinct classes share an image");
  }
  return r;
}

namespace {

const ClassSpec kCanonical[] = {ClassSpec::st(), ClassSpec::dd(), ClassSpec::at()};

}  // namespace

SuiteResult pair_law_suite(const std::vector<NamedLanguage>& langs, int max_len) {
  SuiteResult r{"pair-laws"};
  for (const NamedLanguage& nl : langs) {
    const Morphism& alpha = nl.lang.morphism;
    const int m = alpha.codomain->size();
    for (const ClassSpec& spec : kCanonical) {
      const PairSet pairs = c_pairs(alpha, spec);
      const std::string tag = nl.name + "/" + spec.name();

      bool diagonal = true, symmetric = true;
      for (int s = 0; s < m; ++s) {
        diagonal = diagonal && pairs.contains(s, s);
        for (int t = 0; t < m; ++t) {
          symmetric = symmetric && pairs.contains(s, t) == pairs.contains(t, s);
        }
      }
      r.check(diagonal, tag + ": pair relation must contain the diagonal");
      r.check(symmetric, tag + ": pair relation must be symmetric");

      if (static_cast<long>(m) * m * m * m <= 20'000'000) {
        bool closed = true;
        const auto list = pairs.pairs_sorted();
        for (const auto& [s, t] : list) {
          for (const auto& [s2, t2] : list) {
            if (!pairs.contains(alpha.codomain->mul(s, s2), alpha.codomain->mul(t, t2))) {
              closed = false;
            }
          }
        }
        r.check(closed, tag + ": pair relation must be closed under products");
      }

      if (spec.kind() == ClassSpec::Kind::ST) {
        bool full = true;
        for (int s = 0; s < m && full; ++s) {
          for (int t = 0; t < m; ++t) {
            if (!pairs.contains(s, t)) {
              full = false;
              break;
            }
          }
        }
        r.check(full, tag + ": ST pairs must be the full square");
      }
      if (spec.kind() == ClassSpec::Kind::DD) {
        const std::vector<int> semigroup = syntactic_semigroup(nl.lang);
        auto in_s = [&](int x) {
          return std::binary_search(semigroup.begin(), semigroup.end(), x);
        };
        bool match = true;
        const int one = alpha.codomain->identity();
        for (int s = 0; s < m; ++s) {
          for (int t = 0; t < m; ++t) {
            const bool expect = (s == one && t == one) || (in_s(s) && in_s(t));
            if (pairs.contains(s, t) != expect) {
              match = false;
            }
          }
        }
        r.check(match, tag + ": DD pairs must be {(1,1)} plus the semigroup square");
      }

      if (m <= 8 && alpha.alphabet.size() <= 3) {
        const Morphism eta = spec.morphism_for(alpha.alphabet);
        const std::vector<bool> brute = enumerated_pairs(alpha, eta, max_len);
        bool agree = true;
        for (int s = 0; s < m; ++s) {
          for (int t = 0; t < m; ++t) {
            if (brute[static_cast<std::size_t>(s) * m + t] != pairs.contains(s, t)) {
              agree = false;
            }
          }
        }
        r.check(agree, tag + ": saturation disagrees with word enumeration");
      }
    }

    // eta = alpha itself: each word is related only to its own image, so
    // the pair relation collapses to the diagonal.
    const PairSet self_pairs = c_pairs(alpha, ClassSpec::custom(alpha));
    bool diag_only = true;
    for (int s = 0; s < m; ++s) {
      for (int t = 0; t < m; ++t) {
        if (self_pairs.contains(s, t) != (s == t)) {
          diag_only = false;
        }
      }
    }
    r.check(diag_only, nl.name + ": pairs for eta = alpha must be exactly the diagonal");
  }
  return r;
}

SuiteResult orbit_law_suite(const std::vector<NamedLanguage>& langs) {
  SuiteResult r{"orbit-laws"};
  for (const NamedLanguage& nl : langs) {
    const Morphism& alpha = nl.lang.morphism;
    const FiniteMonoid& m = *alpha.codomain;
    std::vector<OrbitAnalysis> analyses;
    for (const ClassSpec& spec : kCanonical) {
      const std::string tag = nl.name + "/" + spec.name();
      try {
        analyses.push_back(analyze(nl.lang, spec));
      } catch (const Error& e) {
        r.check(false, tag + ": analysis threw: " + e.what());
        continue;
      }
      const OrbitAnalysis& a = analyses.back();

      for (const Orbit& o : a.orbits) {
        r.check(o.members.contains(o.base), tag + ": orbit must contain its base idempotent");
        bool neutral = true, closed = true;
        for (int x : o.members.elements()) {
          neutral = neutral && m.mul(o.base, x) == x && m.mul(x, o.base) == x;
          for (int y : o.members.elements()) {
            closed = closed && o.members.contains(m.mul(x, y));
          }
        }
        r.check(neutral, tag + ": base idempotent must be neutral on its orbit");
        r.check(closed, tag + ": orbit must be closed under products");
      }

      r.check(!orbit_containment_check(a).has_value(),
              tag + ": every orbit must land inside one eta-class image");

      for (const Verdict& v : standard_verdicts(nl.lang, spec)) {
        if (v.witness) {
          r.check(witness_reproduces(v.property, m, *v.witness),
                  tag + ": witness for " + property_name(v.property) + " does not re-evaluate");
        }
      }
    }

    // Larger pair sets give larger orbits.
    for (const OrbitAnalysis& a : analyses) {
      for (const OrbitAnalysis& b : analyses) {
        bool superset = true;
        for (int s = 0; s < m.size() && superset; ++s) {
          for (int t = 0; t < m.size(); ++t) {
            if (b.pairs.contains(s, t) && !a.pairs.contains(s, t)) {
              superset = false;
              break;
            }
          }
        }
        if (!superset) {
          continue;
        }
        for (std::size_t i = 0; i < a.orbits.size(); ++i) {
          bool orbit_superset = true;
          for (int x : b.orbits[i].members.elements()) {
            if (!a.orbits[i].members.contains(x)) {
              orbit_superset = false;
            }
          }
          r.check(orbit_superset, nl.name + ": " + b.spec.name() + "-orbit escapes the " +
                                      a.spec.name() + "-orbit despite smaller pairs");
        }
      }
    }
  }
  return r;
}

std::vector<Verdict> standard_verdicts(const RecognizedLanguage& lang, const ClassSpec& spec) {
  const OrbitAnalysis a = analyze(lang, spec);
  return {verdict_tl(a),       verdict_tl_f(a),     verdict_tl_p(a),    verdict_tl_fp(a),
          check_upol_bpol(a),  check_rpol_bpol(a),  check_lpol_bpol(a)};
}

SuiteResult agreement_suite(const std::vector<NamedLanguage>& langs) {
  SuiteResult r{"specialized-agreement"};
  for (const NamedLanguage& nl : langs) {
    const Verdict st = verdict_tl(analyze(nl.lang, ClassSpec::st()));
    const Verdict dd = verdict_tl(analyze(nl.lang, ClassSpec::dd()));
    const Verdict at = verdict_tl(analyze(nl.lang, ClassSpec::at()));
    r.check(st.holds == specialized_st(nl.lang).holds,
            nl.name + ": ST orbit verdict disagrees with the whole-monoid DA check");
    r.check(dd.holds == specialized_dd(nl.lang).holds,
            nl.name + ": DD orbit verdict disagrees with the local eSe check");
    r.check(at.holds == specialized_at(nl.lang).holds,
            nl.name + ": AT orbit verdict disagrees with the MeDA check");
  }
  return r;
}

SuiteResult implication_suite(const std::vector<NamedLanguage>& langs) {
  SuiteResult r{"implications"};
  for (const NamedLanguage& nl : langs) {
    for (const ClassSpec& spec : kCanonical) {
      const std::string tag = nl.name + "/" + spec.name();
      const OrbitAnalysis a = analyze(nl.lang, spec);
      const bool tl = verdict_tl(a).holds;
      const bool tlf = verdict_tl_f(a).holds;
      const bool tlp = verdict_tl_p(a).holds;
      const bool tlfp = verdict_tl_fp(a).holds;
      const bool upol = check_upol_bpol(a).holds;
      const bool rpol = check_rpol_bpol(a).holds;
      const bool lpol = check_lpol_bpol(a).holds;

      r.check(!upol || tl, tag + ": UPolBPol membership must imply TL membership");
      r.check(!rpol || tlf, tag + ": the RPol condition must imply the pure-future fragment");
      r.check(!lpol || tlp, tag + ": the LPol condition must imply the pure-past fragment");
      r.check(tlfp == (tlf && tlp), tag + ": intersection fragment must match the conjunction");
      r.check(!tlfp || tl, tag + ": intersection fragment must imply TL membership");
      if (upol) {
        for (const Orbit& o : a.orbits) {
          r.check(!check_aperiodic(o.members).has_value(),
                  tag + ": UPolBPol membership forces aperiodic orbits");
        }
      }
    }
  }
  return r;
}

SuiteResult semantics_dual_suite(std::uint64_t seed, const std::vector<char>& alphabet,
                                 int n_triples) {
  SuiteResult r{"semantics-dual"};
  std::mt19937_64 rng(seed);
  while (r.checks < n_triples) {
    const FormulaPtr f = random_regex_formula(rng, alphabet, 2);
    const std::string w = random_word(rng, alphabet, 7);
    for (int pos = 0; pos <= static_cast<int>(w.size()) + 1; ++pos) {
      r.check(evaluate(f, w, pos) == evaluate_naive(f, w, pos),
              "evaluators disagree on " + to_string(f) + " over \"" + w + "\" at " +
                  std::to_string(pos));
    }
  }
  return r;
}

SuiteResult modality_suite(const std::vector<char>& alphabet, int max_len) {
  SuiteResult r{"modalities"};
  const Limits limits;
  auto payload = [&](const std::string& src) {
    return std::make_shared<const ModalPayload>(
        ModalPayload{src, compile(parse_regex(src, alphabet), alphabet, limits)});
  };
  const auto any = payload("_*");
  const auto eps = payload("()");

  const std::vector<FormulaPtr> subs = {
      Formula::letter_atom(alphabet[0]),
      Formula::max(),
      Formula::disj(Formula::letter_atom(alphabet[alphabet.size() - 1]), Formula::min()),
  };

  for_words(alphabet, max_len, [&](const std::string& w) {
    const int n = static_cast<int>(w.size());
    for (const FormulaPtr& sub : subs) {
      const FormulaPtr f_any = Formula::finally(any, sub);
      const FormulaPtr f_eps = Formula::finally(eps, sub);
      const FormulaPtr p_any = Formula::previously(any, sub);
      const FormulaPtr p_eps = Formula::previously(eps, sub);
      for (int i = 0; i <= n + 1; ++i) {
        bool classic_f = false;
        for (int j = i + 1; j <= n + 1; ++j) {
          classic_f = classic_f || evaluate(sub, w, j);
        }
        bool classic_p = false;
        for (int j = 0; j < i; ++j) {
          classic_p = classic_p || evaluate(sub, w, j);
        }
        r.check(evaluate(f_any, w, i) == classic_f, "F[_*] must match the plain eventually");
        r.check(evaluate(p_any, w, i) == classic_p, "P[_*] must match the plain previously");
        r.check(evaluate(f_eps, w, i) == (i + 1 <= n + 1 && evaluate(sub, w, i + 1)),
                "F[()] must match next");
        r.check(evaluate(p_eps, w, i) == (i - 1 >= 0 && evaluate(sub, w, i - 1)),
                "P[()] must match yesterday");
      }
    }
  });

  // Time reversal duality.
  const std::vector<FormulaPtr> duals = {
      Formula::finally(any, Formula::letter_atom(alphabet[0])),
      Formula::previously(payload("(" + std::string(1, alphabet[0]) + std::string(1, alphabet[0]) + ")*"),
                          Formula::disj(Formula::letter_atom(alphabet[alphabet.size() - 1]),
                                        Formula::min())),
      Formula::conj(Formula::finally(eps, Formula::max()),
                    Formula::negate(Formula::previously(any, Formula::letter_atom(alphabet[0])))),
  };
  for (const FormulaPtr& f : duals) {
    const FormulaPtr g = mirror(f);
    for_words(alphabet, max_len, [&](const std::string& w) {
      std::string rev(w.rbegin(), w.rend());
      const int n = static_cast<int>(w.size());
      for (int i = 0; i <= n + 1; ++i) {
        r.check(evaluate(f, w, i) == evaluate(g, rev, n + 1 - i),
                "mirror duality fails for " + to_string(f));
      }
    });
  }

  // Sampled languages against regex-compiled recognizers.
  struct SamplePair {
    std::string formula;
    std::string regex;
    bool at_max;
  };
  const std::vector<SamplePair> curated = {
      {"F[_*] 'a'", "_*a_*", false},
      {"F[()] 'a'", "a_*", false},
      {"F[()] max", "()", false},
      {"F[_*] ('a' & F[_*] 'b')", "_*a_*b_*", false},
      {"F[(aa)*] 'b'", "(aa)*b_*", false},
      {"P[_*] 'b'", "_*b_*", true},
      {"P[()] 'a'", "_*a", true},
  };
  for (const SamplePair& sp : curated) {
    if (alphabet.size() < 2) {
      break;
    }
    const FormulaPtr f = parse_formula(sp.formula, alphabet, limits);
    const Dfa d = compile(parse_regex(sp.regex, alphabet), alphabet, limits);
    const auto words =
        sp.at_max ? l_max_sample(f, alphabet, max_len) : l_min_sample(f, alphabet, max_len);
    std::vector<std::string> expect;
    for_words(alphabet, max_len, [&](const std::string& w) {
      if (d.accepts(w)) {
        expect.push_back(w);
      }
    });
    r.check(words == expect, "sampling of " + sp.formula + " must match " + sp.regex);
  }
  return r;
}

namespace {

SuiteResult rank_equivalence_impl(std::string name, const Morphism& eta, int max_k, int trials,
                                  std::uint64_t seed, bool pure_future) {
  SuiteResult r{std::move(name)};
  std::mt19937_64 rng(seed);

  // Word pools per element of the codomain, seeded by plain enumeration.
  std::vector<std::vector<std::string>> pool(eta.codomain->size());
  for_words(eta.alphabet, 4, [&](const std::string& w) {
    auto& p = pool[eta.image_of_word(w)];
    if (p.size() < 32) {
      p.push_back(w);
    }
  });

  const std::vector<int> idems = eta.codomain->idempotents();
  for (int trial = 0; trial < trials; ++trial) {
    const int k = trial % (max_k + 1);
    const int f = idems[rng() % idems.size()];
    const auto& p = pool[f];
    if (p.empty()) {
      continue;  // unreachable for surjective morphisms over small lengths
    }
    const std::string u = p[rng() % p.size()];
    const std::string v = p[rng() % p.size()];
    const std::string z = p[rng() % p.size()];
    const std::string zk = repeat(z, k);
    const std::string block = zk + u + repeat(z, 2 * k) + v + zk;
    const std::string blockk = repeat(block, k);

    std::string w1, w2;
    if (pure_future) {
      w1 = blockk;
      w2 = zk + v + zk + blockk;
    } else {
      const std::string x = random_word(rng, eta.alphabet, 3);
      const std::string y = random_word(rng, eta.alphabet, 3);
      w1 = x + blockk + blockk + y;
      w2 = x + blockk + zk + v + zk + blockk + y;
    }
    const FormulaPtr phi = random_formula(rng, eta, k, pure_future);
    r.check(evaluate(phi, w1, 0) == evaluate(phi, w2, 0),
            "rank-" + std::to_string(k) + " formula " + to_string(phi) +
                " distinguishes the equivalent words");
  }
  return r;
}

}  // namespace

SuiteResult rank_equivalence_suite(const Morphism& eta, int max_k, int trials,
                                   std::uint64_t seed) {
  return rank_equivalence_impl("rank-equivalence", eta, max_k, trials, seed, false);
}

SuiteResult rank_equivalence_future_suite(const Morphism& eta, int max_k, int trials,
                                          std::uint64_t seed) {
  return rank_equivalence_impl("rank-equivalence-future", eta, max_k, trials, seed, true);
}

bool SelftestReport::ok() const {
  if (corpus_failures > 0) {
    return false;
  }
  for (const SuiteResult& s : suites) {
    if (!s.ok()) {
      return false;
    }
  }
  return true;
}

std::vector<NamedLanguage> builtin_languages(const Limits& limits) {
  struct Entry {
    const char* name;
    const char* regex;
    const char* alphabet;
  };
  static const Entry entries[] = {
      {"universal", "_*", "ab"},
      {"empty", "~(_*)", "ab"},
      {"just-epsilon", "()", "ab"},
      {"contains-a", "_*a_*", "ab"},
      {"ab-star", "(ab)*", "ab"},
      {"even-a-block", "(aa)*", "a"},
      {"starts-a", "a_*", "ab"},
      {"ends-a", "_*a", "ab"},
      {"contains-ab", "_*ab_*", "ab"},
      {"no-a", "~(_*a_*)", "ab"},
      {"a-between-b", "b_*a_*b", "ab"},
      {"two-a", "_*a_*a_*", "ab"},
      {"even-length", "((a|b)(a|b))*", "ab"},
      {"abc-star", "(abc)*", "abc"},
      {"c-separated", "c*ac*bc*", "abc"},
  };
  std::vector<NamedLanguage> out;
  for (const Entry& e : entries) {
    out.push_back(compile_language(e.name, e.regex, make_alphabet(e.alphabet), limits));
  }
  return out;
}

SelftestReport run_selftest(const std::vector<CorpusEntry>& corpus, std::uint64_t seed,
                            const Limits& limits) {
  SelftestReport rep;

  std::vector<NamedLanguage> langs;
  if (corpus.empty()) {
    langs = builtin_languages(limits);
  } else {
    for (const CorpusEntry& e : corpus) {
      try {
        RecognizedLanguage lang = corpus_language(e, limits);
        Dfa d = e.dfa_path.empty()
                    ? compile(parse_regex(e.language, e.alphabet), e.alphabet, limits)
                    : minimize(dfa_from_json(read_file(e.dfa_path)));
        langs.push_back(NamedLanguage{e.id, std::move(d), std::move(lang)});
      } catch (const ResourceLimitError& ex) {
        rep.corpus_messages.push_back(e.id + ": skipped (" + ex.what() + ")");
      }
    }
  }

  rep.suites.push_back(monoid_law_suite(seed, 10));
  rep.suites.push_back(stability_suite(seed + 1, 30));
  rep.suites.push_back(congruence_suite(langs, 6, 6));
  rep.suites.push_back(pair_law_suite(langs, 6));
  rep.suites.push_back(orbit_law_suite(langs));
  rep.suites.push_back(agreement_suite(langs));
  rep.suites.push_back(implication_suite(langs));
  rep.suites.push_back(semantics_dual_suite(seed + 2, make_alphabet("ab"), 400));
  rep.suites.push_back(modality_suite(make_alphabet("ab"), 5));

  const Morphism dd = canonical_morphism(ClassSpec::Kind::DD, make_alphabet("ab"));
  const Morphism at = canonical_morphism(ClassSpec::Kind::AT, make_alphabet("ab"));
  SuiteResult dd_rank = rank_equivalence_suite(dd, 2, 150, seed + 3);
  dd_rank.name += "-dd";
  SuiteResult at_rank = rank_equivalence_suite(at, 2, 150, seed + 4);
  at_rank.name += "-at";
  SuiteResult dd_future = rank_equivalence_future_suite(dd, 2, 150, seed + 5);
  dd_future.name += "-dd";
  SuiteResult at_future = rank_equivalence_future_suite(at, 2, 150, seed + 6);
  at_future.name += "-at";
  rep.suites.push_back(std::move(dd_rank));
  rep.suites.push_back(std::move(at_rank));
  rep.suites.push_back(std::move(dd_future));
  rep.suites.push_back(std::move(at_future));

  // Corpus expectations.
  for (const NamedLanguage& nl : langs) {
    const CorpusEntry* entry = nullptr;
    for (const CorpusEntry& e : corpus) {
      if (e.id == nl.name) {
        entry = &e;
        break;
      }
    }
    if (entry == nullptr || entry->expected.empty()) {
      continue;
    }
    for (const auto& [cls, props] : entry->expected) {
      ClassSpec spec = ClassSpec::st();
      if (cls == "dd") {
        spec = ClassSpec::dd();
      } else if (cls == "at") {
        spec = ClassSpec::at();
      } else if (cls != "st") {
        ++rep.corpus_failures;
        rep.corpus_messages.push_back(entry->id + ": unknown class '" + cls + "'");
        continue;
      }
      const std::vector<Verdict> verdicts = standard_verdicts(nl.lang, spec);
      for (const auto& [prop, expected] : props) {
        ++rep.corpus_entries;
        bool found = false;
        for (const Verdict& v : verdicts) {
          if (property_name(v.property) == prop) {
            found = true;
            if (v.holds != expected) {
              ++rep.corpus_failures;
              rep.corpus_messages.push_back(entry->id + "/" + cls + "/" + prop + ": expected " +
                                            (expected ? "true" : "false") + ", computed " +
                                            (v.holds ? "true" : "false"));
            }
            break;
          }
        }
        if (!found) {
          ++rep.corpus_failures;
          rep.corpus_messages.push_back(entry->id + ": unknown property '" + prop + "'");
        }
      }
    }
  }
  return rep;
}

}  // namespace tlc::checks
