#include "tlc/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tlc/errors.hpp"

namespace tlc {

int Dfa::letter_index(char a) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == a) {
      return static_cast<int>(i);
    }
  }
  throw UnknownLetterError(a);
}

bool Dfa::accepts(std::string_view word) const {
  int q = initial;
  for (char a : word) {
    q = step(q, letter_index(a));
  }
  return accepting[q];
}

namespace {

/// Nondeterministic automaton with epsilon moves, used only as scaffolding
/// between regex nodes and the subset construction.
struct Nfa {
  int states = 0;
  std::vector<int> initial;
  std::vector<bool> accepting;
  std::vector<std::vector<std::pair<int, int>>> edges;  // state -> (letter, target)
  std::vector<std::vector<int>> eps;                    // state -> targets

  int add_state(bool accept = false) {
    accepting.push_back(accept);
    edges.emplace_back();
    eps.emplace_back();
    return states++;
  }
};

Nfa from_dfa(const Dfa& d) {
  Nfa n;
  for (int q = 0; q < d.states; ++q) {
    n.add_state(d.accepting[q]);
  }
  n.initial = {d.initial};
  for (int q = 0; q < d.states; ++q) {
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      n.edges[q].emplace_back(static_cast<int>(a), d.step(q, static_cast<int>(a)));
    }
  }
  return n;
}

void eps_close(const Nfa& n, std::set<int>& states) {
  std::deque<int> queue(states.begin(), states.end());
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int t : n.eps[q]) {
      if (states.insert(t).second) {
        queue.push_back(t);
      }
    }
  }
}

Dfa determinize(const Nfa& n, const std::vector<char>& alphabet, const Limits& limits) {
  const int nletters = static_cast<int>(alphabet.size());
  std::map<std::set<int>, int> index;
  std::vector<std::set<int>> subsets;
  Dfa d;
  d.alphabet = alphabet;

  auto intern = [&](std::set<int> s) {
    eps_close(n, s);
    auto it = index.find(s);
    if (it != index.end()) {
      return it->second;
    }
    const int id = static_cast<int>(subsets.size());
    if (id >= limits.max_dfa_states) {
      throw StateLimitError(limits.max_dfa_states);
    }
    index.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  d.initial = intern(std::set<int>(n.initial.begin(), n.initial.end()));
  for (std::size_t qi = 0; qi < subsets.size(); ++qi) {
    for (int a = 0; a < nletters; ++a) {
      std::set<int> next;
      for (int q : subsets[qi]) {
        for (const auto& [letter, target] : n.edges[q]) {
          if (letter == a) {
            next.insert(target);
          }
        }
      }
      d.delta.push_back(intern(std::move(next)));
    }
  }
  d.states = static_cast<int>(subsets.size());
  d.accepting.resize(d.states, false);
  for (int q = 0; q < d.states; ++q) {
    for (int s : subsets[q]) {
      if (n.accepting[s]) {
        d.accepting[q] = true;
        break;
      }
    }
  }
  return d;
}

Dfa compile_node(const RegexPtr& re, const std::vector<char>& alphabet, const Limits& limits);

Nfa compile_to_nfa(const RegexPtr& re, const std::vector<char>& alphabet, const Limits& limits) {
  switch (re->op) {
    case Regex::Op::Union: {
      Nfa a = compile_to_nfa(re->left, alphabet, limits);
      Nfa b = compile_to_nfa(re->right, alphabet, limits);
      Nfa n = std::move(a);
      const int offset = n.states;
      for (int q = 0; q < b.states; ++q) {
        n.add_state(b.accepting[q]);
      }
      for (int q = 0; q < b.states; ++q) {
        for (auto [letter, target] : b.edges[q]) {
          n.edges[offset + q].emplace_back(letter, offset + target);
        }
        for (int t : b.eps[q]) {
          n.eps[offset + q].push_back(offset + t);
        }
      }
      const int start = n.add_state();
      for (int i : n.initial) {
        n.eps[start].push_back(i);
      }
      for (int i : b.initial) {
        n.eps[start].push_back(offset + i);
      }
      n.initial = {start};
      return n;
    }
    case Regex::Op::Concat: {
      Nfa n = compile_to_nfa(re->left, alphabet, limits);
      Nfa b = compile_to_nfa(re->right, alphabet, limits);
      const int offset = n.states;
      for (int q = 0; q < b.states; ++q) {
        n.add_state(b.accepting[q]);
      }
      for (int q = 0; q < b.states; ++q) {
        for (auto [letter, target] : b.edges[q]) {
          n.edges[offset + q].emplace_back(letter, offset + target);
        }
        for (int t : b.eps[q]) {
          n.eps[offset + q].push_back(offset + t);
        }
      }
      for (int q = 0; q < offset; ++q) {
        if (n.accepting[q]) {
          for (int i : b.initial) {
            n.eps[q].push_back(offset + i);
          }
          n.accepting[q] = false;
        }
      }
      return n;
    }
    case Regex::Op::Star: {
      Nfa n = compile_to_nfa(re->left, alphabet, limits);
      const int start = n.add_state(true);
      for (int q = 0; q + 1 < n.states; ++q) {
        if (n.accepting[q]) {
          for (int i : n.initial) {
            n.eps[q].push_back(i);
          }
        }
      }
      for (int i : n.initial) {
        n.eps[start].push_back(i);
      }
      n.initial = {start};
      return n;
    }
    case Regex::Op::Plus: {
      Nfa n = compile_to_nfa(re->left, alphabet, limits);
      for (int q = 0; q < n.states; ++q) {
        if (n.accepting[q]) {
          for (int i : n.initial) {
            n.eps[q].push_back(i);
          }
        }
      }
      return n;
    }
    default:
      return from_dfa(compile_node(re, alphabet, limits));
  }
}

Dfa compile_node(const RegexPtr& re, const std::vector<char>& alphabet, const Limits& limits) {
  const int nletters = static_cast<int>(alphabet.size());
  switch (re->op) {
    case Regex::Op::Empty: {
      Dfa d;
      d.alphabet = alphabet;
      d.states = 1;
      d.initial = 0;
      d.accepting = {false};
      d.delta.assign(nletters, 0);
      return d;
    }
    case Regex::Op::Epsilon: {
      Dfa d;
      d.alphabet = alphabet;
      d.states = 2;
      d.initial = 0;
      d.accepting = {true, false};
      d.delta.assign(2 * static_cast<std::size_t>(nletters), 1);
      return d;
    }
    case Regex::Op::Letter: {
      Dfa d;
      d.alphabet = alphabet;
      d.states = 3;  // start, accept, sink
      d.initial = 0;
      d.accepting = {false, true, false};
      d.delta.assign(3 * static_cast<std::size_t>(nletters), 2);
      for (int a = 0; a < nletters; ++a) {
        if (alphabet[a] == re->letter) {
          d.delta[a] = 1;
        }
      }
      return minimize(d);
    }
    case Regex::Op::Complement:
      return minimize(complement(compile_node(re->left, alphabet, limits)));
    case Regex::Op::Inter:
      return minimize(intersect(compile_node(re->left, alphabet, limits),
                                compile_node(re->right, alphabet, limits), limits));
    default:
      return minimize(determinize(compile_to_nfa(re, alphabet, limits), alphabet, limits));
  }
}

}  // namespace

Dfa compile(const RegexPtr& re, const std::vector<char>& alphabet, const Limits& limits) {
  if (alphabet.empty()) {
    throw InputError("alphabet must not be empty");
  }
  return compile_node(re, alphabet, limits);
}

Dfa minimize(const Dfa& d) {
  const int nletters = static_cast<int>(d.alphabet.size());

  // Drop unreachable states first.
  std::vector<int> reach_id(d.states, -1);
  std::vector<int> order;
  order.push_back(d.initial);
  reach_id[d.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int a = 0; a < nletters; ++a) {
      const int t = d.step(order[i], a);
      if (reach_id[t] < 0) {
        reach_id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  const int n = static_cast<int>(order.size());

  // Moore refinement on the reachable part.
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) {
    cls[q] = d.accepting[order[q]] ? 1 : 0;
  }
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      sig.reserve(nletters + 1);
      sig.push_back(cls[q]);
      for (int a = 0; a < nletters; ++a) {
        sig.push_back(cls[reach_id[d.step(order[q], a)]]);
      }
      next[q] = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size())).first->second;
    }
    if (next == cls) {
      break;
    }
    cls = std::move(next);
  }

  // Canonical numbering: BFS from the initial class, letters in order.
  const int nclasses = 1 + *std::max_element(cls.begin(), cls.end());
  std::vector<int> canon(nclasses, -1);
  std::vector<int> rep;  // canonical id -> representative reachable-index
  canon[cls[0]] = 0;
  rep.push_back(0);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    for (int a = 0; a < nletters; ++a) {
      const int c = cls[reach_id[d.step(order[rep[i]], a)]];
      if (canon[c] < 0) {
        canon[c] = static_cast<int>(rep.size());
        rep.push_back(-1);
        for (int q = 0; q < n; ++q) {
          if (cls[q] == c) {
            rep[canon[c]] = q;
            break;
          }
        }
      }
    }
  }

  Dfa out;
  out.alphabet = d.alphabet;
  out.states = static_cast<int>(rep.size());
  out.initial = 0;
  out.accepting.resize(out.states);
  out.delta.resize(static_cast<std::size_t>(out.states) * nletters);
  for (int q = 0; q < out.states; ++q) {
    out.accepting[q] = d.accepting[order[rep[q]]];
    for (int a = 0; a < nletters; ++a) {
      out.delta[static_cast<std::size_t>(q) * nletters + a] =
          canon[cls[reach_id[d.step(order[rep[q]], a)]]];
    }
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (int q = 0; q < out.states; ++q) {
    out.accepting[q] = !out.accepting[q];
  }
  return out;
}

Dfa intersect(const Dfa& a, const Dfa& b, const Limits& limits) {
  if (a.alphabet != b.alphabet) {
    throw AlphabetMismatchError();
  }
  const int nletters = static_cast<int>(a.alphabet.size());
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](std::pair<int, int> p) {
    auto it = index.find(p);
    if (it != index.end()) {
      return it->second;
    }
    const int id = static_cast<int>(pairs.size());
    if (id >= limits.max_dfa_states) {
      throw StateLimitError(limits.max_dfa_states);
    }
    index.emplace(p, id);
    pairs.push_back(p);
    return id;
  };
  Dfa out;
  out.alphabet = a.alphabet;
  out.initial = intern({a.initial, b.initial});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (int l = 0; l < nletters; ++l) {
      out.delta.push_back(intern({a.step(pairs[i].first, l), b.step(pairs[i].second, l)}));
    }
  }
  out.states = static_cast<int>(pairs.size());
  out.accepting.resize(out.states);
  for (int q = 0; q < out.states; ++q) {
    out.accepting[q] = a.accepting[pairs[q].first] && b.accepting[pairs[q].second];
  }
  return out;
}

Dfa reverse(const Dfa& d, const Limits& limits) {
  Nfa n;
  for (int q = 0; q < d.states; ++q) {
    n.add_state(q == d.initial);
  }
  for (int q = 0; q < d.states; ++q) {
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      n.edges[d.step(q, static_cast<int>(a))].emplace_back(static_cast<int>(a), q);
    }
    if (d.accepting[q]) {
      n.initial.push_back(q);
    }
  }
  return minimize(determinize(n, d.alphabet, limits));
}

bool same_structure(const Dfa& a, const Dfa& b) {
  return a.alphabet == b.alphabet && a.states == b.states && a.initial == b.initial &&
         a.accepting == b.accepting && a.delta == b.delta;
}

}  // namespace tlc
