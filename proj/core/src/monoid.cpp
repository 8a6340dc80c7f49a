#include "tlc/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace tlc {

FiniteMonoid::FiniteMonoid(trusted_t, int size, std::vector<int> table, int identity)
    : size_(size), identity_(identity), table_(std::move(table)) {
  if (size <= 0) {
    throw InputError("a monoid has at least one element");
  }
  if (table_.size() != static_cast<std::size_t>(size) * size) {
    throw InputError("multiplication table must be size*size");
  }
  for (int v : table_) {
    if (v < 0 || v >= size) {
      throw InputError("table entry " + std::to_string(v) + " out of range");
    }
  }
  if (identity < 0 || identity >= size) {
    throw InputError("identity index out of range");
  }
  for (int s = 0; s < size; ++s) {
    if (mul(identity_, s) != s || mul(s, identity_) != s) {
      throw IdentityError(s);
    }
  }
  // The sequence s, s^2, ... enters a cycle containing a unique idempotent
  // within size+1 steps.
  omegas_.resize(size);
  for (int s = 0; s < size; ++s) {
    int p = s;
    int found = -1;
    for (int k = 0; k <= size; ++k) {
      if (mul(p, p) == p) {
        found = p;
        break;
      }
      p = mul(p, s);
    }
    if (found < 0) {
      throw Error("no idempotent power found; table is corrupt");
    }
    omegas_[s] = found;
  }
}

namespace {

// Full validation, run before the table is adopted so that the error kind
// reflects the first broken law: ranges, then identity, then associativity.
std::vector<int> validated_table(int size, std::vector<int> table, int identity) {
  if (size <= 0) {
    throw InputError("a monoid has at least one element");
  }
  if (table.size() != static_cast<std::size_t>(size) * size) {
    throw InputError("multiplication table must be size*size");
  }
  for (int v : table) {
    if (v < 0 || v >= size) {
      throw InputError("table entry " + std::to_string(v) + " out of range");
    }
  }
  if (identity < 0 || identity >= size) {
    throw InputError("identity index out of range");
  }
  auto mul = [&](int s, int t) { return table[static_cast<std::size_t>(s) * size + t]; };
  for (int s = 0; s < size; ++s) {
    if (mul(identity, s) != s || mul(s, identity) != s) {
      throw IdentityError(s);
    }
  }
  for (int s = 0; s < size; ++s) {
    for (int t = 0; t < size; ++t) {
      const int st = mul(s, t);
      for (int u = 0; u < size; ++u) {
        if (mul(st, u) != mul(s, mul(t, u))) {
          throw AssociativityError(s, t, u);
        }
      }
    }
  }
  return table;
}

}  // namespace

FiniteMonoid::FiniteMonoid(int size, std::vector<int> table, int identity)
    : FiniteMonoid(trusted_t{}, size, validated_table(size, std::move(table), identity),
                   identity) {}

MonoidPtr FiniteMonoid::trusted(int size, std::vector<int> table, int identity) {
  return std::make_shared<FiniteMonoid>(FiniteMonoid(trusted_t{}, size, std::move(table), identity));
}

std::vector<int> FiniteMonoid::idempotents() const {
  std::vector<int> out;
  for (int s = 0; s < size_; ++s) {
    if (is_idempotent(s)) {
      out.push_back(s);
    }
  }
  return out;
}

SubMonoid::SubMonoid(MonoidPtr parent, std::vector<int> elements, int local_identity)
    : parent_(std::move(parent)), elements_(std::move(elements)), local_identity_(local_identity) {}

bool SubMonoid::contains(int s) const {
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

SubMonoid SubMonoid::checked(MonoidPtr parent, std::vector<int> elements, int local_identity) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const FiniteMonoid& m = *parent;
  auto member = [&](int x) {
    return std::binary_search(elements.begin(), elements.end(), x);
  };
  if (!member(local_identity)) {
    throw ClosureError("local identity is not a member of the subset");
  }
  for (int s : elements) {
    if (m.mul(local_identity, s) != s || m.mul(s, local_identity) != s) {
      throw ClosureError("element " + std::to_string(local_identity) +
                         " is not neutral on element " + std::to_string(s));
    }
    for (int t : elements) {
      if (!member(m.mul(s, t))) {
        throw ClosureError("subset is not closed: " + std::to_string(s) + "*" +
                           std::to_string(t) + " = " + std::to_string(m.mul(s, t)) +
                           " escapes");
      }
    }
  }
  return SubMonoid(std::move(parent), std::move(elements), local_identity);
}

SubMonoid SubMonoid::generated(MonoidPtr parent, const std::vector<int>& generators, int unit) {
  const FiniteMonoid& m = *parent;
  std::vector<bool> seen(m.size(), false);
  std::vector<int> members;
  std::deque<int> queue;
  auto push = [&](int x) {
    if (!seen[x]) {
      seen[x] = true;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  push(unit);
  for (int g : generators) {
    push(g);
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    // members grows during the loop; iterate by index.
    for (std::size_t i = 0; i < members.size(); ++i) {
      push(m.mul(x, members[i]));
      push(m.mul(members[i], x));
    }
  }
  std::sort(members.begin(), members.end());
  for (int s : members) {
    if (m.mul(unit, s) != s || m.mul(s, unit) != s) {
      throw ClosureError("requested unit " + std::to_string(unit) +
                         " is not neutral on the generated closure");
    }
  }
  return SubMonoid(std::move(parent), std::move(members), unit);
}

namespace {

// Rows of packed 64-bit words, used to build the two-sided ideals without a
// quadratic inner scan per element.
class BitRows {
public:
  BitRows(int rows, int cols)
      : cols_(cols), words_((cols + 63) / 64), data_(static_cast<std::size_t>(rows) * words_) {}

  void set(int r, int c) { data_[static_cast<std::size_t>(r) * words_ + c / 64] |= 1ull << (c % 64); }

  bool test(int r, int c) const {
    return (data_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }

  void or_into(int dst, int src) {
    std::uint64_t* d = &data_[static_cast<std::size_t>(dst) * words_];
    const std::uint64_t* s = &data_[static_cast<std::size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) {
      d[w] |= s[w];
    }
  }

  void or_row_from(BitRows& other, int dst, int src) {
    std::uint64_t* d = &data_[static_cast<std::size_t>(dst) * words_];
    const std::uint64_t* s = &other.data_[static_cast<std::size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) {
      d[w] |= s[w];
    }
  }

private:
  int cols_;
  int words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace

GreenData::GreenData(const FiniteMonoid& m) : size_(m.size()) {
  const int n = size_;
  BitRows right(n, n);  // right.row(t) = tM
  BitRows left(n, n);   // left.row(t)  = Mt
  for (int t = 0; t < n; ++t) {
    for (int x = 0; x < n; ++x) {
      right.set(t, m.mul(t, x));
      left.set(t, m.mul(x, t));
    }
  }
  BitRows two(n, n);  // two.row(t) = MtM
  for (int t = 0; t < n; ++t) {
    for (int u = 0; u < n; ++u) {
      if (right.test(t, u)) {
        two.or_row_from(left, t, u);
      }
    }
  }
  jmat_.assign(static_cast<std::size_t>(n) * n, false);
  lmat_.assign(static_cast<std::size_t>(n) * n, false);
  rmat_.assign(static_cast<std::size_t>(n) * n, false);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      jmat_[idx(s, t)] = two.test(t, s);
      lmat_[idx(s, t)] = left.test(t, s);
      rmat_[idx(s, t)] = right.test(t, s);
    }
  }
}

GreenData green(const FiniteMonoid& m) { return GreenData(m); }

std::vector<int> j_depths(const GreenData& g) {
  const int n = g.size();
  std::vector<int> depth(n, -1);
  // depth(r) = 0 when nothing is strictly J-above r, else
  // 1 + max depth over elements strictly above.
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (depth[start] >= 0) {
      continue;
    }
    stack.push_back(start);
    while (!stack.empty()) {
      const int r = stack.back();
      int best = 0;
      bool ready = true;
      for (int t = 0; t < n; ++t) {
        if (g.strictly_below_j(r, t)) {
          if (depth[t] < 0) {
            stack.push_back(t);
            ready = false;
            break;
          }
          best = std::max(best, depth[t] + 1);
        }
      }
      if (ready) {
        depth[r] = best;
        stack.pop_back();
      }
    }
  }
  return depth;
}

int j_depth(const GreenData& g, int r) { return j_depths(g)[r]; }

namespace {

template <typename Equation>
std::optional<EquationWitness> scan_pairs(const SubMonoid& sub, Equation&& eq) {
  const FiniteMonoid& m = sub.parent();
  for (int s : sub.elements()) {
    for (int t : sub.elements()) {
      const auto [lhs, rhs] = eq(m, s, t);
      if (lhs != rhs) {
        return EquationWitness{s, t, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

std::pair<int, int> da_sides(const FiniteMonoid& m, int s, int t) {
  const int w = m.omega(m.mul(s, t));
  return {w, m.mul(m.mul(w, t), w)};
}

std::pair<int, int> l_sides(const FiniteMonoid& m, int s, int t) {
  const int w = m.omega(m.mul(s, t));
  return {m.mul(t, w), w};
}

std::pair<int, int> r_sides(const FiniteMonoid& m, int s, int t) {
  const int w = m.omega(m.mul(s, t));
  return {m.mul(w, s), w};
}

}  // namespace

std::optional<EquationWitness> check_da(const SubMonoid& sub) {
  return scan_pairs(sub, da_sides);
}

std::optional<EquationWitness> check_l_trivial(const SubMonoid& sub) {
  return scan_pairs(sub, l_sides);
}

std::optional<EquationWitness> check_r_trivial(const SubMonoid& sub) {
  return scan_pairs(sub, r_sides);
}

std::optional<EquationWitness> check_j_trivial(const SubMonoid& sub) {
  return scan_pairs(sub, [](const FiniteMonoid& m, int s, int t) {
    const auto l = l_sides(m, s, t);
    if (l.first != l.second) {
      return l;
    }
    return r_sides(m, s, t);
  });
}

std::optional<EquationWitness> check_aperiodic(const SubMonoid& sub) {
  const FiniteMonoid& m = sub.parent();
  for (int s : sub.elements()) {
    const int w = m.omega(s);
    const int w1 = m.mul(w, s);
    if (w1 != w) {
      return EquationWitness{s, s, w1, w};
    }
  }
  return std::nullopt;
}

}  // namespace tlc
