#!/usr/bin/env python3
"""Regenerates corpus.jsonl.

Every expectation in the bundled corpus is produced by this script, which
shares no code with the C++ implementation. The pipeline here is the slow,
obviously-correct one:

  * regex -> NFA -> subset DFA -> minimized DFA (same surface grammar)
  * syntactic monoid: quotient of words by the two-sided congruence,
    decided through explicit context words run on the minimal automaton
  * pair relations: plain word enumeration, with a product-closure check
    that proves the enumeration length saturated the relation
  * verdicts: direct scans of the defining equations over orbits

Run from this directory:  python3 generate_expectations.py
"""

import itertools
import json
import os
import sys

# --------------------------------------------------------------------------
# Regex parsing (same grammar as the tool: | & cat * + ~ _ () letters).


class Node:
    def __init__(self, op, letter=None, left=None, right=None):
        self.op = op
        self.letter = letter
        self.left = left
        self.right = right


def parse_regex(text, alphabet):
    pos = [0]

    def skip():
        while pos[0] < len(text) and text[pos[0]].isspace():
            pos[0] += 1

    def peek():
        skip()
        return text[pos[0]] if pos[0] < len(text) else None

    def atom():
        c = peek()
        if c is None:
            raise ValueError("expected atom")
        if c == "~":
            pos[0] += 1
            return Node("not", left=atom())
        if c == "(":
            pos[0] += 1
            if peek() == ")":
                pos[0] += 1
                return Node("eps")
            e = alt()
            if peek() != ")":
                raise ValueError("unbalanced (")
            pos[0] += 1
            return e
        if c == "_":
            pos[0] += 1
            e = Node("lit", letter=alphabet[0])
            for a in alphabet[1:]:
                e = Node("or", left=e, right=Node("lit", letter=a))
            return e
        if c in "|&*+)":
            raise ValueError("unexpected " + c)
        if c not in alphabet:
            raise ValueError("unknown letter " + c)
        pos[0] += 1
        return Node("lit", letter=c)

    def rep():
        e = atom()
        while peek() in ("*", "+"):
            e = Node("star" if peek() == "*" else "plus", left=e)
            pos[0] += 1
        return e

    def cat():
        e = rep()
        while True:
            c = peek()
            if c is None or c in "|&)":
                return e
            e = Node("cat", left=e, right=rep())

    def inter():
        e = cat()
        while peek() == "&":
            pos[0] += 1
            e = Node("and", left=e, right=cat())
        return e

    def alt():
        e = inter()
        while peek() == "|":
            pos[0] += 1
            e = Node("or", left=e, right=inter())
        return e

    e = alt()
    skip()
    if pos[0] != len(text):
        raise ValueError("trailing input")
    return e


# --------------------------------------------------------------------------
# Automata. A DFA is (alphabet, n, initial, accepting set, delta dict).


def nfa_to_dfa(alphabet, initials, accepting, edges, eps):
    def closure(states):
        todo = list(states)
        seen = set(states)
        while todo:
            q = todo.pop()
            for t in eps.get(q, ()):
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return frozenset(seen)

    start = closure(initials)
    index = {start: 0}
    order = [start]
    delta = {}
    i = 0
    while i < len(order):
        cur = order[i]
        for a in alphabet:
            nxt = closure({t for q in cur for (l, t) in edges.get(q, ()) if l == a})
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            delta[(i, a)] = index[nxt]
        i += 1
    acc = {i for i, ss in enumerate(order) if ss & accepting}
    return (alphabet, len(order), 0, acc, delta)


def minimize(dfa):
    alphabet, n, initial, accepting, delta = dfa
    reach = [initial]
    seen = {initial}
    for q in reach:
        for a in alphabet:
            t = delta[(q, a)]
            if t not in seen:
                seen.add(t)
                reach.append(t)
    idx = {q: i for i, q in enumerate(reach)}
    cls = [1 if q in accepting else 0 for q in reach]
    while True:
        sigs = {}
        nxt = []
        for i, q in enumerate(reach):
            sig = (cls[i],) + tuple(cls[idx[delta[(q, a)]]] for a in alphabet)
            nxt.append(sigs.setdefault(sig, len(sigs)))
        if nxt == cls:
            break
        cls = nxt
    # canonical breadth-first numbering from the initial class
    canon = {cls[0]: 0}
    rep = [reach[0]]
    for q in rep:
        for a in alphabet:
            c = cls[idx[delta[(q, a)]]]
            if c not in canon:
                canon[c] = len(rep)
                rep.append(reach[cls.index(c)])
    delta2 = {}
    for i, q in enumerate(rep):
        for a in alphabet:
            delta2[(i, a)] = canon[cls[idx[delta[(q, a)]]]]
    acc2 = {i for i, q in enumerate(rep) if q in accepting}
    return (alphabet, len(rep), 0, acc2, delta2)


def compile_regex(node, alphabet):
    if node.op == "lit":
        counter = itertools.count()
        s0, s1 = next(counter), next(counter)
        return minimize(nfa_to_dfa(alphabet, {s0}, {s1}, {s0: [(node.letter, s1)]}, {}))
    if node.op == "eps":
        return minimize(nfa_to_dfa(alphabet, {0}, {0}, {}, {}))
    if node.op == "not":
        a, n, i, acc, d = compile_regex(node.left, alphabet)
        return minimize((a, n, i, set(range(n)) - acc, d))
    if node.op == "and":
        l = compile_regex(node.left, alphabet)
        r = compile_regex(node.right, alphabet)
        states = {}
        order = [(l[2], r[2])]
        states[order[0]] = 0
        delta = {}
        i = 0
        while i < len(order):
            (p, q) = order[i]
            for a in alphabet:
                nxt = (l[4][(p, a)], r[4][(q, a)])
                if nxt not in states:
                    states[nxt] = len(order)
                    order.append(nxt)
                delta[(i, a)] = states[nxt]
            i += 1
        acc = {i for i, (p, q) in enumerate(order) if p in l[3] and q in r[3]}
        return minimize((alphabet, len(order), 0, acc, delta))
    # or / cat / star / plus go through a Thompson construction
    counter = itertools.count()

    def build(nd):
        if nd.op in ("lit", "eps", "not", "and"):
            a, n, i, acc, d = compile_regex(nd, alphabet)
            base = [next(counter) for _ in range(n)]
            edges = {}
            for q in range(n):
                for l in alphabet:
                    edges.setdefault(base[q], []).append((l, base[d[(q, l)]]))
            return {base[i]}, {base[q] for q in acc}, edges, {}
        if nd.op == "or":
            i1, a1, e1, eps1 = build(nd.left)
            i2, a2, e2, eps2 = build(nd.right)
            e1.update(e2)
            eps1.update(eps2)
            return i1 | i2, a1 | a2, e1, eps1
        if nd.op == "cat":
            i1, a1, e1, eps1 = build(nd.left)
            i2, a2, e2, eps2 = build(nd.right)
            e1.update(e2)
            eps1.update(eps2)
            for q in a1:
                eps1.setdefault(q, []).extend(i2)
            return i1, a2, e1, eps1
        if nd.op in ("star", "plus"):
            i1, a1, e1, eps1 = build(nd.left)
            for q in a1:
                eps1.setdefault(q, []).extend(i1)
            if nd.op == "star":
                s = next(counter)
                eps1.setdefault(s, []).extend(i1)
                return {s}, a1 | {s}, e1, eps1
            return i1, a1, e1, eps1
        raise ValueError(nd.op)

    initials, accepting, edges, eps = build(node)
    return minimize(nfa_to_dfa(alphabet, initials, accepting, edges, eps))


def run(dfa, q, word):
    for a in word:
        q = dfa[4][(q, a)]
    return q


# --------------------------------------------------------------------------
# Syntactic monoid via the two-sided congruence on words, decided through
# explicit context words.


def words_up_to(alphabet, n):
    layer = [""]
    for _ in range(n + 1):
        yield from layer
        layer = [w + a for w in layer for a in alphabet]


def syntactic_monoid(dfa):
    alphabet, n, initial, accepting, delta = dfa
    ys = list(words_up_to(alphabet, n))
    profile = {q: tuple(run(dfa, q, y) in accepting for y in ys) for q in range(n)}
    assert len(set(profile.values())) == n, "profiles must separate a minimal automaton"

    def signature(word):
        return tuple(profile[run(dfa, q, word)] for q in range(n))

    classes = {}
    reps = []
    queue = [""]
    classes[signature("")] = 0
    reps.append("")
    while queue:
        w = queue.pop(0)
        for a in alphabet:
            sig = signature(w + a)
            if sig not in classes:
                classes[sig] = len(reps)
                reps.append(w + a)
                queue.append(w + a)
    size = len(reps)
    table = [[classes[signature(reps[s] + reps[t])] for t in range(size)] for s in range(size)]
    identity = classes[signature("")]
    accepting_classes = sorted(c for c, r in enumerate(reps) if run(dfa, initial, r) in accepting)
    letters = {a: classes[signature(a)] for a in alphabet}
    return {
        "size": size,
        "table": table,
        "identity": identity,
        "reps": reps,
        "letters": letters,
        "accepting": accepting_classes,
        "class_of": lambda w: classes[signature(w)],
    }


def omega(table, s):
    p = s
    for _ in range(len(table) + 1):
        if table[p][p] == p:
            return p
        p = table[p][s]
    raise AssertionError("no idempotent power")


# --------------------------------------------------------------------------
# Parameter classes: value of a word, multiplication of values.

CLASS_DEFS = {
    "st": {
        "value": lambda w: 0,
        "mul": lambda a, b: 0,
    },
    "dd": {
        "value": lambda w: 0 if w == "" else 1,
        "mul": lambda a, b: a or b,
    },
    "at": {
        "value": lambda w: frozenset(w),
        "mul": lambda a, b: a | b,
    },
}


def enumerated_pairs(monoid, alphabet, value, mul, max_len=6, hard_cap=9):
    """Pairs by word enumeration; the enumeration length is grown until the
    reached relation is closed under products, which certifies saturation."""
    length = max_len
    while length <= hard_cap:
        reached = set()
        for w in words_up_to(alphabet, length):
            reached.add((monoid["class_of"](w), value(w)))
        closed = all(
            (monoid["table"][m1][m2], mul(n1, n2)) in reached
            for (m1, n1) in reached
            for (m2, n2) in reached
        )
        if closed:
            if length != max_len:
                print(f"    note: pair enumeration needed length {length}", file=sys.stderr)
            buckets = {}
            for (m, nv) in reached:
                buckets.setdefault(nv, set()).add(m)
            pairs = set()
            for b in buckets.values():
                pairs.update((s, t) for s in b for t in b)
            return pairs, length
        length += 1
    raise AssertionError("pair enumeration did not saturate")


def verdicts(monoid, pairs):
    table = monoid["table"]
    size = monoid["size"]
    idem = [e for e in range(size) if table[e][e] == e]

    def mul(*xs):
        acc = monoid["identity"]
        for x in xs:
            acc = table[acc][x]
        return acc

    def orbit(e):
        return sorted({mul(e, t, e) for t in range(size) if (e, t) in pairs})

    def all_orbits_satisfy(eq):
        return all(eq(orbit(e)) for e in idem)

    def da(sub):
        for s in sub:
            for t in sub:
                w = omega(table, table[s][t])
                if w != mul(w, t, w):
                    return False
        return True

    def l_trivial(sub):
        return all(mul(t, omega(table, table[s][t])) == omega(table, table[s][t])
                   for s in sub for t in sub)

    def r_trivial(sub):
        return all(mul(omega(table, table[s][t]), s) == omega(table, table[s][t])
                   for s in sub for t in sub)

    def upol():
        for e in idem:
            for s in range(size):
                if (e, s) not in pairs:
                    continue
                for t in range(size):
                    x = mul(e, s, e, t, e)
                    if mul(omega(table, x), x) != mul(omega(table, x), e, t, e, omega(table, x)):
                        return False
        return True

    def rpol():
        for e in idem:
            for s in range(size):
                if (e, s) not in pairs:
                    continue
                for t in range(size):
                    x = mul(e, s, e, t, e)
                    if mul(omega(table, x), x) != mul(e, t, e, omega(table, x)):
                        return False
        return True

    def lpol():
        for e in idem:
            for t in range(size):
                if (e, t) not in pairs:
                    continue
                for s in range(size):
                    x = mul(e, s, e, t, e)
                    if mul(omega(table, x), x) != mul(omega(table, x), e, s, e):
                        return False
        return True

    return {
        "TL": all_orbits_satisfy(da),
        "TL_F": all_orbits_satisfy(l_trivial),
        "TL_P": all_orbits_satisfy(r_trivial),
        "TL_FP": all_orbits_satisfy(lambda sub: l_trivial(sub) and r_trivial(sub)),
        "UPolBPol": upol(),
        "RPolBPol": rpol(),
        "LPolBPol": lpol(),
    }


# --------------------------------------------------------------------------

ENTRIES = [
    ("universal", "ab", "_*"),
    ("empty", "ab", "~(_*)"),
    ("just-epsilon", "ab", "()"),
    ("nonempty", "ab", "_+"),
    ("contains-a", "ab", "_*a_*"),
    ("no-a", "ab", "~(_*a_*)"),
    ("ab-star", "ab", "(ab)*"),
    ("ab-or-ba-star", "ab", "(ab|ba)*"),
    ("even-a-unary", "a", "(aa)*"),
    ("odd-a-unary", "a", "a(aa)*"),
    ("starts-a", "ab", "a_*"),
    ("ends-a", "ab", "_*a"),
    ("starts-a-ends-b", "ab", "a_*&_*b"),
    ("contains-ab", "ab", "_*ab_*"),
    ("contains-aa", "ab", "_*aa_*"),
    ("contains-aba", "ab", "_*aba_*"),
    ("two-a", "ab", "_*a_*a_*"),
    ("a-between-b", "ab", "b_*a_*b"),
    ("even-length", "ab", "((a|b)(a|b))*"),
    ("a-star", "ab", "a*"),
    ("a-then-b", "ab", "a*b*"),
    ("ends-ab", "ab", "_*ab"),
    ("abc-star", "abc", "(abc)*"),
    ("c-separated", "abc", "c*ac*bc*"),
    ("contains-abc", "abc", "_*abc_*"),
    ("no-c", "abc", "~(_*c_*)"),
]

DFA_ENTRIES = [
    ("parity-a", "ab", "parity_dfa.json"),
]


def load_dfa_json(path):
    with open(path) as f:
        doc = json.load(f)
    alphabet = "".join(doc["alphabet"])
    delta = {}
    for q, row in enumerate(doc["delta"]):
        for a in alphabet:
            delta[(q, a)] = row[a]
    return minimize((alphabet, doc["states"], doc["initial"], set(doc["accepting"]), delta))


def process(entry_id, alphabet, dfa, out, extra):
    monoid = syntactic_monoid(dfa)
    longest_rep = max(len(r) for r in monoid["reps"])
    if longest_rep > 6:
        print(f"    warning: {entry_id} has a class representative of length {longest_rep}",
              file=sys.stderr)
    expected = {}
    for cls in ("st", "dd", "at"):
        cd = CLASS_DEFS[cls]
        pairs, _ = enumerated_pairs(monoid, alphabet, cd["value"], cd["mul"])
        expected[cls] = verdicts(monoid, pairs)
    record = {"id": entry_id, "alphabet": list(alphabet)}
    record.update(extra)
    record["expected"] = expected
    out.append(record)
    print(f"  {entry_id}: states={dfa[1]} monoid={monoid['size']} "
          f"{ {c: v['TL'] for c, v in expected.items()} }", file=sys.stderr)


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out = []
    for entry_id, alphabet, regex in ENTRIES:
        dfa = compile_regex(parse_regex(regex, alphabet), alphabet)
        process(entry_id, alphabet, dfa, out, {"language": regex})
    for entry_id, alphabet, path in DFA_ENTRIES:
        dfa = load_dfa_json(os.path.join(here, path))
        process(entry_id, alphabet, dfa, out, {"dfa": path})
    with open(os.path.join(here, "corpus.jsonl"), "w") as f:
        for record in out:
            f.write(json.dumps(record) + "\n")
    print(f"wrote {len(out)} entries", file=sys.stderr)


if __name__ == "__main__":
    main()
