"""Deterministic finite automata with output over the digit alphabet 0..p-1.

A Dfao reads the base-p digits of n least significant first and emits
the residue tau(final state); for the machines built here that residue
is the n-th coefficient of an algebraic series.  Two constructions are
provided and deliberately kept independent of each other:

  * build_dfao() walks the orbit of the series under sections, one state
    per distinct truncated series;
  * dfao_from_linear() walks the reachable row vectors of a
    KernelRepresentation.

Minimizing either must give isomorphic machines; the test suite leans on
that as a cross-check of the whole pipeline.

Least-significant-first digit order makes trailing zeros of the input
harmless by construction: delta(s, 0) fixes tau, so "6", "06" and "0006"
(as digit strings 011, 0110, ...) agree.  to_digits_lsd() never emits
the useless high zeros in the first place.
"""

import json
from dataclasses import dataclass, field

from .errors import MalformedNumber, SchemaError, StateCapExceeded
from .finite_field import FpElement, ensure_prime
from .kernel import (
    DEFAULT_MAX_STATES,
    ClosureConfig,
    KernelRepresentation,
    PathExpander,
    alpha_output,
    alpha_step,
)

FORMAT_TAG = "dfao-v1"


@dataclass(frozen=True)
class Dfao:
    """States 0..n-1 with transition table delta[state][digit], output
    table tau[state], and a start state.  Instances are immutable."""

    p: int
    start: int
    delta: tuple
    tau: tuple
    digit_order: str = field(default="lsd")

    def __post_init__(self):
        ensure_prime(self.p)
        if self.digit_order != "lsd":
            raise ValueError(f"unsupported digit order {self.digit_order!r}")
        n = len(self.delta)
        if n == 0 or len(self.tau) != n:
            raise ValueError("delta and tau must cover the same nonempty state set")
        if not 0 <= self.start < n:
            raise ValueError(f"start state {self.start} outside [0, {n})")
        for row in self.delta:
            if len(row) != self.p:
                raise ValueError(f"transition row of length {len(row)}, expected {self.p}")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition target {t} outside [0, {n})")
        for out in self.tau:
            if not 0 <= out < self.p:
                raise ValueError(f"output {out} outside [0, {self.p})")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def is_trailing_zero_stable(self) -> bool:
        """tau(delta(s, 0)) == tau(s) for every state; holds for every
        machine built from sections, since the 0-section fixes the
        constant term."""
        return all(self.tau[row[0]] == self.tau[s] for s, row in enumerate(self.delta))


def build_dfao(spec, cfg: ClosureConfig | None = None) -> Dfao:
    """Orbit automaton of the series defined by spec.

    States are the distinct iterated sections (compared at cfg.n_eq
    coefficients), the start state is the series itself, transitions are
    sections, outputs are constant terms.  Breadth-first, digits
    ascending, so state numbering is canonical.
    """
    cfg = cfg or ClosureConfig()
    p = spec.p
    expander = PathExpander(spec)
    start = expander.series((), cfg.n_eq).truncate(cfg.n_eq)
    ids = {start.coeffs: 0}
    paths = [()]
    taus = [start.coeffs[0]]
    delta = []
    i = 0
    while i < len(paths):
        row = []
        for d in range(p):
            child_path = paths[i] + (d,)
            child = expander.series(child_path, cfg.n_eq).truncate(cfg.n_eq)
            sid = ids.get(child.coeffs)
            if sid is None:
                if len(paths) >= cfg.max_states:
                    raise StateCapExceeded(f"orbit exceeds {cfg.max_states} states")
                sid = len(paths)
                ids[child.coeffs] = sid
                paths.append(child_path)
                taus.append(child.coeffs[0])
            row.append(sid)
        delta.append(tuple(row))
        i += 1
    return Dfao(p=p, start=0, delta=tuple(delta), tau=tuple(taus))


def dfao_from_linear(rep: KernelRepresentation, max_states: int = DEFAULT_MAX_STATES) -> Dfao:
    """Automaton over the reachable row vectors of the linear machine.

    States are the alpha vectors reachable from alpha0 under the digit
    matrices, numbered in breadth-first order; the output of alpha is
    alpha . b0.
    """
    ids = {rep.alpha0: 0}
    alphas = [rep.alpha0]
    delta = []
    i = 0
    while i < len(alphas):
        row = []
        for d in range(rep.p):
            child = alpha_step(rep, alphas[i], d)
            sid = ids.get(child)
            if sid is None:
                if len(alphas) >= max_states:
                    raise StateCapExceeded(f"reachable vectors exceed {max_states}")
                sid = len(alphas)
                ids[child] = sid
                alphas.append(child)
            row.append(sid)
        delta.append(tuple(row))
        i += 1
    taus = tuple(alpha_output(rep, a).value for a in alphas)
    return Dfao(p=rep.p, start=0, delta=tuple(delta), tau=taus)


def minimize(a: Dfao) -> Dfao:
    """The minimum-state machine with the same outputs on every digit
    string: unreachable states dropped, then Moore partition refinement
    starting from the partition by tau.  State numbering of the result
    is breadth-first from the start state, so isomorphic inputs minimize
    to equal machines.
    """
    # reachable restriction
    order = [a.start]
    seen = {a.start}
    qi = 0
    while qi < len(order):
        for d in range(a.p):
            t = a.delta[order[qi]][d]
            if t not in seen:
                seen.add(t)
                order.append(t)
        qi += 1

    cls = {s: a.tau[s] for s in order}
    # normalize class labels to 0..k-1 by first occurrence
    while True:
        signatures = {}
        fresh = {}
        for s in order:
            sig = (cls[s], tuple(cls[a.delta[s][d]] for d in range(a.p)))
            if sig not in signatures:
                signatures[sig] = len(signatures)
            fresh[s] = signatures[sig]
        if len(signatures) == len(set(cls.values())):
            cls = fresh
            break
        cls = fresh

    # canonical numbering: BFS over classes from the start class
    rep_of = {}
    for s in order:  # first state of each class in BFS order represents it
        rep_of.setdefault(cls[s], s)
    renum = {cls[a.start]: 0}
    worklist = [rep_of[cls[a.start]]]
    qi = 0
    while qi < len(worklist):
        s = worklist[qi]
        for d in range(a.p):
            c = cls[a.delta[s][d]]
            if c not in renum:
                renum[c] = len(renum)
                worklist.append(rep_of[c])
        qi += 1

    n = len(renum)
    delta = [None] * n
    tau = [None] * n
    for c, new_id in renum.items():
        s = rep_of[c]
        delta[new_id] = tuple(renum[cls[a.delta[s][d]]] for d in range(a.p))
        tau[new_id] = a.tau[s]
    return Dfao(p=a.p, start=0, delta=tuple(delta), tau=tuple(tau))


def to_digits_lsd(n: str, p: int) -> list:
    """Base-p digits of a decimal string, least significant first.

    Repeated short division on the digit string, so the input length is
    unbounded (no conversion through a fixed-width integer, and no
    dependence on int(str) limits).  "0" gives [], matching query(): no
    digits to read means the start state.  No trailing (high-order)
    zeros are produced.
    """
    ensure_prime(p)
    if not isinstance(n, str) or not n or not all(c in "0123456789" for c in n):
        raise MalformedNumber(f"expected a decimal natural number, got {n!r}")
    current = [ord(c) - 48 for c in n]
    first = next((i for i, d in enumerate(current) if d), len(current))
    current = current[first:]
    digits = []
    while current:
        rem = 0
        quotient = []
        for d in current:
            acc = rem * 10 + d
            quotient.append(acc // p)
            rem = acc % p
        digits.append(rem)
        first = next((i for i, d in enumerate(quotient) if d), len(quotient))
        current = quotient[first:]
    return digits


def query(machine, n: str) -> FpElement:
    """The n-th output: feed the base-p digits of n (LSD first) through
    machine, which may be a Dfao or a KernelRepresentation."""
    if isinstance(machine, KernelRepresentation):
        digits = to_digits_lsd(n, machine.p)
        alpha = machine.alpha0
        for d in digits:
            alpha = alpha_step(machine, alpha, d)
        return alpha_output(machine, alpha)
    digits = to_digits_lsd(n, machine.p)
    state = machine.start
    for d in digits:
        state = machine.delta[state][d]
    return FpElement(machine.tau[state], machine.p)


def export_dot(a: Dfao) -> str:
    """Graphviz rendering: node q{id}/{output}, an arrow from an
    anonymous point into the start state, and parallel edges merged with
    comma-separated digit labels."""
    lines = [
        "digraph dfao {",
        "  rankdir=LR;",
        "  __start [shape=point];",
        f"  __start -> q{a.start};",
    ]
    for s in range(a.n_states):
        lines.append(f'  q{s} [shape=circle, label="q{s}/{a.tau[s]}"];')
    for s in range(a.n_states):
        by_target = {}
        for d in range(a.p):
            by_target.setdefault(a.delta[s][d], []).append(str(d))
        for target in sorted(by_target):
            label = ",".join(by_target[target])
            lines.append(f'  q{s} -> q{target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfao_to_json(a: Dfao) -> str:
    """Serialize to the dfao-v1 schema (compact, key order fixed)."""
    doc = {
        "format": FORMAT_TAG,
        "p": a.p,
        "digit_order": a.digit_order,
        "start": a.start,
        "states": [
            {"output": a.tau[s], "next": list(a.delta[s])} for s in range(a.n_states)
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def dfao_from_json(text: str) -> Dfao:
    """Parse and validate a dfao-v1 document; every violation is a
    SchemaError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    if doc.get("format") != FORMAT_TAG:
        raise SchemaError(f"unknown format tag {doc.get('format')!r}")
    if doc.get("digit_order") != "lsd":
        raise SchemaError(f"unsupported digit order {doc.get('digit_order')!r}")
    p = doc.get("p")
    try:
        ensure_prime(p)
    except ValueError as exc:
        raise SchemaError(f"bad modulus: {exc}") from exc
    states = doc.get("states")
    if not isinstance(states, list) or not states:
        raise SchemaError("states must be a nonempty list")
    n = len(states)
    start = doc.get("start")
    if not isinstance(start, int) or isinstance(start, bool) or not 0 <= start < n:
        raise SchemaError(f"start {start!r} outside [0, {n})")
    delta = []
    tau = []
    for idx, entry in enumerate(states):
        if not isinstance(entry, dict):
            raise SchemaError(f"state {idx} must be an object")
        out = entry.get("output")
        if not isinstance(out, int) or isinstance(out, bool) or not 0 <= out < p:
            raise SchemaError(f"state {idx} output {out!r} outside [0, {p})")
        nxt = entry.get("next")
        if not isinstance(nxt, list) or len(nxt) != p:
            raise SchemaError(f"state {idx} next-array length must be {p}")
        for t in nxt:
            if not isinstance(t, int) or isinstance(t, bool) or not 0 <= t < n:
                raise SchemaError(f"state {idx} transition {t!r} outside [0, {n})")
        tau.append(out)
        delta.append(tuple(nxt))
    return Dfao(p=p, start=start, delta=tuple(delta), tau=tuple(tau))
