"""Shared oracles and generators for the test suite.

The dense-matrix route, the Boolean truth-table evaluator and the
per-level tensor states are deliberately written from the definitions,
independent of the structural implementations they check.
"""

from __future__ import annotations

import random
from contextlib import contextmanager

import numpy as np
from hypothesis import strategies as st

from qct import lang, qcore, semantics
from qct.lang import FALSITY, Atom, Conj3, Falsity, Neg, Sentence, SqrtNeg, conj, disj
from qct.qcore import QRegister
from qct.qtree import Layer
from qct.semantics import ModelSampler, QubModel, sample_model
from qct.syntree import SyntacticTree

ATOM_POOL = ("p", "q", "r", "s")


@contextmanager
def capacity_limit(value: int):
    old = qcore.n_max()
    qcore.set_n_max(value)
    try:
        yield
    finally:
        qcore.set_n_max(old)


def haar_state(rng: np.random.Generator, n: int) -> QRegister:
    """Uniform random unit vector on 2^n amplitudes."""
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return QRegister(n, v / np.linalg.norm(v))


def definite_last_bit_state(rng: np.random.Generator, n: int) -> QRegister:
    """Random state whose every component has a definite last qubit.

    For each index pair (2k, 2k+1) only one slot is populated, so the
    state has the shape sum_j a_j |j>|x_j>.
    """
    half = 1 << (n - 1)
    amps = np.zeros(1 << n, dtype=np.complex128)
    slots = 2 * np.arange(half) + rng.integers(0, 2, size=half)
    amps[slots] = rng.standard_normal(half) + 1j * rng.standard_normal(half)
    return QRegister(n, amps / np.linalg.norm(amps))


def max_amp_diff(a: QRegister, b: QRegister) -> float:
    return float(np.max(np.abs(a.amps - b.amps)))


def random_sentence(
    rng: random.Random,
    budget: int,
    atoms: tuple[str, ...] = ATOM_POOL,
    allow_falsity: bool = False,
    allow_sqrt: bool = True,
) -> Sentence:
    """Random sentence with atomic complexity at most `budget` (>= 1)."""
    assert budget >= 1
    opts = ["atom", "atom", "neg", "neg"]
    if allow_falsity:
        opts.append("f")
    if allow_sqrt:
        opts += ["snot", "snot"]
    if budget >= 3:
        opts += ["conj"] * 3 + ["disj"] * 2
    kind = rng.choice(opts)
    if kind == "atom":
        return Atom(rng.choice(atoms))
    if kind == "f":
        return FALSITY
    if kind == "neg":
        return Neg(random_sentence(rng, budget, atoms, allow_falsity, allow_sqrt))
    if kind == "snot":
        return SqrtNeg(random_sentence(rng, budget, atoms, allow_falsity, allow_sqrt))
    left = rng.randint(1, budget - 2)
    a = random_sentence(rng, left, atoms, allow_falsity, allow_sqrt)
    b = random_sentence(rng, budget - 1 - left, atoms, allow_falsity, allow_sqrt)
    return conj(a, b) if kind == "conj" else disj(a, b)


def model_for(s: Sentence, seed: int, delta: float = 0.0) -> QubModel:
    return sample_model(lang.atom_names(s), ModelSampler(seed=seed, delta=delta))


def bool_eval(s: Sentence, env: dict[str, int]) -> int:
    """Boolean truth-table evaluation of a sqrt-negation-free sentence."""
    if isinstance(s, Atom):
        return env[s.name]
    if isinstance(s, Falsity):
        return 0
    if isinstance(s, Neg):
        return 1 - bool_eval(s.body, env)
    if isinstance(s, Conj3):
        return bool_eval(s.left, env) & bool_eval(s.right, env)
    raise ValueError(f"not a Boolean sentence: {s!r}")


def connective_sentences(atoms: tuple[str, ...], depth: int) -> list[Sentence]:
    """Every sqrt-negation-free sentence over `atoms` up to nesting `depth`."""
    out: dict[Sentence, None] = dict.fromkeys(
        [Atom(a) for a in atoms] + [FALSITY]
    )
    for _ in range(depth):
        current = list(out)
        for s in current:
            out.setdefault(Neg(s), None)
        for a in current:
            for b in current:
                out.setdefault(conj(a, b), None)
                out.setdefault(disj(a, b), None)
    return list(out)


def dense_layer_matrix(layer: Layer) -> np.ndarray:
    """Kronecker product of the layer's gate matrices."""
    m = np.eye(1, dtype=np.complex128)
    for gate in layer.ops:
        m = np.kron(m, qcore.dense_matrix(gate))
    return m


def level_state(tree: SyntacticTree, m: QubModel, i: int) -> QRegister:
    """Tensor of the interpretations of level i's nodes (0-based index)."""
    state = None
    for node in tree.levels[i]:
        q = semantics.evaluate(node, m)
        state = q if state is None else qcore.tensor(state, q)
    assert state is not None
    return state


def ast_depth(s: Sentence) -> int:
    if isinstance(s, (Atom, Falsity)):
        return 0
    if isinstance(s, (Neg, SqrtNeg)):
        return 1 + ast_depth(s.body)
    return 1 + max(ast_depth(s.left), ast_depth(s.right), ast_depth(s.third))


def sentence_strategy(
    atoms: tuple[str, ...] = ATOM_POOL,
    allow_falsity: bool = True,
    max_leaves: int = 12,
) -> st.SearchStrategy[Sentence]:
    leaves: list[Sentence] = [Atom(a) for a in atoms]
    if allow_falsity:
        leaves.append(FALSITY)
    return st.recursive(
        st.sampled_from(leaves),
        lambda kids: st.one_of(
            kids.map(Neg),
            kids.map(SqrtNeg),
            st.builds(conj, kids, kids),
            st.builds(disj, kids, kids),
        ),
        max_leaves=max_leaves,
    )
