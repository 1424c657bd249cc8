"""Compilation of syntactic trees into gate layers, and their execution.

Each non-final tree level contributes one layer: atomic nodes become
one-qubit identity wires, negations become Not/SqrtNot over the qubit
block of their body, and ternary conjunctions become a Petri-Toffoli
over the blocks of their components.  Block widths are the subformulas'
atomic complexities, so every layer spans exactly n qubits.

Layers are stored in level order (layers[0] belongs to the root level).
Execution runs them in reverse: the layer of the deepest level is
applied to the input first, and layers[0] produces the output, the
sentence's interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatch
from .lang import Atom, Conj3, Neg, Sentence, SqrtNeg, atomic_complexity, is_atomic
from .qcore import (
    KET0,
    GateTag,
    Identity1,
    Not,
    QRegister,
    SqrtNot,
    Toffoli,
    apply_gate,
    tensor,
)
from .semantics import QubModel
from .syntree import SyntacticTree


@dataclass(frozen=True)
class Layer:
    """Tensor product of gate tags over consecutive qubit blocks."""

    ops: tuple[GateTag, ...]

    def __post_init__(self) -> None:
        if not self.ops:
            raise ValueError("a layer needs at least one gate")

    @property
    def width(self) -> int:
        return sum(op.arity for op in self.ops)


@dataclass(frozen=True)
class QuantumTree:
    """Gate layers of a compiled sentence over n qubits.

    `layers` is level-ordered: layers[0] acts last and yields the
    output.  Atomic sentences compile to an empty layer tuple.
    """

    n: int
    layers: tuple[Layer, ...]

    def __post_init__(self) -> None:
        for layer in self.layers:
            if layer.width != self.n:
                raise ArityMismatch(
                    f"layer spans {layer.width} qubits in a circuit of n={self.n}"
                )


def _operator_for(node: Sentence) -> GateTag:
    if is_atomic(node):
        return Identity1()
    if isinstance(node, Neg):
        return Not(atomic_complexity(node.body))
    if isinstance(node, SqrtNeg):
        return SqrtNot(atomic_complexity(node.body))
    if isinstance(node, Conj3):
        return Toffoli(atomic_complexity(node.left), atomic_complexity(node.right))
    raise TypeError(f"not a sentence: {node!r}")


def compile_tree(tree: SyntacticTree) -> QuantumTree:
    """Apply the operator rule to every level except the last."""
    layers = tuple(
        Layer(tuple(_operator_for(node) for node in level))
        for level in tree.levels[:-1]
    )
    return QuantumTree(atomic_complexity(tree.root), layers)


def input_state(tree: SyntacticTree, m: QubModel) -> QRegister:
    """Tensor the model's qubits over the last level's occurrences."""
    state: QRegister | None = None
    for leaf in tree.levels[-1]:
        q = m.qubit(leaf.name) if isinstance(leaf, Atom) else KET0
        state = q if state is None else tensor(state, q)
    assert state is not None
    return state


def _apply_layer(psi: QRegister, layer: Layer) -> QRegister:
    if layer.width != psi.n:
        raise ArityMismatch(
            f"layer spans {layer.width} qubits, register has n={psi.n}"
        )
    offset = 0
    for gate in layer.ops:
        psi = apply_gate(psi, gate, offset)
        offset += gate.arity
    return psi


def run(qt: QuantumTree, input: QRegister) -> QRegister:
    """Execute the circuit: deepest layer first, layers[0] last."""
    if input.n != qt.n:
        raise ArityMismatch(f"circuit has n={qt.n}, input has n={input.n}")
    psi = input
    for layer in reversed(qt.layers):
        psi = _apply_layer(psi, layer)
    return psi


def run_with_trace(qt: QuantumTree, input: QRegister) -> list[QRegister]:
    """All intermediate states, input first, output last."""
    if input.n != qt.n:
        raise ArityMismatch(f"circuit has n={qt.n}, input has n={input.n}")
    states = [input]
    for layer in reversed(qt.layers):
        states.append(_apply_layer(states[-1], layer))
    return states


_GATE_NAMES = {Identity1: "I", Not: "NOT", SqrtNot: "SNOT", Toffoli: "T"}


def _gate_to_json(gate: GateTag) -> dict:
    if isinstance(gate, Toffoli):
        return {"gate": "T", "r": gate.r, "s": gate.s}
    if isinstance(gate, Identity1):
        return {"gate": "I", "r": 1}
    return {"gate": _GATE_NAMES[type(gate)], "r": gate.r}


def circuit_to_json(qt: QuantumTree) -> dict:
    """JSON-ready circuit: {"n": ..., "layers": [[gate, ...], ...]}."""
    return {
        "n": qt.n,
        "layers": [[_gate_to_json(g) for g in layer.ops] for layer in qt.layers],
    }


def _gate_from_json(data: object) -> GateTag:
    if not isinstance(data, dict) or "gate" not in data:
        raise ValueError(f"not a gate object: {data!r}")
    kind = data["gate"]
    if kind == "I":
        return Identity1()
    if kind == "NOT":
        return Not(data["r"])
    if kind == "SNOT":
        return SqrtNot(data["r"])
    if kind == "T":
        return Toffoli(data["r"], data["s"])
    raise ValueError(f"unknown gate name: {kind!r}")


def circuit_from_json(data: object) -> QuantumTree:
    if not isinstance(data, dict) or "n" not in data or "layers" not in data:
        raise ValueError(f"not a circuit object: {data!r}")
    layers = tuple(
        Layer(tuple(_gate_from_json(g) for g in layer)) for layer in data["layers"]
    )
    return QuantumTree(data["n"], layers)
