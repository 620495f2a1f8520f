"""Propositional formulas over a fixed finite signature.

Entailment and equivalence are decided by an exhaustive truth-table sweep,
which keeps every verdict auditable by hand at the scales this library
targets (a handful of atoms). The concrete syntax is plain ASCII so that
graph and model files stay hand-writable:

    ~  !      negation
    &         conjunction
    |         disjunction
    ->        implication      (right associative)
    <->       biconditional    (same precedence as ->)
    T  F      verum / falsum

Precedence, tightest first: ~, &, |, -> / <->. Parentheses as usual.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import FormulaSyntaxError, SignatureTooLargeError, UnknownAtomError

# Truth tables enumerate 2**n valuations; refuse anything bigger.
ATOM_LIMIT = 20

_RESERVED = {"T", "F"}
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Signature:
    """Ordered set of atom names; all semantic notions are relative to it."""

    __slots__ = ("atoms",)

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("a signature needs at least one atom")
        if len(atoms) > ATOM_LIMIT:
            raise SignatureTooLargeError(
                f"{len(atoms)} atoms exceed the enumeration bound of {ATOM_LIMIT}"
            )
        seen = set()
        for name in atoms:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid atom name {name!r}")
            if name in _RESERVED:
                raise ValueError(f"atom name {name!r} is reserved")
            if name in seen:
                raise ValueError(f"duplicate atom {name!r}")
            seen.add(name)
        self.atoms = atoms

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, name: object) -> bool:
        return name in self.atoms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"Signature({', '.join(self.atoms)})"

    def index(self, name: str) -> int:
        try:
            return self.atoms.index(name)
        except ValueError:
            raise UnknownAtomError(name) from None

    def valuations(self) -> Iterator["Valuation"]:
        """All valuations, in a fixed order: first atom most significant,
        true before false. This order is the canonical world order used
        throughout the package."""
        for bits in itertools.product((True, False), repeat=len(self.atoms)):
            yield Valuation(self, bits)


@dataclass(frozen=True)
class Valuation:
    """Total truth assignment over a signature."""

    signature: Signature
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.signature):
            raise ValueError("valuation must assign every atom of the signature")
        if any(not isinstance(b, bool) for b in self.bits):
            object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))

    @classmethod
    def from_dict(cls, signature: Signature, assignment: Mapping[str, bool]) -> "Valuation":
        extra = set(assignment) - set(signature.atoms)
        if extra:
            raise UnknownAtomError(sorted(extra)[0])
        missing = [a for a in signature.atoms if a not in assignment]
        if missing:
            raise ValueError(f"valuation is missing atom {missing[0]!r}")
        return cls(signature, tuple(bool(assignment[a]) for a in signature.atoms))

    def __getitem__(self, atom: str) -> bool:
        return self.bits[self.signature.index(atom)]

    def as_dict(self) -> dict[str, bool]:
        return dict(zip(self.signature.atoms, self.bits))

    def true_atoms(self) -> tuple[str, ...]:
        return tuple(a for a, b in zip(self.signature.atoms, self.bits) if b)

    def describe(self) -> str:
        """Render as a literal conjunction, e.g. ``p & ~q``."""
        return " & ".join(
            a if b else f"~{a}" for a, b in zip(self.signature.atoms, self.bits)
        )

    def minterm(self) -> "Formula":
        """The full conjunction of literals true exactly at this valuation."""
        literals: list[Formula] = [
            Atom(a) if b else Not(Atom(a))
            for a, b in zip(self.signature.atoms, self.bits)
        ]
        out = literals[0]
        for lit in literals[1:]:
            out = And(out, lit)
        return out


class Formula:
    """Base class for formula AST nodes. Instances are immutable and compare
    structurally; use :func:`equivalent` for semantic comparison."""

    __slots__ = ()

    def atoms(self) -> frozenset[str]:
        raise NotImplementedError

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def atoms(self) -> frozenset[str]:
        return frozenset((self.name,))


@dataclass(frozen=True, slots=True)
class Top(Formula):
    def atoms(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True, slots=True)
class Bot(Formula):
    def atoms(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula

    def atoms(self) -> frozenset[str]:
        return self.operand.atoms()


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> frozenset[str]:
        return self.left.atoms() | self.right.atoms()


TOP = Top()
BOT = Bot()


def eval_formula(formula: Formula, valuation: Valuation) -> bool:
    """Classical truth value of ``formula`` under a total valuation."""
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bot):
        return False
    if isinstance(formula, Not):
        return not eval_formula(formula.operand, valuation)
    if isinstance(formula, And):
        return eval_formula(formula.left, valuation) and eval_formula(formula.right, valuation)
    if isinstance(formula, Or):
        return eval_formula(formula.left, valuation) or eval_formula(formula.right, valuation)
    if isinstance(formula, Implies):
        return (not eval_formula(formula.left, valuation)) or eval_formula(formula.right, valuation)
    if isinstance(formula, Iff):
        return eval_formula(formula.left, valuation) == eval_formula(formula.right, valuation)
    raise TypeError(f"not a formula: {formula!r}")


def _check_atoms(sig: Signature, *formulas: Formula) -> None:
    for f in formulas:
        for atom in f.atoms():
            if atom not in sig:
                raise UnknownAtomError(atom)


def entails(premise: Formula, conclusion: Formula, sig: Signature) -> bool:
    """True when every valuation over ``sig`` satisfying ``premise`` also
    satisfies ``conclusion`` (exhaustive sweep of all 2**n valuations)."""
    _check_atoms(sig, premise, conclusion)
    return all(
        eval_formula(conclusion, v)
        for v in sig.valuations()
        if eval_formula(premise, v)
    )


def equivalent(left: Formula, right: Formula, sig: Signature) -> bool:
    """Logical equivalence relative to ``sig``: equal truth value under
    every valuation. Coincides with mutual entailment."""
    _check_atoms(sig, left, right)
    return all(
        eval_formula(left, v) == eval_formula(right, v) for v in sig.valuations()
    )


# --- printing ---------------------------------------------------------------

# Higher binds tighter. -> and <-> share a level and associate to the right;
# & and | associate to the left.
_PREC = {Implies: 1, Iff: 1, Or: 2, And: 3, Not: 4, Atom: 5, Top: 5, Bot: 5}
_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


def _prec(f: Formula) -> int:
    return _PREC[type(f)]


def to_text(formula: Formula) -> str:
    """Render with the minimum parentheses that make reparsing reproduce the
    same tree."""
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return "T"
    if isinstance(formula, Bot):
        return "F"
    if isinstance(formula, Not):
        inner = to_text(formula.operand)
        if _prec(formula.operand) < _PREC[Not]:
            inner = f"({inner})"
        return f"~{inner}"
    own = _prec(formula)
    left, right = formula.left, formula.right
    left_text = to_text(left)
    right_text = to_text(right)
    if isinstance(formula, (And, Or)):
        # left associative: parenthesise an equal-level right child
        if _prec(left) < own:
            left_text = f"({left_text})"
        if _prec(right) <= own:
            right_text = f"({right_text})"
    else:
        # right associative: parenthesise an equal-level left child
        if _prec(left) <= own:
            left_text = f"({left_text})"
        if _prec(right) < own:
            right_text = f"({right_text})"
    return f"{left_text} {_SYMBOL[type(formula)]} {right_text}"


# --- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow><->|->)|(?P<punct>[()~!&|])|(?P<word>[A-Za-z_][A-Za-z0-9_]*))"
)


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.sig = sig
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                bad_at = pos + (len(text[pos:]) - len(stripped))
                raise FormulaSyntaxError(
                    f"unexpected character {stripped[0]!r}", bad_at + 1
                )
            token = m.group("arrow") or m.group("punct") or m.group("word")
            # 1-based position of the token itself (the match may eat spaces)
            self.tokens.append((token, m.end(0) - len(token) + 1))
            pos = m.end(0)
        self.tokens.append(("", len(text) + 1))
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def advance(self) -> str:
        token = self.peek()
        self.i += 1
        return token

    def parse(self) -> Formula:
        f = self.expr()
        if self.peek():
            raise FormulaSyntaxError(f"unexpected token {self.peek()!r}", self.pos())
        return f

    def expr(self) -> Formula:
        left = self.or_expr()
        if self.peek() in ("->", "<->"):
            op = self.advance()
            right = self.expr()
            return Implies(left, right) if op == "->" else Iff(left, right)
        return left

    def or_expr(self) -> Formula:
        out = self.and_expr()
        while self.peek() == "|":
            self.advance()
            out = Or(out, self.and_expr())
        return out

    def and_expr(self) -> Formula:
        out = self.unary()
        while self.peek() == "&":
            self.advance()
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        if self.peek() in ("~", "!"):
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        token = self.peek()
        if token == "(":
            self.advance()
            inner = self.expr()
            if self.peek() != ")":
                raise FormulaSyntaxError("expected ')'", self.pos())
            self.advance()
            return inner
        if token == "T":
            self.advance()
            return TOP
        if token == "F":
            self.advance()
            return BOT
        if token and _NAME_RE.fullmatch(token):
            if token not in self.sig:
                raise UnknownAtomError(token)
            self.advance()
            return Atom(token)
        if not token:
            raise FormulaSyntaxError("unexpected end of input", self.pos())
        raise FormulaSyntaxError(f"unexpected token {token!r}", self.pos())


def parse(text: str, sig: Signature) -> Formula:
    """Parse formula text relative to a signature.

    Raises :class:`FormulaSyntaxError` with a character position for
    malformed input and :class:`UnknownAtomError` for undeclared atoms.
    """
    return _Parser(text, sig).parse()
