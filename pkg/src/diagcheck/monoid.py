"""Monoid instances and the exact value families used for edge labels.

Three families cover everything the verifier, the generators, and the tests
need: free words under concatenation, exact additive numbers, and k x k
integer matrices under multiplication.  All arithmetic is exact (Python ints
and fractions), so equality is always decidable and no tolerance parameter
exists anywhere in the package.

Values are immutable and know their monoid instance; instances are small
descriptor objects exposing ``identity``, ``op`` and ``eq``, which is the
only surface the verifier is allowed to touch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class MonoidMismatchError(ValueError):
    """Operands or labels do not belong to the same monoid instance."""


# ---------------------------------------------------------------------------
# Values


@dataclass(frozen=True)
class FreeWord:
    """Element of the free monoid: a finite sequence of generator ids."""

    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError("free-word letters must be non-negative integers")

    @property
    def monoid(self) -> "FreeMonoid":
        return FREE


@dataclass(frozen=True)
class AdditiveNumber:
    """Exact rational under addition."""

    value: Fraction

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, (int, Fraction)):
            raise ValueError("additive value must be an int or a Fraction")
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def monoid(self) -> "AdditiveMonoid":
        return ADDITIVE

    def negate(self) -> "AdditiveNumber":
        return AdditiveNumber(-self.value)


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of exact integers under multiplication."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows:
            raise ValueError("matrix dimension must be at least 1")
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix must be square")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("matrix entries must be exact integers")

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def monoid(self) -> "MatrixMonoid":
        return matrix_monoid(self.k)


# ---------------------------------------------------------------------------
# Instance descriptors


@dataclass(frozen=True)
class FreeMonoid:
    """Free words under concatenation; the identity is the empty word."""

    family = "free"

    def identity(self) -> FreeWord:
        return FreeWord(())

    def op(self, a: FreeWord, b: FreeWord) -> FreeWord:
        self._check(a)
        self._check(b)
        return FreeWord(a.letters + b.letters)

    def eq(self, a: FreeWord, b: FreeWord) -> bool:
        self._check(a)
        self._check(b)
        return a.letters == b.letters

    def owns(self, value) -> bool:
        return isinstance(value, FreeWord)

    def descriptor(self) -> dict:
        return {"family": "free"}

    def _check(self, value):
        if not self.owns(value):
            raise MonoidMismatchError(f"expected a free word, got {type(value).__name__}")


@dataclass(frozen=True)
class AdditiveMonoid:
    """Exact rationals under addition; the identity is 0."""

    family = "additive"

    def identity(self) -> AdditiveNumber:
        return AdditiveNumber(0)

    def op(self, a: AdditiveNumber, b: AdditiveNumber) -> AdditiveNumber:
        self._check(a)
        self._check(b)
        return AdditiveNumber(a.value + b.value)

    def eq(self, a: AdditiveNumber, b: AdditiveNumber) -> bool:
        self._check(a)
        self._check(b)
        return a.value == b.value

    def owns(self, value) -> bool:
        return isinstance(value, AdditiveNumber)

    def descriptor(self) -> dict:
        return {"family": "additive"}

    def _check(self, value):
        if not self.owns(value):
            raise MonoidMismatchError(f"expected an additive number, got {type(value).__name__}")


@dataclass(frozen=True)
class MatrixMonoid:
    """k x k integer matrices under multiplication; the identity matrix is 1."""

    k: int
    family = "matrix"

    def identity(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(self.k)) for i in range(self.k)))

    def op(self, a: IntMatrix, b: IntMatrix) -> IntMatrix:
        self._check(a)
        self._check(b)
        k = self.k
        ar, br = a.entries, b.entries
        return IntMatrix(
            tuple(tuple(sum(ar[i][t] * br[t][j] for t in range(k)) for j in range(k)) for i in range(k))
        )

    def eq(self, a: IntMatrix, b: IntMatrix) -> bool:
        self._check(a)
        self._check(b)
        return a.entries == b.entries

    def owns(self, value) -> bool:
        return isinstance(value, IntMatrix) and value.k == self.k

    def descriptor(self) -> dict:
        return {"family": "matrix", "k": self.k}

    def _check(self, value):
        if not self.owns(value):
            raise MonoidMismatchError(f"expected a {self.k}x{self.k} integer matrix, got {value!r}")


FREE = FreeMonoid()
ADDITIVE = AdditiveMonoid()

_matrix_monoids: dict[int, MatrixMonoid] = {}


def matrix_monoid(k: int) -> MatrixMonoid:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError("matrix dimension must be a positive integer")
    mon = _matrix_monoids.get(k)
    if mon is None:
        mon = _matrix_monoids[k] = MatrixMonoid(k)
    return mon


# ---------------------------------------------------------------------------
# Generic operations (dispatch on the values' own instance)


def identity(monoid):
    """The identity element of a monoid instance."""
    return monoid.identity()


def op(a, b):
    """The monoid product a * b; both operands must share one instance."""
    mon = a.monoid
    if b.monoid != mon:
        raise MonoidMismatchError(
            f"operands from different monoid instances: {a.monoid.descriptor()} vs {b.monoid.descriptor()}"
        )
    return mon.op(a, b)


def eq(a, b) -> bool:
    """Decidable equality in the shared monoid instance."""
    mon = a.monoid
    if b.monoid != mon:
        raise MonoidMismatchError(
            f"operands from different monoid instances: {a.monoid.descriptor()} vs {b.monoid.descriptor()}"
        )
    return mon.eq(a, b)


# ---------------------------------------------------------------------------
# Construction helpers


def word(*letters: int) -> FreeWord:
    return FreeWord(tuple(letters))


def number(value) -> AdditiveNumber:
    return AdditiveNumber(value)


def matrix(rows) -> IntMatrix:
    return IntMatrix(tuple(tuple(row) for row in rows))


def matrix_unit(k: int, row: int, col: int) -> IntMatrix:
    """The k x k matrix with a single 1 at (row, col), 0-based."""
    if not 0 <= row < k or not 0 <= col < k:
        raise ValueError("matrix unit position out of range")
    return IntMatrix(tuple(tuple(1 if (i, j) == (row, col) else 0 for j in range(k)) for i in range(k)))


def zero_matrix(k: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(0 for _ in range(k)) for _ in range(k)))


def identity_matrix(k: int) -> IntMatrix:
    return matrix_monoid(k).identity()


def upper_unitriangular(x: int) -> IntMatrix:
    """The 2x2 matrix [[1, x], [0, 1]]; these multiply by adding the corner."""
    return IntMatrix(((1, x), (0, 1)))
