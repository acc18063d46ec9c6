"""Octonions over an exact coefficient ring.

The basis products come from Cayley-Dickson doubling of the quaternions
(``ij = k``) with the pair product

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),

where ``e0..e3`` is the quaternion basis ``1, i, j, k`` in the first slot
and ``e4..e7`` the same basis in the second slot.  Coefficients may be
any ring elements supporting ``+``, ``-``, ``*`` and ``==`` against 0:
ints, Fractions or :class:`~horadam.scalars.QuadExt`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "Octonion",
    "MultiplicationTable",
    "build_table",
    "MULTIPLICATION_TABLE",
    "format_table",
    "parse_table",
    "oct_mul",
    "oct_conj",
    "oct_norm",
    "oct_scale",
    "oct_add",
]

# entry [i][j] = (sign, k) meaning e_i * e_j = sign * e_k
MultiplicationTable = tuple[tuple[tuple[int, int], ...], ...]


def _quat_mul(x, y):
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _quat_conj(x):
    return (x[0], -x[1], -x[2], -x[3])


def _doubled_mul(x, y):
    a, b = x[:4], x[4:]
    c, d = y[:4], y[4:]
    left = [u - v for u, v in zip(_quat_mul(a, c), _quat_mul(_quat_conj(d), b))]
    right = [u + v for u, v in zip(_quat_mul(d, a), _quat_mul(b, _quat_conj(c)))]
    return tuple(left + right)


def build_table() -> MultiplicationTable:
    """Derive the 8x8 basis product table by doubling the quaternions."""
    basis = [tuple(int(i == k) for i in range(8)) for k in range(8)]
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            prod = _doubled_mul(basis[i], basis[j])
            support = [k for k, c in enumerate(prod) if c]
            if len(support) != 1 or abs(prod[support[0]]) != 1:
                raise AssertionError(f"e{i}*e{j} is not a signed basis element: {prod}")
            k = support[0]
            row.append((prod[k], k))
        rows.append(tuple(row))
    return tuple(rows)


MULTIPLICATION_TABLE: MultiplicationTable = build_table()


def format_table(table: MultiplicationTable = MULTIPLICATION_TABLE) -> str:
    """Render the table as 64 lines ``"i j sign k"`` with sign ``+1``/``-1``."""
    lines = []
    for i, row in enumerate(table):
        for j, (sign, k) in enumerate(row):
            lines.append(f"{i} {j} {sign:+d} {k}")
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> MultiplicationTable:
    """Inverse of :func:`format_table`."""
    entries: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ValueError(f"line {lineno}: expected 'i j sign k', got {line!r}")
        i, j, sign, k = (int(f) for f in fields)
        if sign not in (1, -1):
            raise ValueError(f"line {lineno}: sign must be +1 or -1")
        entries[i, j] = (sign, k)
    if sorted(entries) != [(i, j) for i in range(8) for j in range(8)]:
        raise ValueError("table must list every (i, j) pair in 0..7 exactly once")
    return tuple(tuple(entries[i, j] for j in range(8)) for i in range(8))


class Octonion:
    """Eight coefficients on the basis ``e0 (= 1), e1, ..., e7``.

    ``x * y`` with two octonions is the (non-associative) octonion product;
    with any other operand it scales every coefficient.  Scalars commute
    with octonions, so ``s * x == x * s``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(coeffs)
        if len(coeffs) != 8:
            raise ValueError(f"an octonion needs 8 coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> Octonion:
        return cls((0,) * 8)

    @classmethod
    def one(cls) -> Octonion:
        return cls.basis(0)

    @classmethod
    def basis(cls, i: int) -> Octonion:
        return cls(int(k == i) for k in range(8))

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    def __reduce__(self):
        return (Octonion, (self.coeffs,))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return 8

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(x + y for x, y in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(x - y for x, y in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return Octonion(-x for x in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(x * other for x in self.coeffs)

    def __rmul__(self, other):
        return Octonion(other * x for x in self.coeffs)

    def __truediv__(self, scalar):
        if isinstance(scalar, Octonion):
            raise TypeError("octonion division is not supported")
        return Octonion(x / scalar for x in self.coeffs)

    def __pow__(self, exponent: int):
        # powers of a single octonion are well defined (power-associativity)
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Octonion.one()
        for _ in range(exponent):
            result = result * self
        return result

    def conj(self) -> Octonion:
        return oct_conj(self)

    def norm(self):
        return oct_norm(self)

    def map(self, fn) -> Octonion:
        return Octonion(fn(x) for x in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Octonion({list(self.coeffs)!r})"

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)


def oct_mul(x: Octonion, y: Octonion, table: MultiplicationTable = MULTIPLICATION_TABLE) -> Octonion:
    """Bilinear extension of ``table``."""
    out: list = [None] * 8
    xs, ys = x.coeffs, y.coeffs
    for i in range(8):
        xi = xs[i]
        if xi == 0:
            continue
        row = table[i]
        for j in range(8):
            yj = ys[j]
            if yj == 0:
                continue
            sign, k = row[j]
            term = xi * yj
            acc = out[k]
            if acc is None:
                out[k] = term if sign > 0 else -term
            else:
                out[k] = acc + term if sign > 0 else acc - term
    return Octonion(0 if c is None else c for c in out)


def oct_conj(x: Octonion) -> Octonion:
    c = x.coeffs
    return Octonion((c[0],) + tuple(-v for v in c[1:]))


def oct_norm(x: Octonion):
    """Sum of squared coefficients, i.e. the e0 part of ``conj(x) * x``."""
    total = 0
    for c in x.coeffs:
        total = total + c * c
    return total


def oct_scale(s, x: Octonion) -> Octonion:
    return Octonion(s * c for c in x.coeffs)


def oct_add(x: Octonion, y: Octonion) -> Octonion:
    return x + y


def as_octonion(values: Sequence) -> Octonion:
    return values if isinstance(values, Octonion) else Octonion(values)
