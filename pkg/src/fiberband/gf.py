"""Finite-field arithmetic for Sidon-sequence construction.

Supports GF(p^k) built as GF(p)[x] modulo a deterministic irreducible
polynomial, and a further quadratic extension GF(N^2) over GF(N), which
is where the exponent-set construction lives. Field elements are ints
(prime fields) or coefficient tuples, constant term first (extensions).

Polynomial and element enumeration order is fixed once and for all:
index i maps to base-N digits of i, least significant digit = constant
coefficient. "First irreducible" and "first generator" below always
refer to this order, which makes every constructed field deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass


class NotPrimePower(ValueError):
    pass


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the small sizes here."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int]:
    """Return (p, k) with n = p^k, or raise NotPrimePower."""
    if n < 2:
        raise NotPrimePower(f"{n} is not a prime power")
    fac = factorize(n)
    if len(fac) != 1:
        raise NotPrimePower(f"{n} is not a prime power")
    [(p, k)] = fac.items()
    return p, k


class PrimeField:
    """GF(p); elements are ints 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def element(self, index: int):
        return index

    def elements(self):
        return range(self.p)


class ExtField:
    """GF(q^k) as polynomials over a base field modulo a monic irreducible.

    `reduction` holds the k low coefficients (r0..r_{k-1}) of the monic
    modulus x^k + r_{k-1} x^{k-1} + ... + r0, so
    x^k = -(r0 + r1 x + ... + r_{k-1} x^{k-1}).
    """

    def __init__(self, base, reduction: tuple):
        self.base = base
        self.k = len(reduction)
        self.reduction = tuple(reduction)
        self.order = base.order ** self.k
        self.zero = (base.zero,) * self.k
        self.one = (base.one,) + (base.zero,) * (self.k - 1)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        base, k = self.base, self.k
        prod = [base.zero] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai == base.zero:
                continue
            for j, bj in enumerate(b):
                prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        # fold x^(k+m) = -x^m * (r0 + ... + r_{k-1} x^{k-1}) from the top down
        for i in range(2 * k - 2, k - 1, -1):
            ci = prod[i]
            if ci == base.zero:
                continue
            prod[i] = base.zero
            for j, rj in enumerate(self.reduction):
                prod[i - k + j] = base.sub(prod[i - k + j], base.mul(ci, rj))
        return tuple(prod[:k])

    def element(self, index: int):
        digits = []
        q = self.base.order
        for _ in range(self.k):
            digits.append(self.base.element(index % q))
            index //= q
        return tuple(digits)

    def elements(self):
        return (self.element(i) for i in range(self.order))


def _poly_mul(field, a: list, b: list) -> list:
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return out


def _poly_mod_monic(field, a: list, m: list) -> list:
    """Remainder of a modulo monic m (coefficient lists, constant first)."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c == field.zero:
            continue
        for j in range(dm + 1):
            a[i - dm + j] = field.sub(a[i - dm + j], field.mul(c, m[j]))
    return a[:dm]


def _is_irreducible(field, low_coeffs: tuple) -> bool:
    """Check the monic poly with the given low coefficients over `field`.

    Trial division by every monic polynomial of degree 1..deg/2; the
    fields used here are small enough that this is instantaneous.
    """
    deg = len(low_coeffs)
    poly = list(low_coeffs) + [field.one]
    for d in range(1, deg // 2 + 1):
        for idx in range(field.order**d):
            div = [field.element((idx // field.order**j) % field.order) for j in range(d)]
            div.append(field.one)
            rem = _poly_mod_monic(field, poly, div)
            if all(c == field.zero for c in rem):
                return False
    return True


def first_irreducible(field, degree: int) -> tuple:
    """Low coefficients of the first irreducible monic poly of `degree`."""
    for idx in range(field.order**degree):
        low = tuple(
            field.element((idx // field.order**j) % field.order) for j in range(degree)
        )
        if _is_irreducible(field, low):
            return low
    raise RuntimeError("no irreducible polynomial found")  # cannot happen


def pow_element(field, a, e: int):
    result = field.one
    base = a
    while e:
        if e & 1:
            result = field.mul(result, base)
        base = field.mul(base, base)
        e >>= 1
    return result


def is_generator(field, a) -> bool:
    """True iff a generates the full multiplicative group."""
    m = field.order - 1
    if a == field.zero:
        return False
    for q in factorize(m):
        if pow_element(field, a, m // q) == field.one:
            return False
    return True


def first_generator(field):
    for el in field.elements():
        if el != field.zero and is_generator(field, el):
            return el
    raise RuntimeError("multiplicative group of a finite field is cyclic")


def base_field(p: int, k: int):
    if k == 1:
        return PrimeField(p)
    ground = PrimeField(p)
    return ExtField(ground, first_irreducible(ground, k))


def _first_primitive_quadratic(base) -> tuple:
    """Low coefficients of the first monic quadratic whose root generates.

    Scans the same enumeration order as first_irreducible but keeps only
    polynomials that are primitive, i.e. x itself has full multiplicative
    order in the quotient. Primitive quadratics exist over every finite
    field, so the scan always terminates.
    """
    x = (base.zero, base.one)
    for idx in range(base.order**2):
        low = (base.element(idx % base.order), base.element(idx // base.order))
        if _is_irreducible(base, low) and is_generator(ExtField(base, low), x):
            return low
    raise RuntimeError("no primitive quadratic found")  # cannot happen


@dataclass(frozen=True)
class FieldGF:
    """The quadratic tower GF(N) in GF(N^2) with a fixed generator theta.

    N = p^k. `modulus` holds the low coefficients (c, b) of the monic
    x^2 + b x + c over GF(N) defining the extension; `theta` is an
    element of GF(N^2) generating its multiplicative group.
    """

    p: int
    k: int
    modulus: tuple
    theta: tuple
    base: object
    ext: ExtField

    @property
    def n(self) -> int:
        return self.p**self.k

    @classmethod
    def for_size(cls, n: int, modulus: tuple | None = None, theta: tuple | None = None):
        """Build the tower for N = n.

        The default modulus is the first primitive quadratic in
        enumeration order, i.e. the first irreducible x^2 + b x + c whose
        root x generates GF(N^2)*, and the default theta is then x
        itself. For N = 11 this search lands on x^2 + x + 7 with
        theta = x, the conventional reference choice for the length-11
        sequence quoted in the literature. With an explicit modulus whose
        root is not primitive, theta falls back to the first generator.
        """
        p, k = prime_power(n)
        base = base_field(p, k)
        x = (base.zero, base.one)
        if modulus is None:
            modulus = _first_primitive_quadratic(base)
        if not _is_irreducible(base, modulus):
            raise ValueError(f"modulus {modulus} is reducible over GF({n})")
        ext = ExtField(base, modulus)
        if theta is None:
            theta = x if is_generator(ext, x) else first_generator(ext)
        if not is_generator(ext, theta):
            raise ValueError(f"theta {theta} does not generate GF({n}^2)*")
        return cls(p, k, tuple(modulus), tuple(theta), base, ext)

    def exponent_set(self) -> list[int]:
        """Exponents m in 1..N^2-1 with theta^m - theta in GF(N).

        Membership only depends on the x-coefficient of theta^m matching
        that of theta, since GF(N) inside GF(N^2) is exactly the elements
        with zero x-coefficient.
        """
        ext, theta = self.ext, self.theta
        hits = []
        power = ext.one
        for m in range(1, ext.order):
            power = ext.mul(power, theta)
            if power[1] == theta[1]:
                hits.append(m)
        return hits
