from math import comb

from .poly import LaurentPoly


def graeffe(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """Coefficients (constant first) of ``h`` with ``h(s^2) = +-p(s)p(-s)``; roots are squared."""
    d = len(coeffs) - 1
    product = [0] * (2 * d + 1)
    for i, a in enumerate(coeffs):
        if not a:
            continue
        for j, b in enumerate(coeffs):
            if b:
                product[i + j] += a * b * (-1) ** j
    out = tuple(product[0::2])
    return out if out[0] > 0 else tuple(-c for c in out)


def is_cyclotomic_product(f: LaurentPoly) -> bool:
    """Exact test: is ``f`` a unit times a product of cyclotomic polynomials?

    Monic integer polynomials with every root in the closed unit disk have
    bounded coefficients, so repeated root squaring either leaves that finite
    set or returns to a polynomial already seen.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial is not a product of cyclotomics")
    g = f.normalized().coeffs
    if abs(g[0]) != 1 or abs(g[-1]) != 1:
        return False
    d = len(g) - 1
    bounds = [comb(d, k) for k in range(d + 1)]
    seen = {g}
    while True:
        g = graeffe(g)
        if any(abs(c) > b for c, b in zip(g, bounds)):
            return False
        if g in seen:
            return True
        seen.add(g)
