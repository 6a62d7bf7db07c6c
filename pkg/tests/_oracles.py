"""Independent sympy oracles shared by the test modules.

Series coefficients are regenerated by substituting a truncated power
series into the source-term ODEs and solving the resulting triangular
linear system order by order in exact rational arithmetic.
"""
import sympy as sp


def _solve_orders(expr, var, unknowns, orders):
    poly = sp.Poly(sp.expand(expr), var)
    eqs = [poly.coeff_monomial(var ** n) for n in orders]
    sol = sp.solve(eqs, unknowns, dict=True)
    assert len(sol) == 1
    return [sol[0][u] for u in unknowns]


def harmonic_series(eps, a, D, n, odd=False):
    """Coefficients c_j of h = (eps eta^2 - 1)^(k-2) eta^s sum c_j (eps eta^2)^j.

    The ODE is h'' (eps eta^2 - 1) + h' eta (6 eps - a) - h (-6 eps + 2a + D eta^2) = 0.
    """
    eps, a, D = sp.Rational(eps), sp.Rational(a), sp.Rational(D)
    eta = sp.Symbol("eta")
    k = a / (2 * eps)
    c = sp.symbols(f"c1:{n + 1}")
    s = 1 if odd else 0
    G = eta ** s * (1 + sum(cj * (eps * eta ** 2) ** (j + 1) for j, cj in enumerate(c)))
    w = eps * eta ** 2 - 1
    w1, w2 = sp.diff(w, eta), sp.diff(w, eta, 2)
    m = k - 2
    G1, G2 = sp.diff(G, eta), sp.diff(G, eta, 2)
    # h = w^m G; every term carries w^(m-2) after multiplying through
    h2 = w ** 2 * G2 + 2 * m * w * w1 * G1 + m * (m - 1) * w1 ** 2 * G + m * w * w2 * G
    h1 = w * (w * G1 + m * w1 * G)
    h0 = w ** 2 * G
    expr = w * h2 + (6 * eps - a) * eta * h1 - (-6 * eps + 2 * a + D * eta ** 2) * h0
    # after cancelling one factor w the lowest orders fix c_1..c_n
    expr = sp.cancel(expr / w)
    return [1] + _solve_orders(expr, eta, list(c), [s + 2 * j for j in range(n)])


def coulomb_series(eps, a, q, n, second=False):
    """Coefficients of h = z^sigma sum c_j z^j, z = sqrt(eps) eta + 1.

    The ODE is h'' (eps eta^2 - 1) - h' eta a - h (-a + q/eta) = 0;
    sigma = 0 for the first branch and 1 + a/(2 eps) for the second.
    """
    eps, a, q = sp.Rational(eps), sp.Rational(a), sp.Rational(q)
    z = sp.Symbol("z", positive=True)
    s = sp.sqrt(eps)
    k = a / (2 * eps)
    sigma = 1 + k if second else sp.Integer(0)
    c = sp.symbols(f"c1:{n + 1}")
    H = 1 + sum(cj * z ** (j + 1) for j, cj in enumerate(c))
    eta = (z - 1) / s
    h = z ** sigma * H
    d1 = s * sp.diff(h, z)
    d2 = eps * sp.diff(h, z, 2)
    # multiplied through by (z - 1) = sqrt(eps) eta to clear q / eta
    expr = (z - 1) * (d2 * (eps * eta ** 2 - 1) - d1 * eta * a + a * h) - q * s * h
    expr = sp.expand(sp.powsimp(sp.expand(expr * z ** (1 - sigma)), force=True))
    # after the shift by z^(1 - sigma) the z^j balance fixes c_j
    return [1] + _solve_orders(expr, z, list(c), [1 + j for j in range(n)])
