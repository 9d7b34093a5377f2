"""Independent high-precision oracles for frozen test fixtures.

Run: python3 tests/oracles/fixtures.py
Values printed here are pasted into the C++ tests; nothing here calls the library.
"""
from mpmath import mp, mpf, e, exp, log, sqrt

mp.dps = 40


def exp_gen(y):
    return exp(y) - y - 1, exp(y) - 1


def uniform_identity_defect(B, theta, a0, a1, a2):
    b, bp = B(theta)
    C = a0**a0 * a2**a2 / a1**a1
    return (bp - b / theta) ** a0 * (b / theta) ** a2 - C * bp**a1


def plateau(theta, lo, hi, n):
    """Discrete U(0,1/theta): nodes 0..J at plateau p, zero after; trapezoid-normalized."""
    step = (mpf(hi) - lo) / (n - 1)
    J = int(mp.nint((mpf(1) / theta - lo) / step))
    p = 1 / (step * (J + mpf(1) / 2))
    return J, p, step


def log_bregman_uniform_pair(B, theta_f, theta_g, lo, hi, n, a0, a1, a2):
    Jf, p, step = plateau(theta_f, lo, hi, n)
    Jg, q, _ = plateau(theta_g, lo, hi, n)
    assert Jg < Jf
    bp_, dbp = B(p)
    bq, _ = B(q)
    I0 = step * (Jf + mpf(1) / 2) * (dbp * p - bp_)
    I2 = step * (Jg + mpf(1) / 2) * bq
    I1 = step * (Jg + mpf(1) / 2) * dbp * q
    return a0 * log(I0 / a0) + a2 * log(I2 / a2) - a1 * log(I1 / a1), (I0, I1, I2)


if __name__ == "__main__":
    print("exp defect theta=1 idx(1,2,1):", mp.nstr(uniform_identity_defect(exp_gen, mpf(1), 1, 2, 1), 20))
    v, terms = log_bregman_uniform_pair(exp_gen, mpf(1), mpf(2), 0, 2, 2001, 1, 2, 1)
    print("exp log_bregman U(0,1) vs U(0,1/2) [0,2] n=2001:", mp.nstr(v, 20), [mp.nstr(t, 20) for t in terms])
    # trapezoid of x^2 on [0,1], n=1001: exact trapezoid value 1/3 + h^2/6
    h = mpf(1) / 1000
    print("trap x^2:", mp.nstr(mpf(1) / 3 + h * h / 6, 20))
    print("holder gap U(0,1) U(0,1/2) alpha=1 (continuous):", mp.nstr(sqrt(2) - 1, 20))
    print("log 2:", mp.nstr(log(2), 20))
    # tail slope of y + exp(-y) - 1 at 1e6
    print("tail slope:", mp.nstr(1 - exp(-mpf(10) ** 6), 20))
