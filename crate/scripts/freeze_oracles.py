"""High-precision reference values frozen into the Rust test suites.

Run with `python3 scripts/freeze_oracles.py`; every printed value is copied
verbatim into the corresponding test module.
"""
import mpmath as mp

mp.mp.dps = 40


def show(name, v):
    if isinstance(v, mp.mpc):
        print(f"{name}: re={mp.nstr(v.real, 20)} im={mp.nstr(v.imag, 20)}")
    else:
        print(f"{name}: {mp.nstr(v, 20)}")


show("loggamma(1/4+7i)", mp.loggamma(mp.mpc(0.25, 7)))
show("loggamma(-0.5-10i)", mp.loggamma(mp.mpc(-0.5, -10)))
show("zeta(1/2)", mp.zeta(0.5))
show("zeta(1/2+14.134725i)", mp.zeta(mp.mpc(0.5, 14.134725)))
show("zeta(0.3+40i)", mp.zeta(mp.mpc(0.3, 40)))
show("zeta(-0.5+3i)", mp.zeta(mp.mpc(-0.5, 3)))
show("zeta(1.5+10i)", mp.zeta(mp.mpc(1.5, 10)))
for n in [1, 2, 3, 10, 29, 30, 50, 100, 1000]:
    show(f"zero {n}", mp.zetazero(n).imag)
e1 = mp.zetazero(1).imag
show("Z'(E1)", mp.diff(lambda t: mp.siegelz(t), e1))
show("Z(7.3)", mp.siegelz(7.3))
show("theta(100)", mp.siegeltheta(100))
show("avgN(100)", mp.siegeltheta(100) / mp.pi + 1)
show("avgN(1000)", mp.siegeltheta(1000) / mp.pi + 1)
show("hurwitz(0.5+5i,1/3)", mp.zeta(mp.mpc(0.5, 5), mp.mpf(1) / 3))
show("hurwitz(1.3-2i,0.7)", mp.zeta(mp.mpc(1.3, -2), mp.mpf(0.7)))
show("polylog(1.5+10i, e^-0.001)", mp.polylog(mp.mpc(1.5, 10), mp.e ** (-0.001)))
show("polylog(0.5+3i, 0.9)", mp.polylog(mp.mpc(0.5, 3), 0.9))
for nu, x in [((0.5, 3), 2 * mp.pi), ((0.5, -10), 2 * mp.pi), ((0.5, -30), 2 * mp.pi),
              ((0.5, -2), 2 * mp.pi), ((1.25, 4), 1.0), ((0.5, -15), 20.0),
              ((0.5, -40), 2 * mp.pi), ((0.3, 25), 5.0)]:
    show(f"K_{nu}({mp.nstr(x, 8)})", mp.besselk(mp.mpc(*nu), x))
# chi mod 3 and mod 4 (real, non-principal)
chi3 = lambda n: [0, 1, -1][n % 3]
chi4 = lambda n: [0, 1, 0, -1][n % 4]
L = lambda chi, q, s: mp.power(q, -s) * mp.fsum(chi(a) * mp.zeta(s, mp.mpf(a) / q) for a in range(1, q + 1))
show("L(1/2,chi3)", L(chi3, 3, mp.mpf(0.5)))
show("L(0.5+2i,chi4)", L(chi4, 4, mp.mpc(0.5, 2)))
# first zero of L(s, chi4) on the critical line (real character: theta_chi = theta shifted)
def z_chi4(t):
    a = 1
    th = mp.im(mp.loggamma(mp.mpf(1 + 2 * a) / 4 + 1j * t / 2)) - t / 2 * mp.log(mp.pi / 4)
    return mp.re(mp.exp(1j * th) * L(chi4, 4, mp.mpc(0.5, t)))
show("first zero L chi4", mp.findroot(z_chi4, 6.02))
show("Z_chi4(0)", z_chi4(0))
