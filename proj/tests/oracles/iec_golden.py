"""Independent evaluation of the IEC loss factors for the bundled templates.

Run once to produce the golden values frozen in tests/test_iec60287.cpp and
tests/acceptance.cpp. Shares no code with the C++ library.
"""
import math

RHO = {"copper": (1.7241e-8, 3.93e-3), "lead": (21.4e-8, 4.0e-3), "steel": (13.8e-8, 4.5e-3)}

TEMPLATES = {  # kV: I_c d_c d_s t_s c d_a D_a N L_c L_a  (mm, m)
    30: (200, 13.4, 37, 1.7, 23.67, 4, 97.17, 69, 1.4, 0.9),
    132: (900, 34.5, 82.5, 2.5, 50.23, 5.6, 110, 204, 2.6, 3.4),
}


def at_temp(r20, alpha, theta):
    return r20 * (1 + alpha * (theta - 20))


def skin(x2):
    x = math.sqrt(x2)
    if x <= 2.8:
        return x2 ** 2 / (192 + 0.8 * x2 ** 2)
    if x <= 3.8:
        return -0.136 - 0.0177 * x + 0.0563 * x2
    return 0.354 * x - 0.733


def evaluate(kv, theta=20.0, f=50.0, current=None, verbose=True):
    ic, dc, ds, ts, c, da, Da, n, lc, la = TEMPLATES[kv]
    if current is not None:
        ic = current
    w = 2 * math.pi * f
    s = math.sqrt(3) * c
    d = ds - ts
    rho_c, a_c = RHO["copper"]
    rho_s, a_s = RHO["lead"]
    rho_a, a_a = RHO["steel"]
    rc = at_temp(rho_c / (math.pi * (dc * 1e-3) ** 2 / 4), a_c, theta)
    rs = at_temp(rho_s / (math.pi * d * 1e-3 * ts * 1e-3), a_s, theta)
    lay_a = math.sqrt(1 + (math.pi * Da * 1e-3 / la) ** 2)
    ra = at_temp(rho_a / (n * math.pi * (da * 1e-3) ** 2 / 4) * lay_a, a_a, theta)
    xs2 = 8 * math.pi * f / rc * 1e-7
    ys = skin(xs2)
    fp = xs2 ** 2 / (192 + 0.8 * xs2 ** 2)
    yp = fp * (dc / s) ** 2 * (0.312 * (dc / s) ** 2 + 1.18 / (fp + 0.27))
    rac = rc * (1 + ys + yp)
    x = 2 * w * 1e-7 * math.log(2 * s / d)
    l1p = rs / rac * 1.5 / (1 + (rs / x) ** 2)
    # eddy-current factor, three single-core cables in trefoil
    rho_st = rho_s * (1 + a_s * (theta - 20))
    beta1 = math.sqrt(4 * math.pi * w / (1e7 * rho_st))
    gs = 1 + (ts / ds) ** 1.74 * (beta1 * ds * 1e-3 - 1.6)
    m = w / rs * 1e-7
    lam0 = 3 * (m * m / (1 + m * m)) * (d / (2 * s)) ** 2
    d1 = (1.14 * m ** 2.45 + 0.33) * (d / (2 * s)) ** (0.92 * m + 1.66)
    l1pp = rs / rac * (gs * lam0 * (1 + d1) + (beta1 * ts) ** 4 / 12e12)
    l2 = 1.23 * ra / rac * (2 * c / Da) ** 2 * (1 - rac / rs * l1p) / ((2.77 * ra * 1e6 / w) ** 2 + 1)
    pc = 3 * rac * ic ** 2
    out = dict(rc=rc, rs=rs, ra=ra, ys=ys, yp=yp, rac=rac, x=x, l1p=l1p, l1pp=l1pp, l2=l2,
               gs=gs, m=m, lam0=lam0, d1=d1, beta1=beta1,
               pc=pc, ps=(l1p + l1pp) * pc, pa=l2 * pc)
    if verbose:
        print(kv, {k: f"{v:.10g}" for k, v in out.items()})
    return out


def legacy_30kv():
    """Legacy corrected difference method on the 30 kV bench fixture."""
    ic, dc, ds, ts, c, da, Da, n, lc, la = TEMPLATES[30]
    w = 2 * math.pi * 50
    s, d = math.sqrt(3) * c, ds - ts
    rc_dc, rs_dc, theta = 0.128e-3, 1.194e-3, 30.0
    xs2 = 8 * math.pi * 50 / rc_dc * 1e-7
    ys = skin(xs2)
    yp = 0.0023223
    rac = rc_dc * (1 + ys + yp)
    rho_s, a_s = RHO["lead"]
    beta1 = math.sqrt(4 * math.pi * w / (1e7 * rho_s * (1 + a_s * (theta - 20))))
    gs = 1 + (ts / ds) ** 1.74 * (beta1 * ds * 1e-3 - 1.6)
    m = w / rs_dc * 1e-7
    lam0 = 3 * (m * m / (1 + m * m)) * (d / (2 * s)) ** 2
    d1 = (1.14 * m ** 2.45 + 0.33) * (d / (2 * s)) ** (0.92 * m + 1.66)
    l1pp = rs_dc / rac * (gs * lam0 * (1 + d1) + (beta1 * ts) ** 4 / 12e12)
    pa = 0.868 - 3 * rac * ic ** 2 * (0.02 + 0.35 * l1pp) - 3 * rs_dc * (12.09 ** 2 - 8.97 ** 2)
    print("legacy 30kV", f"ys={ys:.10g} l1pp={l1pp:.10g} pa={pa:.10g}")


if __name__ == "__main__":
    evaluate(30)
    evaluate(132)
    legacy_30kv()
