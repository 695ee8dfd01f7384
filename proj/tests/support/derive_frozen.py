"""Independent high-precision oracle for the frozen constants in the unit tests.

Everything here starts from the position-space state written as a sum of
normalized Gaussian products and uses only mpmath quadrature:

  psi(x1, x2) = (B/2) sum_{r,s} C_rs u_r(x1) v_s(x2)
  u_-(x) = g(x - h1), u_+(x) = g(x + h1), v likewise with h2,
  g(x) = (2a/pi)^(1/4) exp(-a x^2),
  C_-- = C_++ = cos(pi/4 - xi), C_-+ = C_+- = sin(pi/4 - xi).

B is fixed by the mass integral, wavenumber amplitudes by numerical Fourier
transforms, wavenumber moments by  <k1 k2> = int d1psi d2psi  (psi is real).
Run with `python3 derive_frozen.py`; output is pasted into the C++ tests.
"""

import mpmath as mp

mp.mp.dps = 30


def gauss(a, c):
    n = (2 * a / mp.pi) ** mp.mpf("0.25")
    return lambda x: n * mp.exp(-a * (x - c) ** 2)


def dgauss(a, c):
    g = gauss(a, c)
    return lambda x: -2 * a * (x - c) * g(x)


def quad_line(f, h):
    return mp.quad(f, [-mp.inf, -h, 0, h, mp.inf])


class State:
    def __init__(self, a, h1, h2, xi):
        self.a, self.h1, self.h2, self.xi = map(mp.mpf, (a, h1, h2, xi))
        a = self.a
        self.u = [gauss(a, self.h1), gauss(a, -self.h1)]
        self.v = [gauss(a, self.h2), gauss(a, -self.h2)]
        self.du = [dgauss(a, self.h1), dgauss(a, -self.h1)]
        self.dv = [dgauss(a, self.h2), dgauss(a, -self.h2)]
        cq, sq = mp.cos(mp.pi / 4 - self.xi), mp.sin(mp.pi / 4 - self.xi)
        self.C = [[cq, sq], [sq, cq]]
        # unnormalized mass with B = 1
        self.b2 = 1 / self._pair_sum(self._ov(self.u, self.u, 0, self.h1), self._ov(self.v, self.v, 0, self.h2))

    def _ov(self, f, g, n, h):
        return [[quad_line(lambda x: x**n * f[r](x) * g[q](x), h) for q in range(2)] for r in range(2)]

    def _pair_sum(self, m1, m2):
        # (1/4) sum C_rs C_r's' m1[r][r'] m2[s][s']
        t = 0
        for r in range(2):
            for s in range(2):
                for rp in range(2):
                    for sp in range(2):
                        t += self.C[r][s] * self.C[rp][sp] * m1[r][rp] * m2[s][sp]
        return t / 4

    def expect(self, m1, m2):
        return self.b2 * self._pair_sum(m1, m2)

    def psi_xx(self, x1, x2):
        t = sum(self.C[r][s] * self.u[r](x1) * self.v[s](x2) for r in range(2) for s in range(2))
        return mp.sqrt(self.b2) / 2 * t

    def gauss_ft(self, k, c):
        # textbook transform of g(x - c)
        n = (2 * self.a / mp.pi) ** mp.mpf("0.25") / mp.sqrt(2 * self.a)
        return n * mp.exp(-(k**2) / (4 * self.a)) * mp.expj(-k * c)

    def psi_kk_closed(self, k1, k2):
        U = [self.gauss_ft(k1, self.h1), self.gauss_ft(k1, -self.h1)]
        V = [self.gauss_ft(k2, self.h2), self.gauss_ft(k2, -self.h2)]
        t = sum(self.C[r][s] * U[r] * V[s] for r in range(2) for s in range(2))
        return mp.sqrt(self.b2) / 2 * t

    def psi_kk(self, k1, k2):
        def ft(f, k, h):
            re = quad_line(lambda x: f(x) * mp.cos(k * x), h)
            im = -quad_line(lambda x: f(x) * mp.sin(k * x), h)
            return mp.mpc(re, im) / mp.sqrt(2 * mp.pi)

        U = [ft(self.u[r], k1, self.h1) for r in range(2)]
        V = [ft(self.v[s], k2, self.h2) for s in range(2)]
        t = sum(self.C[r][s] * U[r] * V[s] for r in range(2) for s in range(2))
        return mp.sqrt(self.b2) / 2 * t

    def moments_x(self):
        o1 = self._ov(self.u, self.u, 0, self.h1)
        o2 = self._ov(self.v, self.v, 0, self.h2)
        x1 = self._ov(self.u, self.u, 1, self.h1)
        x2 = self._ov(self.v, self.v, 1, self.h2)
        xx1 = self._ov(self.u, self.u, 2, self.h1)
        xx2 = self._ov(self.v, self.v, 2, self.h2)
        return dict(
            mean1=self.expect(x1, o2),
            mean2=self.expect(o1, x2),
            cov=self.expect(x1, x2),
            var1=self.expect(xx1, o2),
            var2=self.expect(o1, xx2),
        )

    def moments_k(self):
        # <k1 k2> = int d1psi d2psi, <k1^2> = int (d1psi)^2 for a real psi
        o1 = self._ov(self.u, self.u, 0, self.h1)
        o2 = self._ov(self.v, self.v, 0, self.h2)
        d1 = self._ov(self.du, self.u, 0, self.h1)
        d2 = self._ov(self.v, self.dv, 0, self.h2)
        dd1 = self._ov(self.du, self.du, 0, self.h1)
        dd2 = self._ov(self.dv, self.dv, 0, self.h2)
        return dict(cov=self.expect(d1, d2), var1=self.expect(dd1, o2), var2=self.expect(o1, dd2))


def density_kk(st, k1, k2):
    return abs(st.psi_kk_closed(k1, k2)) ** 2


def radon_kk(st, cphi, sphi, s):
    f = lambda t: density_kk(st, s * cphi - t * sphi, s * sphi + t * cphi)
    w = 12 * mp.sqrt(st.a)
    return mp.quad(f, mp.linspace(-w, w, 25))


def extremum_visibility_k1(st):
    # ratio P(k1) exp(k1^2/2a) is a pure cos^2/sin^2 mix; its max and min over
    # one period are the envelope values
    def ratio(k):
        return radon_kk(st, 1, 0, k) * mp.exp(k**2 / (2 * st.a))

    period = mp.pi / st.h1
    pts = [ratio(period * i / 16) for i in range(17)]
    hi, lo = max(pts), min(pts)
    return (hi - lo) / (hi + lo)


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}", flush=True)


def main():
    st = State("0.5", 1, "1.5", "0.3")
    show("B2(0.5,1,1.5,0.3)", st.b2)
    show("psi_xx(0.5,1,1.5,0.3; 0.4,-1.1)", st.psi_xx(mp.mpf("0.4"), mp.mpf("-1.1")))
    z = st.psi_kk(mp.mpf("0.7"), mp.mpf("-1.1"))
    show("psi_kk re(0.5,1,1.5,0.3; 0.7,-1.1)", z.real)
    show("psi_kk im", z.imag)
    show("numeric vs textbook transform", abs(z - st.psi_kk_closed(mp.mpf("0.7"), mp.mpf("-1.1"))))
    show("V_k1 extremum(0.5,1,1.5,0.3)", extremum_visibility_k1(st))

    st2 = State(2, 1, 2, "0.3")
    show("P_k1(2,1,2,0.3; 0.9)", radon_kk(st2, 1, 0, mp.mpf("0.9")))
    show("P_kk(2,1,2,0.3; 1.2,-0.4)", density_kk(st2, mp.mpf("1.2"), mp.mpf("-0.4")))
    r2 = 1 / mp.sqrt(2)
    st3 = State(2, 1, 1, "0.3")
    show("P_kplus(2,1,1,0.3; 1.3)", radon_kk(st3, r2, r2, mp.mpf("1.3")))
    st4 = State(2, 1, 2, "0.6")
    n = mp.sqrt(5)
    show("P_splus(2,1,2,0.6; 0.8)", radon_kk(st4, 1 / n, 2 / n, mp.mpf("0.8")))
    show("P_sminus(2,1,2,0.6; 0.8)", radon_kk(st4, 1 / n, -2 / n, mp.mpf("0.8")))

    st5 = State(5, 1, 2, "0.7")
    for k, v in st5.moments_x().items():
        show(f"x.{k}(5,1,2,0.7)", v)
    for k, v in st5.moments_k().items():
        show(f"k.{k}(5,1,2,0.7)", v)

    mp.mp.dps = 80
    for a in (10, 1):
        stq = State(a, 1, 1, mp.pi / 4)
        m = stq.moments_k()
        show(f"rho_k({a},1,1,pi/4)", m["cov"] / mp.sqrt(m["var1"] * m["var2"]))
    mp.mp.dps = 30

    st6 = State(2, 1, 1, "0.3")
    st6q = State(2, 1, 1, mp.pi / 4)
    mx, mq = st6.moments_x(), st6q.moments_x()
    rx = mx["cov"] / mp.sqrt(mx["var1"] * mx["var2"])
    rq = mq["cov"] / mp.sqrt(mq["var1"] * mq["var2"])
    show("rho_x(2,1,1,0.3)", rx)
    show("R(2,1,1,0.3)", abs(rx / rq))
    kx, kq = st6.moments_k(), st6q.moments_k()
    show(
        "S(2,1,1,0.3)",
        abs((kx["cov"] / mp.sqrt(kx["var1"] * kx["var2"])) / (kq["cov"] / mp.sqrt(kq["var1"] * kq["var2"]))),
    )


if __name__ == "__main__":
    main()
