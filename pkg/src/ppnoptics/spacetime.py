"""Stationary weak-field metric of a slowly rotating body and derived fields.

The line element used throughout is

    ds^2 = -V^2 c^2 dt^2 + R.dx c dt + W^2 dx.dx,

with V = 1 - U/c^2, W = 1 + gamma U/c^2, U = GM/r (monopole only) and
R = -2(1+gamma) (G/c^3) (J x x)/r^3.  The 3+1 split stores the *deviation*
of every metric quantity from its flat value so that downstream consumers
(finite differencing, delay accumulation) never subtract nearly equal
numbers.
"""

from dataclasses import dataclass, field

import numpy as np

from .constants import C_LIGHT, G_NEWTON
from .errors import DomainError

_EYE3 = np.eye(3)


@dataclass(frozen=True)
class PpnBody:
    """Gravitating-body parameters.

    gm         gravitational parameter GM (m^3/s^2)
    j          spin angular momentum along +z (kg m^2/s)
    gamma_ppn  space-curvature parameter (1 in general relativity)
    alpha_eep  phenomenological redshift-anomaly parameter (0 = equivalence principle)
    omega_rot  body rotation rate (rad/s), used by the comoving-frame metric
    radius     reference surface radius (m)
    """

    gm: float
    j: float = 0.0
    gamma_ppn: float = 1.0
    alpha_eep: float = 0.0
    omega_rot: float = 0.0
    radius: float = 6.371e6
    c: float = C_LIGHT
    g_newton: float = G_NEWTON

    def __post_init__(self):
        if self.gm < 0:
            raise ValueError("gm must be >= 0")
        if self.j < 0:
            raise ValueError("j must be >= 0")
        if self.radius <= 0:
            raise ValueError("radius must be > 0")

    @property
    def r_g(self):
        """Gravitational radius 2GM/c^2 (m)."""
        return 2.0 * self.gm / self.c**2

    @property
    def j_vec(self):
        return np.array([0.0, 0.0, self.j])

    def potential(self, x):
        """Newtonian potential U = GM/r (m^2/s^2), positive."""
        r = _radius(x)
        return self.gm / r

    def u_dimensionless(self, x):
        """U/c^2 at x."""
        return self.gm / (_radius(x) * self.c**2)

    def grad_potential(self, x):
        """grad U = -GM x/r^3 (m/s^2), pointing toward the body."""
        x = np.asarray(x, dtype=float)
        r = _radius(x)
        return -self.gm * x / r**3


@dataclass(frozen=True)
class Metric3Plus1:
    """3+1 data of a stationary metric at one spatial point.

    Deviations from flat are the stored primaries: ``h_dev = h - 1`` and
    ``gamma_dev = gamma_mn - delta_mn``; the totals are reconstructed on
    access.  ``g_vec`` is the shift-like vector g_m = -g_{0m}/g_{00}.
    """

    h_dev: float
    g_vec: np.ndarray
    gamma_dev: np.ndarray

    @property
    def h_scalar(self):
        return 1.0 + self.h_dev

    @property
    def gamma_spatial(self):
        return _EYE3 + self.gamma_dev

    @property
    def lapse(self):
        return np.sqrt(self.h_scalar)


@dataclass(frozen=True)
class GravityFields:
    """Gravitoelectric and gravitomagnetic vectors (both 1/m).

    ``omega_gm`` carries the conserved frequency factor k0 supplied by the
    caller, matching the transport-equation normalization.
    """

    e_g: np.ndarray
    omega_gm: np.ndarray


def _radius(x):
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    if r <= 0.0:
        raise DomainError("point at the origin: potential is singular")
    return r


def _r_vector(body, x):
    """Off-diagonal metric vector R (dimensionless)."""
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    jxx = np.cross(body.j_vec, x)
    return -2.0 * (1.0 + body.gamma_ppn) * body.g_newton / body.c**3 * jxx / r**3


def metric_ppn(body, x):
    """Stationary weak-field 3+1 metric data at x.

    h = (1 - U/c^2)^2, gamma_mn = (1 + gamma U/c^2)^2 delta_mn and
    g_m = R_m / (2h); the factor 1/2 comes from symmetrizing the R.dx c dt
    cross term into g_{0m}.
    """
    x = np.asarray(x, dtype=float)
    u = body.u_dimensionless(x)
    h_dev = u * u - 2.0 * u                      # (1-u)^2 - 1, no cancellation
    gu = body.gamma_ppn * u
    gamma_dev = (2.0 * gu + gu * gu) * _EYE3
    g_vec = _r_vector(body, x) / (2.0 * (1.0 + h_dev))
    return Metric3Plus1(h_dev=h_dev, g_vec=g_vec, gamma_dev=gamma_dev)


def metric_comoving(body, x):
    """3+1 metric data in coordinates corotating with the body.

    Adds the exact rotation terms to the stationary form: h gains
    +Omega^2 (x^2+y^2)/c^2 and R gains -2 (x cross Omega)/c.  With
    omega_rot = 0 this reproduces :func:`metric_ppn` identically.
    """
    x = np.asarray(x, dtype=float)
    base = metric_ppn(body, x)
    if body.omega_rot == 0.0:
        return base
    omega_vec = np.array([0.0, 0.0, body.omega_rot])
    rho2 = x[0] ** 2 + x[1] ** 2
    h_dev = base.h_dev + body.omega_rot**2 * rho2 / body.c**2
    r_total = _r_vector(body, x) - 2.0 * np.cross(x, omega_vec) / body.c
    g_vec = r_total / (2.0 * (1.0 + h_dev))
    return Metric3Plus1(h_dev=h_dev, g_vec=g_vec, gamma_dev=base.gamma_dev)


def metric_schwarzschild_isotropic(body, x):
    """Exact static spherically symmetric metric in isotropic coordinates.

    V = (1 - r_g/4r)/(1 + r_g/4r), W = (1 + r_g/4r)^2.  Valid for
    r > r_g/4; this is the non-truncated metric the numerical oracle
    integrates against.
    """
    r = _radius(x)
    a = body.r_g / (4.0 * r)
    if a >= 1.0:
        raise DomainError("inside the isotropic-coordinate horizon r <= r_g/4")
    one_plus = 1.0 + a
    h_dev = -4.0 * a / one_plus**2            # V^2 - 1
    # W^2 - 1 = (1+a)^4 - 1 expanded to avoid cancellation at tiny a
    gamma_dev = (a * (4.0 + a * (6.0 + a * (4.0 + a)))) * _EYE3
    return Metric3Plus1(h_dev=h_dev, g_vec=np.zeros(3), gamma_dev=gamma_dev)


def isotropic_v_w(body, x):
    """(V, W) of the exact isotropic metric at x."""
    r = _radius(x)
    a = body.r_g / (4.0 * r)
    if a >= 1.0:
        raise DomainError("inside the isotropic-coordinate horizon r <= r_g/4")
    return (1.0 - a) / (1.0 + a), (1.0 + a) ** 2


def gravity_fields(body, x, k0):
    """Gravitoelectric E_g = -grad h/2h and gravitomagnetic w = -(k0/2) curl g.

    All derivatives are analytic; no numeric differentiation.  ``k0`` is the
    conserved frequency component (omega_inf/c for the usual coordinate-time
    parametrization) and multiplies the gravitomagnetic vector.
    """
    x = np.asarray(x, dtype=float)
    r = _radius(x)
    xhat = x / r
    u = body.u_dimensionless(x)
    h = (1.0 - u) ** 2
    grad_h = 2.0 * u * (1.0 - u) / r * xhat   # grad[(1-u)^2], since grad u = -u xhat/r
    e_g = -grad_h / (2.0 * h)

    # curl(R/2h) = curl(R)/2h - (grad h x R)/2h^2, both terms analytic
    pref = -2.0 * (1.0 + body.gamma_ppn) * body.g_newton / body.c**3
    jv = body.j_vec
    curl_r = pref * (3.0 * np.dot(jv, xhat) * xhat - jv) / r**3
    r_vec = pref * np.cross(jv, x) / r**3
    curl_g = curl_r / (2.0 * h) - np.cross(grad_h, r_vec) / (2.0 * h * h)
    omega_gm = -0.5 * k0 * curl_g
    return GravityFields(e_g=e_g, omega_gm=omega_gm)


def christoffel_spatial_order2(body, x):
    """Second-order Christoffel symbols of gamma_mn = (1+gamma U/c^2)^2 delta_mn.

    lambda^m_nl = (gamma/c^2)(delta_mn d_l U + delta_ml d_n U - delta_nl d_m U),
    returned as array [m, n, l].
    """
    x = np.asarray(x, dtype=float)
    _radius(x)
    du = body.grad_potential(x) / body.c**2    # d_m (U/c^2), 1/m
    lam = np.zeros((3, 3, 3))
    g = body.gamma_ppn
    for m in range(3):
        for n in range(3):
            for l in range(3):
                lam[m, n, l] = g * ((m == n) * du[l] + (m == l) * du[n] - (n == l) * du[m])
    return lam


def free_fall_direction(body, x):
    """Unit vector along the local free-fall acceleration (unit E_g)."""
    f = gravity_fields(body, x, k0=1.0)
    n = np.linalg.norm(f.e_g)
    if n == 0.0:
        raise DomainError("free-fall direction undefined for a massless body")
    return f.e_g / n


def comoving_redshift_terms(body, x):
    """(potential, rotation) fractional-frequency terms of the comoving metric.

    Returns (U/c^2, Omega^2 rho^2/c^2): the clock-rate contributions of the
    monopole potential and of the frame rotation, normalized the same way as
    the frequency-shift budget terms.
    """
    x = np.asarray(x, dtype=float)
    u = body.u_dimensionless(x)
    rho2 = x[0] ** 2 + x[1] ** 2
    rot = (body.omega_rot * body.omega_rot) * rho2 / body.c**2
    return u, rot
