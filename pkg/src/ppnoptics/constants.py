"""Physical constants (CODATA 2018) and Earth reference parameters.

All quantities SI. ``C_LIGHT`` and ``G_NEWTON`` are module-level defaults;
functions that need different values accept them through ``PpnBody`` or
explicit arguments rather than mutating this module.
"""

C_LIGHT = 299792458.0            # speed of light (m/s, exact)
G_NEWTON = 6.67430e-11           # gravitational constant (m^3 kg^-1 s^-2)
HBAR = 1.054571817e-34           # reduced Planck constant (J s)

# Earth reference values used by the shipped presets.
EARTH_GM = 3.986004418e14        # GM (m^3/s^2)
EARTH_RADIUS = 6.371e6           # mean radius (m)
EARTH_J = 7.07e33                # spin angular momentum along +z (kg m^2/s)
EARTH_OMEGA = 7.292115e-5        # rotation rate (rad/s)

# Thermal-neutron reference values (matter-wave cross-checks).
NEUTRON_MASS = 1.67492749804e-27  # kg
