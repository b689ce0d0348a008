"""charquot: finite simple characteristic quotients of F2 via Burau specializations.

Submodules:

* ``laurent``    exact arithmetic in Z[q,q^-1] localized at (q+1)
* ``gf``         finite fields (Conway models) and quadratic extensions
* ``burau``      the symbolic representation of B4 on F = <x, y>
* ``speckit``    specialization at s in k0 and the order-based recipes
* ``mgroup``     packed closures, certificates, conjugacy search
* ``smallgrp``   Nielsen/T-system analysis of small permutation groups
* ``charvar``    SL2 trace-coordinate fixed-point scans
* ``congruence`` stabilizer levels and congruence degrees in SL2(Z)
* ``cli``        the ``charquot`` command
"""

__version__ = "0.1.0"

from . import burau, charvar, congruence, gf, laurent, matops, mgroup, smallgrp, speckit  # noqa: F401,E402
