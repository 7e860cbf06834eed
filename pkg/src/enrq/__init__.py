"""Exact-arithmetic verification toolkit for the combinatorial, lattice and
symbolic claims behind the classification of numerically trivial
automorphisms of Enriques surfaces in characteristic 2.

Submodules:

* lattice  - the rank-10 hyperbolic lattice U + E8(-1): intersection
  form, reflections, isotropic-sequence search
* fibers   - Kodaira fiber types: incidence models, Euler numbers,
  2-connectedness, tame actions and fixed-locus Euler characteristics
* configs  - singular-fiber configurations of genus-one pencils: the
  Euler budget, extremality, bielliptic filters, shared-components
  overlay search
* ecaut    - elliptic-curve automorphism groups and fixed-point counts
  (norm arithmetic plus finite-field brute force)
* delpezzo - symbolic verification over F2 of the quartic del Pezzo
  images of bielliptic maps, their automorphisms and pencil actions
* tables   - classification constants with consistency checks
* cli      - deterministic verification reports (the `enrq` command)
"""

__version__ = "0.1.0"

from . import configs, delpezzo, ecaut, fibers, gf, lattice, report, tables  # noqa: F401
