"""Principal series, Langlands data and unitarity for the triality group PGSO_8^E.

Modules:

- ``rootdata``: G2 root data, Weyl group, orbits.
- ``charlattice``: discrete character lattices and torus characters.
- ``grothendieck``: Grothendieck groups, Jacquet functors, Aubert involution.
- ``classify``: reducibility and the constituent database.
- ``unitary``: Hermitian and unitary verdicts.
- ``weiloracle``: finite-group character oracle.
- ``tables`` and ``cli``: regenerated tables and the command line.
"""

__version__ = "0.1.0"
