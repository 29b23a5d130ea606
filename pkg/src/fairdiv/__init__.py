"""fairdiv: exact-arithmetic analysis of fair allocation with arbitrary entitlements.

Subpackages by role:

- ``core``        exact data model (entitlements, valuations, allocations)
- ``exactlp``     exact rational linear programming (Bland simplex)
- ``shares``      share values: Prop, MMS, pessimistic, anyprice, WMMS
- ``notions``     acceptability checkers, acceptable-set enumeration, welfare orders
- ``divisible``   the homogeneous divisible good: step/smooth valuations, cells
- ``analysis``    entitlement-monotonicity checks, paradox search, selection rules
- ``corpus``      bundled worked examples with known exact outcomes
- ``cli``         command-line interface (shares / check / enumerate / paradox / reproduce)
"""

__version__ = "0.1.0"
