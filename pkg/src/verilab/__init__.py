"""verilab: a code-verification laboratory.

Executes candidate programs against generated unit-test suites on a
deterministic mini language, scores them with coverage-shaped and
difficulty-weighted rewards, selects winners by majority voting, and
checks the selection-reliability math both analytically and by
simulation.
"""

__version__ = "0.1.0"
