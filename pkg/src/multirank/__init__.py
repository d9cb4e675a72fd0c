"""Partition multiranks and cranks, checked against theta-function identities.

Two independent routes are provided for every congruence: exhaustive
enumeration of the partitions involved (:mod:`multirank.partitions`) and
truncated q-series over cyclotomic integers (:mod:`multirank.counting`).
"""

__version__ = "0.1.0"
