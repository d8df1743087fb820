#
# This file is part of quantale-tools.
#
""" Brute-force oracles: quantaloid isomorphism search, quantale enumeration, and theorem suites. """
