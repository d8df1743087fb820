#
# This file is part of quantale-tools.
#
""" Quantaloids derived from a quantale, the categories enriched in them, and functors between them. """
