#
# This file is part of quantale-tools.
#
""" Emitters: reports and binary images produced from checked structures. """
