from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class PodBondError(ValueError):
    """
    base class of every reported failure, exit_code is what podbond.py returns
    """
    exit_code = 2


class InputError(PodBondError):
    exit_code = 2


class ClassificationError(PodBondError):
    exit_code = 2


class VerificationError(PodBondError):
    exit_code = 3


class DegeneracyError(PodBondError):
    exit_code = 4
