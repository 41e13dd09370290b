# -*- coding: utf-8 -*-

import warnings
from numbers import Integral

from heckecentre import settings


def isint(x): return isinstance(x, Integral) and not isinstance(x, bool)


def warning_msg(message, category, filename, lineno, file=None, line=None):
    return '%s: %s\n' % (category.__name__, message)

warnings.formatwarning = warning_msg


######## resource guards

MAX_ENUMERATION_RANK = 8 # S_8 has 40320 elements; the direct oracle for M^(4) lives there
MAX_BASIS_RANK = 6
MAX_MATRIX_K = 5
MAX_DIRECT_K = 4


class RankTooLarge(ValueError):
    """ Raised when a computation would exceed one of the resource caps above. """
    pass


def guard(value, cap, what):
    if value > cap:
        raise RankTooLarge("{} = {} exceeds the supported maximum {}.".format(what, value, cap))


######## progress

def progress(iterable, desc=None, total=None):
    """ wraps an iterable in a tqdm bar when progress is switched on
    and tqdm is installed; otherwise returns it untouched.
    """
    if not settings.show_progress or "tqdm" not in settings._supported:
        return iterable
    from tqdm import tqdm
    return tqdm(iterable, desc=desc, total=total, leave=False)


######## text helpers

_superscripts = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

def superscript(k): return str(k).translate(_superscripts)
