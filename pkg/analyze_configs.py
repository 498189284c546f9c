from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from types import SimpleNamespace


def _fill(args, **defaults):
    """presets only fill options left unset on the command line"""
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    return args


def quick(args):
    return _fill(args, starts=16, max_iter=60, tol=1e-9, k_minima=5, seed=0)


def default(args):
    return _fill(args, starts=64, max_iter=200, tol=1e-9, k_minima=5, seed=0)


def thorough(args):
    return _fill(args, starts=256, max_iter=400, tol=1e-9, k_minima=8, seed=0)


def make(name='default', **overrides):
    """options namespace for library calls, e.g. make('quick', tol=1e-6)"""
    args = SimpleNamespace(**overrides)
    return globals()[name](args)
