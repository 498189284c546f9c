from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import sys

import numpy as np
from terminaltables import AsciiTable


def _vec(v):
    return '(%s)' % ', '.join('{:+.4f}'.format(float(c)) for c in np.asarray(v).ravel())


def minima_table(minima, limit=None):
    """Projection pairs found by the search, one row per minimum.
    Args:
        minima(list): ProjectionMinimum entries sorted by residual
        limit(int): how many rows to print
    """
    rows = [['#', 'L', 'R', 'kind', 'residual', 'start']]
    for i, m in enumerate(minima[:limit]):
        rows.append([i, _vec(m.L), _vec(m.R), m.kind, '{:.3e}'.format(m.residual), m.start])
    return AsciiTable(rows, 'minima').table


def flags_table(report):
    rows = [['condition', 'flag', 'witness']]
    for name, flag in report.flags.items():
        witness = report.witnesses.get(name)
        rows.append([name, 'yes' if flag else 'no', type(witness).__name__ if witness is not None else '-'])
    return AsciiTable(rows, 'mobility %d (%s)' % (report.level, report.note)).table


def residual_table(values, samples=None):
    """Per-leg residuals, one row per parameter sample.
    Args:
        values(ndarray): shape (k, n) of residuals
        samples(list): parameter of each row
    """
    values = np.abs(np.asarray(values, dtype=np.complex128))
    if samples is None:
        samples = list(range(len(values)))
    header = ['t'] + ['leg %d' % i for i in range(values.shape[1] if values.ndim == 2 else 0)]
    rows = [header]
    for t, row in zip(samples, values):
        rows.append([str(t)] + ['{:.2e}'.format(v) for v in row])
    return AsciiTable(rows, 'spherical residuals').table


def print_table(table):
    print(table, file=sys.stderr)
