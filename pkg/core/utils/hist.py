from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class HistoryBuffer:
    """
    Track the best objective value of a search, one update per iteration.
    """

    def __init__(self):
        self._count: int = 0
        self._best: float = float('inf')

    def update(self, value: float):
        self._count += 1
        self._best = min(self._best, value)

    def best(self):
        """
        smallest value seen, inf before the first update
        """
        return self._best

    def __len__(self):
        return self._count
