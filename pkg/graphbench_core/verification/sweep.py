"""
Parallel sweep of a claim's universe.

The universe is cut into contiguous partitions, each checked by a worker thread into its own
tally.  Tallies are merged in submission order, so the result does not depend on the number
of workers or on which worker finishes first.
"""
import concurrent.futures
import logging
from typing import Callable, Iterable, List, Optional, TypeVar

from graphbench_core.verification.report import ClaimTally

Item = TypeVar('Item')

PARTITIONS_PER_WORKER = 4


class Sweeper:
    def __init__(self, workers: int = 1, running: Optional[Callable[[], bool]] = None,
                 logger: Optional[logging.Logger] = None):
        self.workers = max(1, workers)
        self.running = running or (lambda: True)
        self.log = logger or logging.getLogger('graphbench.sweep')
        self.interrupted = False

    def _partitions(self, items: List[Item]) -> List[List[Item]]:
        count = self.workers * PARTITIONS_PER_WORKER
        size = max(1, -(-len(items) // count))
        return [items[start:start + size] for start in range(0, len(items), size)]

    @staticmethod
    def _check(check: Callable[[Item, ClaimTally], None], partition: List[Item]) -> ClaimTally:
        tally = ClaimTally()
        for item in partition:
            check(item, tally)
        return tally

    def sweep(self, items: Iterable[Item], check: Callable[[Item, ClaimTally], None]) -> ClaimTally:
        """Run check(item, tally) over every item and merge the partial tallies."""
        partitions = self._partitions(list(items))
        result = ClaimTally()
        if not partitions:
            return result

        if self.workers == 1:
            for index, partition in enumerate(partitions):
                if not self.running():
                    self.interrupted = True
                    break
                result = result.merge(self._check(check, partition))
                self.log.debug(f"Partition {index + 1}/{len(partitions)} checked")
        else:
            futures = []
            with concurrent.futures.ThreadPoolExecutor(self.workers) as executor:
                for partition in partitions:
                    if not self.running():
                        self.interrupted = True
                        break
                    futures.append(executor.submit(self._check, check, partition))
            for index, future in enumerate(futures):
                result = result.merge(future.result())
                self.log.debug(f"Partition {index + 1}/{len(partitions)} checked")

        if self.interrupted:
            result.note("sweep interrupted before the whole universe was checked")
        return result
