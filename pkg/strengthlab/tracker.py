import logging
import time
from typing import Dict, List, Optional, Tuple

from strengthlab.types import ShardState


class BaseProgressTracker:
    """Base class for tracking shard progress during a sharded search"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger('strengthlab')
        self.tracked_shards: Dict[str, List[Tuple[int, ShardState]]] = {}
        self.examined: Dict[str, int] = {}
        self._started: Dict[str, float] = {}

    def track_search(self, search: str, shard_count: int) -> None:
        """Track when a search starts"""
        if search not in self.tracked_shards:
            self.tracked_shards[search] = [(shard, 'pending') for shard in range(shard_count)]
            self.examined[search] = 0
        self._started[search] = time.monotonic()

    def track_shard(self, search: str, shard: int, state: ShardState, examined: int = 0) -> None:
        """Track the state of one shard after a round"""
        if search not in self.tracked_shards:
            self.track_search(search, shard + 1)
        shards = self.tracked_shards[search]
        while len(shards) <= shard:
            shards.append((len(shards), 'pending'))
        shards[shard] = (shard, state)
        self.examined[search] += examined

    def report_round(self, search: str) -> None:
        """Called after every round of a search"""

    def rate(self, search: str) -> float:
        """Classes examined per second since the search started"""
        elapsed = time.monotonic() - self._started.get(search, time.monotonic())
        return self.examined.get(search, 0) / elapsed if elapsed > 0 else 0.0


class ProgressTracker(BaseProgressTracker):
    """Concrete tracker reporting progress through the logger"""

    def track_search(self, search: str, shard_count: int) -> None:
        super().track_search(search, shard_count)
        self.logger.info(f'Searching {search} over {shard_count} shards')

    def track_shard(self, search: str, shard: int, state: ShardState, examined: int = 0) -> None:
        super().track_shard(search, shard, state, examined)
        if state != 'pending':
            self.logger.debug(f'  | shard {shard} [{state.upper()}] +{examined} classes')

    def report_round(self, search: str) -> None:
        """Log the running total and throughput after a round"""
        self.logger.info(
            f'{search}: {self.examined.get(search, 0)} classes examined '
            f'({self.rate(search):.0f} classes/sec)'
        )

    def get_shard_states(self, search: str) -> List[Tuple[int, ShardState]]:
        return self.tracked_shards.get(search, [])

    def get_all_tracked_searches(self) -> List[str]:
        return list(self.tracked_shards.keys())
