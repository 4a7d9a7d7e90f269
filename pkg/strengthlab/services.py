"""Sharded, checkpointed execution of exhaustive searches over graph classes.

A search is split into a fixed number of enumeration shards. Work proceeds in
rounds: every shard that still matters scans at most ``chunk_size`` classes
from its cursor, the results are folded into a reduction accumulator in shard
order, and the checkpoint is rewritten. Because the shard count and the round
structure do not depend on the number of worker processes, neither does any
result, work count or checkpoint.
"""

import contextlib
import logging
import multiprocessing
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from strengthlab.config import RunConfig
from strengthlab.enumeration import EnumCursor
from strengthlab.exceptions import SearchInterrupted
from strengthlab.fs import FileSystemService
from strengthlab.models import CheckpointFile, CursorModel, SearchCheckpoint
from strengthlab.tracker import BaseProgressTracker, ProgressTracker

Hit = Dict[str, Any]


@dataclass(frozen=True)
class ChunkTask:
    cursor: EnumCursor
    limit: int
    params: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ChunkResult:
    cursor: EnumCursor
    examined: int
    hit: Optional[Hit] = None


ScanFunction = Callable[[ChunkTask], ChunkResult]


class SearchJob(ABC):
    """One exhaustive search: a scan function plus its reduction.

    ``scan_function`` must be a module-level function so worker processes can
    unpickle it.
    """

    name = 'search'

    def __init__(self, order: int, params: Tuple[int, ...] = ()):
        self.order = order
        self.params = tuple(params)

    @property
    def key(self) -> str:
        return f'{self.name}:{self.order}:' + ','.join(str(p) for p in self.params)

    @property
    @abstractmethod
    def scan_function(self) -> ScanFunction:
        pass

    @abstractmethod
    def merge(self, best: Optional[Hit], hit: Hit) -> Hit:
        """Fold a shard's hit into the accumulator; must be commutative"""
        pass

    def wants(self, cursor: EnumCursor, best: Optional[Hit]) -> bool:
        """Whether a shard can still change the result"""
        return True


@dataclass
class SearchOutcome:
    best: Optional[Hit]
    examined: int
    rounds: int
    cursors: List[EnumCursor] = field(default_factory=list)


class ShardedSearchService:
    """Runs search jobs over enumeration shards on a process pool"""

    def __init__(
        self,
        workers: int = 1,
        shard_count: int = 8,
        chunk_size: int = 20_000,
        checkpoint_path: Optional[str] = None,
        fs_service: Optional[FileSystemService] = None,
        progress_tracker: Optional[BaseProgressTracker] = None,
        stop_requested: Optional[Callable[[], bool]] = None,
        logger: Optional[logging.Logger] = None,
    ):
        if workers < 1 or shard_count < 1 or chunk_size < 1:
            raise ValueError('workers, shard_count and chunk_size must be positive')
        self.workers = workers
        self.shard_count = shard_count
        self.chunk_size = chunk_size
        self.checkpoint_path = checkpoint_path
        self.logger = logger or logging.getLogger('strengthlab')
        self.fs_service = fs_service or FileSystemService(self.logger)
        self.progress_tracker = progress_tracker or ProgressTracker(self.logger)
        self.stop_requested = stop_requested or (lambda: False)
        self._checkpoint: Optional[CheckpointFile] = None

    @classmethod
    def from_config(cls, run: RunConfig, **kwargs) -> 'ShardedSearchService':
        return cls(
            workers=run.workers,
            shard_count=run.shard_count,
            chunk_size=run.checkpoint_every,
            checkpoint_path=run.checkpoint_path,
            **kwargs,
        )

    def _load_checkpoint(self) -> CheckpointFile:
        if self._checkpoint is None:
            if self.checkpoint_path:
                self._checkpoint = self.fs_service.load_checkpoint(self.checkpoint_path)
            else:
                self._checkpoint = CheckpointFile()
        return self._checkpoint

    def _restore(self, job: SearchJob) -> SearchCheckpoint:
        stored = self._load_checkpoint().searches.get(job.key)
        if stored is not None:
            for model in stored.cursors:
                model.to_cursor()
            self.logger.info(
                f'Resuming {job.key} after {stored.examined} classes ({stored.rounds} rounds)'
            )
            return stored

        cursors = [
            CursorModel(order=job.order, shard=shard, shard_count=self.shard_count)
            for shard in range(self.shard_count)
        ]
        return SearchCheckpoint(
            job=job.name, order=job.order, params=list(job.params), cursors=cursors
        )

    def _save(self, job: SearchJob, state: SearchCheckpoint) -> None:
        checkpoint = self._load_checkpoint()
        checkpoint.searches[job.key] = state
        if self.checkpoint_path:
            self.fs_service.save_checkpoint(self.checkpoint_path, checkpoint)

    def _pool(self):
        if self.workers == 1:
            return contextlib.nullcontext(None)
        return multiprocessing.Pool(processes=min(self.workers, self.shard_count))

    def run(self, job: SearchJob) -> SearchOutcome:
        state = self._restore(job)
        cursors = [model.to_cursor() for model in state.cursors]
        best = state.best
        examined = state.examined
        rounds = state.rounds
        self.progress_tracker.track_search(job.key, len(cursors))

        with self._pool() as pool:
            while True:
                active = [
                    shard
                    for shard, cursor in enumerate(cursors)
                    if not cursor.done and job.wants(cursor, best)
                ]
                if not active:
                    break

                if self.stop_requested():
                    where = self.checkpoint_path or 'nowhere (no checkpoint path)'
                    raise SearchInterrupted(
                        f'{job.key} interrupted after {examined} classes; state saved to {where}'
                    )

                tasks = [ChunkTask(cursors[shard], self.chunk_size, job.params) for shard in active]
                try:
                    if pool is None:
                        results = [job.scan_function(task) for task in tasks]
                    else:
                        results = pool.map(job.scan_function, tasks)
                except Exception as e:
                    for shard in active:
                        self.progress_tracker.track_shard(job.key, shard, 'failed')
                    self.logger.error(f'Round {rounds + 1} of {job.key} failed: {str(e)}')
                    raise

                for shard, result in zip(active, results):
                    cursors[shard] = result.cursor
                    examined += result.examined
                    if result.hit is not None:
                        best = job.merge(best, result.hit)
                    self.progress_tracker.track_shard(
                        job.key,
                        shard,
                        'processed' if result.cursor.done else 'pending',
                        result.examined,
                    )

                rounds += 1
                state = SearchCheckpoint(
                    job=job.name,
                    order=job.order,
                    params=list(job.params),
                    cursors=[CursorModel.from_cursor(cursor) for cursor in cursors],
                    examined=examined,
                    rounds=rounds,
                    best=best,
                )
                self._save(job, state)
                self.progress_tracker.report_round(job.key)

        return SearchOutcome(best=best, examined=examined, rounds=rounds, cursors=cursors)
