import logging
from pathlib import Path

import pytest

from strengthlab.cli import StrengthLabCLI
from strengthlab.config import BudgetConfig
from strengthlab.fs import FileSystemService
from strengthlab.graph import complete, complete_bipartite, disjoint_union, empty, from_edges
from strengthlab.logger import SmartFormatter
from strengthlab.presets import PresetManager
from strengthlab.services import ShardedSearchService
from strengthlab.tracker import ProgressTracker


class TrackedFileSystem(FileSystemService):
    def __init__(self, logger=None) -> None:
        super().__init__(logger)
        self.reads = []
        self.writes = []

    def read_file(self, path: Path) -> str:
        self.reads.append(path)
        return super().read_file(path)

    def write_file(self, path: Path, content: str) -> None:
        self.writes.append((path, content))
        super().write_file(path, content)


@pytest.fixture
def logger():
    handler = logging.StreamHandler()
    formatter = SmartFormatter(
        default_format='[%(levelname)s] [%(asctime)s] [%(name)s]: %(message)s'
    )
    handler.setFormatter(formatter)

    logger = logging.getLogger('test_strengthlab')
    logger.setLevel(logging.DEBUG)
    if not logger.handlers:
        logger.addHandler(handler)

    return logger


@pytest.fixture
def file_system(logger):
    return TrackedFileSystem(logger)


@pytest.fixture
def progress_tracker(logger):
    """Fixture for creating a ProgressTracker instance."""
    return ProgressTracker(logger)


@pytest.fixture
def service(logger, progress_tracker):
    """Single-process service with several shards and small rounds"""
    return ShardedSearchService(
        workers=1,
        shard_count=4,
        chunk_size=50,
        progress_tracker=progress_tracker,
        logger=logger,
    )


@pytest.fixture
def budget():
    return BudgetConfig()


@pytest.fixture
def cli(logger, file_system):
    """Fixture for creating a StrengthLabCLI instance."""
    return StrengthLabCLI(file_system, logger)


@pytest.fixture
def preset_manager():
    return PresetManager()


@pytest.fixture
def k12():
    return complete_bipartite(1, 2)


@pytest.fixture
def k1_k2():
    return disjoint_union(empty(1), complete(2))


@pytest.fixture
def k2_k3():
    return disjoint_union(complete(3), complete(2))


@pytest.fixture
def c4():
    return from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
