import logging
import os
import tempfile
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from strengthlab.enumeration import CURSOR_VERSION
from strengthlab.exceptions import CursorError
from strengthlab.models import CheckpointFile

PathLike = Union[str, Path]


class BaseFileSystem(ABC):
    """Abstract interface for file system operations"""

    @abstractmethod
    def read_file(self, path: PathLike) -> str:
        """Read file content"""
        pass

    @abstractmethod
    def write_file(self, path: PathLike, content: str) -> None:
        """Write content to file"""
        pass

    @abstractmethod
    def exists(self, path: PathLike) -> bool:
        pass


class FileSystemService(BaseFileSystem):
    """Service for file system operations with easier testing support"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger('strengthlab')

    def read_file(self, path: PathLike) -> str:
        """Read file content"""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return f.read()
        except Exception as e:
            self.logger.error(f'Failed to read file {path}: {str(e)}')
            raise

    def write_file(self, path: PathLike, content: str) -> None:
        """Write content to file, replacing it atomically"""
        path = Path(path)
        try:
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f'.{path.name}.')
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                f.write(content)
            os.replace(tmp, path)
        except Exception as e:
            self.logger.error(f'Failed to write to file {path}: {str(e)}')
            raise

    def exists(self, path: PathLike) -> bool:
        return Path(path).exists()

    def load_checkpoint(self, path: PathLike) -> CheckpointFile:
        """Read a checkpoint file; a missing file is an empty checkpoint"""
        if not self.exists(path):
            return CheckpointFile()

        raw = self.read_file(path)
        try:
            checkpoint = CheckpointFile.model_validate_json(raw)
        except ValidationError as e:
            raise CursorError(f'Corrupt checkpoint {path}', e) from e

        if checkpoint.version != CURSOR_VERSION:
            raise CursorError(
                f'Checkpoint {path} has version {checkpoint.version}, expected {CURSOR_VERSION}'
            )
        return checkpoint

    def save_checkpoint(self, path: PathLike, checkpoint: CheckpointFile) -> None:
        self.write_file(path, checkpoint.model_dump_json(indent=2))
        self.logger.debug(f'Checkpoint written to {path}')
