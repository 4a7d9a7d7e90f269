from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Union

import yaml

from strengthlab.config import StrengthLabConfig
from strengthlab.types import StrengthLabOptions


class BaseConfigParser(ABC):
    """Abstract base class for configuration parsers."""

    config_class = StrengthLabConfig

    @abstractmethod
    def can_handle(self, file_path: Union[str, Path]) -> bool:
        """Check if this parser can handle the given file."""
        pass

    @abstractmethod
    def read_options(self, file_path: Union[str, Path]) -> StrengthLabOptions:
        """Read raw options from the file without building the config."""
        pass

    def parse(self, file_path: Union[str, Path]) -> StrengthLabConfig:
        """Parse the configuration file into a StrengthLabConfig.

        Raises:
            FileNotFoundError: If the configuration file doesn't exist
            ValueError: If the configuration file is invalid
        """
        return self.config_class.create(**self.read_options(file_path))


class YAMLConfigParser(BaseConfigParser):
    """YAML configuration parser implementation."""

    sections = ('budget', 'run')

    def can_handle(self, file_path: Union[str, Path]) -> bool:
        return Path(file_path).suffix.lower() in ['.yml', '.yaml']

    def read_options(self, file_path: Union[str, Path]) -> StrengthLabOptions:
        file_path = Path(file_path)
        if not file_path.exists():
            raise FileNotFoundError(f'Configuration file not found: {file_path}')

        try:
            with open(file_path, 'r') as f:
                config_data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f'Invalid YAML configuration: {e}')

        if not isinstance(config_data, dict):
            raise ValueError(f'Configuration root must be a mapping: {file_path}')

        unknown = set(config_data) - set(self.sections)
        if unknown:
            raise ValueError(f'Unknown configuration sections: {", ".join(sorted(unknown))}')

        return {
            'budget': config_data.get('budget') or {},
            'run': config_data.get('run') or {},
        }


class ConfigurationManager:
    """Manages configuration parsing and loading."""

    def __init__(self):
        self.parsers: List[BaseConfigParser] = [YAMLConfigParser()]
        self.default_files = [
            '.strengthlab.yml',
            '.strengthlab.yaml',
            'strengthlab.yml',
            'strengthlab.yaml',
        ]

    def register_parser(self, parser: BaseConfigParser) -> None:
        self.parsers.append(parser)

    def load_options(
        self, file_path: Optional[Union[str, Path]] = None, required: bool = False
    ) -> StrengthLabOptions:
        """Load raw options from an explicit or default configuration file.

        Returns empty options when no file is found and ``required`` is False.

        Raises:
            FileNotFoundError: If ``required`` and no configuration file is found
            ValueError: If no parser can handle the file or if the file is invalid
        """
        config_path = self._find_config_file(file_path)
        if not config_path:
            if required or file_path:
                raise FileNotFoundError(
                    f'No configuration files found, supported files are: {", ".join(self.default_files)}'
                )
            return {'budget': {}, 'run': {}}

        for parser in self.parsers:
            if parser.can_handle(config_path):
                return parser.read_options(config_path)

        raise ValueError(f'No parser found for file: {config_path}')

    def load_config(
        self, file_path: Optional[Union[str, Path]] = None
    ) -> StrengthLabConfig:
        return StrengthLabConfig.create(**self.load_options(file_path, required=True))

    def _find_config_file(
        self, file_path: Optional[Union[str, Path]] = None
    ) -> Optional[Path]:
        if file_path:
            path = Path(file_path)
            return path if path.exists() else None

        for default_file in self.default_files:
            path = Path(default_file)
            if path.exists():
                return path

        return None
