import os
import reprlib
from dataclasses import dataclass, field, fields
from typing import Optional

from strengthlab.types import BudgetOptions, OutputFormat, RunOptions, StrengthLabOptions

try:
    from typing import Unpack
except ImportError:
    from typing_extensions import Unpack

__all__ = (
    'StrengthLabConfig',
    'BudgetConfig',
    'RunConfig',
    'ENUMERATION_CEILING',
    'THREADS_ENV_VAR',
    'default_workers',
)

# no enumeration, whatever the budget, goes beyond this order
ENUMERATION_CEILING = 12
CANONICAL_CEILING = 16
GRAPH_ORDER_CEILING = 64

THREADS_ENV_VAR = 'STRENGTHLAB_THREADS'

OUTPUT_FORMATS = ('csv', 'json', 'md')


def default_workers() -> int:
    """Worker count from ``STRENGTHLAB_THREADS``, else the available CPUs."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f'{THREADS_ENV_VAR} must be an integer, got {raw!r}')
        if value < 1:
            raise ValueError(f'{THREADS_ENV_VAR} must be positive, got {value}')
        return value
    return os.cpu_count() or 1


@dataclass(frozen=True)
class BudgetConfig:
    """Search budgets guarding every exhaustive computation.

    :param max_enum_order: Largest order the enumerator walks for arrowing checks
    :type max_enum_order: int
    :param max_bruteforce_order: Largest order for the n! strength search
    :type max_bruteforce_order: int
    :param max_fmax_order: Largest order accepted by f_max
    :type max_fmax_order: int
    :param max_canonical_order: Largest order accepted by canonical_form
    :type max_canonical_order: int
    :param fmax_table_order: Rows of the bounds table up to this order run f_max
    :type fmax_table_order: int
    """

    max_enum_order: int = 10
    max_bruteforce_order: int = 10
    max_fmax_order: int = 9
    max_canonical_order: int = CANONICAL_CEILING
    fmax_table_order: int = 5

    def __post_init__(self):
        if not 1 <= self.max_enum_order <= ENUMERATION_CEILING:
            raise ValueError(
                f'max_enum_order must be in [1, {ENUMERATION_CEILING}], '
                f'got {self.max_enum_order}'
            )

        if not 1 <= self.max_canonical_order <= CANONICAL_CEILING:
            raise ValueError(
                f'max_canonical_order must be in [1, {CANONICAL_CEILING}], '
                f'got {self.max_canonical_order}'
            )

        if self.max_bruteforce_order < 1:
            raise ValueError('max_bruteforce_order must be positive')

        if not 3 <= self.max_fmax_order <= self.max_enum_order:
            raise ValueError('max_fmax_order must be in [3, max_enum_order]')

        if self.fmax_table_order > self.max_fmax_order:
            raise ValueError('fmax_table_order cannot exceed max_fmax_order')


@dataclass(frozen=True)
class RunConfig:
    """Execution settings shared by every subcommand.

    :param workers: Worker processes for sharded searches
    :type workers: int
    :param checkpoint_path: Optional checkpoint file for resumable searches
    :type checkpoint_path: Optional[str]
    :param shard_count: Fixed number of enumeration shards; results never depend on ``workers``
    :type shard_count: int
    """

    workers: int = field(default_factory=default_workers)
    checkpoint_path: Optional[str] = None
    checkpoint_every: int = 20_000
    shard_count: int = 8
    output_format: OutputFormat = 'json'
    verbose: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError('workers must be positive')

        if self.checkpoint_every < 1:
            raise ValueError('checkpoint_every must be positive')

        if self.shard_count < 1:
            raise ValueError('shard_count must be positive')

        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f'Unknown output format: {self.output_format}, '
                f'expected one of {", ".join(OUTPUT_FORMATS)}'
            )

    def __repr__(self):
        r = reprlib.Repr()
        r.maxstring = 40

        field_reprs = []
        for f in fields(self):
            field_reprs.append(f'{f.name}={r.repr(getattr(self, f.name))}')

        return f'{self.__class__.__name__}({", ".join(field_reprs)})'


@dataclass(frozen=True)
class StrengthLabConfig:
    """Complete configuration combining budgets and execution settings.

    :param budget: Search budgets
    :type budget: BudgetConfig
    :param run: Execution settings
    :type run: RunConfig
    """

    budget: BudgetConfig = field(default_factory=BudgetConfig)
    run: RunConfig = field(default_factory=RunConfig)

    @classmethod
    def create(
        cls,
        **data: Unpack[StrengthLabOptions],
    ) -> 'StrengthLabConfig':
        """Factory method to create a new configuration instance.

        :return: A new StrengthLabConfig instance
        :rtype: StrengthLabConfig
        """
        budget: BudgetOptions = data.get('budget') or {}
        run: RunOptions = data.get('run') or {}
        return cls(budget=BudgetConfig(**budget), run=RunConfig(**run))


DEFAULT_BUDGET = BudgetConfig()
