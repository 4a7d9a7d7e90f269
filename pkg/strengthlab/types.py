from collections.abc import Callable
from typing import TYPE_CHECKING, Literal, Optional, Tuple

try:
    from typing import NotRequired, Required
except ImportError:
    from typing_extensions import NotRequired, Required

try:
    from typing import TypedDict
except ImportError:
    from typing_extensions import TypedDict

if TYPE_CHECKING:
    from strengthlab.graph import Graph


class BudgetOptions(TypedDict):
    """TypedDict matching BudgetConfig dataclass.

    :param max_enum_order: Largest order the enumerator will walk
    :type max_enum_order: int
    :param max_bruteforce_order: Largest order for n! strength search
    :type max_bruteforce_order: int
    """

    max_enum_order: NotRequired[int]
    max_bruteforce_order: NotRequired[int]
    max_fmax_order: NotRequired[int]
    max_canonical_order: NotRequired[int]
    fmax_table_order: NotRequired[int]


class RunOptions(TypedDict):
    """TypedDict matching RunConfig dataclass."""

    workers: NotRequired[int]
    checkpoint_path: NotRequired[Optional[str]]
    checkpoint_every: NotRequired[int]
    shard_count: NotRequired[int]
    output_format: NotRequired['OutputFormat']
    verbose: NotRequired[bool]


class StrengthLabOptions(TypedDict):
    """TypedDict matching StrengthLabConfig dataclass.

    :param budget: Search budget settings
    :type budget: BudgetOptions
    :param run: Execution settings
    :type run: RunOptions
    """

    budget: NotRequired[BudgetOptions]
    run: Required[RunOptions]


OutputFormat = Literal['csv', 'json', 'md']
StrengthMethod = Literal['brute-force', 'fk-characterization']
WitnessSource = Literal['search', 'characterization-derived']
RamseyStatus = Literal['exact', 'bounded']
ShardState = Literal['pending', 'processed', 'failed']

# a visitor returning False stops the walk
Visitor = Callable[['Graph'], Optional[bool]]
EnumPath = Tuple[int, ...]
