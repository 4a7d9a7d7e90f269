from strengthlab.bounds import (
    BoundsRow,
    FMaxResult,
    FValue,
    bounds_table,
    f_max,
    f_via_ramsey,
    rho,
    rho_prime,
    sigma,
    sigma_ranges,
)
from strengthlab.cli import StrengthLabCLI
from strengthlab.config import BudgetConfig, RunConfig, StrengthLabConfig
from strengthlab.config_parser import (
    BaseConfigParser,
    ConfigurationManager,
    YAMLConfigParser,
)
from strengthlab.enumeration import (
    CanonicalForm,
    EnumCursor,
    GraphEnumerator,
    canonical_form,
    enumerate_graphs,
    enumerate_partitioned,
    is_isomorphic,
)
from strengthlab.exceptions import (
    BudgetError,
    CursorError,
    EdgeListError,
    EmptyGraphError,
    Graph6Error,
    GraphError,
    InsufficientDataError,
    SearchInterrupted,
    StrengthLabError,
    VerificationError,
)
from strengthlab.graph import Graph, Numbering, build_fk, complement
from strengthlab.logger import _init_logger
from strengthlab.parsers import graph6_decode, graph6_encode, parse_edge_list
from strengthlab.presets import DESK_PRESET, EXTENDED_PRESET, PresetManager
from strengthlab.ramsey import KnownFkRegistry, KnownRamseyRegistry, RamseyResult, arrows_fk, ramsey_fk
from strengthlab.services import SearchJob, ShardedSearchService
from strengthlab.strength import StrengthResult, strength, strength_bruteforce
from strengthlab.tracker import BaseProgressTracker, ProgressTracker
from strengthlab.types import BudgetOptions, RunOptions, StrengthLabOptions

_init_logger()

__all__ = (
    # graphs
    'Graph',
    'Numbering',
    'build_fk',
    'complement',
    'graph6_decode',
    'graph6_encode',
    'parse_edge_list',
    # enumeration
    'CanonicalForm',
    'EnumCursor',
    'GraphEnumerator',
    'canonical_form',
    'enumerate_graphs',
    'enumerate_partitioned',
    'is_isomorphic',
    # strength
    'StrengthResult',
    'strength',
    'strength_bruteforce',
    # ramsey
    'KnownFkRegistry',
    'KnownRamseyRegistry',
    'RamseyResult',
    'arrows_fk',
    'ramsey_fk',
    # bounds
    'BoundsRow',
    'FMaxResult',
    'FValue',
    'bounds_table',
    'f_max',
    'f_via_ramsey',
    'rho',
    'rho_prime',
    'sigma',
    'sigma_ranges',
    # services
    'SearchJob',
    'ShardedSearchService',
    'StrengthLabCLI',
    # errors
    'StrengthLabError',
    'GraphError',
    'Graph6Error',
    'EdgeListError',
    'EmptyGraphError',
    'BudgetError',
    'CursorError',
    'InsufficientDataError',
    'VerificationError',
    'SearchInterrupted',
    # parsers
    'BaseConfigParser',
    'YAMLConfigParser',
    'ConfigurationManager',
    # config
    'BudgetConfig',
    'RunConfig',
    'StrengthLabConfig',
    # progress
    'BaseProgressTracker',
    'ProgressTracker',
    # presets
    'DESK_PRESET',
    'EXTENDED_PRESET',
    'PresetManager',
    # types
    'BudgetOptions',
    'RunOptions',
    'StrengthLabOptions',
)
