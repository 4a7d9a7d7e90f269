from typing import Dict

from strengthlab.config import BudgetConfig
from strengthlab.types import BudgetOptions

__all__ = ('DESK_PRESET', 'EXTENDED_PRESET', 'PresetManager')

DESK_PRESET: BudgetOptions = {
    'max_enum_order': 10,
    'max_bruteforce_order': 10,
    'max_fmax_order': 9,
    'fmax_table_order': 5,
}

# order 11 and 12 walks take days in pure Python; opt in explicitly
EXTENDED_PRESET: BudgetOptions = {
    'max_enum_order': 12,
    'max_bruteforce_order': 11,
    'max_fmax_order': 10,
    'fmax_table_order': 6,
}


class PresetManager:
    """Registry and manager for budget presets"""

    _presets: Dict[str, BudgetOptions] = {
        'desk': DESK_PRESET,
        'extended': EXTENDED_PRESET,
    }

    @classmethod
    def names(cls):
        return sorted(cls._presets)

    @classmethod
    def get_preset(cls, name: str) -> BudgetConfig:
        if name not in cls._presets:
            raise ValueError(f'Unknown preset: {name}')
        return BudgetConfig(**cls._presets[name])

    @classmethod
    def get_options(cls, name: str) -> BudgetOptions:
        if name not in cls._presets:
            raise ValueError(f'Unknown preset: {name}')
        return dict(cls._presets[name])

    @classmethod
    def register_preset(cls, name: str, options: BudgetOptions) -> None:
        if name in cls._presets:
            raise ValueError(f'Preset {name} already exists')

        BudgetConfig(**options)
        cls._presets[name] = options
