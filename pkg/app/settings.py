from dataclasses import dataclass
from dotenv import load_dotenv
import os

# Load .env file
load_dotenv()


def _cast(value: str, default):
    """Cast an environment string to the type of the declared default."""
    if isinstance(default, bool):
        return bool(int(value))
    if isinstance(default, int):
        return int(value)
    return value


# Metaclass for reading environment overrides, optionally with a mode postfix
class SettingsMeta(type):
    def __new__(cls, name, bases, dct, postfix=None):
        keys = {}
        for base in reversed(bases):
            keys.update({key: getattr(base, key) for key in getattr(base, '_setting_keys', ())})
        keys.update({key: value for key, value in dct.items()
                     if not key.startswith('_') and not callable(value)})
        for key, default in keys.items():
            env_var = os.getenv(f"{key}{postfix}") if postfix else None
            if env_var is None:
                env_var = os.getenv(key)
            dct[key] = _cast(env_var, default) if env_var is not None else default
        dct['_setting_keys'] = tuple(keys)
        return super().__new__(cls, name, bases, dct)


# All modes
@dataclass()
class BaseSettings(metaclass=SettingsMeta):
    FROBLAB_SEED = 0
    FROBLAB_MAX_DEG = 2
    FROBLAB_RANDOM_TRIES = 64
    FROBLAB_EXHAUSTIVE_LIMIT = 65536
    FROBLAB_COEFF_BOUND = 3
    FROBLAB_GENERATOR_TRIES = 32
    FROBLAB_HOCHSCHILD_MAX_DIM = 10000
    FROBLAB_RESOLUTION_MAX_DIM = 4096
    FROBLAB_NUM_PROCESSES = 1
    FROBLAB_VERIFY_SAMPLES = 5
    FROBLAB_LOG_LEVEL = 'WARNING'


# DEV mode
class DevSettings(BaseSettings, postfix='__DEV'):
    FROBLAB_LOG_LEVEL = 'INFO'


# TEST mode
class TestSettings(BaseSettings, postfix='__TEST'):
    FROBLAB_VERIFY_SAMPLES = 2


# PROD mode
class ProdSettings(BaseSettings, postfix='__PROD'):
    FROBLAB_VERIFY_SAMPLES = 8


settings_map = {
    'DEV': DevSettings,
    'TEST': TestSettings,
    'PROD': ProdSettings
}


def get_settings(env=None):
    env = env or os.getenv('FROBLAB_ENV', 'DEV')
    return settings_map[env]()
