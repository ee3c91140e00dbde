"""Settings shared by the library and the command line"""

import logging
import os
from configparser import ConfigParser
from os import environ

from lie_endo_toolbox import DEFAULT_SEED, DEFAULT_TOLERANCE, DEFAULT_WORKERS

CONF_SECTION = 'lie_endo_toolbox'
DEFAULT_CONF_FILE = 'lie.conf'

ENVIRONMENT_VARIABLES = {
    'seed': 'LIE_SEED',
    'workers': 'LIE_WORKERS',
    'log_level': 'LIE_LOG_LEVEL',
    'tolerance': 'LIE_TOLERANCE',
    'max_casimir': 'LIE_MAX_CASIMIR',
}


class LieConfig:
    """Resolve a setting from an explicit value, the environment, a conf file
    or the built-in default, in that order."""

    DEFAULTS = {
        'seed': DEFAULT_SEED,
        'workers': DEFAULT_WORKERS,
        'log_level': 'INFO',
        'tolerance': DEFAULT_TOLERANCE,
        'max_casimir': None,
    }

    CASTS = {
        'seed': int,
        'workers': int,
        'log_level': str.upper,
        'tolerance': float,
        'max_casimir': int,
    }

    def __init__(self, conf_file=None, **overrides):
        self.logger = logging.getLogger(self.__class__.__name__)
        self._file_values = {}

        if conf_file is None and os.path.exists(DEFAULT_CONF_FILE):
            conf_file = DEFAULT_CONF_FILE

        if conf_file is not None:
            parser = ConfigParser()
            if not parser.read(conf_file):
                raise FileNotFoundError(f"Configuration file {conf_file} cannot be read")
            if parser.has_section(CONF_SECTION):
                self._file_values = dict(parser.items(CONF_SECTION))
            self.logger.debug("Read configuration from {}".format(conf_file))

        self._values = {}
        for key, default in self.DEFAULTS.items():
            self._values[key] = self._resolve(key, overrides.get(key), default)

    def _resolve(self, key, explicit, default):
        if explicit is not None:
            return explicit

        raw = environ.get(ENVIRONMENT_VARIABLES[key])
        if raw is None:
            raw = self._file_values.get(key)
        if raw is None:
            return default

        try:
            return self.CASTS[key](raw)
        except ValueError as error:
            raise ValueError(
                f"Invalid value {raw!r} for setting '{key}' "
                f"(environment variable {ENVIRONMENT_VARIABLES[key]} "
                f"or [{CONF_SECTION}] {key})") from error

    def __getattr__(self, key):
        try:
            return self.__dict__['_values'][key]
        except KeyError as error:
            raise AttributeError(key) from error

    def as_dict(self):
        """Return the resolved settings"""
        return dict(self._values)
