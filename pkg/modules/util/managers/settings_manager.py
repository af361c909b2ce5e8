import os
from typing import Dict
from dotenv import load_dotenv
from modules.util.exceptions.settings_exception import SettingsException
from modules.util.objects.settings import Settings


class SettingsManager:
    """ Manager for loading settings from the environment
    """
    PREFIX = "SATURNA_"
    INTEGER_KEYS = (
        "oracle_cutoff",
        "census_cutoff",
        "default_truncation",
        "working_dps",
        "fit_low",
        "fit_high"
    )

    def __init__(self, **kwargs):
        """ Constructor for SettingsManager
        Args:
            **kwargs:           Dependencies
                environ (Dict[str, str])        - Environment mapping, os.environ when omitted
                dotenv_path (str)               - Optional .env file location
        """
        self.__environ: Dict[str, str] or None = kwargs.get("environ")
        self.__dotenv_path: str or None = kwargs.get("dotenv_path")

    def load(self) -> Settings:
        """ Load settings from the environment
        Returns:
            Settings
        """
        environ = self.__environ
        if environ is None:
            load_dotenv(self.__dotenv_path)
            environ = os.environ

        values = {}
        for key in self.INTEGER_KEYS:
            raw = environ.get(f"{self.PREFIX}{key.upper()}")
            if raw is None or raw == "":
                continue
            try:
                values[key] = int(raw)
            except ValueError:
                raise SettingsException(f"Setting {self.PREFIX}{key.upper()} must be an integer, got '{raw}'")
            if values[key] < 1:
                raise SettingsException(f"Setting {self.PREFIX}{key.upper()} must be positive, got {values[key]}")

        solver = environ.get(f"{self.PREFIX}SERIES_SOLVER")
        if solver:
            if solver not in Settings.SOLVERS:
                raise SettingsException(f"Unknown series solver '{solver}'")
            values["series_solver"] = solver

        log_level = environ.get(f"{self.PREFIX}LOG_LEVEL")
        if log_level:
            if log_level.upper() not in Settings.LOG_LEVELS:
                raise SettingsException(f"Unknown log level '{log_level}'")
            values["log_level"] = log_level.upper()

        if values.get("fit_low", 200) >= values.get("fit_high", 400):
            raise SettingsException("Setting SATURNA_FIT_LOW must be below SATURNA_FIT_HIGH")

        return Settings(**values)
