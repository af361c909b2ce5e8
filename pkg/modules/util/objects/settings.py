from typing import Dict


class Settings:
    """ Object representing runtime settings
    """
    SOLVERS = ("newton", "fixed_point")
    LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

    def __init__(self, **kwargs):
        """ Constructor for Settings
        Args:
            **kwargs:               Settings values
                oracle_cutoff (int)
                census_cutoff (int)
                default_truncation (int)
                series_solver (str)
                working_dps (int)
                fit_low (int)
                fit_high (int)
                log_level (str)
        """
        self.__oracle_cutoff: int = kwargs.get("oracle_cutoff", 16)
        self.__census_cutoff: int = kwargs.get("census_cutoff", 14)
        self.__default_truncation: int = kwargs.get("default_truncation", 512)
        self.__series_solver: str = kwargs.get("series_solver", "newton")
        self.__working_dps: int = kwargs.get("working_dps", 64)
        self.__fit_low: int = kwargs.get("fit_low", 200)
        self.__fit_high: int = kwargs.get("fit_high", 400)
        self.__log_level: str = kwargs.get("log_level", "WARNING")

    def get_oracle_cutoff(self) -> int:
        """ Get largest size for full enumeration
        Returns:
            int
        """
        return self.__oracle_cutoff

    def get_census_cutoff(self) -> int:
        """ Get largest size for the order census
        Returns:
            int
        """
        return self.__census_cutoff

    def get_default_truncation(self) -> int:
        """ Get default truncation order of series-backed commands
        Returns:
            int
        """
        return self.__default_truncation

    def get_series_solver(self) -> str:
        """ Get solver strategy name
        Returns:
            str
        """
        return self.__series_solver

    def get_working_dps(self) -> int:
        """ Get minimum decimal digits used for Newton refinement
        Returns:
            int
        """
        return self.__working_dps

    def get_fit_low(self) -> int:
        return self.__fit_low

    def get_fit_high(self) -> int:
        return self.__fit_high

    def get_log_level(self) -> str:
        return self.__log_level

    def get_dict(self) -> Dict[str, any]:
        """ Get dict of settings
        Returns:
            Dict[str, any]
        """
        return {
            "oracle_cutoff": self.get_oracle_cutoff(),
            "census_cutoff": self.get_census_cutoff(),
            "default_truncation": self.get_default_truncation(),
            "series_solver": self.get_series_solver(),
            "working_dps": self.get_working_dps(),
            "fit_low": self.get_fit_low(),
            "fit_high": self.get_fit_high(),
            "log_level": self.get_log_level()
        }
