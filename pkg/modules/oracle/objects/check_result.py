from typing import Dict


class CheckResult:
    """ Object representing one oracle cross-check
    """
    def __init__(self, check: str, n: int, expected: any, actual: any):
        """ Constructor for CheckResult
        Args:
            check (str):        Check name
            n (int):            Size
            expected (any):     Oracle value
            actual (any):       Value from the generating functions
        """
        self.__check: str = check
        self.__n: int = n
        self.__expected: any = expected
        self.__actual: any = actual

    def get_check(self) -> str:
        return self.__check

    def get_n(self) -> int:
        return self.__n

    def get_expected(self) -> any:
        return self.__expected

    def get_actual(self) -> any:
        return self.__actual

    def is_ok(self) -> bool:
        return self.__expected == self.__actual

    def get_dict(self) -> Dict[str, any]:
        return {
            "check": self.__check,
            "n": self.__n,
            "expected": self.__expected,
            "actual": self.__actual,
            "ok": self.is_ok()
        }
