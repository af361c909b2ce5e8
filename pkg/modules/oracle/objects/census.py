from typing import Dict


class Census:
    """ Object representing the brute-force order census at one size
    """
    def __init__(self, n: int, total_secondary: int, total_saturated: int, by_order: Dict[int, int]):
        """ Constructor for Census
        Args:
            n (int):                        Size
            total_secondary (int):          Number of secondary structures
            total_saturated (int):          Number of saturated structures
            by_order (Dict[int, int]):      Order to number of saturated structures of exactly that order
        """
        self.__n: int = n
        self.__total_secondary: int = total_secondary
        self.__total_saturated: int = total_saturated
        self.__by_order: Dict[int, int] = dict(sorted(by_order.items()))

    def get_n(self) -> int:
        return self.__n

    def get_total_secondary(self) -> int:
        return self.__total_secondary

    def get_total_saturated(self) -> int:
        return self.__total_saturated

    def get_by_order(self) -> Dict[int, int]:
        return self.__by_order

    def at_least(self, p: int) -> int:
        """ Get number of saturated structures of order >= p
        Args:
            p (int):
        Returns:
            int
        """
        return sum(count for order, count in self.__by_order.items() if order >= p)

    def get_dict(self) -> Dict[str, any]:
        """ Get dict of object
        Returns:
            Dict[str, any]
        """
        return {
            "n": self.get_n(),
            "total_secondary": self.get_total_secondary(),
            "total_saturated": self.get_total_saturated(),
            "by_order": self.get_by_order()
        }
