from fractions import Fraction
from typing import Dict, List


class OrderDistribution:
    """ Object representing the exact order distribution at one size
    """
    def __init__(self, n: int, counts: List[int], total: int):
        """ Constructor for OrderDistribution
        Args:
            n (int):                Size
            counts (List[int]):     c_p = S_p(n) - S_{p+1}(n) for p = 0, 1, ...
            total (int):            S(n)
        """
        self.__n: int = n
        self.__counts: List[int] = counts
        self.__total: int = total

    def get_n(self) -> int:
        return self.__n

    def get_counts(self) -> List[int]:
        return self.__counts

    def get_total(self) -> int:
        return self.__total

    def get_probabilities(self) -> List[Fraction]:
        """ Get P(order = p) for p = 0, 1, ...
        Returns:
            List[Fraction]
        """
        return [Fraction(count, self.__total) for count in self.__counts]

    def get_rows(self) -> List[Dict[str, any]]:
        return [
            {"n": self.__n, "p": p, "count": count, "probability": Fraction(count, self.__total)}
            for p, count in enumerate(self.__counts)
        ]

    def get_row(self, p: int) -> Dict[str, any]:
        """ Get the row for one order, zero beyond the largest order present
        Args:
            p (int):
        Returns:
            Dict[str, any]
        """
        count = self.__counts[p] if p < len(self.__counts) else 0
        return {"n": self.__n, "p": p, "count": count, "probability": Fraction(count, self.__total)}
