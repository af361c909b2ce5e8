from typing import List
from modules.order.objects.order_level import OrderLevel
from modules.series.objects.series import Series


class OrderSpectrum:
    """ Object representing the family {S_p} for one truncation order
    """
    def __init__(self, base: Series, r_series: Series, levels: List[OrderLevel]):
        """ Constructor for OrderSpectrum
        Args:
            base (Series):                  S_0 = S
            r_series (Series):              R = z^2 S
            levels (List[OrderLevel]):      Levels p = 1..p_stop, S_{p_stop} zero through z^N
        """
        self.__base: Series = base
        self.__r_series: Series = r_series
        self.__levels: List[OrderLevel] = levels

    def get_truncation(self) -> int:
        return self.__base.get_truncation()

    def get_base(self) -> Series:
        """ Get S_0 = S
        Returns:
            Series
        """
        return self.__base

    def get_r_series(self) -> Series:
        return self.__r_series

    def get_levels(self) -> List[OrderLevel]:
        return self.__levels

    def get_stop(self) -> int:
        """ Get p_stop, the first level with S_p zero through z^N
        Returns:
            int
        """
        return self.__levels[-1].get_p()

    def get_s_series(self, p: int) -> Series:
        """ Get S_p for any p >= 0
        Args:
            p (int):
        Returns:
            Series
        """
        if p == 0:
            return self.__base
        if p >= self.get_stop():
            return Series.zero(self.get_truncation())
        return self.__levels[p - 1].get_s_series()

    def get_count(self, p: int, n: int) -> int:
        """ Get S_p(n)
        Args:
            p (int):
            n (int):
        Returns:
            int
        """
        return self.get_s_series(p).get_coefficient(n)
