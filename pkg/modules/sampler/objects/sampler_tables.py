from typing import Tuple


class SamplerTables:
    """ Object representing the exact counts behind uniform sampling
    """
    def __init__(self, s_counts: Tuple[int, ...], r_counts: Tuple[int, ...], q_counts: Tuple[int, ...],
                 pair_counts: Tuple[int, ...]):
        """ Constructor for SamplerTables
        Args:
            s_counts (Tuple[int, ...]):         [z^n]S
            r_counts (Tuple[int, ...]):         [z^n]R, structures closed by an outermost pair
            q_counts (Tuple[int, ...]):         [z^n]1/(1-R), sequences of closed blocks
            pair_counts (Tuple[int, ...]):      [z^n]1/(1-R)^2, two sequences around one dot group
        """
        self.__s_counts: Tuple[int, ...] = tuple(s_counts)
        self.__r_counts: Tuple[int, ...] = tuple(r_counts)
        self.__q_counts: Tuple[int, ...] = tuple(q_counts)
        self.__pair_counts: Tuple[int, ...] = tuple(pair_counts)

    def get_truncation(self) -> int:
        return len(self.__s_counts) - 1

    def get_s_counts(self) -> Tuple[int, ...]:
        return self.__s_counts

    def get_r_counts(self) -> Tuple[int, ...]:
        return self.__r_counts

    def get_q_counts(self) -> Tuple[int, ...]:
        return self.__q_counts

    def get_pair_counts(self) -> Tuple[int, ...]:
        return self.__pair_counts

    def dotless_count(self, n: int) -> int:
        """ Get number of size-n structures made of closed blocks only
        Args:
            n (int):
        Returns:
            int
        """
        return self.__q_counts[n] if n >= 1 else 0

    def dotted_count(self, n: int, dots: int) -> int:
        """ Get number of size-n structures with one dot group of the given length
        Args:
            n (int):
            dots (int):     1 or 2
        Returns:
            int
        """
        return self.__pair_counts[n - dots] if n >= dots else 0
