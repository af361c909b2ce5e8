from typing import Dict, List, Tuple


class Structure:
    """ Object representing a secondary structure
    """
    def __init__(self, text: str, pair_table: Tuple[int, ...]):
        """ Constructor for Structure
        Args:
            text (str):                     Dot-bracket string
            pair_table (Tuple[int, ...]):   Pair table, entry 0 holds the length, entry i the
                                            partner of position i or 0 when unpaired
        """
        self.__text: str = text
        self.__pair_table: Tuple[int, ...] = pair_table

    def get_text(self) -> str:
        """ Get dot-bracket text
        Returns:
            str
        """
        return self.__text

    def get_length(self) -> int:
        """ Get number of positions
        Returns:
            int
        """
        return self.__pair_table[0]

    def get_pair_table(self) -> Tuple[int, ...]:
        """ Get pair table
        Returns:
            Tuple[int, ...]
        """
        return self.__pair_table

    def get_partner(self, position: int) -> int:
        """ Get partner of 1-indexed position, 0 if unpaired
        Args:
            position (int):
        Returns:
            int
        """
        return self.__pair_table[position]

    def get_pairs(self) -> List[Tuple[int, int]]:
        """ Get pairs (i, j) with i < j in order of i
        Returns:
            List[Tuple[int, int]]
        """
        return [(i, j) for i, j in enumerate(self.__pair_table) if 0 < i < j]

    def has_pairs(self) -> bool:
        return any(self.__pair_table[1:])

    def get_dict(self) -> Dict[str, any]:
        """ Get dict of object
        Returns:
            Dict[str, any]
        """
        return {
            "structure": self.get_text(),
            "size": self.get_length(),
            "pairs": self.get_pairs()
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, Structure) and self.__pair_table == other.get_pair_table()

    def __hash__(self) -> int:
        return hash(self.__pair_table)

    def __repr__(self) -> str:
        return f"Structure('{self.__text}')"
