import logging
from collections import Counter
from typing import Dict, List
from modules.oracle.exceptions.cutoff_exceeded_exception import CutoffExceededException
from modules.oracle.objects.census import Census
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager
from modules.structure.objects.structure import Structure

logger = logging.getLogger(__name__)

# '(' < '.' < ')'
SORT_KEY = str.maketrans("(.)", "abc")


class OracleManager:
    """ Manager enumerating structures by brute force, the ground truth at small sizes
    """
    def __init__(self, **kwargs):
        """ Constructor for OracleManager
        Args:
            **kwargs:           Dependencies
                structure_manager (StructureManager)    - Structure manager
                order_manager (OrderManager)            - Order manager
                cutoff (int)                            - Largest size for enumeration, 16 when omitted
                census_cutoff (int)                     - Largest size for the census, 14 when omitted
        """
        self.__structure_manager: StructureManager = kwargs.get("structure_manager")
        self.__order_manager: OrderManager = kwargs.get("order_manager")
        self.__cutoff: int = kwargs.get("cutoff") or 16
        self.__census_cutoff: int = kwargs.get("census_cutoff") or 14
        self.__texts: Dict[int, List[str]] = {0: [""]}

    def enumerate_secondary(self, n: int) -> List[Structure]:
        """ Get every secondary structure of size n
        Args:
            n (int):
        Returns:
            List[Structure]
        """
        self.__check_size(n, self.__cutoff)
        texts = sorted(self.__build_texts(n), key=lambda text: text.translate(SORT_KEY))
        logger.debug("Enumerated %d secondary structures of size %d", len(texts), n)
        return [self.__structure_manager.parse(text) for text in texts]

    def enumerate_saturated(self, n: int) -> List[Structure]:
        """ Get every saturated structure of size n
        Args:
            n (int):
        Returns:
            List[Structure]
        """
        return [
            structure for structure in self.enumerate_secondary(n)
            if self.__structure_manager.is_saturated(structure)
        ]

    def census(self, n: int) -> Census:
        """ Count saturated structures of size n by order
        Args:
            n (int):
        Returns:
            Census
        """
        self.__check_size(n, self.__census_cutoff)
        structures = self.enumerate_secondary(n)
        saturated = [s for s in structures if self.__structure_manager.is_saturated(s)]
        by_order = Counter(self.__order_manager.order(s) for s in saturated)
        return Census(n, len(structures), len(saturated), dict(by_order))

    def closure_check(self, n: int) -> int:
        """ Add every addable pair to every non-saturated structure of size n
        Args:
            n (int):
        Returns:
            int:        Number of extended structures built
        """
        built = 0
        for structure in self.enumerate_secondary(n):
            for i, j in self.__structure_manager.addable_pairs(structure):
                self.__structure_manager.add_pair(structure, i, j)
                built += 1
        return built

    @classmethod
    def __check_size(cls, n: int, cutoff: int):
        if not 1 <= n <= cutoff:
            raise CutoffExceededException(f"Size {n} outside the enumeration range 1..{cutoff}")

    def __build_texts(self, n: int) -> List[str]:
        # leftmost position is a dot, or opens a pair closing at position k
        for length in range(1, n + 1):
            if length in self.__texts:
                continue
            texts = ["." + rest for rest in self.__texts[length - 1]]
            for k in range(3, length + 1):
                for inner in self.__texts[k - 2]:
                    for rest in self.__texts[length - k]:
                        texts.append("(" + inner + ")" + rest)
            self.__texts[length] = texts
        return self.__texts[n]
