from typing import List
from modules.structure.managers.structure_manager import StructureManager
from modules.structure.objects.structure import Structure


class OrderManager:
    """ Manager computing the order of secondary structures
    """
    def __init__(self, **kwargs):
        """ Constructor for OrderManager
        Args:
            **kwargs:           Dependencies
                structure_manager (StructureManager)        - Structure manager
        """
        self.__structure_manager: StructureManager = kwargs.get("structure_manager")

    def order(self, structure: Structure) -> int:
        """ Get order by literally rewriting the bracket image
        Every round deletes all maximal substrings (^k)^k at once.
        Args:
            structure (Structure):
        Returns:
            int
        """
        image = self.__structure_manager.phi(structure)
        rounds = 0
        while image:
            image = self.__delete_hairpins(image)
            rounds += 1
        return rounds

    @classmethod
    def order_fast(cls, structure: Structure) -> int:
        """ Get order in one pass as the Horton-Strahler number of the nesting forest
        Args:
            structure (Structure):
        Returns:
            int
        """
        frames: List[List[int]] = [[]]
        for character in structure.get_text():
            if character == "(":
                frames.append([])
            elif character == ")":
                children = frames.pop()
                frames[-1].append(cls.__strahler(children))
        return max(frames[0], default=0)

    @classmethod
    def __strahler(cls, children: List[int]) -> int:
        if not children:
            return 1
        highest = max(children)
        return highest + 1 if children.count(highest) > 1 else highest

    @classmethod
    def __delete_hairpins(cls, image: str) -> str:
        keep = [True] * len(image)
        for boundary in range(len(image) - 1):
            if image[boundary] != "(" or image[boundary + 1] != ")":
                continue
            left = boundary
            while left > 0 and image[left - 1] == "(":
                left -= 1
            right = boundary + 1
            while right < len(image) - 1 and image[right + 1] == ")":
                right += 1
            k = min(boundary - left + 1, right - boundary)
            for index in range(boundary - k + 1, boundary + k + 1):
                keep[index] = False
        return "".join(character for character, kept in zip(image, keep) if kept)
