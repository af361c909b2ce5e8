from typing import Dict, Iterable, List, Tuple
from modules.structure.exceptions.crossing_pairs_exception import CrossingPairsException
from modules.structure.exceptions.empty_input_exception import EmptyInputException
from modules.structure.exceptions.invalid_character_exception import InvalidCharacterException
from modules.structure.exceptions.min_loop_violation_exception import MinLoopViolationException
from modules.structure.exceptions.unbalanced_brackets_exception import UnbalancedBracketsException
from modules.structure.objects.structure import Structure


class StructureManager:
    """ Manager for parsing, validating and inspecting secondary structures
    """
    ALPHABET = frozenset(".()")
    MIN_DISTANCE = 2

    def parse(self, text: str) -> Structure:
        """ Parse dot-bracket text
        Args:
            text (str):         Dot-bracket string over {., (, )}
        Returns:
            Structure
        """
        if not text:
            raise EmptyInputException("Structure text must not be empty")
        for index, character in enumerate(text, start=1):
            if character not in self.ALPHABET:
                raise InvalidCharacterException(f"Invalid character '{character}' at position {index}")

        table = [0] * (len(text) + 1)
        table[0] = len(text)
        stack: List[int] = []
        for index, character in enumerate(text, start=1):
            if character == "(":
                stack.append(index)
            elif character == ")":
                if not stack:
                    raise UnbalancedBracketsException(f"Unmatched ')' at position {index}")
                opening = stack.pop()
                if index - opening < self.MIN_DISTANCE:
                    raise MinLoopViolationException(f"Pair ({opening},{index}) encloses no unpaired position")
                table[opening] = index
                table[index] = opening
        if stack:
            raise UnbalancedBracketsException(f"Unmatched '(' at position {stack[-1]}")
        return Structure(text, tuple(table))

    def parse_lines(self, text: str) -> List[Structure]:
        """ Parse newline separated dot-bracket text, blank lines skipped
        Args:
            text (str):
        Returns:
            List[Structure]
        """
        return [self.parse(line.strip()) for line in text.splitlines() if line.strip()]

    @classmethod
    def serialize(cls, structure: Structure) -> str:
        """ Serialize structure to dot-bracket text
        Args:
            structure (Structure):
        Returns:
            str
        """
        table = structure.get_pair_table()
        characters = []
        for i in range(1, table[0] + 1):
            j = table[i]
            characters.append("." if j == 0 else ("(" if j > i else ")"))
        return "".join(characters)

    def from_pairs(self, length: int, pairs: Iterable[Tuple[int, int]]) -> Structure:
        """ Build structure from a pair list
        Args:
            length (int):                       Number of positions
            pairs (Iterable[Tuple[int, int]]):  Pairs of 1-indexed positions
        Returns:
            Structure
        """
        if length < 1:
            raise EmptyInputException("Structure length must be positive")
        table = [0] * (length + 1)
        table[0] = length
        for i, j in pairs:
            i, j = min(i, j), max(i, j)
            if i < 1 or j > length or i == j:
                raise UnbalancedBracketsException(f"Pair ({i},{j}) lies outside 1..{length}")
            if table[i] or table[j]:
                raise UnbalancedBracketsException(f"Position of pair ({i},{j}) is already paired")
            if j - i < self.MIN_DISTANCE:
                raise MinLoopViolationException(f"Pair ({i},{j}) encloses no unpaired position")
            table[i] = j
            table[j] = i

        stack: List[int] = []
        for i in range(1, length + 1):
            if table[i] > i:
                stack.append(i)
            elif table[i] and stack.pop() != table[i]:
                raise CrossingPairsException(f"Pair ({table[i]},{i}) crosses another pair")

        candidate = Structure("", tuple(table))
        return Structure(self.serialize(candidate), candidate.get_pair_table())

    def add_pair(self, structure: Structure, i: int, j: int) -> Structure:
        """ Get structure extended by pair (i, j)
        Args:
            structure (Structure):
            i (int):
            j (int):
        Returns:
            Structure
        """
        return self.from_pairs(structure.get_length(), structure.get_pairs() + [(i, j)])

    @classmethod
    def phi(cls, structure: Structure) -> str:
        """ Get image under the dot-erasing homomorphism
        Args:
            structure (Structure):
        Returns:
            str
        """
        return structure.get_text().replace(".", "")

    @classmethod
    def loops(cls, structure: Structure) -> Dict[int, List[int]]:
        """ Group unpaired positions by innermost enclosing pair
        Args:
            structure (Structure):
        Returns:
            Dict[int, List[int]]:       Opening position of the enclosing pair (0 for exterior) to positions
        """
        table = structure.get_pair_table()
        loops: Dict[int, List[int]] = {}
        stack = [0]
        for i in range(1, table[0] + 1):
            j = table[i]
            if j == 0:
                loops.setdefault(stack[-1], []).append(i)
            elif j > i:
                stack.append(i)
            else:
                stack.pop()
        return loops

    def addable_pairs(self, structure: Structure) -> List[Tuple[int, int]]:
        """ Get pairs that can be added without breaking the model
        Args:
            structure (Structure):
        Returns:
            List[Tuple[int, int]]
        """
        addable = []
        for positions in self.loops(structure).values():
            for index, i in enumerate(positions):
                for j in positions[index + 1:]:
                    if j - i >= self.MIN_DISTANCE:
                        addable.append((i, j))
        return sorted(addable)

    def is_saturated(self, structure: Structure) -> bool:
        """ Check whether no pair can be added
        Args:
            structure (Structure):
        Returns:
            bool
        """
        return all(
            positions[-1] - positions[0] < self.MIN_DISTANCE
            for positions in self.loops(structure).values()
        )
