import logging
from typing import List, Tuple
from modules.sampler.exceptions.table_consistency_exception import TableConsistencyException
from modules.sampler.exceptions.unreachable_exception import UnreachableException
from modules.sampler.objects.random_source import RandomSource
from modules.sampler.objects.sampler_tables import SamplerTables
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.series.objects.series import Series
from modules.structure.managers.structure_manager import StructureManager
from modules.structure.objects.structure import Structure
from modules.util.exceptions.out_of_range_exception import OutOfRangeException

logger = logging.getLogger(__name__)

SATURATED = "S"
SEQUENCE = "Q"
LITERAL = "L"


class SamplerManager:
    """ Manager drawing saturated structures uniformly at random
    A structure is a nonempty sequence of closed blocks, or two block sequences around one "." or ".." group.
    """
    def __init__(self, **kwargs):
        """ Constructor for SamplerManager
        Args:
            **kwargs:           Dependencies
                series_manager (SeriesManager)          - Series arithmetic
                solver_manager (SolverManager)          - Solver for S
                structure_manager (StructureManager)    - Parsing and saturation checks
                verify (bool)                           - Assert saturation on every draw
        """
        self.__series_manager: SeriesManager = kwargs.get("series_manager")
        self.__solver_manager: SolverManager = kwargs.get("solver_manager")
        self.__structure_manager: StructureManager = kwargs.get("structure_manager")
        self.__verify: bool = kwargs.get("verify", False)

    def build_tables(self, truncation: int) -> SamplerTables:
        """ Build count tables through z^N and assert S = R/(1-R) + (z+z^2)/(1-R)^2
        Args:
            truncation (int):       N >= 1
        Returns:
            SamplerTables
        """
        if truncation < 1:
            raise OutOfRangeException(f"Truncation must be positive, got {truncation}")
        s = self.__solver_manager.solve_saturated(truncation)
        r = self.__solver_manager.r_from_s(s)
        q = self.__series_manager.divide(Series.monomial(truncation, 0), 1 - r)
        pair = self.__series_manager.multiply(q, q)
        tables = SamplerTables(
            s.get_coefficients(),
            r.get_coefficients(),
            q.get_coefficients(),
            pair.get_coefficients()
        )
        for n in range(1, truncation + 1):
            decomposed = tables.dotless_count(n) + tables.dotted_count(n, 1) + tables.dotted_count(n, 2)
            if decomposed != tables.get_s_counts()[n]:
                raise TableConsistencyException(
                    f"Decomposition gives {decomposed} structures of size {n}, series gives {tables.get_s_counts()[n]}"
                )
        logger.info("Sampler tables built through z^%d", truncation)
        return tables

    def sample(self, tables: SamplerTables, n: int, seed: int) -> Structure:
        """ Draw one saturated structure of size n uniformly
        Args:
            tables (SamplerTables):
            n (int):
            seed (int):             64-bit seed
        Returns:
            Structure
        """
        return self.draw(tables, n, RandomSource(seed))

    def sample_many(self, tables: SamplerTables, n: int, seed: int, count: int) -> List[Structure]:
        """ Draw count structures from one seeded stream
        Args:
            tables (SamplerTables):
            n (int):
            seed (int):
            count (int):
        Returns:
            List[Structure]
        """
        source = RandomSource(seed)
        return [self.draw(tables, n, source) for _ in range(count)]

    def draw(self, tables: SamplerTables, n: int, source: RandomSource) -> Structure:
        """ Draw one structure of size n from an existing source
        Args:
            tables (SamplerTables):
            n (int):
            source (RandomSource):
        Returns:
            Structure
        """
        if not 1 <= n <= tables.get_truncation():
            raise OutOfRangeException(f"Size {n} outside 1..{tables.get_truncation()}")
        if tables.get_s_counts()[n] == 0:
            raise UnreachableException(f"No saturated structure of size {n}")

        parts: List[str] = []
        tasks: List[Tuple[str, any]] = [(SATURATED, n)]
        while tasks:
            kind, value = tasks.pop()
            if kind == LITERAL:
                parts.append(value)
            elif kind == SATURATED:
                tasks.extend(reversed(self.__expand_saturated(tables, value, source)))
            else:
                tasks.extend(reversed(self.__expand_sequence(tables, value, source)))

        structure = self.__structure_manager.parse("".join(parts))
        if self.__verify and not self.__structure_manager.is_saturated(structure):
            raise UnreachableException(f"Sampled structure {structure.get_text()} is not saturated")
        return structure

    @classmethod
    def __expand_saturated(cls, tables: SamplerTables, m: int, source: RandomSource) -> List[Tuple[str, any]]:
        choice = source.below(tables.get_s_counts()[m])
        if choice < tables.dotless_count(m):
            return [(SEQUENCE, m)]
        choice -= tables.dotless_count(m)
        dots = 1 if choice < tables.dotted_count(m, 1) else 2
        rest = m - dots
        q = tables.get_q_counts()
        choice = source.below(tables.get_pair_counts()[rest])
        for left in range(rest + 1):
            weight = q[left] * q[rest - left]
            if choice < weight:
                return [(SEQUENCE, left), (LITERAL, "." * dots), (SEQUENCE, rest - left)]
            choice -= weight
        raise UnreachableException(f"Split of {rest} positions around a dot group not found")

    @classmethod
    def __expand_sequence(cls, tables: SamplerTables, m: int, source: RandomSource) -> List[Tuple[str, any]]:
        if m == 0:
            return []
        q = tables.get_q_counts()
        r = tables.get_r_counts()
        choice = source.below(q[m])
        for block in range(3, m + 1):
            weight = r[block] * q[m - block]
            if choice < weight:
                return [(LITERAL, "("), (SATURATED, block - 2), (LITERAL, ")"), (SEQUENCE, m - block)]
            choice -= weight
        raise UnreachableException(f"First block of a sequence of size {m} not found")
