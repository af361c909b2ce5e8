from typing import List
from numpy.random import PCG64, SeedSequence
from modules.util.exceptions.out_of_range_exception import OutOfRangeException


class RandomSource:
    """ Reproducible random source over numpy's PCG64 (128-bit state, 64-bit output)
    The seed is expanded by SeedSequence, so equal seeds give equal streams on every platform.
    """
    WORD_BITS = 64

    def __init__(self, seed: int or SeedSequence):
        """ Constructor for RandomSource
        Args:
            seed (int or SeedSequence):     Nonnegative 64-bit seed, or a spawned sequence
        """
        if not isinstance(seed, SeedSequence):
            if not 0 <= seed < 2 ** self.WORD_BITS:
                raise OutOfRangeException(f"Seed must be a 64-bit unsigned integer, got {seed}")
            seed = SeedSequence(seed)
        self.__seed_sequence: SeedSequence = seed
        self.__bit_generator: PCG64 = PCG64(seed)

    def below(self, bound: int) -> int:
        """ Draw uniformly from 0..bound-1 by rejection over raw 64-bit words
        Args:
            bound (int):        Positive integer of any size
        Returns:
            int
        """
        if bound < 1:
            raise OutOfRangeException(f"Bound must be positive, got {bound}")
        bits = (bound - 1).bit_length()
        if bits == 0:
            return 0
        words = -(-bits // self.WORD_BITS)
        excess = words * self.WORD_BITS - bits
        while True:
            value = 0
            for word in self.__bit_generator.random_raw(words):
                value = (value << self.WORD_BITS) | int(word)
            value >>= excess
            if value < bound:
                return value

    def spawn(self, count: int) -> List["RandomSource"]:
        """ Get independent child sources, one per worker
        Args:
            count (int):
        Returns:
            List[RandomSource]
        """
        return [RandomSource(child) for child in self.__seed_sequence.spawn(count)]
