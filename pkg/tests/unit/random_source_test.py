import unittest
from modules.sampler.objects.random_source import RandomSource
from modules.util.exceptions.out_of_range_exception import OutOfRangeException


class RandomSourceTest(unittest.TestCase):

    def test_below_is_reproducible(self):
        first = [RandomSource(42).below(10 ** 30) for _ in range(3)]
        source = RandomSource(42)
        second = source.below(10 ** 30)

        self.assertEqual(first[0], second)
        self.assertEqual(len(set(first)), 1)

    def test_below_stays_in_range(self):
        source = RandomSource(7)
        for bound in [1, 2, 3, 2 ** 64, 2 ** 64 + 1, 10 ** 40, 3 ** 200]:
            for _ in range(50):
                value = source.below(bound)
                self.assertTrue(0 <= value < bound, bound)

    def test_below_one_is_zero(self):
        self.assertEqual(0, RandomSource(1).below(1))

    def test_below_covers_small_range(self):
        source = RandomSource(3)

        values = {source.below(3) for _ in range(300)}

        self.assertEqual({0, 1, 2}, values)

    def test_below_fails_on_non_positive_bound(self):
        with self.assertRaises(OutOfRangeException):
            RandomSource(1).below(0)
            self.fail("Did not fail on zero bound")

    def test_seed_must_be_64_bit(self):
        with self.assertRaises(OutOfRangeException):
            RandomSource(-1)
            self.fail("Did not fail on negative seed")
        with self.assertRaises(OutOfRangeException):
            RandomSource(2 ** 64)
            self.fail("Did not fail on seed beyond 64 bits")

    def test_spawn_gives_independent_streams(self):
        children = RandomSource(11).spawn(2)
        again = RandomSource(11).spawn(2)

        first = [children[0].below(2 ** 64) for _ in range(4)]
        second = [children[1].below(2 ** 64) for _ in range(4)]

        self.assertNotEqual(first, second)
        self.assertEqual(first, [again[0].below(2 ** 64) for _ in range(4)])
