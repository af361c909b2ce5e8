import json
import unittest
from fractions import Fraction
import mpmath
from modules.util.data.table_data import TableData


class TableDataTest(unittest.TestCase):

    def setUp(self) -> None:
        self.table_data: TableData = TableData()
        self.rows = [{"n": 1, "count": 1}, {"n": 4, "count": 3}]

    def test_render_rows_csv(self):
        self.assertEqual("n,count\n1,1\n4,3\n", self.table_data.render_rows(self.rows, "csv"))

    def test_render_rows_text(self):
        self.assertEqual("n=1 count=1\nn=4 count=3\n", self.table_data.render_rows(self.rows, "text"))

    def test_render_rows_text_single_column(self):
        self.assertEqual("1\n3\n", self.table_data.render_rows(self.rows, "text", ["count"]))

    def test_render_rows_json_keeps_big_integers(self):
        rows = [{"n": 1000, "count": 10 ** 40}]

        decoded = json.loads(self.table_data.render_rows(rows, "json"))

        self.assertEqual([{"n": 1000, "count": 10 ** 40}], decoded)

    def test_render_value(self):
        self.assertEqual("123456789012345678901234567890", self.table_data.render_value(123456789012345678901234567890))
        self.assertEqual("true", self.table_data.render_value(True))
        self.assertEqual("[(1,3),(2,4)]", self.table_data.render_value([(1, 3), (2, 4)]))
        self.assertEqual("0.333333333333", self.table_data.render_value(Fraction(1, 3)))
        self.assertEqual("7", self.table_data.render_value(Fraction(14, 2)))
        self.assertEqual("0.5", self.table_data.render_value(mpmath.mpf("0.5")))
        self.assertEqual("", self.table_data.render_value(None))
        self.assertEqual("{1:35,2:1}", self.table_data.render_value({1: 35, 2: 1}))

    def test_render_record_json(self):
        record = {"n": 8, "by_order": {1: 35, 2: 1}, "ratio": Fraction(1, 4)}

        decoded = json.loads(self.table_data.render_record(record, "json"))

        self.assertEqual({"n": 8, "by_order": {"1": 35, "2": 1}, "ratio": "0.25"}, decoded)
